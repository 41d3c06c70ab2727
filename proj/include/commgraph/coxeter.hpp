#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "commgraph/graphs.hpp"

namespace commgraph {

/// Entry m_ij of a Coxeter matrix: a positive integer or infinity.
class CoxeterLabel {
 public:
  constexpr CoxeterLabel() = default;
  constexpr explicit CoxeterLabel(int value) : value_(value) {}
  static constexpr CoxeterLabel infinity() { return CoxeterLabel(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  /// Finite order; meaningless when is_infinite().
  constexpr int value() const { return value_; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

  /// Parses an integer or "inf".
  static CoxeterLabel parse(const std::string& token);

  friend constexpr bool operator==(CoxeterLabel, CoxeterLabel) = default;

 private:
  static constexpr int kInfinite = -1;
  int value_ = 1;
};

/// Symmetric matrix with m_ii = 1 and m_ij >= 2 (or infinity) off the diagonal.
class CoxeterMatrix {
 public:
  /// Identity of rank n padded with `off` everywhere off the diagonal.
  explicit CoxeterMatrix(int n, CoxeterLabel off = CoxeterLabel::infinity());
  /// Validates symmetry, unit diagonal and off-diagonal entries >= 2.
  explicit CoxeterMatrix(std::vector<std::vector<CoxeterLabel>> entries);

  int rank() const { return n_; }
  CoxeterLabel at(int i, int j) const { return entries_[i][j]; }
  /// Sets m_ij and m_ji.
  void set(int i, int j, CoxeterLabel label);
  const std::vector<std::vector<CoxeterLabel>>& entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<CoxeterLabel>> entries_;
};

/// m_ij = 2 on edges of g, off_label on non-edges. Rejects off_label < 3.
CoxeterMatrix realize(const SimpleGraph& g, CoxeterLabel off_label = CoxeterLabel::infinity());

/// Edge i~j iff m_ij = 2.
SimpleGraph commuting_graph_of_generators(const CoxeterMatrix& m);

/// Edge i~j iff m_ij >= 3 or infinite; labels are dropped.
SimpleGraph coxeter_graph(const CoxeterMatrix& m);

enum class AdeKind { A, D, E6, E7, E8 };

struct AdeType {
  AdeKind kind = AdeKind::A;
  int rank = 1;

  static AdeType a(int n) { return {AdeKind::A, n}; }
  static AdeType d(int n) { return {AdeKind::D, n}; }
  static AdeType e6() { return {AdeKind::E6, 6}; }
  static AdeType e7() { return {AdeKind::E7, 7}; }
  static AdeType e8() { return {AdeKind::E8, 8}; }
  std::string name() const;
};

/// Dynkin diagram edges (0-based) in the standard catalog numbering:
/// A_n is the path 1..n; D_n is the path 1..n-2 with n-1 and n attached to
/// n-2; E_k has the branch node 4 attached to node 3 of the path 1,2,3,5,6,...
std::vector<std::pair<int, int>> ade_edges(const AdeType& type);

/// Coxeter matrix whose commuting graph is the Dynkin diagram of `type`.
CoxeterMatrix ade_matrix(const AdeType& type, CoxeterLabel off_label = CoxeterLabel::infinity());

/// One relator per line, sorted by (i, j): "s1^2 = 1", "(s1 s2)^3 = 1".
/// Infinite entries produce no relator.
std::string presentation_text(const CoxeterMatrix& m);

CoxeterMatrix read_coxeter_matrix(std::istream& in);
void write_coxeter_matrix(std::ostream& out, const CoxeterMatrix& m);

}  // namespace commgraph
