#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "commgraph/algebra.hpp"
#include "commgraph/coxeter.hpp"
#include "commgraph/graphs.hpp"

namespace commgraph {

using Complex = std::complex<double>;

inline constexpr double kOrthogonalityTolerance = 1e-8;
inline constexpr double kIntegralityTolerance = 1e-6;
inline constexpr std::uint64_t kDefaultBurnsideSeed = 20240611;

/// Conjugacy classes of H with the lookup table element -> class.
/// Classes are ordered by smallest element, so the identity class comes first.
struct ClassData {
  std::vector<std::vector<Element>> classes;
  std::vector<int> class_of;
  int group_order = 0;

  explicit ClassData(const FiniteGroup& h);
  int count() const { return static_cast<int>(classes.size()); }
  int size(int c) const { return static_cast<int>(classes[c].size()); }
  int identity_class() const { return identity_class_; }

 private:
  int identity_class_ = 0;
};

/// One value per conjugacy class.
struct ClassFunction {
  std::vector<Complex> values;

  Complex operator[](int c) const { return values[c]; }
  /// Value on the identity class rounded to an integer.
  int degree(const ClassData& cd) const;
};

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

/// (1/|H|) sum_c |c| a(c) conj(b(c)).
Complex inner_product(const ClassData& cd, const ClassFunction& a, const ClassFunction& b);

struct CharacterTable {
  ClassData classes;
  std::vector<ClassFunction> irreducibles;  // irreducibles[0] is trivial
  std::uint64_t seed_used = 0;              // Burnside only

  std::vector<int> dims() const;
  int count() const { return static_cast<int>(irreducibles.size()); }
};

/// Trace of the defining 2-dimensional representation.
ClassFunction natural_character(const FiniteGroup& h, const ClassData& cd);

/// Closed forms for cyclic and binary dihedral groups, Burnside otherwise.
CharacterTable character_table(const FiniteGroup& h, std::uint64_t seed = kDefaultBurnsideSeed);

/// Closed forms only; throws for binary polyhedral groups.
CharacterTable closed_form_character_table(const FiniteGroup& h);

/// Burnside's class-algebra method: eigenvectors of a random integer
/// combination of the class-multiplication matrices, normalized to characters.
/// Works for any finite group small enough to hold a Cayley table.
/// Irreducibles after the trivial one are sorted by degree, then by values.
CharacterTable burnside_character_table(const FiniteGroup& h,
                                        std::uint64_t seed = kDefaultBurnsideSeed,
                                        int max_retries = 8);

struct TableCheck {
  double max_row_error = 0;
  double max_column_error = 0;
  long sum_of_squares = 0;
  bool ok(int order) const {
    return max_row_error <= kOrthogonalityTolerance && max_column_error <= kOrthogonalityTolerance &&
           sum_of_squares == order;
  }
};

TableCheck check_character_table(const CharacterTable& t);

/// Roots of sum_k coeffs[k] x^k (coeffs.back() != 0) by Durand-Kerner iteration.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

struct McKayData {
  std::vector<std::vector<int>> alpha;  // alpha[i][j] = multiplicity of rho_j in V (x) rho_i
  std::vector<int> dims;
  int trivial_index = 0;
  double max_integrality_error = 0;

  int size() const { return static_cast<int>(alpha.size()); }
};

/// Throws NonIntegerMultiplicity if an inner product is further than
/// kIntegralityTolerance from a nonnegative integer, and InvalidArgument if
/// the dimension balance sum_j alpha_ij d_j = 2 d_i fails.
McKayData mckay_graph(const CharacterTable& table, const ClassFunction& natural);
McKayData mckay_graph(const FiniteGroup& h, std::uint64_t seed = kDefaultBurnsideSeed);

/// Irreducible indices in BFS order from the trivial node.
std::vector<int> mckay_bfs_order(const McKayData& m);

/// Simple graph on Irr H \ {rho_0}; vertex v is irreducible v + 1.
/// Throws InvalidArgument on multiplicity > 1 or loops among the remaining nodes.
SimpleGraph dynkin_from_mckay(const McKayData& m);

/// The ADE type paired with each family (C_n -> A_{n-1}, BD_{4n} -> D_{n+2}, ...).
AdeType ade_type_for(const Family& family);

struct TensorRuleNode {
  int irreducible = 0;
  int coxeter_row = 0;
  std::vector<int> expected;  // irreducibles j >= 1 with m_{row(i),row(j)} = 2
  std::vector<int> observed;  // irreducibles j >= 1 with alpha_ij = 1
  int trivial_multiplicity = 0;
  bool pass = false;
};

struct TensorRuleReport {
  std::vector<int> matching;  // matching[v] = Coxeter row of irreducible v + 1
  std::vector<TensorRuleNode> nodes;
  bool pass() const;
};

/// Isomorphism from dynkin_from_mckay to the commuting graph of `m`, or empty.
std::vector<int> match_irreducibles_to_coxeter(const McKayData& mckay, const CoxeterMatrix& m);

/// Checks {j >= 1 : alpha_ij = 1} = {j : m_ij = 2} for each i >= 1 under `matching`.
TensorRuleReport verify_tensor_rule(const McKayData& mckay, const CoxeterMatrix& m,
                                    const std::vector<int>& matching);
TensorRuleReport verify_tensor_rule(const McKayData& mckay, const CoxeterMatrix& m);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// C = 2I - A for a symmetric 0/1 adjacency matrix with zero diagonal.
IntMatrix cartan_matrix(const IntMatrix& adjacency);
IntMatrix cartan_matrix(const SimpleGraph& dynkin);
IntMatrix intersection_matrix(const IntMatrix& cartan);
/// Exact integer determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);

}  // namespace commgraph
