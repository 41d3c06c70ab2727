#pragma once

// Finite subgroups of SL(2,C) as concrete multiplication tables.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "commgraph/field.hpp"

namespace commgraph {

enum class FamilyKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct Family {
  FamilyKind kind = FamilyKind::Cyclic;
  int n = 0;  // parameter for Cyclic and BinaryDihedral, 0 otherwise

  static Family cyclic(int n) { return {FamilyKind::Cyclic, n}; }
  static Family binary_dihedral(int n) { return {FamilyKind::BinaryDihedral, n}; }
  static Family tetrahedral() { return {FamilyKind::BinaryTetrahedral, 0}; }
  static Family octahedral() { return {FamilyKind::BinaryOctahedral, 0}; }
  static Family icosahedral() { return {FamilyKind::BinaryIcosahedral, 0}; }

  bool is_abelian() const { return kind == FamilyKind::Cyclic; }
  bool is_polyhedral() const {
    return kind != FamilyKind::Cyclic && kind != FamilyKind::BinaryDihedral;
  }
  /// "C5", "BD12", "BT24", "BO48", "BI120".
  std::string name() const;
  /// CLI syntax: "cyclic 5", "bd 3", "bt", "bo", "bi".
  std::string token() const;

  friend bool operator==(const Family&, const Family&) = default;
};

/// Parses the CLI family syntax ("cyclic N", "bd N", "bt", "bo", "bi").
Family parse_family(const std::string& kind, std::optional<int> parameter);

using Element = int;

/// Immutable finite group with a full Cayley table.
class FiniteGroup {
 public:
  FiniteGroup(Family family, std::vector<std::vector<Element>> mul,
              std::vector<std::string> descriptions,
              std::vector<ExtQuaternion> quaternions = {});

  int order() const { return static_cast<int>(mul_.size()); }
  const Family& family() const { return family_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  Element inv(Element a) const { return inv_[a]; }
  const std::vector<std::vector<Element>>& table() const { return mul_; }
  const std::string& description(Element a) const { return descriptions_[a]; }
  const std::vector<std::string>& descriptions() const { return descriptions_; }
  /// Unit quaternion of each element; empty for cyclic and binary dihedral groups.
  const std::vector<ExtQuaternion>& quaternions() const { return quaternions_; }
  Element element_order(Element a) const;

 private:
  Family family_;
  std::vector<std::vector<Element>> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
  std::vector<std::string> descriptions_;
  std::vector<ExtQuaternion> quaternions_;
};

/// Z/n, element a at index a.
FiniteGroup build_cyclic(int n);

/// BD_{4n}: element a^i b^j sits at index i + 2n*j (i in [0,2n), j in {0,1}).
FiniteGroup build_binary_dihedral(int n);

/// Generator quaternions r, s, t with r^2 = s^3 = t^k = rst = -1.
struct PolyhedralGenerators {
  ExtQuaternion r, s, t;
  int t_order;  // k in t^k = -1
};

PolyhedralGenerators polyhedral_generators(FamilyKind kind);

/// Checks r^2 = s^3 = t^k = rst = -1 by exact arithmetic.
bool generator_relations_hold(const PolyhedralGenerators& g);

/// Closure of r, s, t under multiplication. Indices follow BFS order from the
/// identity, right-multiplying by r, s, t; descriptions are the BFS words.
FiniteGroup build_binary_polyhedral(FamilyKind kind);

FiniteGroup build_group(const Family& family);

struct GroupAxiomReport {
  bool latin_square = false;
  bool identity_law = false;
  bool inverse_law = false;
  bool associative = false;
  std::int64_t triples_checked = 0;
  bool ok() const { return latin_square && identity_law && inverse_law && associative; }
};

/// Associativity is checked exhaustively up to order 48 and on `random_triples`
/// sampled triples above that.
GroupAxiomReport check_group_axioms(const FiniteGroup& h, std::uint64_t seed = 1,
                                    int random_triples = 10000);

bool commutes(const FiniteGroup& h, Element x, Element y);
std::vector<Element> center(const FiniteGroup& h);
std::vector<Element> centralizer(const FiniteGroup& h, Element x);

/// Classes ordered by smallest element index, elements sorted ascending.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& h);
/// Class index of every element for the given class list.
std::vector<int> class_of(const FiniteGroup& h, const std::vector<std::vector<Element>>& classes);

/// Partition of H \ Z(H) into the sets centralizer(x) \ Z(H). Sorted by
/// (size, smallest element). Throws PartitionError if the sets overlap
/// without coinciding, InvalidArgument for abelian groups.
std::vector<std::vector<Element>> maximal_abelian_classes(const FiniteGroup& h);

}  // namespace commgraph
