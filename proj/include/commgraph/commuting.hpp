#pragma once

#include <string>
#include <vector>

#include "commgraph/algebra.hpp"
#include "commgraph/graphs.hpp"

namespace commgraph {

struct NamedSubset {
  std::string name;
  std::vector<Element> elements;  // ascending
};

/// One vertex per element of gamma (in the given order), labelled by the
/// element description; x ~ y iff x != y and xy = yx. Rejects empty gamma.
SimpleGraph commuting_graph(const FiniteGroup& h, const std::vector<Element>& gamma);
SimpleGraph commuting_graph(const FiniteGroup& h);  // gamma = H

/// Cyclic: "Z", "full". Binary dihedral: "Z", "Gamma1" = <a>, "Gamma2" = <a>b,
/// "Gamma3" = <a> \ Z, "full". Binary polyhedral: "Z" followed by the maximal
/// abelian classes named B2.. (size 2), C1.. (size 4), D1.. (size 6 or 8), then "full".
std::vector<NamedSubset> canonical_subsets(const FiniteGroup& h);
const NamedSubset& find_subset(const std::vector<NamedSubset>& subsets, const std::string& name);

struct StructureReport {
  int expected_universal = 0;
  std::vector<int> expected_sizes;  // ascending
  CliqueJoinForm observed;
  bool matches = false;
};

/// Clique-join shape of C(H, H) as stated for each family:
/// C_n -> K_n; BD_{4n} -> K2 v (nK2 u K_{2n-2}); BT -> K2 v (3K2 u 4K4);
/// BO -> K2 v (6K2 u 4K4 u 3K6); BI -> K2 v (15K2 u 10K4 u 6K8).
StructureReport expected_structure(const Family& family);

/// Decomposes C(H, H) and compares with expected_structure.
/// Throws StructureMismatch carrying both multisets when they differ.
StructureReport verify_structure(const FiniteGroup& h);

std::string format_multiset(int universal, const std::vector<int>& sizes);

}  // namespace commgraph
