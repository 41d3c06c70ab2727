#include <doctest.h>

#include <cctype>
#include <set>

#include "commgraph/commuting.hpp"
#include "commgraph/errors.hpp"

using namespace commgraph;

namespace {

int count_prefix(const std::vector<NamedSubset>& subsets, char letter) {
  int n = 0;
  for (const auto& s : subsets) n += s.name.size() > 1 && s.name[0] == letter && std::isdigit(s.name[1]);
  return n;
}

}  // namespace

TEST_CASE("cyclic commuting graphs are complete") {
  const FiniteGroup c6 = build_cyclic(6);
  CHECK(commuting_graph(c6) == complete(6));
  CHECK(commuting_graph(c6, {1, 3, 4}) == complete(3));
  CHECK_THROWS_AS(commuting_graph(c6, {}), InvalidArgument);
}

TEST_CASE("binary dihedral subsets") {
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup h = build_binary_dihedral(n);
    const auto subsets = canonical_subsets(h);
    CAPTURE(n);
    const SimpleGraph g2 = commuting_graph(h, find_subset(subsets, "Gamma2").elements);
    CHECK(decompose_clique_join(g2).size_multiset() == std::vector<int>(n, 2));
    CHECK(decompose_clique_join(g2).universal_count == 0);
    const SimpleGraph g3 = commuting_graph(h, find_subset(subsets, "Gamma3").elements);
    CHECK(g3 == complete(2 * n - 2));
  }
  const auto bd12 = canonical_subsets(build_binary_dihedral(3));
  CHECK(find_subset(bd12, "Gamma1").elements.size() == 6);
  CHECK(find_subset(bd12, "Gamma2").elements.size() == 6);
  CHECK(find_subset(bd12, "Gamma3").elements.size() == 4);
  CHECK(find_subset(bd12, "Z").elements == std::vector<Element>{0, 3});
}

TEST_CASE("polyhedral subsets") {
  const auto bt = canonical_subsets(build_group(Family::tetrahedral()));
  CHECK(count_prefix(bt, 'B') == 3);
  CHECK(count_prefix(bt, 'C') == 4);
  CHECK(count_prefix(bt, 'D') == 0);
  CHECK(find_subset(bt, "B2").elements.size() == 2);
  CHECK(find_subset(bt, "C4").elements.size() == 4);

  const FiniteGroup bi = build_group(Family::icosahedral());
  const auto subsets = canonical_subsets(bi);
  CHECK(count_prefix(subsets, 'B') == 15);
  CHECK(count_prefix(subsets, 'C') == 10);
  CHECK(count_prefix(subsets, 'D') == 6);
  std::set<Element> covered;
  for (const auto& s : subsets)
    if (s.name != "Z" && s.name != "full") covered.insert(s.elements.begin(), s.elements.end());
  CHECK(covered.size() == 118);
  // Each maximal abelian class is a clique.
  for (const auto& s : subsets) {
    if (s.name == "full") continue;
    const SimpleGraph g = commuting_graph(bi, s.elements);
    CHECK(g == complete(g.size()));
  }
}

TEST_CASE("unknown subset names list the alternatives") {
  const auto subsets = canonical_subsets(build_binary_dihedral(3));
  try {
    find_subset(subsets, "Gamma9");
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("Gamma1") != std::string::npos);
    CHECK(msg.find("full") != std::string::npos);
  }
}

TEST_CASE("structure of the full commuting graphs") {
  for (int n = 2; n <= 6; ++n) {
    const StructureReport r = verify_structure(build_binary_dihedral(n));
    CHECK(r.matches);
    CHECK(r.observed.universal_count == 2);
  }
  const StructureReport bo = verify_structure(build_group(Family::octahedral()));
  CHECK(bo.observed.size_multiset() == std::vector<int>{2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6});
  const StructureReport bi = verify_structure(build_group(Family::icosahedral()));
  CHECK(bi.observed.universal_count == 2);
  CHECK(bi.observed.clique_sizes.size() == 31);
  CHECK(verify_structure(build_cyclic(5)).observed.universal_count == 5);

  const SimpleGraph bt = commuting_graph(build_group(Family::tetrahedral()));
  CHECK(is_isomorphic(bt, join(complete(2), disjoint_union(copies_of_complete(3, 2),
                                                             copies_of_complete(4, 4)))));
  CHECK(format_multiset(2, {2, 2, 2, 4, 4, 4, 4}) == "K2 v (3K2 u 4K4)");
}

TEST_CASE("labels are element descriptions") {
  const FiniteGroup bt = build_group(Family::tetrahedral());
  const SimpleGraph g = commuting_graph(bt);
  for (Element x = 0; x < bt.order(); ++x) CHECK(g.label(x) == bt.description(x));
}
