#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "commgraph/algebra.hpp"
#include "commgraph/errors.hpp"

using namespace commgraph;

namespace {

std::map<int, int> size_histogram(const std::vector<std::vector<Element>>& sets) {
  std::map<int, int> h;
  for (const auto& s : sets) ++h[static_cast<int>(s.size())];
  return h;
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(build_cyclic(1).order() == 1);
  const FiniteGroup c4 = build_cyclic(4);
  CHECK(c4.order() == 4);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) CHECK(commutes(c4, x, y));
  CHECK(center(build_cyclic(7)).size() == 7);
  CHECK_THROWS_AS(build_cyclic(0), InvalidArgument);
}

TEST_CASE("binary dihedral groups") {
  const FiniteGroup q8 = build_binary_dihedral(2);
  CHECK(q8.order() == 8);
  const Element a = 1, b = 4;  // alpha and beta in the i + 2n j layout
  CHECK(q8.mul(a, b) != q8.mul(b, a));
  CHECK(q8.element_order(a) == 4);
  CHECK(q8.element_order(b) == 4);
  CHECK(q8.mul(b, b) == 2);  // beta^2 = alpha^n

  const FiniteGroup bd12 = build_binary_dihedral(3);
  CHECK(center(bd12) == std::vector<Element>{0, 3});
  CHECK(commutes(build_binary_dihedral(2), 1, 2));
  CHECK_THROWS_AS(build_binary_dihedral(1), InvalidArgument);
}

TEST_CASE("polyhedral generators satisfy r^2 = s^3 = t^k = rst = -1") {
  for (FamilyKind k : {FamilyKind::BinaryTetrahedral, FamilyKind::BinaryOctahedral,
                       FamilyKind::BinaryIcosahedral}) {
    const PolyhedralGenerators g = polyhedral_generators(k);
    CHECK(generator_relations_hold(g));
    CHECK(power(g.r, 2) == -ExtQuaternion::one());
  }
  CHECK(polyhedral_generators(FamilyKind::BinaryTetrahedral).t_order == 3);
  CHECK(polyhedral_generators(FamilyKind::BinaryOctahedral).t_order == 4);
  CHECK(polyhedral_generators(FamilyKind::BinaryIcosahedral).t_order == 5);
}

TEST_CASE("polyhedral closures") {
  const FiniteGroup bt = build_binary_polyhedral(FamilyKind::BinaryTetrahedral);
  const FiniteGroup bo = build_binary_polyhedral(FamilyKind::BinaryOctahedral);
  const FiniteGroup bi = build_binary_polyhedral(FamilyKind::BinaryIcosahedral);
  CHECK(bt.order() == 24);
  CHECK(bo.order() == 48);
  CHECK(bi.order() == 120);
  CHECK(conjugacy_classes(bt).size() == 7);
  CHECK(conjugacy_classes(bo).size() == 8);
  CHECK(conjugacy_classes(bi).size() == 9);

  // Z(BT24) = {1, r^2} with r^2 = -1.
  const std::vector<Element> z = center(bt);
  REQUIRE(z.size() == 2);
  CHECK(bt.quaternions()[z[0]] == ExtQuaternion::one());
  CHECK(bt.quaternions()[z[1]] == -ExtQuaternion::one());
  CHECK(bt.description(0) == "1");
  for (const FiniteGroup* h : {&bt, &bo, &bi})
    for (const auto& q : h->quaternions()) CHECK(q.norm() == FieldElem(1));
}

TEST_CASE("group axioms hold for every family") {
  for (const Family& f : {Family::cyclic(6), Family::binary_dihedral(2), Family::binary_dihedral(5),
                          Family::tetrahedral(), Family::octahedral(), Family::icosahedral()}) {
    const GroupAxiomReport r = check_group_axioms(build_group(f));
    CAPTURE(f.name());
    CHECK(r.ok());
    CHECK(r.triples_checked > 0);
  }
}

TEST_CASE("maximal abelian classes partition the non-central elements") {
  const FiniteGroup bt = build_group(Family::tetrahedral());
  CHECK(size_histogram(maximal_abelian_classes(bt)) == std::map<int, int>{{2, 3}, {4, 4}});
  const FiniteGroup bo = build_group(Family::octahedral());
  CHECK(size_histogram(maximal_abelian_classes(bo)) == std::map<int, int>{{2, 6}, {4, 4}, {6, 3}});
  const FiniteGroup bi = build_group(Family::icosahedral());
  const auto classes = maximal_abelian_classes(bi);
  CHECK(size_histogram(classes) == std::map<int, int>{{2, 15}, {4, 10}, {8, 6}});
  std::set<Element> seen;
  for (const auto& c : classes)
    for (Element x : c) CHECK(seen.insert(x).second);
  CHECK(seen.size() == 118);
  CHECK_THROWS_AS(maximal_abelian_classes(build_cyclic(5)), InvalidArgument);
}

TEST_CASE("family parsing") {
  CHECK(parse_family("cyclic", 5) == Family::cyclic(5));
  CHECK(parse_family("bd", 3) == Family::binary_dihedral(3));
  CHECK(parse_family("bi", std::nullopt) == Family::icosahedral());
  CHECK(Family::binary_dihedral(3).name() == "BD12");
  CHECK(Family::octahedral().token() == "bo");
  CHECK_THROWS_AS(parse_family("bx", std::nullopt), InvalidArgument);
  CHECK_THROWS_AS(parse_family("bd", std::nullopt), InvalidArgument);
  CHECK_THROWS_AS(parse_family("bt", 3), InvalidArgument);
}

TEST_CASE("conjugacy classes and centralizers") {
  const FiniteGroup q8 = build_binary_dihedral(2);
  const auto classes = conjugacy_classes(q8);
  CHECK(classes.size() == 5);
  CHECK(classes.front() == std::vector<Element>{0});
  const auto cls = class_of(q8, classes);
  CHECK(cls[0] == 0);
  CHECK(centralizer(q8, 1).size() == 4);
}
