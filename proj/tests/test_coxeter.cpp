#include <doctest.h>

#include <sstream>

#include "commgraph/coxeter.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/verify.hpp"

using namespace commgraph;

TEST_CASE("realize places 2 exactly on edges") {
  const SimpleGraph p = petersen();
  const CoxeterMatrix m = realize(p);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      if (i == j)
        CHECK(m.at(i, j) == CoxeterLabel(1));
      else if (p.adjacent(i, j))
        CHECK(m.at(i, j) == CoxeterLabel(2));
      else
        CHECK(m.at(i, j).is_infinite());
    }
  const CoxeterMatrix e3 = realize(empty_graph(3), CoxeterLabel(3));
  CHECK(e3.at(0, 1) == CoxeterLabel(3));
  CHECK(e3.at(1, 2) == CoxeterLabel(3));
  const CoxeterMatrix k4 = realize(complete(4), CoxeterLabel(7));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(k4.at(i, j) == CoxeterLabel(2));
  CHECK_THROWS_AS(realize(p, CoxeterLabel(2)), InvalidArgument);
}

TEST_CASE("commuting and Coxeter graphs of a matrix") {
  CHECK(commuting_graph_of_generators(realize(petersen(), CoxeterLabel(3))) == petersen());
  const CoxeterMatrix a5 = affine_a5_matrix();
  CHECK(commuting_graph_of_generators(a5) == affine_a5_commuting_graph());
  CHECK(coxeter_graph(a5) == cycle_graph(6));
  CHECK(coxeter_graph(CoxeterMatrix(4, CoxeterLabel(2))) == empty_graph(4));
  CHECK(coxeter_graph(realize(petersen())) == complement(petersen()));
  for (int m : {2, 3, 5}) {
    CoxeterMatrix d(2);
    d.set(0, 1, CoxeterLabel(m));
    CHECK(commuting_graph_of_generators(d).adjacent(0, 1) == (m == 2));
  }
}

TEST_CASE("ADE matrices") {
  CHECK(commuting_graph_of_generators(ade_matrix(AdeType::a(3))) == path_graph(3));
  SimpleGraph e6(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}}) e6.add_edge(u, v);
  CHECK(commuting_graph_of_generators(ade_matrix(AdeType::e6())) == e6);
  const SimpleGraph d4 = commuting_graph_of_generators(ade_matrix(AdeType::d(4)));
  CHECK(d4.degree_sequence() == std::vector<int>{3, 1, 1, 1});
  CHECK(commuting_graph_of_generators(ade_matrix(AdeType::e8())).edge_count() == 7);
  CHECK(AdeType::d(5).name() == "D5");
}

TEST_CASE("presentation text") {
  CHECK(presentation_text(CoxeterMatrix(1)) == "s1^2 = 1\n");
  CoxeterMatrix m(2);
  m.set(0, 1, CoxeterLabel(3));
  CHECK(presentation_text(m) == "s1^2 = 1\n(s1 s2)^3 = 1\ns2^2 = 1\n");
  CHECK(presentation_text(realize(complete(2), CoxeterLabel(3))).find("(s1 s2)^2 = 1") !=
        std::string::npos);
  CHECK(presentation_text(realize(empty_graph(2))) == "s1^2 = 1\ns2^2 = 1\n");
}

TEST_CASE("matrix validation") {
  using Row = std::vector<CoxeterLabel>;
  const CoxeterLabel one(1), two(2), three(3);
  CHECK_THROWS_AS(CoxeterMatrix(std::vector<Row>{{one, two}, {three, one}}), InvalidArgument);
  CHECK_THROWS_AS(CoxeterMatrix(std::vector<Row>{{two, two}, {two, one}}), InvalidArgument);
  CHECK_THROWS_AS(CoxeterMatrix(std::vector<Row>{{one, one}, {one, one}}), InvalidArgument);
  CHECK_THROWS_AS(CoxeterLabel::parse("x"), ParseError);
  CHECK(CoxeterLabel::parse("inf").is_infinite());
  CHECK(CoxeterLabel::parse("17") == CoxeterLabel(17));
}

TEST_CASE("matrix text format round trip") {
  const CoxeterMatrix m = realize(petersen(), CoxeterLabel(5));
  std::ostringstream out;
  write_coxeter_matrix(out, m);
  std::istringstream in(out.str());
  CHECK(read_coxeter_matrix(in) == m);
  std::istringstream single("1\n1\n");
  CHECK(read_coxeter_matrix(single).rank() == 1);
  for (const char* bad : {"", "2\n1 2\n2\n", "2\n1 3\n2 1\n", "a\n"}) {
    std::istringstream b(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(read_coxeter_matrix(b), ParseError);
  }
}
