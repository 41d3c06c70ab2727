#include <doctest.h>

#include <sstream>

#include "commgraph/errors.hpp"
#include "commgraph/graphs.hpp"

using namespace commgraph;

TEST_CASE("constructors") {
  CHECK(complete(5).edge_count() == 10);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(copies_of_complete(3, 2).edge_count() == 3);
  const SimpleGraph p = petersen();
  CHECK(p.size() == 10);
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
}

TEST_CASE("join and union") {
  const SimpleGraph g = join(complete(2), disjoint_union(copies_of_complete(2, 2), complete(2)));
  CHECK(g.size() == 8);
  CHECK(g.degree_sequence() == std::vector<int>{7, 7, 3, 3, 3, 3, 3, 3});
  CHECK(complement(complement(g)) == g);
  CHECK(complement(complete(4)) == empty_graph(4));
}

TEST_CASE("isomorphism") {
  const SimpleGraph p = petersen();
  const SimpleGraph q = relabel(p, {3, 1, 4, 0, 5, 9, 2, 6, 8, 7});
  CHECK(is_isomorphic(p, q));
  const auto phi = find_isomorphism(p, q);
  REQUIRE(phi);
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) CHECK(p.adjacent(a, b) == q.adjacent((*phi)[a], (*phi)[b]));
  CHECK_FALSE(is_isomorphic(complete(3), path_graph(3)));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_THROWS_AS(is_isomorphic(complete(33), complete(33)), SizeBoundExceeded);
}

TEST_CASE("clique-join decomposition") {
  const CliqueJoinForm form = decompose_clique_join(clique_join_graph(2, {2, 2, 2}));
  CHECK(form.universal_count == 2);
  CHECK(form.size_multiset() == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(decompose_clique_join(petersen()), NotCliqueJoin);
  const CliqueJoinForm k5 = decompose_clique_join(complete(5));
  CHECK(k5.universal_count == 5);
  CHECK(k5.clique_sizes.empty());
  const CliqueJoinForm union_only = decompose_clique_join(copies_of_complete(3, 2));
  CHECK(union_only.universal_count == 0);
  CHECK(union_only.size_multiset() == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(decompose_clique_join(path_graph(4)), NotCliqueJoin);
  const CliqueJoinForm star = decompose_clique_join(join(complete(1), empty_graph(3)));
  CHECK(star.universal_count == 1);
  CHECK(star.size_multiset() == std::vector<int>{1, 1, 1});
}

TEST_CASE("edge-list format") {
  std::istringstream in("# triangle\n3\n0 1\n1 2\n0 2\n");
  const SimpleGraph g = read_edge_list(in);
  CHECK(g == complete(3));
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);

  for (const char* bad : {"", "# nothing\n", "x\n", "3\n0 3\n", "3\n1 1\n", "3\n0 1\n1 0\n", "3\n0\n"}) {
    std::istringstream b(bad);
    CAPTURE(bad);
    CHECK_THROWS_AS(read_edge_list(b), ParseError);
  }
}

TEST_CASE("dot output quotes labels") {
  SimpleGraph g(2, {"a\"b", "c"});
  g.add_edge(0, 1);
  std::ostringstream out;
  write_dot(out, g);
  CHECK(out.str().find("label=\"a\\\"b\"") != std::string::npos);
  CHECK(out.str().find("0 -- 1;") != std::string::npos);
}

TEST_CASE("invalid edges") {
  SimpleGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
}
