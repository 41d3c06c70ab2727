#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commgraph {

/// Simple undirected graph on vertices 0..n-1 with printable labels.
/// Labels never take part in equality.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<int> degree_sequence() const;  // sorted descending
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Adjacency-level equality.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<char> adj_;
  std::vector<std::string> labels_;
};

SimpleGraph complete(int m);
SimpleGraph empty_graph(int m);
SimpleGraph path_graph(int m);
SimpleGraph cycle_graph(int m);
SimpleGraph petersen();
/// r disjoint copies of K_m.
SimpleGraph copies_of_complete(int r, int m);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices);
/// Vertex v of the result is vertex perm[v] of g.
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);
bool is_connected(const SimpleGraph& g);
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

inline constexpr int kIsomorphismSizeBound = 32;

/// A vertex bijection phi with a~b iff phi(a)~phi(b), or nullopt.
/// Throws SizeBoundExceeded above kIsomorphismSizeBound vertices.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b);
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// K_c joined with a disjoint union of cliques.
struct CliqueJoinForm {
  static constexpr int kUniversal = -1;

  int universal_count = 0;
  std::vector<int> clique_sizes;       // per clique, in order of first vertex
  std::vector<int> vertex_assignment;  // kUniversal or a clique index

  /// Clique sizes sorted ascending.
  std::vector<int> size_multiset() const;
  std::vector<int> universal_vertices() const;
  std::vector<std::vector<int>> clique_members() const;
};

/// Throws NotCliqueJoin when the graph is not of the form K_c v (disjoint cliques).
/// Complete graphs decompose as c = n with no cliques.
CliqueJoinForm decompose_clique_join(const SimpleGraph& g);
/// Graph described by the form, vertices numbered as in vertex_assignment.
SimpleGraph reassemble(const CliqueJoinForm& form);
/// Canonical K_c v (K_{a1} u ... ) with universal vertices first.
SimpleGraph clique_join_graph(int universal_count, const std::vector<int>& clique_sizes);

// Text formats.
SimpleGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const SimpleGraph& g);
void write_dot(std::ostream& out, const SimpleGraph& g, const std::string& name = "G");

}  // namespace commgraph
