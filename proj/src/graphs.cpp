#include "commgraph/graphs.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : SimpleGraph(n, default_labels(n)) {}

SimpleGraph::SimpleGraph(int n, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), labels_(std::move(labels)) {
  if (n < 0) throw InvalidArgument("SimpleGraph: negative vertex count");
  if (static_cast<int>(labels_.size()) != n)
    throw InvalidArgument("SimpleGraph: label count does not match vertex count");
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("SimpleGraph: loops are not allowed");
  adj_[index(u, v)] = adj_[index(v, u)] = 1;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[index(u, v)] = adj_[index(v, u)] = 0;
}

int SimpleGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < n_; ++w) d += adj_[index(v, w)];
  return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (adj_[index(v, w)]) out.push_back(w);
  return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

long SimpleGraph::edge_count() const {
  long e = 0;
  for (char a : adj_) e += a;
  return e / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw InvalidArgument("SimpleGraph: label count does not match vertex count");
  labels_ = std::move(labels);
}

SimpleGraph complete(int m) {
  SimpleGraph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph empty_graph(int m) { return SimpleGraph(m); }

SimpleGraph path_graph(int m) {
  SimpleGraph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int m) {
  if (m < 3) throw InvalidArgument("cycle_graph: need at least 3 vertices");
  SimpleGraph g = path_graph(m);
  g.add_edge(m - 1, 0);
  return g;
}

// Vertex numbering of the classical drawing with outer 5-cycle labels
// {8,7,6,10,9} and inner labels {3,2,1,5,4}, shifted to 0-based.
SimpleGraph petersen() {
  static const int edges[15][2] = {{1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5},  {2, 7},  {3, 5}, {3, 8},
                                   {4, 9}, {5, 10}, {6, 7}, {6, 10}, {7, 8}, {8, 9}, {9, 10}};
  SimpleGraph g(10);
  for (const auto& e : edges) g.add_edge(e[0] - 1, e[1] - 1);
  return g;
}

SimpleGraph copies_of_complete(int r, int m) {
  SimpleGraph g(0);
  for (int i = 0; i < r; ++i) g = disjoint_union(g, complete(m));
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  SimpleGraph g(a.size() + b.size(), std::move(labels));
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
  return g;
}

SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g = disjoint_union(a, b);
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < b.size(); ++v) g.add_edge(u, a.size() + v);
  return g;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c(g.size(), g.labels());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices) {
  std::vector<std::string> labels;
  for (int v : vertices) labels.push_back(g.label(v));
  SimpleGraph s(static_cast<int>(vertices.size()), std::move(labels));
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) s.add_edge(i, j);
  return s;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.size())
    throw InvalidArgument("relabel: permutation size mismatch");
  return induced_subgraph(g, perm);
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::deque<int> queue{s};
    comp[s] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          queue.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Degree plus the sorted multiset of neighbor degrees.
std::vector<std::vector<int>> vertex_invariants(const SimpleGraph& g) {
  std::vector<int> deg(g.size());
  for (int v = 0; v < g.size(); ++v) deg[v] = g.degree(v);
  std::vector<std::vector<int>> inv(g.size());
  for (int v = 0; v < g.size(); ++v) {
    inv[v].push_back(deg[v]);
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(deg[w]);
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& a, const SimpleGraph& b) : a_(a), b_(b), n_(a.size()) {
    inv_a_ = vertex_invariants(a);
    inv_b_ = vertex_invariants(b);
    std::map<std::vector<int>, int> cls;
    for (const auto& x : inv_a_) cls.emplace(x, 0);
    int id = 0;
    for (auto& [k, v] : cls) v = id++;
    class_a_.resize(n_);
    class_b_.resize(n_);
    for (int v = 0; v < n_; ++v) class_a_[v] = cls.at(inv_a_[v]);
    for (int v = 0; v < n_; ++v) {
      auto it = cls.find(inv_b_[v]);
      class_b_[v] = it == cls.end() ? -1 : it->second;
    }
    build_order();
  }

  bool invariants_match() const {
    auto x = inv_a_, y = inv_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  std::optional<std::vector<int>> run() {
    if (!invariants_match()) return std::nullopt;
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Next vertex: most neighbors already ordered, then smallest invariant class.
  void build_order() {
    std::vector<char> placed(n_, 0);
    std::vector<int> class_count(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) ++class_count[class_a_[v]];
    for (int step = 0; step < n_; ++step) {
      int best = -1, best_links = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : order_) links += a_.adjacent(v, w);
        if (best < 0 || links > best_links ||
            (links == best_links && class_count[class_a_[v]] < class_count[class_a_[best]])) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (int cand = 0; cand < n_; ++cand) {
      if (used_[cand] || class_b_[cand] != class_a_[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int w = order_[d];
        ok = a_.adjacent(v, w) == b_.adjacent(cand, map_[w]);
      }
      if (!ok) continue;
      map_[v] = cand;
      used_[cand] = 1;
      if (extend(depth + 1)) return true;
      used_[cand] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  int n_;
  std::vector<std::vector<int>> inv_a_, inv_b_;
  std::vector<int> class_a_, class_b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.size() > kIsomorphismSizeBound || b.size() > kIsomorphismSizeBound)
    throw SizeBoundExceeded("is_isomorphic: graphs above " + std::to_string(kIsomorphismSizeBound) +
                            " vertices; compare clique-join forms instead");
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
  return IsoSearch(a, b).run();
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return find_isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// Clique-join forms

std::vector<int> CliqueJoinForm::size_multiset() const {
  std::vector<int> s = clique_sizes;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> CliqueJoinForm::universal_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(vertex_assignment.size()); ++v)
    if (vertex_assignment[v] == kUniversal) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> CliqueJoinForm::clique_members() const {
  std::vector<std::vector<int>> out(clique_sizes.size());
  for (int v = 0; v < static_cast<int>(vertex_assignment.size()); ++v)
    if (vertex_assignment[v] != kUniversal) out[vertex_assignment[v]].push_back(v);
  return out;
}

CliqueJoinForm decompose_clique_join(const SimpleGraph& g) {
  const int n = g.size();
  CliqueJoinForm form;
  form.vertex_assignment.assign(n, 0);
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      form.vertex_assignment[v] = CliqueJoinForm::kUniversal;
      ++form.universal_count;
    } else {
      rest.push_back(v);
    }
  }
  const SimpleGraph sub = induced_subgraph(g, rest);
  for (const auto& comp : connected_components(sub)) {
    const int size = static_cast<int>(comp.size());
    for (int v : comp)
      if (sub.degree(v) != size - 1)
        throw NotCliqueJoin("decompose_clique_join: component containing vertex " +
                            std::to_string(rest[v]) + " is not a clique");
    const int id = static_cast<int>(form.clique_sizes.size());
    form.clique_sizes.push_back(size);
    for (int v : comp) form.vertex_assignment[rest[v]] = id;
  }
  return form;
}

SimpleGraph reassemble(const CliqueJoinForm& form) {
  const int n = static_cast<int>(form.vertex_assignment.size());
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int a = form.vertex_assignment[u], b = form.vertex_assignment[v];
      if (a == CliqueJoinForm::kUniversal || b == CliqueJoinForm::kUniversal || a == b)
        g.add_edge(u, v);
    }
  return g;
}

SimpleGraph clique_join_graph(int universal_count, const std::vector<int>& clique_sizes) {
  SimpleGraph rest(0);
  for (int a : clique_sizes) rest = disjoint_union(rest, complete(a));
  SimpleGraph g = join(complete(universal_count), rest);
  std::vector<std::string> labels(g.size());
  for (int v = 0; v < g.size(); ++v) labels[v] = std::to_string(v);
  g.set_labels(std::move(labels));
  return g;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

// Strips '#' comments; returns false for blank lines.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("edge list: empty input");
  std::istringstream head(line);
  long n = -1;
  std::string extra;
  if (!(head >> n) || n < 0 || (head >> extra))
    throw ParseError("edge list line " + std::to_string(lineno) + ": expected vertex count");
  SimpleGraph g(static_cast<int>(n));
  while (next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u >> v) || (ls >> extra))
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v) throw ParseError("edge list line " + std::to_string(lineno) + ": loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("edge list line " + std::to_string(lineno) + ": repeated edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const SimpleGraph& g, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "graph " << quote(name) << " {\n";
  for (int v = 0; v < g.size(); ++v) out << "  " << v << " [label=" << quote(g.label(v)) << "];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace commgraph
