#include "commgraph/metrics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "commgraph/commuting.hpp"
#include "commgraph/errors.hpp"

namespace commgraph {

DistanceMatrix shortest_distances(const SimpleGraph& g) {
  const int n = g.size();
  DistanceMatrix d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    d[s][s] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v))
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          queue.push_back(w);
        }
    }
    for (int t = 0; t < n; ++t)
      if (d[s][t] < 0)
        throw DisconnectedGraph("shortest_distances: vertices " + std::to_string(s) + " and " +
                                std::to_string(t) + " are disconnected (infinite diameter)");
  }
  return d;
}

std::vector<int> eccentricities(const DistanceMatrix& d) {
  std::vector<int> e(d.size(), 0);
  for (std::size_t v = 0; v < d.size(); ++v) e[v] = *std::max_element(d[v].begin(), d[v].end());
  return e;
}

bool validate_path(const SimpleGraph& g, const std::vector<int>& path, int a, int b) {
  if (path.empty() || path.front() != a || path.back() != b) return false;
  std::set<int> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.size() || !seen.insert(path[i]).second) return false;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Longest paths by exhaustive search

namespace {

using Mask = std::uint32_t;

// Branch and bound over simple paths on at most 32 vertices.
class LongestPathSearch {
 public:
  LongestPathSearch(const SimpleGraph& g, int target) : n_(g.size()), target_(target) {
    if (n_ > kDetourOracleBound)
      throw SizeBoundExceeded("detour oracle: " + std::to_string(n_) + " vertices exceeds bound " +
                              std::to_string(kDetourOracleBound));
    adj_.assign(n_, 0);
    order_.resize(n_);
    // Swapping two twins is an automorphism, so members of a twin class are
    // only ever entered in index order.
    smaller_twins_.assign(n_, 0);
    for (const auto& cls : twin_classes(g))
      for (std::size_t i = 1; i < cls.size(); ++i)
        smaller_twins_[cls[i]] = smaller_twins_[cls[i - 1]] | (Mask{1} << cls[i - 1]);
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
      order_[v] = g.neighbors(v);
      // Higher degree first, ties by index.
      std::stable_sort(order_[v].begin(), order_[v].end(),
                       [&](int x, int y) { return g.degree(x) > g.degree(y); });
    }
  }

  DetourResult run(int start) {
    free_ = ~(Mask{1} << start);
    if (target_ >= 0) free_ &= ~(Mask{1} << target_);
    component_ = std::popcount(reachable(start, Mask{1} << start)) + 1;
    path_ = {start};
    dfs(start, Mask{1} << start);
    DetourResult r;
    r.path = best_path_;
    r.length = best_path_.empty() ? -1 : static_cast<int>(best_path_.size()) - 1;
    return r;
  }

 private:
  Mask reachable(int v, Mask used) const {
    Mask reach = 0;
    Mask frontier = adj_[v] & ~used;
    while (frontier) {
      reach |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & ~used & ~reach;
    }
    return reach;
  }

  void dfs(int v, Mask used) {
    if (done_) return;
    const bool at_end = target_ < 0 || v == target_;
    if (at_end && static_cast<int>(path_.size()) > static_cast<int>(best_path_.size())) {
      best_path_ = path_;
      if (static_cast<int>(best_path_.size()) == component_) done_ = true;
    }
    if (v == target_ || done_) return;
    const Mask reach = reachable(v, used);
    if (target_ >= 0 && !(reach & (Mask{1} << target_))) return;
    if (std::popcount(used) + std::popcount(reach) <= static_cast<int>(best_path_.size())) return;
    for (int w : order_[v]) {
      if (used & (Mask{1} << w)) continue;
      if (w != target_ && (smaller_twins_[w] & ~used & free_)) continue;
      path_.push_back(w);
      dfs(w, used | (Mask{1} << w));
      path_.pop_back();
      if (done_) return;
    }
  }

  int n_;
  int target_;
  int component_ = 0;
  bool done_ = false;
  Mask free_ = 0;
  std::vector<Mask> adj_;
  std::vector<Mask> smaller_twins_;
  std::vector<std::vector<int>> order_;
  std::vector<int> path_;
  std::vector<int> best_path_;
};

void check_vertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

DetourResult detour_distance_oracle(const SimpleGraph& g, int a, int b) {
  check_vertex(g, a);
  check_vertex(g, b);
  LongestPathSearch search(g, b);
  DetourResult r = search.run(a);
  if (r.length < 0)
    throw DisconnectedGraph("detour oracle: no path between " + std::to_string(a) + " and " +
                            std::to_string(b));
  return r;
}

DetourResult detour_eccentricity_oracle(const SimpleGraph& g, int a) {
  check_vertex(g, a);
  LongestPathSearch search(g, -1);
  return search.run(a);
}

// ---------------------------------------------------------------------------
// Longest paths in clique joins

DetourResult detour_structural(const CliqueJoinForm& form, int a, int b) {
  const int n = static_cast<int>(form.vertex_assignment.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("detour_structural: vertex out of range");
  if (a == b) return {0, {a}};
  constexpr int U = CliqueJoinForm::kUniversal;
  const int ta = form.vertex_assignment[a], tb = form.vertex_assignment[b];
  const auto members = form.clique_members();

  std::vector<int> spare;  // universal vertices other than the endpoints
  for (int u : form.universal_vertices())
    if (u != a && u != b) spare.push_back(u);

  auto without = [](std::vector<int> v, std::initializer_list<int> drop) {
    for (int x : drop) v.erase(std::remove(v.begin(), v.end(), x), v.end());
    return v;
  };

  std::vector<std::vector<int>> segments;
  std::vector<int> used_cliques;
  if (ta != U && ta == tb) {
    if (form.universal_count == 0) {
      // Hamiltonian path inside the clique.
      std::vector<int> path{a};
      for (int v : without(members[ta], {a, b})) path.push_back(v);
      path.push_back(b);
      return {static_cast<int>(path.size()) - 1, path};
    }
    std::vector<int> first{a};
    for (int v : without(members[ta], {a, b})) first.push_back(v);
    segments.push_back(std::move(first));
    segments.push_back({b});
    used_cliques.push_back(ta);
  } else {
    if (ta != U) {
      std::vector<int> first{a};
      for (int v : without(members[ta], {a})) first.push_back(v);
      segments.push_back(std::move(first));
      used_cliques.push_back(ta);
    }
    if (tb != U) {
      std::vector<int> last = without(members[tb], {b});
      last.push_back(b);
      segments.push_back(std::move(last));
      used_cliques.push_back(tb);
    }
  }

  // k segments need k-1 separators taken from the spare universal vertices.
  const int endpoint_segments = static_cast<int>(segments.size());
  const int middle_allowed = static_cast<int>(spare.size()) + 1 - endpoint_segments;
  if (middle_allowed < 0)
    throw DisconnectedGraph("detour_structural: no path between " + std::to_string(a) + " and " +
                            std::to_string(b));
  std::vector<int> candidates;
  for (int q = 0; q < static_cast<int>(members.size()); ++q)
    if (std::find(used_cliques.begin(), used_cliques.end(), q) == used_cliques.end())
      candidates.push_back(q);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int x, int y) { return members[x].size() > members[y].size(); });
  if (static_cast<int>(candidates.size()) > middle_allowed) candidates.resize(middle_allowed);

  std::vector<std::vector<int>> ordered;
  if (ta != U) ordered.push_back(segments.front());
  for (int q : candidates) ordered.push_back(members[q]);
  if (tb != U) ordered.push_back(segments.back());

  std::vector<int> path;
  std::size_t next_spare = 0;
  if (ta == U) path.push_back(a);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i > 0) path.push_back(spare[next_spare++]);
    path.insert(path.end(), ordered[i].begin(), ordered[i].end());
  }
  if (tb == U) path.push_back(b);
  // Leftover universal vertices go right after the first universal on the path.
  std::vector<int> extra(spare.begin() + static_cast<long>(next_spare), spare.end());
  if (!extra.empty()) {
    auto it = std::find_if(path.begin(), path.end(),
                           [&](int v) { return form.vertex_assignment[v] == U; });
    if (it == path.end())
      throw Error("detour_structural: no universal vertex on the path to attach spares to");
    path.insert(it + 1, extra.begin(), extra.end());
  }
  return {static_cast<int>(path.size()) - 1, path};
}

// ---------------------------------------------------------------------------
// Metric dimension

bool is_resolving(const DistanceMatrix& d, const std::vector<int>& basis) {
  std::set<std::vector<int>> seen;
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<int> rep;
    rep.reserve(basis.size());
    for (int u : basis) rep.push_back(d[v][u]);
    if (!seen.insert(std::move(rep)).second) return false;
  }
  return true;
}

std::vector<std::vector<int>> twin_classes(const SimpleGraph& g) {
  const int n = g.size();
  auto twins = [&](int u, int v) {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (auto& cls : classes)
      if (twins(cls.front(), v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({v});
  }
  return classes;
}

BasisResult metric_dimension_oracle(const SimpleGraph& g) {
  const int n = g.size();
  if (n > kDimensionOracleBound)
    throw SizeBoundExceeded("metric dimension oracle: " + std::to_string(n) +
                            " vertices exceeds bound " + std::to_string(kDimensionOracleBound));
  const DistanceMatrix d = shortest_distances(g);
  const auto classes = twin_classes(g);
  int lower = 0;
  for (const auto& c : classes) lower += static_cast<int>(c.size()) - 1;
  std::vector<int> class_id(n);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (int v : classes[c]) class_id[v] = c;

  for (int k = lower; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      // A resolving set misses at most one vertex of each twin class.
      std::vector<int> missing(classes.size(), 0);
      std::vector<char> in(n, 0);
      for (int v : idx) in[v] = 1;
      bool admissible = true;
      for (int v = 0; v < n && admissible; ++v)
        if (!in[v] && ++missing[class_id[v]] > 1) admissible = false;
      if (admissible && is_resolving(d, idx)) return {k, idx};
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error("metric_dimension_oracle: no resolving set found");
}

BasisResult metric_dimension_structural(const CliqueJoinForm& form) {
  const int n = static_cast<int>(form.vertex_assignment.size());
  if (n <= 1) return {0, {}};
  const auto universal = form.universal_vertices();
  const auto members = form.clique_members();
  std::vector<int> singletons;
  std::vector<std::vector<int>> large;
  for (const auto& m : members) {
    if (m.size() == 1)
      singletons.push_back(m.front());
    else
      large.push_back(m);
  }
  if (universal.empty() && members.size() > 1)
    throw DisconnectedGraph("metric_dimension_structural: clique union without universal vertices");

  // All but one vertex of each twin class: universal vertices, the singleton
  // cliques (mutual twins), and each clique of size >= 2.
  std::vector<int> basis;
  auto all_but_last = [&](const std::vector<int>& cls) {
    if (cls.size() > 1) basis.insert(basis.end(), cls.begin(), cls.end() - 1);
  };
  all_but_last(universal);
  all_but_last(singletons);
  for (const auto& m : large) all_but_last(m);
  // With one singleton and one larger clique the leftover universal vertex and
  // the leftover clique vertex see the same distances; any set of the
  // twin-bound size leaves such a pair, so one more vertex is required.
  if (singletons.size() == 1 && large.size() == 1 && !universal.empty())
    basis.push_back(universal.back());
  std::sort(basis.begin(), basis.end());

  const DistanceMatrix d = shortest_distances(reassemble(form));
  if (!is_resolving(d, basis))
    throw UnresolvedPair("metric_dimension_structural: canonical set does not resolve the graph");
  return {static_cast<int>(basis.size()), basis};
}

// ---------------------------------------------------------------------------
// Report

bool MetricReport::audits_agree() const {
  for (const auto& a : audits)
    if (!a.agree) return false;
  return true;
}

MetricReport full_report(const SimpleGraph& g, const MetricOptions& options) {
  MetricReport rep;
  const int n = g.size();
  if (n == 0) throw InvalidArgument("full_report: empty graph");
  rep.order = n;
  const DistanceMatrix d = shortest_distances(g);
  rep.eccentricity = eccentricities(d);
  rep.radius = *std::min_element(rep.eccentricity.begin(), rep.eccentricity.end());
  rep.diameter = *std::max_element(rep.eccentricity.begin(), rep.eccentricity.end());

  try {
    rep.form = decompose_clique_join(g);
  } catch (const NotCliqueJoin&) {
    rep.form.reset();
  }
  rep.structural = rep.form.has_value();

  std::vector<std::vector<int>> ecc_paths(n);
  rep.detour_eccentricity.assign(n, 0);
  if (rep.structural) {
    const CliqueJoinForm& form = *rep.form;
    for (int a = 0; a < n; ++a) {
      ecc_paths[a] = {a};
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        DetourResult r = detour_structural(form, a, b);
        if (r.length > rep.detour_eccentricity[a]) {
          rep.detour_eccentricity[a] = r.length;
          ecc_paths[a] = std::move(r.path);
        }
      }
    }
    const BasisResult dim = metric_dimension_structural(form);
    rep.metric_dimension = dim.dimension;
    rep.basis = dim.basis;

    if (n <= options.pair_audit_max) {
      AuditRecord audit{"detour_pairs", true, ""};
      for (int a = 0; a < n && audit.agree; ++a)
        for (int b = a + 1; b < n && audit.agree; ++b) {
          const int oracle = detour_distance_oracle(g, a, b).length;
          const int structural = detour_structural(form, a, b).length;
          if (oracle != structural) {
            audit.agree = false;
            audit.detail = "pair (" + std::to_string(a) + "," + std::to_string(b) + "): oracle " +
                           std::to_string(oracle) + ", structural " + std::to_string(structural);
          }
        }
      if (audit.agree) audit.detail = std::to_string(n * (n - 1) / 2) + " pairs";
      rep.audits.push_back(audit);
    }
    if (n <= options.eccentricity_oracle_max) {
      AuditRecord audit{"detour_eccentricity", true, std::to_string(n) + " vertices"};
      for (int a = 0; a < n && audit.agree; ++a) {
        const int oracle = detour_eccentricity_oracle(g, a).length;
        if (oracle != rep.detour_eccentricity[a]) {
          audit.agree = false;
          audit.detail = "vertex " + std::to_string(a) + ": oracle " + std::to_string(oracle) +
                         ", structural " + std::to_string(rep.detour_eccentricity[a]);
        }
      }
      rep.audits.push_back(audit);
    }
    if (n <= options.dimension_oracle_max) {
      const int oracle = metric_dimension_oracle(g).dimension;
      rep.audits.push_back({"metric_dimension", oracle == rep.metric_dimension,
                            "oracle " + std::to_string(oracle) + ", structural " +
                                std::to_string(rep.metric_dimension)});
    }
    if (form.universal_count == 2) {
      const auto u = form.universal_vertices();
      DetourResult r = detour_structural(form, u[0], u[1]);
      rep.detour_center_pair = r.length;
      rep.detour_center_path = std::move(r.path);
    }
  } else {
    if (n > options.eccentricity_oracle_max || n > kDetourOracleBound || n > kDimensionOracleBound)
      throw SizeBoundExceeded("full_report: graph is not a clique join and has " + std::to_string(n) +
                              " vertices, above the oracle bounds");
    for (int a = 0; a < n; ++a) {
      DetourResult r = detour_eccentricity_oracle(g, a);
      rep.detour_eccentricity[a] = r.length;
      ecc_paths[a] = std::move(r.path);
    }
    const BasisResult dim = metric_dimension_oracle(g);
    rep.metric_dimension = dim.dimension;
    rep.basis = dim.basis;
  }

  const auto rmin = std::min_element(rep.detour_eccentricity.begin(), rep.detour_eccentricity.end());
  const auto rmax = std::max_element(rep.detour_eccentricity.begin(), rep.detour_eccentricity.end());
  rep.detour_radius_std = *rmin;
  rep.detour_diameter = *rmax;
  rep.detour_radius_path = ecc_paths[rmin - rep.detour_eccentricity.begin()];
  rep.detour_diameter_path = ecc_paths[rmax - rep.detour_eccentricity.begin()];

  auto certify = [&](const std::vector<int>& path, int length, const char* what) {
    if (path.empty() || !validate_path(g, path, path.front(), path.back()) ||
        static_cast<int>(path.size()) - 1 != length)
      throw Error(std::string("full_report: witness path for ") + what + " failed validation");
  };
  certify(rep.detour_radius_path, rep.detour_radius_std, "detour radius");
  certify(rep.detour_diameter_path, rep.detour_diameter, "detour diameter");
  if (rep.detour_center_pair) certify(rep.detour_center_path, *rep.detour_center_pair, "center pair");
  if (!is_resolving(d, rep.basis)) throw UnresolvedPair("full_report: basis does not resolve the graph");
  return rep;
}

MetricReport full_report(const Family& family, const MetricOptions& options) {
  return full_report(commuting_graph(build_group(family)), options);
}

}  // namespace commgraph
