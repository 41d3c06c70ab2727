#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/algebra.hpp"
#include "commgraph/graphs.hpp"

namespace commgraph {

using DistanceMatrix = std::vector<std::vector<int>>;

/// All-pairs BFS distances. Throws DisconnectedGraph.
DistanceMatrix shortest_distances(const SimpleGraph& g);
std::vector<int> eccentricities(const DistanceMatrix& d);

inline constexpr int kDetourOracleBound = 24;
inline constexpr int kDimensionOracleBound = 20;

/// A longest path and its edge count.
struct DetourResult {
  int length = 0;
  std::vector<int> path;  // path.front() = a, path.back() = b
};

/// True iff `path` is a simple path in g from a to b (a single vertex when a == b).
bool validate_path(const SimpleGraph& g, const std::vector<int>& path, int a, int b);

/// Exhaustive longest a-b path by depth-first search with branch and bound
/// (prune when used + reachable <= best). Throws SizeBoundExceeded above
/// kDetourOracleBound vertices, DisconnectedGraph when no a-b path exists.
DetourResult detour_distance_oracle(const SimpleGraph& g, int a, int b);

/// Longest path starting at a (any end), i.e. the detour eccentricity e_D(a).
DetourResult detour_eccentricity_oracle(const SimpleGraph& g, int a);

/// Longest a-b path in K_c v (K_{a1} u ... u K_{ar}) read off the form: all
/// universal vertices are used, clique segments are taken whole and need one
/// universal separator between consecutive segments. The path lists vertices
/// of the form's numbering.
DetourResult detour_structural(const CliqueJoinForm& form, int a, int b);

struct BasisResult {
  int dimension = 0;
  std::vector<int> basis;  // ascending
};

/// Every pair of distinct vertices has distinct distance vectors to `basis`.
bool is_resolving(const DistanceMatrix& d, const std::vector<int>& basis);

/// Twin classes: u, v twins iff N(u) \ {v} = N(v) \ {u}.
std::vector<std::vector<int>> twin_classes(const SimpleGraph& g);

/// Smallest resolving set by ascending-size subset search starting at the
/// twin-class lower bound. Throws SizeBoundExceeded above kDimensionOracleBound.
BasisResult metric_dimension_oracle(const SimpleGraph& g);

/// Twin-class count (c-1) + (s-1) + sum (a_i - 1), singletons s grouped into one
/// class, plus one when exactly one singleton and one larger clique remain.
/// The canonical set is always checked against the reassembled graph;
/// throws UnresolvedPair when it fails.
BasisResult metric_dimension_structural(const CliqueJoinForm& form);

struct AuditRecord {
  std::string name;
  bool agree = false;
  std::string detail;
};

struct MetricOptions {
  int pair_audit_max = 18;        // oracle vs structural on every pair up to this order
  int eccentricity_oracle_max = 24;  // oracle e_D on every vertex up to this order
  int dimension_oracle_max = 14;  // oracle metric dimension up to this order
};

struct MetricReport {
  int order = 0;
  int radius = 0;
  int diameter = 0;
  int detour_radius_std = 0;
  int detour_diameter = 0;
  std::optional<int> detour_center_pair;  // when the clique-join form has c = 2
  int metric_dimension = 0;
  std::vector<int> basis;
  std::vector<int> eccentricity;
  std::vector<int> detour_eccentricity;
  std::vector<int> detour_diameter_path;
  std::vector<int> detour_radius_path;
  std::vector<int> detour_center_path;
  bool structural = false;  // clique-join solvers were used
  std::optional<CliqueJoinForm> form;
  std::vector<AuditRecord> audits;

  bool audits_agree() const;
};

/// Structural solvers when g is a clique-join graph (with oracle audits on
/// small orders), oracles otherwise. Every returned path and basis is
/// re-validated against g.
MetricReport full_report(const SimpleGraph& g, const MetricOptions& options = {});
MetricReport full_report(const Family& family, const MetricOptions& options = {});

}  // namespace commgraph
