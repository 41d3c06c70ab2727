#include "commgraph/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "commgraph/commuting.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/metrics.hpp"

namespace commgraph {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Match:
      return "match";
    case CheckStatus::Mismatch:
      return "mismatch";
    case CheckStatus::DefinitionalAmbiguity:
      return "definitional-ambiguity";
  }
  return "mismatch";
}

bool VerificationReport::ok() const { return count(CheckStatus::Mismatch) == 0; }

int VerificationReport::count(CheckStatus status) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [&](const CheckRecord& c) { return c.status == status; }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const std::vector<std::string>& verification_sections() {
  static const std::vector<std::string> sections{"realization", "complement", "groups",
                                                 "structure",   "mckay",      "metrics"};
  return sections;
}

CoxeterMatrix affine_a5_matrix() {
  CoxeterMatrix m(6, CoxeterLabel(2));
  for (int i = 0; i < 6; ++i) m.set(i, (i + 1) % 6, CoxeterLabel(3));
  return m;
}

SimpleGraph affine_a5_commuting_graph() {
  static const int a[6][6] = {{0, 0, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1},
                              {1, 1, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 0, 0}};
  SimpleGraph g(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (a[i][j]) g.add_edge(i, j);
  return g;
}

namespace {

void record(VerificationReport& r, std::string id, std::string location, bool ok,
            std::string expected, std::string observed) {
  r.checks.push_back({std::move(id), std::move(location),
                      ok ? CheckStatus::Match : CheckStatus::Mismatch, std::move(expected),
                      std::move(observed)});
}

template <class T>
void record_value(VerificationReport& r, std::string id, std::string location, const T& expected,
                  const T& observed) {
  std::ostringstream e, o;
  e << expected;
  o << observed;
  record(r, std::move(id), std::move(location), expected == observed, e.str(), o.str());
}

std::string ratio(long good, long total) { return std::to_string(good) + "/" + std::to_string(total); }

const CoxeterLabel kLabels[] = {CoxeterLabel(3), CoxeterLabel(17), CoxeterLabel::infinity()};

VerificationReport verify_realization(std::uint64_t seed) {
  VerificationReport r;
  const SimpleGraph p = petersen();
  for (CoxeterLabel l : kLabels) {
    const bool ok = commuting_graph_of_generators(realize(p, l)) == p;
    record(r, "realization.petersen.L" + l.to_string(), "realization round trip", ok, "identical",
           ok ? "identical" : "differs");
  }
  const CoxeterMatrix pm = realize(p);
  int twos = 0;
  for (int i = 0; i < pm.rank(); ++i)
    for (int j = i + 1; j < pm.rank(); ++j) twos += pm.at(i, j) == CoxeterLabel(2);
  record_value(r, "realization.petersen.entries", "Petersen matrix has one 2 per edge", 15, twos);

  std::mt19937_64 rng(seed);
  long good = 0, total = 0;
  for (int k = 0; k < 500; ++k) {
    const SimpleGraph g = random_graph(1 + static_cast<int>(rng() % 12), rng);
    for (CoxeterLabel l : kLabels) {
      ++total;
      good += commuting_graph_of_generators(realize(g, l)) == g;
    }
  }
  record(r, "realization.random", "realization round trip on random graphs", good == total,
         ratio(total, total), ratio(good, total));

  const CoxeterMatrix single = realize(SimpleGraph(1));
  const std::string text = presentation_text(single);
  record(r, "realization.single_vertex", "one generator gives the cyclic group of order 2",
         single.rank() == 1 && text == "s1^2 = 1\n", "s1^2 = 1", text.substr(0, text.size() - 1));
  return r;
}

VerificationReport verify_complement(std::uint64_t seed) {
  VerificationReport r;
  std::mt19937_64 rng(seed);
  long complement_ok = 0, degree_ok = 0;
  const long trials = 500;
  for (long k = 0; k < trials; ++k) {
    const CoxeterMatrix m = random_coxeter_matrix(1 + static_cast<int>(rng() % 12), rng);
    const SimpleGraph c = commuting_graph_of_generators(m);
    const SimpleGraph x = coxeter_graph(m);
    complement_ok += complement(c) == x;
    bool deg = true;
    for (int v = 0; v < m.rank(); ++v) deg = deg && c.degree(v) + x.degree(v) == m.rank() - 1;
    degree_ok += deg;
  }
  record(r, "complement.random", "Coxeter graph is the complement of the commuting graph",
         complement_ok == trials, ratio(trials, trials), ratio(complement_ok, trials));
  record(r, "complement.degree", "commuting and Coxeter degrees sum to n-1", degree_ok == trials,
         ratio(trials, trials), ratio(degree_ok, trials));

  const CoxeterMatrix a5 = affine_a5_matrix();
  const bool printed = commuting_graph_of_generators(a5) == affine_a5_commuting_graph();
  record(r, "complement.affine_a5.adjacency", "affine A5 commuting-graph adjacency matrix", printed,
         "printed matrix", printed ? "identical" : "differs");
  const bool comp = complement(commuting_graph_of_generators(a5)) == coxeter_graph(a5) &&
                    coxeter_graph(a5) == cycle_graph(6);
  record(r, "complement.affine_a5.coxeter", "affine A5 Coxeter graph is the 6-cycle and the complement",
         comp, "C6", comp ? "C6" : "differs");
  return r;
}

std::vector<Family> nonabelian_families() {
  std::vector<Family> out;
  for (int n = 2; n <= 6; ++n) out.push_back(Family::binary_dihedral(n));
  out.push_back(Family::tetrahedral());
  out.push_back(Family::octahedral());
  out.push_back(Family::icosahedral());
  return out;
}

std::vector<Family> mckay_families() {
  std::vector<Family> out;
  for (int n = 4; n <= 8; ++n) out.push_back(Family::cyclic(n));
  const auto rest = nonabelian_families();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

VerificationReport verify_groups() {
  VerificationReport r;
  struct Polyhedral {
    FamilyKind kind;
    int order;
    int classes;
  };
  for (const Polyhedral& p : {Polyhedral{FamilyKind::BinaryTetrahedral, 24, 7},
                              Polyhedral{FamilyKind::BinaryOctahedral, 48, 8},
                              Polyhedral{FamilyKind::BinaryIcosahedral, 120, 9}}) {
    const FiniteGroup h = build_binary_polyhedral(p.kind);
    const std::string name = h.family().name();
    const bool relations = generator_relations_hold(polyhedral_generators(p.kind));
    record(r, "groups." + name + ".relations", "r^2 = s^3 = t^k = rst = -1", relations, "hold",
           relations ? "hold" : "fail");
    record_value(r, "groups." + name + ".order", "group order", p.order, h.order());
    record_value(r, "groups." + name + ".classes", "conjugacy class count", p.classes,
                 static_cast<int>(conjugacy_classes(h).size()));
  }
  for (const Family& f : nonabelian_families()) {
    const FiniteGroup h = build_group(f);
    const bool axioms = check_group_axioms(h).ok();
    record(r, "groups." + f.name() + ".axioms", "Cayley table is a group", axioms, "group",
           axioms ? "group" : "fails");
    record_value(r, "groups." + f.name() + ".center", "center has order 2", 2,
                 static_cast<int>(center(h).size()));
  }
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup h = build_binary_dihedral(n);
    record_value(r, "groups." + h.family().name() + ".order", "group order", 4 * n, h.order());
  }
  return r;
}

VerificationReport verify_structure_section() {
  VerificationReport r;
  for (const Family& f : nonabelian_families()) {
    const FiniteGroup h = build_group(f);
    const StructureReport expected = expected_structure(f);
    const std::string want = format_multiset(expected.expected_universal, expected.expected_sizes);
    const std::string id = "structure." + f.name();
    try {
      const StructureReport rep = verify_structure(h);
      record(r, id, "clique-join shape of the commuting graph", true, want,
             format_multiset(rep.observed.universal_count, rep.observed.size_multiset()));
    } catch (const StructureMismatch& e) {
      record(r, id, "clique-join shape of the commuting graph", false, want, e.what());
    } catch (const NotCliqueJoin& e) {
      record(r, id, "clique-join shape of the commuting graph", false, want, e.what());
    }
    if (h.order() <= kIsomorphismSizeBound) {
      const bool iso = is_isomorphic(commuting_graph(h),
                                     clique_join_graph(expected.expected_universal, expected.expected_sizes));
      record(r, id + ".isomorphism", "isomorphism witness for the clique-join shape", iso, "isomorphic",
             iso ? "isomorphic" : "not isomorphic");
    }
  }
  for (int n = 4; n <= 8; ++n) {
    const bool ok = commuting_graph(build_cyclic(n)) == complete(n);
    record(r, "structure.C" + std::to_string(n), "cyclic commuting graph is complete", ok,
           "K" + std::to_string(n), ok ? "K" + std::to_string(n) : "differs");
  }
  return r;
}

std::int64_t expected_cartan_determinant(const AdeType& t) {
  switch (t.kind) {
    case AdeKind::A:
      return t.rank + 1;
    case AdeKind::D:
      return 4;
    case AdeKind::E6:
      return 3;
    case AdeKind::E7:
      return 2;
    case AdeKind::E8:
      return 1;
  }
  return 0;
}

VerificationReport verify_mckay(std::uint64_t seed) {
  VerificationReport r;
  for (const Family& f : mckay_families()) {
    const std::string id = "mckay." + f.name();
    const FiniteGroup h = build_group(f);
    const CharacterTable table = character_table(h, seed);
    const TableCheck tc = check_character_table(table);
    {
      std::ostringstream obs;
      obs << "row " << tc.max_row_error << ", column " << tc.max_column_error << ", sum d^2 "
          << tc.sum_of_squares;
      record(r, id + ".orthogonality", "character table orthogonality", tc.ok(h.order()),
             "errors <= 1e-8, sum d^2 = " + std::to_string(h.order()), obs.str());
    }
    McKayData m;
    try {
      m = mckay_graph(table, natural_character(h, table.classes));
    } catch (const Error& e) {
      record(r, id + ".integrality", "tensor multiplicities are integers", false, "<= 1e-6", e.what());
      continue;
    }
    {
      std::ostringstream obs;
      obs << m.max_integrality_error;
      record(r, id + ".integrality", "tensor multiplicities are integers",
             m.max_integrality_error <= kIntegralityTolerance, "<= 1e-6", obs.str());
    }
    const AdeType ade = ade_type_for(f);
    const SimpleGraph dynkin = dynkin_from_mckay(m);
    const CoxeterMatrix cm = ade_matrix(ade);
    const bool iso = is_isomorphic(dynkin, commuting_graph_of_generators(cm));
    record(r, id + ".dynkin", "McKay graph minus the trivial node is the ADE diagram", iso,
           ade.name(), iso ? ade.name() : "not isomorphic");
    const TensorRuleReport tensor = verify_tensor_rule(m, cm);
    record(r, id + ".tensor_rule", "alpha_ij = 1 exactly when m_ij = 2 (j >= 1)", tensor.pass(), "pass",
           tensor.pass() ? "pass" : "fail");
    record_value(r, id + ".cartan_det", "Cartan determinant", expected_cartan_determinant(ade),
                 determinant(cartan_matrix(dynkin)));
  }
  return r;
}

VerificationReport verify_metrics() {
  VerificationReport r;
  auto table_row = [&](const Family& f, int radius, int diameter, int detour_diameter, int dim) {
    const MetricReport rep = full_report(f);
    const std::string id = "metrics." + f.name();
    record_value(r, id + ".radius", "radius", radius, rep.radius);
    record_value(r, id + ".diameter", "diameter", diameter, rep.diameter);
    record_value(r, id + ".detour_diameter", "detour diameter", detour_diameter, rep.detour_diameter);
    record_value(r, id + ".metric_dimension", "metric dimension", dim, rep.metric_dimension);
    for (const AuditRecord& a : rep.audits)
      record(r, id + ".audit." + a.name, "structural solver agrees with exhaustive oracle", a.agree,
             "agree", a.detail);
    return rep;
  };

  for (int n = 4; n <= 8; ++n) {
    const MetricReport rep = table_row(Family::cyclic(n), 1, 1, n - 1, n - 1);
    record_value(r, "metrics.C" + std::to_string(n) + ".detour_radius", "detour radius", n - 1,
                 rep.detour_radius_std);
  }
  for (int n = 2; n <= 6; ++n) {
    const Family f = Family::binary_dihedral(n);
    const MetricReport rep = table_row(f, 1, 2, 2 * n + 3, 3 * n - 2);
    record_value(r, "metrics." + f.name() + ".detour_radius", "detour radius", 2 * n + 1,
                 rep.detour_radius_std);

    // Every z outside the center is at detour distance 2n+1 from a central x.
    const FiniteGroup h = build_group(f);
    const CliqueJoinForm& form = *rep.form;
    const std::vector<Element> z = center(h);
    int lo = h.order(), hi = -1;
    for (Element y = 0; y < h.order(); ++y) {
      if (std::binary_search(z.begin(), z.end(), y)) continue;
      const int d = detour_structural(form, z.front(), y).length;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    record(r, "metrics." + f.name() + ".center_detour", "central x reaches every non-central z by 2n+1",
           lo == 2 * n + 1 && hi == 2 * n + 1, std::to_string(2 * n + 1),
           lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi));
  }

  struct Row {
    Family f;
    int detour_diameter, dim, stated_radius;
  };
  for (const Row& row : {Row{Family::tetrahedral(), 13, 16, 5}, Row{Family::octahedral(), 19, 34, 7},
                         Row{Family::icosahedral(), 25, 88, 9}}) {
    const MetricReport rep = table_row(row.f, 1, 2, row.detour_diameter, row.dim);
    const std::string id = "metrics." + row.f.name() + ".detour_radius";
    const int pair = rep.detour_center_pair.value_or(-1);
    CheckRecord c{id, "detour radius", CheckStatus::Mismatch, std::to_string(row.stated_radius),
                  "center pair " + std::to_string(pair) + ", min eccentricity " +
                      std::to_string(rep.detour_radius_std)};
    if (pair == row.stated_radius)
      c.status = rep.detour_radius_std == row.stated_radius ? CheckStatus::Match
                                                            : CheckStatus::DefinitionalAmbiguity;
    r.checks.push_back(std::move(c));
  }

  // The exhaustive oracle decides the min-eccentricity figure on BT24.
  const SimpleGraph bt = commuting_graph(build_group(Family::tetrahedral()));
  const MetricReport structural = full_report(bt, MetricOptions{0, 0, 0});
  int oracle_min = bt.size();
  for (int v = 0; v < bt.size(); ++v)
    oracle_min = std::min(oracle_min, detour_eccentricity_oracle(bt, v).length);
  record_value(r, "metrics.BT24.detour_radius_oracle", "oracle min detour eccentricity",
               structural.detour_radius_std, oracle_min);
  return r;
}

}  // namespace

VerificationReport run_verification(const std::string& section, std::uint64_t seed) {
  if (section == "all") {
    VerificationReport all;
    for (const auto& s : verification_sections()) all.append(run_verification(s, seed));
    return all;
  }
  if (section == "realization") return verify_realization(seed);
  if (section == "complement") return verify_complement(seed);
  if (section == "groups") return verify_groups();
  if (section == "structure") return verify_structure_section();
  if (section == "mckay") return verify_mckay(seed);
  if (section == "metrics") return verify_metrics();
  std::string names = "all";
  for (const auto& s : verification_sections()) names += ", " + s;
  throw InvalidArgument("unknown verification section '" + section + "'; available: " + names);
}

}  // namespace commgraph
