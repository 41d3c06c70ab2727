#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commgraph/characters.hpp"
#include "commgraph/commuting.hpp"
#include "commgraph/coxeter.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/metrics.hpp"
#include "commgraph/verify.hpp"

namespace commgraph::cli {

namespace {

using nlohmann::json;

struct Output {
  std::ostream& out;
  std::ostream& err;
};

std::uint64_t burnside_seed() {
  const char* env = std::getenv("SEED");
  if (!env || !*env) return kDefaultBurnsideSeed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("SEED must be a nonnegative integer, got '") + env + "'");
  }
}

struct FamilyArgs {
  Family family;
  std::size_t consumed = 0;
};

// "cyclic N" | "bd N" | "bt" | "bo" | "bi" at the front of `words`.
FamilyArgs parse_family_words(const std::vector<std::string>& words) {
  if (words.empty()) throw InvalidArgument("missing family (cyclic N | bd N | bt | bo | bi)");
  const std::string& kind = words[0];
  if (kind == "cyclic" || kind == "bd") {
    if (words.size() < 2) throw InvalidArgument("family '" + kind + "' needs a parameter");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(words[1], &used);
      if (used != words[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InvalidArgument("family parameter must be an integer, got '" + words[1] + "'");
    }
    return {parse_family(kind, n), 2};
  }
  return {parse_family(kind, std::nullopt), 1};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("failed writing '" + path + "'");
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

json graph_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.size()}, {"labels", g.labels()}, {"edges", edges}};
}

// ---------------------------------------------------------------------------

int cmd_realize(const std::string& input, const std::string& label, const std::string& output,
                const std::string& presentation, Output io) {
  std::istringstream in(read_file(input));
  const SimpleGraph g = read_edge_list(in);
  const CoxeterMatrix m = realize(g, CoxeterLabel::parse(label));

  // Round trip through the text format before anything is written.
  std::ostringstream text;
  write_coxeter_matrix(text, m);
  std::istringstream back(text.str());
  const CoxeterMatrix reread = read_coxeter_matrix(back);
  if (!(reread == m) || !(commuting_graph_of_generators(reread) == g)) {
    io.err << "realize: round-trip self-check failed\n";
    return kExitMismatch;
  }
  emit(text.str(), output, io.out);
  if (!presentation.empty())
    emit(presentation_text(m), presentation, io.out);
  else if (!output.empty() && output != "-")
    io.out << presentation_text(m);
  return kExitOk;
}

int cmd_commuting(const std::vector<std::string>& words, const std::string& format,
                  const std::string& output, Output io) {
  const FamilyArgs fa = parse_family_words(words);
  if (words.size() > fa.consumed + 1) throw InvalidArgument("unexpected argument '" + words.back() + "'");
  const std::string subset_name = words.size() > fa.consumed ? words[fa.consumed] : "full";
  const FiniteGroup h = build_group(fa.family);
  const auto subsets = canonical_subsets(h);
  const NamedSubset& subset = find_subset(subsets, subset_name);
  const SimpleGraph g = commuting_graph(h, subset.elements);

  std::ostringstream text;
  if (format == "edgelist") {
    write_edge_list(text, g);
  } else if (format == "dot") {
    write_dot(text, g, fa.family.name() + " " + subset.name);
  } else {
    json j = graph_json(g);
    j["family"] = fa.family.name();
    j["subset"] = subset.name;
    j["elements"] = subset.elements;
    text << j.dump(2) << '\n';
  }
  if (format == "edgelist") {
    std::istringstream back(text.str());
    if (!(read_edge_list(back) == g)) {
      io.err << "commuting: edge-list self-check failed\n";
      return kExitMismatch;
    }
  }
  emit(text.str(), output, io.out);
  return kExitOk;
}

int cmd_mckay(const std::vector<std::string>& words, const std::string& output, Output io) {
  const FamilyArgs fa = parse_family_words(words);
  if (words.size() != fa.consumed) throw InvalidArgument("unexpected argument '" + words.back() + "'");
  const std::uint64_t seed = burnside_seed();
  const FiniteGroup h = build_group(fa.family);
  const AdeType ade = ade_type_for(fa.family);
  const CharacterTable table = character_table(h, seed);
  const TableCheck check = check_character_table(table);
  if (!check.ok(h.order())) {
    io.err << "mckay: character table fails orthogonality\n";
    return kExitMismatch;
  }
  const McKayData m = mckay_graph(table, natural_character(h, table.classes));
  const std::vector<int> order = mckay_bfs_order(m);

  IntMatrix alpha(m.size(), std::vector<std::int64_t>(m.size()));
  std::vector<int> dims;
  for (int i = 0; i < m.size(); ++i) {
    dims.push_back(m.dims[order[i]]);
    for (int j = 0; j < m.size(); ++j) alpha[i][j] = m.alpha[order[i]][order[j]];
  }
  const SimpleGraph dynkin = dynkin_from_mckay(m);
  std::vector<int> perm;
  for (std::size_t i = 1; i < order.size(); ++i) perm.push_back(order[i] - 1);
  const SimpleGraph ordered = relabel(dynkin, perm);
  if (!is_isomorphic(ordered, commuting_graph_of_generators(ade_matrix(ade)))) {
    io.err << "mckay: Dynkin diagram is not " << ade.name() << "\n";
    return kExitMismatch;
  }
  const IntMatrix cartan = cartan_matrix(ordered);

  json classes = json::array();
  for (const auto& c : table.classes.classes)
    classes.push_back({{"size", c.size()}, {"representative", h.description(c.front())}});
  json j{{"family", fa.family.name()},
         {"order", h.order()},
         {"seed", seed},
         {"classes", classes},
         {"irreducible_order", order},
         {"dims", dims},
         {"alpha", matrix_json(alpha)},
         {"dynkin", ade.name()},
         {"cartan", matrix_json(cartan)},
         {"intersection", matrix_json(intersection_matrix(cartan))},
         {"cartan_determinant", determinant(cartan)},
         {"max_integrality_error", m.max_integrality_error}};
  emit(j.dump(2) + "\n", output, io.out);
  return kExitOk;
}

json report_json(const MetricReport& r) {
  json audits = json::array();
  for (const auto& a : r.audits) audits.push_back({{"name", a.name}, {"agree", a.agree}, {"detail", a.detail}});
  json j{{"order", r.order},
         {"radius", r.radius},
         {"diameter", r.diameter},
         {"detour_radius_std", r.detour_radius_std},
         {"detour_diameter", r.detour_diameter},
         {"detour_center_pair", r.detour_center_pair ? json(*r.detour_center_pair) : json(nullptr)},
         {"metric_dimension", r.metric_dimension},
         {"basis", r.basis},
         {"eccentricity", r.eccentricity},
         {"detour_eccentricity", r.detour_eccentricity},
         {"detour_diameter_path", r.detour_diameter_path},
         {"detour_radius_path", r.detour_radius_path},
         {"detour_center_path", r.detour_center_path},
         {"structural", r.structural},
         {"audits", audits}};
  if (r.form)
    j["clique_join"] = {{"universal", r.form->universal_count}, {"clique_sizes", r.form->size_multiset()}};
  return j;
}

int cmd_metrics(const std::vector<std::string>& words, const std::string& graph_path,
                const MetricOptions& options, const std::string& output, Output io) {
  MetricReport r;
  json j;
  if (!graph_path.empty()) {
    if (!words.empty()) throw InvalidArgument("give either --graph or a family, not both");
    std::istringstream in(read_file(graph_path));
    r = full_report(read_edge_list(in), options);
    j = report_json(r);
  } else {
    const FamilyArgs fa = parse_family_words(words);
    if (words.size() != fa.consumed) throw InvalidArgument("unexpected argument '" + words.back() + "'");
    r = full_report(commuting_graph(build_group(fa.family)), options);
    j = report_json(r);
    j["family"] = fa.family.name();
  }
  emit(j.dump(2) + "\n", output, io.out);
  return r.audits_agree() ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& section, const std::string& json_path, Output io) {
  const VerificationReport rep = run_verification(section, burnside_seed());
  for (const auto& c : rep.checks)
    io.out << "[" << to_string(c.status) << "] " << c.check_id << ": expected " << c.expected
           << ", observed " << c.observed << "\n";
  io.out << rep.checks.size() << " checks: " << rep.count(CheckStatus::Match) << " match, "
         << rep.count(CheckStatus::Mismatch) << " mismatch, "
         << rep.count(CheckStatus::DefinitionalAmbiguity) << " definitional-ambiguity\n";
  if (!json_path.empty()) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"check_id", c.check_id},
                        {"location", c.location},
                        {"status", to_string(c.status)},
                        {"expected", c.expected},
                        {"observed", c.observed}});
    emit(json{{"section", section}, {"ok", rep.ok()}, {"checks", checks}}.dump(2) + "\n", json_path,
         io.out);
  }
  return rep.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Output io{out, err};
  CLI::App app{"Commuting graphs of Coxeter groups and finite subgroups of SL(2,C)", "commgraph"};
  app.require_subcommand(1);

  std::string input, label = "inf", output, presentation;
  auto* realize_cmd = app.add_subcommand("realize", "Coxeter matrix realizing a graph as a commuting graph");
  realize_cmd->add_option("input", input, "edge-list file ('-' for stdin)")->required();
  realize_cmd->add_option("--label", label, "entry for non-edges: integer >= 3 or inf");
  realize_cmd->add_option("-o,--output", output, "matrix file (default stdout)");
  realize_cmd->add_option("--presentation", presentation, "presentation file");

  std::vector<std::string> words;
  std::string format = "edgelist";
  auto* commuting_cmd = app.add_subcommand("commuting", "commuting graph C(H, Gamma)");
  commuting_cmd->add_option("family", words, "cyclic N | bd N | bt | bo | bi, then a subset name")
      ->required();
  commuting_cmd->add_option("--format", format, "edgelist, dot or json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));
  commuting_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* mckay_cmd = app.add_subcommand("mckay", "McKay graph, Cartan and intersection matrices as JSON");
  mckay_cmd->add_option("family", words, "cyclic N | bd N | bt | bo | bi")->required();
  mckay_cmd->add_option("-o,--output", output, "output file (default stdout)");

  std::string graph_path;
  MetricOptions options;
  auto* metrics_cmd = app.add_subcommand("metrics", "distance, detour and metric-dimension report as JSON");
  metrics_cmd->add_option("family", words, "cyclic N | bd N | bt | bo | bi");
  metrics_cmd->add_option("--graph", graph_path, "edge-list file instead of a family");
  metrics_cmd->add_option("--pair-audit-max", options.pair_audit_max,
                          "largest order audited pair by pair against the detour oracle");
  metrics_cmd->add_option("--eccentricity-oracle-max", options.eccentricity_oracle_max,
                          "largest order whose detour eccentricities are recomputed by the oracle");
  metrics_cmd->add_option("--dimension-oracle-max", options.dimension_oracle_max,
                          "largest order whose metric dimension is recomputed by the oracle");
  metrics_cmd->add_option("-o,--output", output, "output file (default stdout)");

  std::string section = "all", json_path;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification checks");
  verify_cmd->add_option("section", section, "all, realization, complement, groups, structure, mckay, metrics");
  verify_cmd->add_option("--json", json_path, "also write the report as JSON ('-' for stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*realize_cmd) return cmd_realize(input, label, output, presentation, io);
    if (*commuting_cmd) return cmd_commuting(words, format, output, io);
    if (*mckay_cmd) return cmd_mckay(words, output, io);
    if (*metrics_cmd) return cmd_metrics(words, graph_path, options, output, io);
    if (*verify_cmd) return cmd_verify(section, json_path, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace commgraph::cli
