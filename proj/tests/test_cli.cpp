#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "commgraph/graphs.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "commgraph");
  std::ostringstream out, err;
  const int code = commgraph::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::temp_directory_path() / "commgraph_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

commgraph::SimpleGraph parse_edges(const std::string& text) {
  std::istringstream in(text);
  return commgraph::read_edge_list(in);
}

}  // namespace

TEST_CASE("realize") {
  std::ostringstream petersen;
  commgraph::write_edge_list(petersen, commgraph::petersen());
  const fs::path in = scratch("petersen.txt", petersen.str());
  const Result r = run({"realize", in.string()});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string rank;
  lines >> rank;
  CHECK(rank == "10");
  int twos = 0;
  for (std::string tok; lines >> tok;) twos += tok == "2";
  CHECK(twos == 30);  // 15 entries above the diagonal, mirrored

  const fs::path single = scratch("single.txt", "1\n");
  const fs::path out = fs::temp_directory_path() / "commgraph_cli_test" / "single.cox";
  const Result s = run({"realize", single.string(), "-o", out.string()});
  REQUIRE(s.code == 0);
  CHECK(s.out == "s1^2 = 1\n");
  std::ifstream f(out);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str() == "1\n1\n");

  CHECK(run({"realize", scratch("empty.txt", "").string()}).code == 2);
  CHECK(run({"realize", in.string(), "--label", "2"}).code == 2);
  CHECK(run({"realize", "/nonexistent/graph.txt"}).code == 2);
  const Result l3 = run({"realize", in.string(), "--label", "3"});
  CHECK(l3.out.find("inf") == std::string::npos);
}

TEST_CASE("commuting") {
  const Result bd = run({"commuting", "bd", "3", "Gamma2"});
  REQUIRE(bd.code == 0);
  const auto g = parse_edges(bd.out);
  CHECK(commgraph::is_isomorphic(g, commgraph::copies_of_complete(3, 2)));

  const Result dot = run({"commuting", "bt", "full", "--format", "dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("graph \"BT24 full\" {", 0) == 0);
  CHECK(std::count(dot.out.begin(), dot.out.end(), '[') == 24);

  CHECK(parse_edges(run({"commuting", "cyclic", "6", "full"}).out) == commgraph::complete(6));
  const Result js = run({"commuting", "bo", "C1", "--format", "json"});
  REQUIRE(js.code == 0);
  CHECK(json::parse(js.out)["order"] == 4);

  const Result bad = run({"commuting", "bd", "3", "Gamma7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Gamma1") != std::string::npos);
  CHECK(run({"commuting", "bq"}).code == 2);
  CHECK(run({"commuting", "bd"}).code == 2);
  CHECK(run({"commuting", "bt", "--format", "svg"}).code == 2);
}

TEST_CASE("mckay") {
  const json bi = json::parse(run({"mckay", "bi"}).out);
  CHECK(bi["dims"].size() == 9);
  CHECK(bi["cartan"].size() == 8);
  CHECK(bi["cartan_determinant"] == 1);
  CHECK(bi["dynkin"] == "E8");
  for (int i = 0; i < 8; ++i) CHECK(bi["intersection"][i][i] == -2);

  const json c5 = json::parse(run({"mckay", "cyclic", "5"}).out);
  for (const auto& row : c5["alpha"]) {
    int deg = 0;
    for (const auto& v : row) deg += v.get<int>();
    CHECK(deg == 2);
  }
  const json d4 = json::parse(run({"mckay", "bd", "2"}).out);
  CHECK(d4["dynkin"] == "D4");
  CHECK(d4["cartan_determinant"] == 4);
  CHECK(run({"mckay", "cyclic", "1"}).code == 2);
}

TEST_CASE("metrics") {
  const Result bt = run({"metrics", "bt"});
  REQUIRE(bt.code == 0);
  const json j = json::parse(bt.out);
  CHECK(j["detour_center_pair"] == 5);
  CHECK(j["detour_diameter"] == 13);
  CHECK(j["metric_dimension"] == 16);
  CHECK(j["clique_join"]["universal"] == 2);

  std::ostringstream petersen;
  commgraph::write_edge_list(petersen, commgraph::petersen());
  const json p = json::parse(run({"metrics", "--graph", scratch("p.txt", petersen.str()).string()}).out);
  CHECK(p["structural"] == false);
  CHECK(p["detour_center_pair"].is_null());

  const Result c5 = run({"metrics", "cyclic", "5", "--pair-audit-max", "0"});
  const json c = json::parse(c5.out);
  CHECK(c["detour_radius_std"] == 4);
  CHECK(run({"metrics", "--graph", scratch("split.txt", "4\n0 1\n2 3\n").string()}).code == 2);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "metrics", "--json", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[definitional-ambiguity] metrics.BT24.detour_radius") != std::string::npos);
  const auto brace = r.out.find('{');
  REQUIRE(brace != std::string::npos);
  const json j = json::parse(r.out.substr(brace));
  CHECK(j["ok"] == true);
  int ambiguous = 0;
  for (const auto& c : j["checks"]) ambiguous += c["status"] == "definitional-ambiguity";
  CHECK(ambiguous == 3);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"mckay", "bo"}).out == run({"mckay", "bo"}).out);
  CHECK(run({"metrics", "bd", "3"}).out == run({"metrics", "bd", "3"}).out);
}

TEST_CASE("installed binary exit codes") {
  const std::string tool = COMMGRAPH_TOOL;
  const fs::path empty = scratch("empty2.txt", "");
  auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("commuting bd 2 Gamma2") == 0);
  CHECK(status("realize " + empty.string()) == 2);
  CHECK(status("--help") == 0);
  CHECK(status("frobnicate") == 2);
}
