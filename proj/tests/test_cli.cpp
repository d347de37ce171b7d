#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "support/oracles.hpp"
#include "trireg/constructions.hpp"
#include "trireg/graph6.hpp"

using namespace trireg;
using namespace trireg::testing;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TRIREG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/trireg_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("cli classify verdicts and exit codes") {
  auto forbidden = run_cli("classify 4 5");
  CHECK(forbidden.exit_code == 1);
  CHECK(forbidden.out.find("TheoremDownGap") != std::string::npos);

  auto exists = run_cli("classify 4 2");
  CHECK(exists.exit_code == 0);
  CHECK(exists.out.find("K3 x K3") != std::string::npos);

  auto unknown = run_cli("classify 8 17");
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.out.find("Unknown") != std::string::npos);

  auto json_out = run_cli("classify 7 14 --json");
  CHECK(json_out.exit_code == 1);
  const auto doc = nlohmann::json::parse(json_out.out);
  CHECK(doc.at("schema") == "trireg.classify/1");
  CHECK(doc.at("verdict") == "forbidden");
  CHECK(doc.at("rule") == "CuratedExhaustive");
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli("classify 4").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("enumerate 6 3 --bogus").exit_code == 2);
}

TEST_CASE("cli construct") {
  auto res = run_cli("construct \"K5 x K3\"");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("(6, 7)") != std::string::npos);

  auto json_res = run_cli("construct \"T8,4\" --json");
  const auto doc = nlohmann::json::parse(json_res.out);
  CHECK(doc.at("schema") == "trireg.construct/1");
  CHECK(doc.at("parameters") == nlohmann::json({6, 12}));
  CHECK(decode_graph6(doc.at("graph6").get<std::string>()) == turan(8, 4));

  auto bad = run_cli("construct \"K5 x\" --json");
  CHECK(bad.exit_code == 1);
  const auto err = nlohmann::json::parse(bad.out);
  CHECK(err.at("schema") == "trireg.error/1");
  CHECK(err.at("code") == "InvalidRecipe");
}

TEST_CASE("cli check") {
  const std::string k4_path = write_temp("k4.el", encode_edge_list(complete(4)));
  auto res = run_cli("check " + k4_path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("(3, 3)") != std::string::npos);

  const std::string star_path =
      write_temp("star.el", "4 3\n0 1\n0 2\n0 3\n");
  CHECK(run_cli("check " + star_path).exit_code == 1);

  const std::string g6_path = write_temp("k4.g6", encode_graph6(complete(4)) + "\n");
  auto json_res = run_cli("check " + g6_path + " --json");
  CHECK(json_res.exit_code == 0);
  const auto doc = nlohmann::json::parse(json_res.out);
  CHECK(doc.at("schema") == "trireg.check/1");
  CHECK(doc.at("regular_k3_regular") == true);
  CHECK(doc.at("parameters") == nlohmann::json({3, 3}));
  CHECK(doc.at("connected") == true);

  auto missing = run_cli("check /does/not/exist --json");
  CHECK(missing.exit_code == 1);
  CHECK(nlohmann::json::parse(missing.out).at("code") == "FormatError");
}

TEST_CASE("cli convert is an involution") {
  const Graph pet = petersen();
  const std::string g6 = encode_graph6(pet);
  const std::string g6_path = write_temp("pet.g6", g6 + "\n");

  auto to_el = run_cli("convert --from g6 --to el < " + g6_path);
  CHECK(to_el.exit_code == 0);
  CHECK(to_el.out == encode_edge_list(pet));

  const std::string el_path = write_temp("pet.el", to_el.out);
  auto back = run_cli("convert --from el --to g6 < " + el_path);
  CHECK(back.exit_code == 0);
  CHECK(back.out == g6 + "\n");
}

TEST_CASE("cli enumerate streams graph6") {
  auto res = run_cli("enumerate 6 3");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Graph g = decode_graph6(line);
    CHECK(g.vertex_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
    ++count;
  }
  CHECK(count == 2);

  auto limited = run_cli("enumerate 8 3 --limit 2 --json");
  const auto doc = nlohmann::json::parse(limited.out);
  CHECK(doc.at("schema") == "trireg.enumerate/1");
  CHECK(doc.at("count") == 2);
  CHECK(doc.at("graphs").size() == 2);

  CHECK(run_cli("enumerate 13 2").exit_code == 1);
  CHECK(run_cli("enumerate 13 2 --force").exit_code == 0);
}

TEST_CASE("cli search report") {
  auto res = run_cli("search 3 3 --n 4 --seed 1 --json");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("schema") == "trireg.search/1");
  CHECK(doc.at("status") == "found");
  CHECK(doc.at("best_fitness") == "1");
  const Graph witness = decode_graph6(doc.at("witness").at("graph6").get<std::string>());
  CHECK(are_isomorphic(witness, complete(4)));

  // forbidden pair exhausts with exit 1
  auto lost = run_cli("search 4 5 --n 10 --seed 1 --iters 500 --restarts 2 --plateau 100 --json");
  CHECK(lost.exit_code == 1);
  CHECK(nlohmann::json::parse(lost.out).at("status") == "exhausted");

  // --out writes the same report
  const std::string out_path = "/tmp/trireg_test_report.json";
  auto with_file = run_cli("search 3 3 --n 4 --seed 1 --json --out " + out_path);
  CHECK(with_file.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  nlohmann::json file_doc;
  in >> file_doc;
  CHECK(file_doc == nlohmann::json::parse(with_file.out));
}

TEST_CASE("cli table formats") {
  auto md = run_cli("table --max-r2 3 --max-r3 3");
  CHECK(md.exit_code == 0);
  CHECK(md.out.find("| K3") != std::string::npos);

  auto csv = run_cli("table --max-r2 4 --max-r3 4 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.substr(0, 9) == "r3/r2,2,3");
  CHECK(csv.out.find("no(upper)") != std::string::npos);

  auto json_res = run_cli("table --max-r2 3 --max-r3 2 --json");
  const auto doc = nlohmann::json::parse(json_res.out);
  CHECK(doc.at("schema") == "trireg.table/1");
  CHECK(doc.at("cells").size() == 4);
}
