#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "finalg/io.hpp"
#include "finalg/module.hpp"
#include "finalg/props.hpp"
#include "finalg/replay.hpp"

using nlohmann::ordered_json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FINALG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/finalg_cli_" + name;
  std::ofstream f(path);
  f << text;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const std::string& z4_file() {
  static std::string p = write_file("z4.json", R"({"kind": "z_module", "orders": [4]})");
  return p;
}

const std::string& t2z2_file() {
  static std::string p = write_file(
      "t2z2.json",
      R"({"ring": {"kind": "triangular", "base": {"kind": "cyclic", "n": 2}, "k": 2}})");
  return p;
}

}  // namespace

TEST_CASE("check decides single properties with pass/fail exit codes") {
  CliResult fail = run_cli("check " + z4_file() + " -p centrally_endo_aip");
  CHECK(fail.exit_code == 1);
  CHECK(contains(fail.out, "centrally_endo_aip: FAILS"));
  CHECK(contains(fail.out, "witness"));

  CliResult ok = run_cli("check " + z4_file() + " -p retractable");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "retractable: holds"));
}

TEST_CASE("check without a property sweeps every property of the kind") {
  CliResult r = run_cli("check " + z4_file());
  CHECK(r.exit_code == 1);  // at least one fails on Z/4
  for (const std::string& p : finalg::module_property_ids())
    CHECK(contains(r.out, p + ": "));

  CliResult rr = run_cli("check " + t2z2_file());
  CHECK(rr.exit_code == 1);
  for (const std::string& p : finalg::ring_property_ids())
    CHECK(contains(rr.out, p + ": "));
}

TEST_CASE("json verdicts from the cli replay against a rebuilt structure") {
  CliResult r = run_cli("check " + z4_file() + " -p centrally_endo_aip --json");
  CHECK(r.exit_code == 1);
  finalg::Verdict v = finalg::verdict_from_json(ordered_json::parse(r.out));
  CHECK_FALSE(v.holds);
  auto m = finalg::z_module({4});
  CHECK(finalg::replay_module_verdict(m, v).ok);

  // Multiple properties come back as an array.
  CliResult arr = run_cli("check " + z4_file() + " -p abelian -p reduced --json");
  ordered_json a = ordered_json::parse(arr.out);
  REQUIRE(a.is_array());
  CHECK(a.size() == 2);
  CHECK(a.at(0).at("property") == "abelian");
}

TEST_CASE("the replay subcommand verifies and rejects stored verdicts") {
  CliResult v = run_cli("check " + t2z2_file() + " -p centrally_aip --json");
  REQUIRE(v.exit_code == 1);
  std::string vf = write_file("verdict.json", v.out);

  CliResult ok = run_cli("replay " + t2z2_file() + " " + vf);
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "replay ok"));

  ordered_json tampered = ordered_json::parse(v.out);
  tampered["witness"]["element"] = 0;
  std::string tf = write_file("tampered.json", tampered.dump());
  CliResult bad = run_cli("replay " + t2z2_file() + " " + tf);
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "replay failed"));

  // Replaying a verdict against the wrong structure must not pass.
  CliResult wrong = run_cli("replay " + z4_file() + " " + vf);
  CHECK(wrong.exit_code == 1);
}

TEST_CASE("suite runs selected checks and reports clean") {
  CliResult r = run_cli("suite -t HIER -t UD1P --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "corpus: 52 modules, 20 rings"));
  CHECK(contains(r.out, "HIER: tested=52 hypothesis_met=35 violations=0"));
  CHECK(contains(r.out, "UD1P: tested=52 hypothesis_met=11 violations=0"));
  CHECK(contains(r.out, "OK"));

  CliResult j = run_cli("suite -t RL --json --no-timing");
  CHECK(j.exit_code == 0);
  ordered_json report = ordered_json::parse(j.out);
  CHECK_FALSE(report.contains("timing"));
  REQUIRE(report.at("theorems").size() == 1);
  CHECK(report.at("theorems").at(0).at("id") == "RL");
  CHECK(report.at("theorems").at(0).at("tested") == 52);
  CHECK(report.at("theorems").at(0).at("violations").empty());
}

TEST_CASE("suite accepts a custom corpus file") {
  std::string corpus = write_file("corpus.json", R"({"entries": [
    {"name": "four", "module": {"kind": "z_module", "orders": [4]}},
    {"name": "klein", "module": {"kind": "z_module", "orders": [2, 2]}}
  ]})");
  CliResult r = run_cli("suite --corpus " + corpus + " -t HIER --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "corpus: 2 modules"));
  CHECK(contains(r.out, "HIER: tested=2"));
}

TEST_CASE("separate finds pinned examples and reports absences") {
  CliResult r = run_cli("separate endo_aip centrally_endo_aip");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "regular(T_2(Z_2))"));

  CliResult j = run_cli("separate centrally_aip abelian --json");
  CHECK(j.exit_code == 0);
  ordered_json sep = ordered_json::parse(j.out);
  CHECK(sep.at("found") == true);
  CHECK(sep.at("structure") == "M_2(Z_2)");
  CHECK(sep.at("holds").at("holds") == true);
  CHECK(sep.at("fails").at("holds") == false);

  CliResult none = run_cli("separate centrally_endo_aip rickart");
  CHECK(none.exit_code == 1);
  CHECK(contains(none.out, "no structure"));
}

TEST_CASE("describe prints structural invariants as json") {
  CliResult r = run_cli("describe " + t2z2_file());
  CHECK(r.exit_code == 0);
  ordered_json d = ordered_json::parse(r.out);
  CHECK(d.at("structure") == "ring");
  CHECK(d.at("order") == 8);
  CHECK(d.at("commutative") == false);
  CHECK(d.at("two_sided_ideals") == 5);
}

TEST_CASE("bad input maps to distinct exit codes") {
  CHECK(run_cli("check " + z4_file() + " -p nonsense").exit_code == 2);
  CHECK(run_cli("check /tmp/finalg_cli_does_not_exist.json -p abelian").exit_code == 2);
  CHECK(run_cli("suite -t NOPE").exit_code == 2);
  CHECK(run_cli("separate rickart semiprime").exit_code == 2);  // module vs ring

  std::string big = write_file(
      "big.json", R"({"kind": "matrix", "base": {"kind": "cyclic", "n": 9}, "k": 3})");
  CHECK(run_cli("check " + big + " -p baer").exit_code == 3);

  std::string broken = write_file("broken.json", "{ nope");
  CHECK(run_cli("describe " + broken).exit_code == 2);

  CHECK(run_cli("").exit_code != 0);  // a subcommand is required
}
