#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "finalg/corpus.hpp"
#include "finalg/errors.hpp"
#include "finalg/io.hpp"
#include "finalg/theorems.hpp"

using namespace finalg;
using nlohmann::ordered_json;

namespace {

const Corpus& default_corpus() {
  static Corpus c = generate_corpus(default_corpus_spec());
  return c;
}

const SuiteReport& default_report() {
  static SuiteReport r = run_theorem_suite(default_corpus());
  return r;
}

const TheoremResult& result_of(const std::string& id) {
  for (const auto& t : default_report().theorems)
    if (t.id == id) return t;
  REQUIRE(false);
  std::abort();  // unreachable
}

}  // namespace

TEST_CASE("the default corpus is deterministic and well formed") {
  const Corpus& c = default_corpus();
  Corpus again = generate_corpus(default_corpus_spec());

  REQUIRE(c.entries.size() == again.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(c.entries[i].name == again.entries[i].name);
    CHECK(c.entries[i].description == again.entries[i].description);
    CHECK(c.entries[i].is_z_module == again.entries[i].is_z_module);
  }

  CHECK(c.entries.size() == 52);
  CHECK(c.entries.size() >= 40);
  CHECK(c.rings.size() == 20);
  CHECK(c.skipped.empty());

  // Names are unique.
  std::set<std::string> names;
  for (const auto& e : c.entries) names.insert(e.name);
  CHECK(names.size() == c.entries.size());

  // Every description rebuilds the module it documents (same order and ring
  // order -- full isomorphism is checked elsewhere via the hom machinery).
  for (const auto& e : c.entries) {
    ParsedStructure p = structure_from_json(e.description);
    REQUIRE(p.module);
    CHECK(p.module->order() == e.module->order());
    CHECK(p.module->ring()->order() == e.module->ring()->order());
  }

  // Ring names are unique and the listed rings are pairwise non-identical
  // presentations (the dedup that built the list must be idempotent).
  std::set<std::string> ring_names;
  for (const auto& [name, r] : c.rings) ring_names.insert(name);
  CHECK(ring_names.size() == c.rings.size());
  for (std::size_t i = 0; i < c.rings.size(); ++i)
    for (std::size_t j = i + 1; j < c.rings.size(); ++j)
      CHECK_FALSE(c.rings[i].second->same_presentation(*c.rings[j].second));
}

TEST_CASE("corpus families can be selected individually") {
  CHECK(corpus_family_names().size() == 5);

  CorpusSpec empty;
  CHECK(generate_corpus(empty).entries.empty());

  std::size_t total = 0;
  for (const std::string& fam : corpus_family_names()) {
    CorpusSpec spec;
    spec.families = {fam};
    Corpus c = generate_corpus(spec);
    CHECK_FALSE(c.entries.empty());
    total += c.entries.size();
  }
  // Families do not overlap: their sizes add up to the full corpus.
  CHECK(total == default_corpus().entries.size());

  CorpusSpec z_only;
  z_only.families = {"z_cyclic"};
  Corpus zc = generate_corpus(z_only);
  CHECK(zc.entries.size() == 12);  // Z_1 .. Z_12
  for (const auto& e : zc.entries) CHECK(e.is_z_module);
}

TEST_CASE("tiny caps push oversized structures into skip notices") {
  CorpusSpec spec = default_corpus_spec();
  spec.caps.module = 8;
  spec.caps.endo = 64;
  Corpus c = generate_corpus(spec);
  CHECK_FALSE(c.skipped.empty());
  for (const auto& s : c.skipped) {
    CHECK_FALSE(s.name.empty());
    CHECK_FALSE(s.reason.empty());
  }
  // Small structures survive.
  bool has_z4 = false;
  for (const auto& e : c.entries) has_z4 = has_z4 || e.name == "z_module(4)";
  CHECK(has_z4);
}

TEST_CASE("a corpus can be loaded from json") {
  ordered_json spec = {
      {"entries",
       {
           {{"name", "four"}, {"module", {{"kind", "z_module"}, {"orders", {4}}}}},
           {{"kind", "z_module"}, {"orders", {2, 2}}},  // bare description
       }}};
  Corpus c = corpus_from_json(spec);
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0].name == "four");
  CHECK(c.entries[0].module->order() == 4);
  CHECK(c.entries[0].is_z_module);
  CHECK(c.entries[1].module->order() == 4);
  CHECK_FALSE(c.rings.empty());

  CHECK_THROWS_AS((void)corpus_from_json(ordered_json::object()), SchemaError);
  CHECK_THROWS_AS((void)corpus_from_json({{"entries", 3}}), SchemaError);
}

TEST_CASE("the implication suite runs clean over the default corpus") {
  const SuiteReport& r = default_report();
  REQUIRE(r.theorems.size() == theorem_ids().size());
  CHECK(r.theorems.size() >= 17);

  for (const auto& t : r.theorems) {
    CAPTURE(t.id);
    CHECK(t.violations.empty());
    CHECK(t.statement == theorem_statement(t.id));
  }

  // Frozen counts: tested / hypothesis_met per check.  These pin both the
  // corpus contents and the hypothesis logic; a change in either shows up
  // here before it can silently weaken the suite.
  const std::map<std::string, std::pair<int, int>> expected = {
      {"HIER", {52, 35}},  {"RL", {52, 37}},     {"RCE", {52, 25}},
      {"IFP-EQ", {52, 36}}, {"DSUM", {52, 35}},  {"FISUB", {52, 32}},
      {"FGZ", {27, 18}},   {"DSUM2", {21, 12}},  {"COPIES", {58, 24}},
      {"FREE", {11, 11}},  {"MATRX", {5, 4}},    {"ENDCA", {52, 35}},
      {"ENDSP", {52, 35}}, {"LPQR", {52, 35}},   {"UDQB", {52, 35}},
      {"UD1P", {52, 11}},  {"LOCP", {52, 11}},   {"SPEQ", {52, 35}},
  };
  REQUIRE(expected.size() == r.theorems.size());
  for (const auto& t : r.theorems) {
    CAPTURE(t.id);
    auto it = expected.find(t.id);
    REQUIRE(it != expected.end());
    CHECK(t.tested == it->second.first);
    CHECK(t.hypothesis_met == it->second.second);
  }

  CHECK(result_of("COPIES").skipped.size() == 46);
  CHECK(result_of("FREE").skipped.size() == 9);
  for (const auto& s : result_of("COPIES").skipped) CHECK_FALSE(s.reason.empty());

  // The semisimple<->annihilator observation over integer modules held
  // corpus-wide in both directions.
  bool saw_converse = false;
  for (const auto& o : r.observations) {
    if (o.value("id", "") != "FGZ-converse") continue;
    saw_converse = true;
    CHECK(o.at("entries_checked") == 18);
    CHECK(o.at("counterexamples").empty());
  }
  CHECK(saw_converse);
}

TEST_CASE("suite reports serialize deterministically") {
  const SuiteReport& r = default_report();
  ordered_json j = report_to_json(r, /*include_timing=*/true);
  REQUIRE(j.contains("theorems"));
  REQUIRE(j.contains("timing"));
  CHECK(j.at("timing").at("seconds").is_number());
  CHECK(j.at("theorems").size() == r.theorems.size());
  const auto& first = j.at("theorems").at(0);
  CHECK(first.contains("id"));
  CHECK(first.contains("statement"));
  CHECK(first.contains("tested"));
  CHECK(first.contains("hypothesis_met"));
  CHECK(first.contains("violations"));
  CHECK(first.contains("skipped"));

  // Two fresh runs agree byte for byte once timing is stripped.
  SuiteReport r2 = run_theorem_suite(default_corpus());
  CHECK(report_to_json(r, false).dump() == report_to_json(r2, false).dump());
  CHECK_FALSE(report_to_json(r, false).contains("timing"));
}

TEST_CASE("individual checks can be selected and bad ids are rejected") {
  SuiteReport r = run_theorem_suite(default_corpus(), {"HIER", "RL"});
  REQUIRE(r.theorems.size() == 2);
  CHECK(r.theorems[0].id == "HIER");
  CHECK(r.theorems[1].id == "RL");
  CHECK(r.theorems[0].tested == 52);

  CHECK_THROWS_AS((void)run_theorem_suite(default_corpus(), {"NOPE"}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)theorem_statement("NOPE"), std::invalid_argument);
  CHECK(is_theorem_id("HIER"));
  CHECK_FALSE(is_theorem_id("NOPE"));
}

TEST_CASE("separating examples are found where they exist") {
  const Corpus& c = default_corpus();

  auto s1 = find_separation("endo_aip", "centrally_endo_aip", c);
  REQUIRE(s1);
  CHECK(s1->structure == "regular(T_2(Z_2))");
  CHECK(s1->holds.holds);
  CHECK_FALSE(s1->fails.holds);

  auto s2 = find_separation("centrally_aip", "abelian", c);
  REQUIRE(s2);
  CHECK(s2->structure == "M_2(Z_2)");

  auto s3 = find_separation("retractable", "endo_aip", c);
  REQUIRE(s3);
  CHECK(s3->structure == "z_module(4)");

  CHECK_FALSE(find_separation("centrally_endo_aip", "rickart", c));

  CHECK_THROWS_AS((void)find_separation("abelian", "nonsense", c),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)find_separation("rickart", "semiprime", c),
                  std::invalid_argument);  // module vs ring property
}
