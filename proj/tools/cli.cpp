// Command-line front end: decide properties of a structure file, run the
// implication suite over a corpus, search for separating examples, replay
// verdicts, and describe structures.
//
// Exit codes: 0 success, 1 a property fails / violations found / nothing
// found / replay rejected, 2 malformed input (files, ids), 3 size cap hit.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finalg/corpus.hpp"
#include "finalg/errors.hpp"
#include "finalg/io.hpp"
#include "finalg/props.hpp"
#include "finalg/replay.hpp"
#include "finalg/theorems.hpp"

namespace {

using finalg::Corpus;
using finalg::ParsedStructure;
using finalg::Verdict;
using nlohmann::ordered_json;

Corpus corpus_for(const std::string& path) {
  if (path.empty()) return finalg::generate_corpus(finalg::default_corpus_spec());
  return finalg::corpus_from_json(finalg::load_json_file(path));
}

int run_check(const std::string& file, std::vector<std::string> props, bool as_json) {
  ParsedStructure s = finalg::structure_from_json(finalg::load_json_file(file));
  const bool single = props.size() == 1;
  if (props.empty())
    props = s.module ? finalg::module_property_ids() : finalg::ring_property_ids();

  std::vector<Verdict> verdicts;
  for (const std::string& p : props)
    verdicts.push_back(s.module ? finalg::check_module_property(s.module, p)
                                : finalg::check_ring_property(s.ring, p));

  bool all_hold = true;
  if (as_json) {
    if (single) {
      std::cout << finalg::verdict_to_json(verdicts[0]).dump(2) << "\n";
    } else {
      ordered_json arr = ordered_json::array();
      for (const Verdict& v : verdicts) arr.push_back(finalg::verdict_to_json(v));
      std::cout << arr.dump(2) << "\n";
    }
    for (const Verdict& v : verdicts) all_hold = all_hold && v.holds;
  } else {
    for (const Verdict& v : verdicts) {
      std::cout << v.property << ": " << (v.holds ? "holds" : "FAILS") << "\n";
      if (!v.holds) std::cout << "  witness: " << v.witness.dump() << "\n";
      all_hold = all_hold && v.holds;
    }
  }
  return all_hold ? 0 : 1;
}

int run_suite(const std::string& corpus_path, const std::vector<std::string>& ids,
              bool as_json, bool no_timing) {
  Corpus corpus = corpus_for(corpus_path);
  finalg::SuiteReport report = ids.empty()
                                   ? finalg::run_theorem_suite(corpus)
                                   : finalg::run_theorem_suite(corpus, ids);
  std::size_t violations = 0;
  for (const auto& t : report.theorems) violations += t.violations.size();

  if (as_json) {
    std::cout << finalg::report_to_json(report, !no_timing).dump(2) << "\n";
  } else {
    std::cout << "corpus: " << corpus.entries.size() << " modules, "
              << corpus.rings.size() << " rings";
    if (!corpus.skipped.empty()) std::cout << ", " << corpus.skipped.size() << " skipped";
    std::cout << "\n";
    for (const auto& t : report.theorems) {
      std::cout << t.id << ": tested=" << t.tested
                << " hypothesis_met=" << t.hypothesis_met
                << " violations=" << t.violations.size();
      if (!t.skipped.empty()) std::cout << " skipped=" << t.skipped.size();
      std::cout << "\n";
      for (const auto& v : t.violations) std::cout << "  VIOLATION " << v.dump() << "\n";
    }
    if (!no_timing) std::cout << "elapsed: " << report.seconds << "s\n";
    std::cout << (violations == 0 ? "OK" : "VIOLATIONS FOUND") << "\n";
  }
  return violations == 0 ? 0 : 1;
}

int run_separate(const std::string& prop_holds, const std::string& prop_fails,
                 const std::string& corpus_path, bool as_json) {
  Corpus corpus = corpus_for(corpus_path);
  auto sep = finalg::find_separation(prop_holds, prop_fails, corpus);
  if (!sep) {
    if (as_json)
      std::cout << ordered_json{{"found", false}}.dump(2) << "\n";
    else
      std::cout << "no structure in the corpus holds \"" << prop_holds
                << "\" and fails \"" << prop_fails << "\"\n";
    return 1;
  }
  if (as_json) {
    ordered_json j;
    j["found"] = true;
    j["structure"] = sep->structure;
    j["holds"] = finalg::verdict_to_json(sep->holds);
    j["fails"] = finalg::verdict_to_json(sep->fails);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << sep->structure << " holds \"" << prop_holds << "\" and fails \""
              << prop_fails << "\"\n"
              << "  failure witness: " << sep->fails.witness.dump() << "\n";
  }
  return 0;
}

int run_describe(const std::string& file) {
  ParsedStructure s = finalg::structure_from_json(finalg::load_json_file(file));
  ordered_json j = s.module ? finalg::describe_module(s.module)
                            : finalg::describe_ring(s.ring);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_replay(const std::string& file, const std::string& verdict_path) {
  ParsedStructure s = finalg::structure_from_json(finalg::load_json_file(file));
  ordered_json vj = finalg::load_json_file(verdict_path);
  // `check --json` emits a bare object for one property and an array for
  // several; accept a singleton array for pipe convenience.
  if (vj.is_array() && vj.size() == 1) vj = vj.at(0);
  Verdict v = finalg::verdict_from_json(vj);
  finalg::ReplayResult r = s.module ? finalg::replay_module_verdict(s.module, v)
                                    : finalg::replay_ring_verdict(s.ring, v);
  if (r.ok) {
    std::cout << "replay ok\n";
    return 0;
  }
  std::cout << "replay failed: " << r.detail << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring and module property engine"};
  app.require_subcommand(1);

  std::string file, verdict_path, corpus_path, prop_holds, prop_fails;
  std::vector<std::string> props, theorems;
  bool as_json = false, no_timing = false;

  CLI::App* check = app.add_subcommand("check", "decide properties of a structure file");
  check->add_option("file", file, "structure JSON file")->required();
  check->add_option("-p,--property", props,
                    "property id (repeatable; default: all for the structure kind)");
  check->add_flag("--json", as_json, "emit verdicts as JSON");

  CLI::App* suite =
      app.add_subcommand("suite", "run every implication check over a corpus");
  suite->add_option("-t,--theorems", theorems, "check ids (default: all)");
  suite->add_option("--corpus", corpus_path,
                    "corpus JSON file (default: the generated corpus)");
  suite->add_flag("--json", as_json, "emit the report as JSON");
  suite->add_flag("--no-timing", no_timing, "omit timing for reproducible output");

  CLI::App* separate = app.add_subcommand(
      "separate", "find a corpus structure holding one property and failing another");
  separate->add_option("holds", prop_holds, "property that must hold")->required();
  separate->add_option("fails", prop_fails, "property that must fail")->required();
  separate->add_option("--corpus", corpus_path, "corpus JSON file");
  separate->add_flag("--json", as_json, "emit the result as JSON");

  CLI::App* describe =
      app.add_subcommand("describe", "print basic invariants of a structure file");
  describe->add_option("file", file, "structure JSON file")->required();

  CLI::App* replay =
      app.add_subcommand("replay", "re-verify a stored verdict against a structure file");
  replay->add_option("file", file, "structure JSON file")->required();
  replay->add_option("verdict", verdict_path, "verdict JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(file, props, as_json);
    if (suite->parsed()) return run_suite(corpus_path, theorems, as_json, no_timing);
    if (separate->parsed())
      return run_separate(prop_holds, prop_fails, corpus_path, as_json);
    if (describe->parsed()) return run_describe(file);
    if (replay->parsed()) return run_replay(file, verdict_path);
  } catch (const finalg::SizeCapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const finalg::SchemaError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const finalg::RingMismatch& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const finalg::NotAnIdeal& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
