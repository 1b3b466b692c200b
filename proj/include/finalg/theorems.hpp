#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/corpus.hpp"
#include "finalg/verdict.hpp"
#include "json.hpp"

namespace finalg {

// Registered implication checks.  Each one quantifies a known implication (or
// equivalence) between decided properties over a corpus and reports every
// structure on which the hypothesis holds but the conclusion fails.  On a
// finite, fully decidable structure such a failure can only mean a defect in
// one of the checkers involved, so violations are tagged implementation-suspect.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);
// Throws std::invalid_argument for an unknown id.
const std::string& theorem_statement(const std::string& id);

struct TheoremResult {
  std::string id;
  std::string statement;
  // Structures (or structure pairs / derived structures) fully evaluated.
  std::uint32_t tested = 0;
  // Of those, how many satisfied the hypothesis, i.e. genuinely exercised the
  // implication.  Equivalences count every evaluated structure.
  std::uint32_t hypothesis_met = 0;
  // {"theorem", "structure", "severity": "implementation-suspect", "details"}.
  std::vector<nlohmann::ordered_json> violations;
  // Structures abandoned because a size cap was hit mid-evaluation.
  std::vector<SkipNotice> skipped;
};

struct SuiteReport {
  std::vector<TheoremResult> theorems;
  // Side findings that are not implication checks (e.g. a converse that is
  // not claimed in general but holds on this corpus).
  std::vector<nlohmann::ordered_json> observations;
  double seconds = 0.0;
};

// Runs the requested checks (default: all, in registry order) over the
// corpus.  Unknown ids throw std::invalid_argument before any work starts.
SuiteReport run_theorem_suite(const Corpus& corpus,
                              const std::vector<std::string>& ids,
                              const SizeCaps& caps = default_caps());
SuiteReport run_theorem_suite(const Corpus& corpus,
                              const SizeCaps& caps = default_caps());

// Deterministic JSON rendering; drop the timing block to compare runs.
nlohmann::ordered_json report_to_json(const SuiteReport& report,
                                      bool include_timing = true);

struct Separation {
  std::string structure;  // corpus entry name (module) or ring name
  Verdict holds;          // verdict for the property that holds
  Verdict fails;          // verdict for the property that fails
};

// First corpus structure where `prop_holds` is true and `prop_fails` is
// false, witnessing that the two properties differ.  Both ids must be module
// properties (the corpus entries are scanned, in order) or, failing that,
// both ring properties (the distinct corpus rings are scanned); any other
// combination throws std::invalid_argument.  Structures that hit a size cap
// are passed over.  nullopt means the corpus holds no such witness.
std::optional<Separation> find_separation(const std::string& prop_holds,
                                          const std::string& prop_fails,
                                          const Corpus& corpus,
                                          const SizeCaps& caps = default_caps());

}  // namespace finalg
