#pragma once

#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "json.hpp"
#include "module.hpp"
#include "ring.hpp"

namespace finalg {

// One corpus member: a module plus a reproducible JSON description (in the
// structure-file format of io.hpp).
struct CorpusEntry {
  std::string name;
  ModulePtr module;
  nlohmann::ordered_json description;
  bool is_z_module = false;  // carrier given by integer orders over Z_lcm
};

struct SkipNotice {
  std::string name;
  std::string reason;
};

// Which families of structures to generate; the default spec enables all of
// them, an empty list yields an empty corpus.
struct CorpusSpec {
  std::vector<std::string> families;
  SizeCaps caps = default_caps();
};

// Family names: "z_cyclic" (Z_d for d <= 12), "z_pairs" (Z_d1 x Z_d2 for
// 2 <= d1 <= d2 <= 6), "regular" (regular modules of the stock rings),
// "quotient" (regular modules of quotient rings), "free" (rank-2 free
// modules over small rings).
const std::vector<std::string>& corpus_family_names();
CorpusSpec default_corpus_spec();

struct Corpus {
  std::vector<CorpusEntry> entries;
  // Distinct base rings appearing in the corpus, for ring-level checks.
  std::vector<std::pair<std::string, RingPtr>> rings;
  std::vector<SkipNotice> skipped;
};

// Deterministic generation: identical specs produce identical corpora.
// Oversized entries land in `skipped` with a reason, never silently vanish.
Corpus generate_corpus(const CorpusSpec& spec);

// Parses {"entries": [{"name": ..., "module": {...} | <description>}]}.
Corpus corpus_from_json(const nlohmann::ordered_json& j,
                        const SizeCaps& caps = default_caps());

}  // namespace finalg
