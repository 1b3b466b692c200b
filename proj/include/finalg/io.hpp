#pragma once

#include <string>

#include "caps.hpp"
#include "json.hpp"
#include "module.hpp"
#include "ring.hpp"
#include "verdict.hpp"

namespace finalg {

// JSON descriptions of rings and modules.
//
// Ring kinds:
//   {"kind": "cyclic", "n": 6}
//   {"kind": "matrix", "base": <ring>, "k": 2}
//   {"kind": "triangular", "base": <ring>, "k": 2}
//   {"kind": "product", "factors": [<ring>, <ring>, ...]}
//   {"kind": "quotient", "base": <ring>, "ideal_generators": [ids...]}
// Module kinds:
//   {"kind": "regular", "ring": <ring>}
//   {"kind": "z_module", "orders": [2, 4]}
//   {"kind": "free", "ring": <ring>, "n": 2}
//   {"kind": "direct_sum", "summands": [<module>, <module>, ...]}
//
// Malformed descriptions raise SchemaError; size violations raise
// SizeCapExceeded from the underlying builders.
RingPtr ring_from_json(const nlohmann::ordered_json& j,
                       const SizeCaps& caps = default_caps());
ModulePtr module_from_json(const nlohmann::ordered_json& j,
                           const SizeCaps& caps = default_caps());

// A structure file holds either a module or a ring: {"module": {...}},
// {"ring": {...}}, or a bare description whose "kind" decides.  Exactly one
// of the results is non-null.
struct ParsedStructure {
  RingPtr ring;
  ModulePtr module;
};
ParsedStructure structure_from_json(const nlohmann::ordered_json& j,
                                    const SizeCaps& caps = default_caps());

// Reads and parses a JSON file; SchemaError on missing file or parse error.
nlohmann::ordered_json load_json_file(const std::string& path);

// Verdict wire format: {"property", "holds", "witness"}.
nlohmann::ordered_json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::ordered_json& j);

// Basic invariants of a structure, for the `describe` subcommand.
nlohmann::ordered_json describe_ring(const RingPtr& r,
                                     const SizeCaps& caps = default_caps());
nlohmann::ordered_json describe_module(const ModulePtr& m,
                                       const SizeCaps& caps = default_caps());

}  // namespace finalg
