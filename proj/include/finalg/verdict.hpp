#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace finalg {

// Outcome of one property check.  `witness` is a JSON object whose "kind" is
// "certificate" for a pass and "failure" for a violation; the remaining keys
// carry the evidence (offending submodule/endomorphism/element, exhausted
// candidate sets, or per-obligation unit elements).  Failure witnesses carry
// enough data to reproduce the violation definitionally.
struct Verdict {
  std::string property;
  bool holds = false;
  nlohmann::ordered_json witness;
};

inline Verdict make_certificate(std::string property,
                                nlohmann::ordered_json details = nlohmann::ordered_json::object()) {
  nlohmann::ordered_json w;
  w["kind"] = "certificate";
  for (auto& [k, v] : details.items()) w[k] = std::move(v);
  return Verdict{std::move(property), true, std::move(w)};
}

inline Verdict make_failure(std::string property,
                            nlohmann::ordered_json details = nlohmann::ordered_json::object()) {
  nlohmann::ordered_json w;
  w["kind"] = "failure";
  for (auto& [k, v] : details.items()) w[k] = std::move(v);
  return Verdict{std::move(property), false, std::move(w)};
}

}  // namespace finalg
