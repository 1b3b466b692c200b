#include "finalg/io.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <vector>

#include "finalg/errors.hpp"
#include "finalg/hom.hpp"
#include "finalg/ideals.hpp"
#include "finalg/lattice.hpp"

namespace finalg {

namespace {

using nlohmann::ordered_json;

const ordered_json& require(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Accepts any integer representation of a value in [0, 2^32): the JSON parser
// stores non-negative literals as unsigned, but programmatic callers build
// signed integers from plain int literals.
std::optional<std::uint32_t> as_u32(const ordered_json& v) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint32_t>::max();
  if (v.is_number_unsigned()) {
    std::uint64_t u = v.get<std::uint64_t>();
    if (u <= kMax) return static_cast<std::uint32_t>(u);
    return std::nullopt;
  }
  if (v.is_number_integer()) {
    std::int64_t s = v.get<std::int64_t>();
    if (s >= 0 && static_cast<std::uint64_t>(s) <= kMax)
      return static_cast<std::uint32_t>(s);
  }
  return std::nullopt;
}

std::uint32_t require_uint(const ordered_json& j, const char* key) {
  const ordered_json& v = require(j, key);
  std::optional<std::uint32_t> u = as_u32(v);
  if (!u)
    throw SchemaError(std::string("field \"") + key +
                      "\" must be a non-negative integer");
  return *u;
}

std::vector<elem_t> require_id_list(const ordered_json& j, const char* key) {
  const ordered_json& v = require(j, key);
  if (!v.is_array())
    throw SchemaError(std::string("field \"") + key + "\" must be an array");
  std::vector<elem_t> out;
  for (const auto& e : v) {
    std::optional<std::uint32_t> u = as_u32(e);
    if (!u)
      throw SchemaError(std::string("field \"") + key +
                        "\" must hold non-negative integers");
    out.push_back(*u);
  }
  return out;
}

std::string kind_of(const ordered_json& j) {
  const ordered_json& k = require(j, "kind");
  if (!k.is_string()) throw SchemaError("field \"kind\" must be a string");
  return k.get<std::string>();
}

bool is_module_kind(const std::string& k) {
  return k == "regular" || k == "z_module" || k == "free" || k == "direct_sum";
}

bool is_ring_kind(const std::string& k) {
  return k == "cyclic" || k == "matrix" || k == "triangular" || k == "product" ||
         k == "quotient";
}

}  // namespace

RingPtr ring_from_json(const ordered_json& j, const SizeCaps& caps) {
  const std::string kind = kind_of(j);
  if (kind == "cyclic") return cyclic_ring(require_uint(j, "n"), caps);
  if (kind == "matrix")
    return matrix_ring(ring_from_json(require(j, "base"), caps),
                       require_uint(j, "k"), caps);
  if (kind == "triangular")
    return triangular_ring(ring_from_json(require(j, "base"), caps),
                           require_uint(j, "k"), caps);
  if (kind == "product") {
    const ordered_json& factors = require(j, "factors");
    if (!factors.is_array() || factors.empty())
      throw SchemaError("\"factors\" must be a nonempty array");
    RingPtr acc;
    for (const auto& f : factors) {
      RingPtr next = ring_from_json(f, caps);
      acc = acc ? direct_product(acc, next, caps) : next;
    }
    return acc;
  }
  if (kind == "quotient")
    return quotient_ring(ring_from_json(require(j, "base"), caps),
                         require_id_list(j, "ideal_generators"), caps);
  throw SchemaError("unknown ring kind \"" + kind + "\"");
}

ModulePtr module_from_json(const ordered_json& j, const SizeCaps& caps) {
  const std::string kind = kind_of(j);
  if (kind == "regular") return regular_module(ring_from_json(require(j, "ring"), caps));
  if (kind == "z_module") {
    std::vector<elem_t> raw = require_id_list(j, "orders");
    if (raw.empty()) throw SchemaError("\"orders\" must be nonempty");
    std::vector<std::uint32_t> orders(raw.begin(), raw.end());
    return z_module(orders, caps);
  }
  if (kind == "free")
    return free_module(ring_from_json(require(j, "ring"), caps),
                       require_uint(j, "n"), caps);
  if (kind == "direct_sum") {
    const ordered_json& summands = require(j, "summands");
    if (!summands.is_array() || summands.empty())
      throw SchemaError("\"summands\" must be a nonempty array");
    ModulePtr acc;
    for (const auto& s : summands) {
      ModulePtr next = module_from_json(s, caps);
      acc = acc ? direct_sum(acc, next, caps) : next;
    }
    return acc;
  }
  throw SchemaError("unknown module kind \"" + kind + "\"");
}

ParsedStructure structure_from_json(const ordered_json& j, const SizeCaps& caps) {
  // Bare descriptions carry their own "kind"; only kindless objects are
  // treated as {"module": ...} / {"ring": ...} wrappers.  (Module kinds such
  // as "regular" and "free" themselves hold a "ring" field.)
  if (j.is_object() && !j.contains("kind")) {
    if (j.contains("module")) return {nullptr, module_from_json(j.at("module"), caps)};
    if (j.contains("ring")) return {ring_from_json(j.at("ring"), caps), nullptr};
  }
  const std::string kind = kind_of(j);
  if (is_module_kind(kind)) return {nullptr, module_from_json(j, caps)};
  if (is_ring_kind(kind)) return {ring_from_json(j, caps), nullptr};
  throw SchemaError("unknown structure kind \"" + kind + "\"");
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["property"] = v.property;
  j["holds"] = v.holds;
  j["witness"] = v.witness;
  return j;
}

Verdict verdict_from_json(const ordered_json& j) {
  Verdict v;
  const ordered_json& p = require(j, "property");
  if (!p.is_string()) throw SchemaError("field \"property\" must be a string");
  v.property = p.get<std::string>();
  const ordered_json& h = require(j, "holds");
  if (!h.is_boolean()) throw SchemaError("field \"holds\" must be a boolean");
  v.holds = h.get<bool>();
  v.witness = require(j, "witness");
  if (!v.witness.is_object()) throw SchemaError("field \"witness\" must be an object");
  return v;
}

ordered_json describe_ring(const RingPtr& r, const SizeCaps& caps) {
  ordered_json j;
  j["structure"] = "ring";
  j["order"] = r->order();
  j["commutative"] = r->is_commutative();
  j["idempotents"] = r->idempotents().size();
  j["central_elements"] = r->central_elements().size();
  std::size_t units = 0;
  for (bool u : r->unit_mask()) units += u ? 1 : 0;
  j["units"] = units;
  try {
    j["two_sided_ideals"] = all_two_sided_ideals(r, caps).size();
  } catch (const SizeCapExceeded&) {
    j["two_sided_ideals"] = "skipped: size cap exceeded";
  }
  return j;
}

ordered_json describe_module(const ModulePtr& m, const SizeCaps& caps) {
  ordered_json j;
  j["structure"] = "module";
  j["order"] = m->order();
  j["ring_order"] = m->ring()->order();
  try {
    EndoRing s(m, caps);
    j["endomorphisms"] = s.ring()->order();
  } catch (const SizeCapExceeded&) {
    j["endomorphisms"] = "skipped: size cap exceeded";
  }
  try {
    std::vector<Submodule> subs = all_submodules(m, caps);
    j["submodules"] = subs.size();
    std::size_t fi = 0;
    EndoRing s(m, caps);
    for (const Submodule& n : subs)
      if (is_fully_invariant(s, n)) ++fi;
    j["fully_invariant_submodules"] = fi;
    j["uniform_dimension"] = uniform_dimension(m);
  } catch (const SizeCapExceeded&) {
    j["submodules"] = "skipped: size cap exceeded";
  }
  return j;
}

}  // namespace finalg
