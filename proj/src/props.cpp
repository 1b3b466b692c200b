#include "finalg/props.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "finalg/errors.hpp"

namespace finalg {

namespace {

using ordered_json = nlohmann::ordered_json;

bool subset_sorted(const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<elem_t> intersect_sorted(const std::vector<elem_t>& a,
                                     const std::vector<elem_t>& b) {
  std::vector<elem_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ordered_json hom_matrix_json(const ModuleHom& f) {
  const std::size_t rows = f.source()->group().rank();
  const std::size_t cols = f.target()->group().rank();
  ordered_json m = ordered_json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < cols; ++j) row.push_back(f.matrix()[i * cols + j]);
    m.push_back(std::move(row));
  }
  return m;
}

bool size_then_lex(const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Additive generators of a ring, in coordinate order.
std::vector<elem_t> additive_generators(const FiniteRing& r) {
  std::vector<elem_t> gens(r.rank());
  for (std::size_t t = 0; t < r.rank(); ++t) {
    std::vector<std::uint32_t> c(r.rank(), 0);
    c[t] = 1;
    gens[t] = r.group().encode(c);
  }
  return gens;
}

// True when T(X) is contained in N, checked elementwise.
bool maps_into(const EndoRing& s, const std::vector<elem_t>& ideal_elems,
               const std::vector<elem_t>& xs, const Submodule& n) {
  for (elem_t t : ideal_elems)
    for (elem_t x : xs)
      if (!n.contains(s.apply(t, x))) return false;
  return true;
}

std::vector<elem_t> all_module_elements(const FiniteModule& m) {
  std::vector<elem_t> out(m.order());
  for (elem_t x = 0; x < m.order(); ++x) out[x] = x;
  return out;
}

}  // namespace

IdealHandle left_annihilator(const EndoRing& s, const Submodule& n) {
  if (n.parent() != s.module())
    throw RingMismatch("submodule does not live in the module of this endomorphism ring");
  const std::uint64_t count = s.ring()->order();
  std::vector<elem_t> out;
  for (elem_t f = 0; f < count; ++f) {
    bool kills = true;
    for (elem_t x : n.elements()) {
      if (s.apply(f, x) != 0) {
        kills = false;
        break;
      }
    }
    if (kills) out.push_back(f);
  }
  if (is_fully_invariant(s, n)) {
    // Two-sidedness is forced here; the handle constructor re-verifies it.
    return IdealHandle(s.ring(), std::move(out), Sidedness::two_sided);
  }
  bool right_closed = true;
  for (elem_t g : additive_generators(*s.ring())) {
    for (elem_t a : out) {
      if (!std::binary_search(out.begin(), out.end(), s.ring()->mul(a, g))) {
        right_closed = false;
        break;
      }
    }
    if (!right_closed) break;
  }
  return IdealHandle(s.ring(), std::move(out),
                     right_closed ? Sidedness::two_sided : Sidedness::left);
}

Submodule right_annihilator_in_module(const EndoRing& s, const IdealHandle& i) {
  if (i.ring() != s.ring())
    throw RingMismatch("ideal does not live in this endomorphism ring");
  std::vector<elem_t> out;
  for (elem_t m = 0; m < s.module()->order(); ++m) {
    bool killed = true;
    for (elem_t f : i.elements()) {
      if (s.apply(f, m) != 0) {
        killed = false;
        break;
      }
    }
    if (killed) out.push_back(m);
  }
  return Submodule(s.module(), std::move(out));
}

const std::vector<std::string>& module_property_ids() {
  static const std::vector<std::string> ids = {
      "rickart",       "baer",          "quasi_baer",    "pq_baer",
      "abelian",       "reduced",       "rigid",         "symmetric",
      "semicommutative", "ifp",         "retractable",   "endo_aip",
      "endo_app",      "centrally_endo_aip", "locally_pq_retractable",
      "semi_projective", "semisimple",  "prime_module",  "semiprime_module"};
  return ids;
}

const std::vector<std::string>& ring_property_ids() {
  static const std::vector<std::string> ids = {
      "baer",   "quasi_baer", "pq_baer",  "rickart_pp", "aip",   "app",
      "centrally_aip", "abelian", "reduced", "semiprime", "prime", "local",
      "domain"};
  return ids;
}

bool is_module_property(const std::string& id) {
  const auto& ids = module_property_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_ring_property(const std::string& id) {
  const auto& ids = ring_property_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ModuleAnalyzer::ModuleAnalyzer(ModulePtr m, const SizeCaps& caps)
    : module_(std::move(m)), caps_(caps) {}

const EndoRing& ModuleAnalyzer::endo() {
  if (!endo_) endo_.emplace(module_, caps_);
  return *endo_;
}

const std::vector<Submodule>& ModuleAnalyzer::submodules() {
  if (!subs_) subs_ = all_submodules(module_, caps_);
  return *subs_;
}

const std::vector<Submodule>& ModuleAnalyzer::fully_invariant_subs() {
  if (!fi_subs_) fi_subs_ = fully_invariant_submodules(endo(), caps_);
  return *fi_subs_;
}

const std::vector<Submodule>& ModuleAnalyzer::cyclic_subs() {
  if (!cyclic_subs_) {
    std::set<std::vector<elem_t>> seen;
    for (elem_t x = 0; x < module_->order(); ++x)
      seen.insert(cyclic_submodule(module_, x).elements());
    std::vector<std::vector<elem_t>> sets(seen.begin(), seen.end());
    std::sort(sets.begin(), sets.end(), size_then_lex);
    cyclic_subs_.emplace();
    for (auto& s : sets) cyclic_subs_->emplace_back(module_, std::move(s));
  }
  return *cyclic_subs_;
}

const std::vector<std::vector<elem_t>>& ModuleAnalyzer::hom_images() {
  if (!hom_images_) {
    hom_images_.emplace();
    hom_images_->reserve(endo().homs().size());
    for (const ModuleHom& f : endo().homs()) hom_images_->push_back(f.image_elements());
  }
  return *hom_images_;
}

const std::vector<elem_t>& ModuleAnalyzer::left_ideal_of(elem_t idem) {
  auto it = left_ideals_.find(idem);
  if (it == left_ideals_.end()) {
    const FiniteRing& r = *endo().ring();
    std::set<elem_t> se;
    for (elem_t s = 0; s < r.order(); ++s) se.insert(r.mul(s, idem));
    it = left_ideals_.emplace(idem, std::vector<elem_t>(se.begin(), se.end())).first;
  }
  return it->second;
}

const std::vector<IdealHandle>& ModuleAnalyzer::endo_ideals() {
  if (!endo_ideals_) endo_ideals_ = all_two_sided_ideals(endo().ring(), caps_);
  return *endo_ideals_;
}

bool ModuleAnalyzer::has_complement(const Submodule& n) {
  for (const Submodule& k : submodules()) {
    if (k.order() * n.order() != module_->order()) continue;
    if (intersect(k, n).order() == 1) return true;
  }
  return false;
}

const Verdict& ModuleAnalyzer::check(const std::string& property) {
  auto it = memo_.find(property);
  if (it == memo_.end()) it = memo_.emplace(property, run(property)).first;
  return it->second;
}

std::vector<Verdict> ModuleAnalyzer::check_all() {
  std::vector<Verdict> out;
  out.reserve(module_property_ids().size());
  for (const std::string& id : module_property_ids()) out.push_back(check(id));
  return out;
}

Verdict ModuleAnalyzer::summand_annihilator_check(const std::string& property,
                                                  const std::vector<Submodule>& family) {
  const EndoRing& s = endo();
  const std::vector<elem_t>& idems = s.ring()->idempotents();
  ordered_json units = ordered_json::object();
  std::size_t index = 0;
  for (const Submodule& n : family) {
    IdealHandle ann = left_annihilator(s, n);
    bool found = false;
    for (elem_t e : idems) {
      if (left_ideal_of(e) == ann.elements()) {
        if (units.size() < 64) units[std::to_string(index)] = e;
        found = true;
        break;
      }
    }
    if (!found) {
      ordered_json d;
      d["submodule"] = n.elements();
      d["ideal"] = ann.elements();
      d["candidates"] = idems;
      return make_failure(property, std::move(d));
    }
    ++index;
  }
  ordered_json d;
  d["units"] = std::move(units);
  d["other"] = {{"annihilators_checked", family.size()}};
  return make_certificate(property, std::move(d));
}

Verdict ModuleAnalyzer::s_unital_annihilator_check(const std::string& property,
                                                   const std::vector<Submodule>& family,
                                                   bool centrally) {
  const EndoRing& s = endo();
  ordered_json units = ordered_json::object();
  std::size_t index = 0;
  for (const Submodule& n : family) {
    IdealHandle ann = left_annihilator(s, n);
    Verdict inner = centrally ? is_centrally_s_unital(ann) : is_right_s_unital(ann);
    if (!inner.holds) {
      elem_t stuck = inner.witness.at("element").get<elem_t>();
      ordered_json d;
      d["submodule"] = n.elements();
      d["endomorphism"] = hom_matrix_json(s.hom(stuck));
      d["element"] = stuck;
      d["ideal"] = ann.elements();
      d["candidates"] = inner.witness.at("candidates");
      return make_failure(property, std::move(d));
    }
    if (inner.witness.contains("units") && units.size() < 32)
      units[std::to_string(index)] = inner.witness.at("units");
    ++index;
  }
  ordered_json d;
  d["units"] = std::move(units);
  d["other"] = {{"annihilators_checked", family.size()}};
  return make_certificate(property, std::move(d));
}

bool ModuleAnalyzer::prime_in(const Submodule& n) {
  const EndoRing& s = endo();
  const std::vector<elem_t> all = all_module_elements(*module_);
  for (const IdealHandle& t : endo_ideals()) {
    const bool tm_inside = maps_into(s, t.elements(), all, n);
    if (tm_inside) continue;  // T(M) inside N settles every N'
    for (const Submodule& np : fully_invariant_subs()) {
      if (n.contains_all(np)) continue;  // N' inside N settles this pair
      if (maps_into(s, t.elements(), np.elements(), n)) return false;
    }
  }
  return true;
}

Verdict ModuleAnalyzer::run(const std::string& property) {
  const std::uint64_t msize = module_->order();

  if (property == "rickart") {
    const EndoRing& s = endo();
    for (elem_t f = 0; f < s.ring()->order(); ++f) {
      Submodule kern = kernel(s.hom(f));
      if (!has_complement(kern)) {
        ordered_json d;
        d["endomorphism"] = hom_matrix_json(s.hom(f));
        d["submodule"] = kern.elements();
        d["other"] = {{"submodules_searched", submodules().size()}};
        return make_failure(property, std::move(d));
      }
    }
    return make_certificate(property,
                            {{"other", {{"endomorphisms_checked", s.ring()->order()}}}});
  }

  if (property == "baer") return summand_annihilator_check(property, submodules());
  if (property == "quasi_baer")
    return summand_annihilator_check(property, fully_invariant_subs());
  if (property == "pq_baer") return summand_annihilator_check(property, cyclic_subs());

  if (property == "abelian") {
    const FiniteRing& r = *endo().ring();
    for (elem_t e : r.idempotents()) {
      if (r.is_central(e)) continue;
      for (elem_t x = 0; x < r.order(); ++x) {
        if (r.mul(e, x) != r.mul(x, e)) {
          ordered_json d;
          d["idempotent"] = e;
          d["endomorphism"] = hom_matrix_json(endo().hom(e));
          d["element"] = x;
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property,
                            {{"other", {{"idempotents_checked", r.idempotents().size()}}}});
  }

  if (property == "reduced") {
    const EndoRing& s = endo();
    std::vector<std::vector<elem_t>> orbit(msize);  // Sm, built on demand
    for (elem_t f = 0; f < s.ring()->order(); ++f) {
      for (elem_t m = 0; m < msize; ++m) {
        if (s.apply(f, m) != 0) continue;
        if (orbit[m].empty()) {
          std::set<elem_t> sm;
          for (elem_t t = 0; t < s.ring()->order(); ++t) sm.insert(s.apply(t, m));
          orbit[m].assign(sm.begin(), sm.end());
        }
        std::vector<elem_t> common = intersect_sorted(hom_images()[f], orbit[m]);
        if (common.size() > 1) {
          ordered_json d;
          d["endomorphism"] = hom_matrix_json(s.hom(f));
          d["element"] = m;
          d["other"] = {{"common_element", common[1]}};
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property,
                            {{"other", {{"endomorphisms_checked", s.ring()->order()}}}});
  }

  if (property == "rigid") {
    const EndoRing& s = endo();
    for (elem_t f = 0; f < s.ring()->order(); ++f) {
      for (elem_t m = 0; m < msize; ++m) {
        elem_t fm = s.apply(f, m);
        if (s.apply(f, fm) == 0 && fm != 0) {
          ordered_json d;
          d["endomorphism"] = hom_matrix_json(s.hom(f));
          d["element"] = m;
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property,
                            {{"other", {{"endomorphisms_checked", s.ring()->order()}}}});
  }

  if (property == "symmetric") {
    const EndoRing& s = endo();
    const elem_t count = static_cast<elem_t>(s.ring()->order());
    for (elem_t f = 0; f < count; ++f) {
      for (elem_t g = 0; g < count; ++g) {
        for (elem_t m = 0; m < msize; ++m) {
          if (s.apply(f, s.apply(g, m)) == 0 && s.apply(g, s.apply(f, m)) != 0) {
            ordered_json d;
            d["endomorphism"] = hom_matrix_json(s.hom(f));
            d["endomorphism2"] = hom_matrix_json(s.hom(g));
            d["element"] = m;
            return make_failure(property, std::move(d));
          }
        }
      }
    }
    return make_certificate(property, {{"other", {{"pairs_checked", count * count}}}});
  }

  if (property == "semicommutative") {
    const EndoRing& s = endo();
    const elem_t count = static_cast<elem_t>(s.ring()->order());
    for (elem_t f = 0; f < count; ++f) {
      for (elem_t m = 0; m < msize; ++m) {
        if (s.apply(f, m) != 0) continue;
        for (elem_t g = 0; g < count; ++g) {
          if (s.apply(f, s.apply(g, m)) != 0) {
            ordered_json d;
            d["endomorphism"] = hom_matrix_json(s.hom(f));
            d["endomorphism2"] = hom_matrix_json(s.hom(g));
            d["element"] = m;
            return make_failure(property, std::move(d));
          }
        }
      }
    }
    return make_certificate(property,
                            {{"other", {{"endomorphisms_checked", count}}}});
  }

  if (property == "ifp") {
    const EndoRing& s = endo();
    for (elem_t f = 0; f < s.ring()->order(); ++f) {
      Submodule kern = kernel(s.hom(f));
      if (is_fully_invariant(s, kern)) continue;
      for (elem_t g = 0; g < s.ring()->order(); ++g) {
        for (elem_t n : kern.elements()) {
          if (!kern.contains(s.apply(g, n))) {
            ordered_json d;
            d["endomorphism"] = hom_matrix_json(s.hom(f));
            d["submodule"] = kern.elements();
            d["endomorphism2"] = hom_matrix_json(s.hom(g));
            d["element"] = n;
            return make_failure(property, std::move(d));
          }
        }
      }
      throw std::logic_error("fully-invariant check and elementwise scan disagree");
    }
    return make_certificate(property,
                            {{"other", {{"endomorphisms_checked", s.ring()->order()}}}});
  }

  if (property == "retractable") {
    const EndoRing& s = endo();
    for (const Submodule& n : submodules()) {
      if (n.is_zero()) continue;
      bool found = false;
      for (elem_t f = 1; f < s.ring()->order(); ++f) {
        if (subset_sorted(hom_images()[f], n.elements())) {
          found = true;
          break;
        }
      }
      if (!found) {
        ordered_json d;
        d["submodule"] = n.elements();
        d["other"] = {{"endomorphisms_scanned", s.ring()->order()}};
        return make_failure(property, std::move(d));
      }
    }
    return make_certificate(property,
                            {{"other", {{"submodules_checked", submodules().size()}}}});
  }

  if (property == "endo_aip")
    return s_unital_annihilator_check(property, fully_invariant_subs(), false);
  if (property == "endo_app")
    return s_unital_annihilator_check(property, cyclic_subs(), false);
  if (property == "centrally_endo_aip")
    return s_unital_annihilator_check(property, fully_invariant_subs(), true);

  if (property == "locally_pq_retractable") {
    const EndoRing& s = endo();
    // Many endomorphisms generate the same principal ideal; dedup the raw
    // closures first so each distinct ideal is validated and tested once, at
    // its smallest generator (the order the elementwise scan would visit).
    std::map<std::vector<elem_t>, elem_t> first_gen;
    for (elem_t f = 0; f < s.ring()->order(); ++f)
      first_gen.emplace(
          ideal_closure(s.ring(), {f}, Sidedness::two_sided, caps_), f);
    std::vector<std::pair<elem_t, const std::vector<elem_t>*>> by_gen;
    by_gen.reserve(first_gen.size());
    for (const auto& [set, f] : first_gen) by_gen.emplace_back(f, &set);
    std::sort(by_gen.begin(), by_gen.end());
    for (const auto& [f, set] : by_gen) {
      IdealHandle princ(s.ring(), *set, Sidedness::two_sided);
      Submodule ra = right_annihilator_in_module(s, princ);
      if (ra.is_zero()) continue;
      bool found = false;
      for (elem_t g = 1; g < s.ring()->order(); ++g) {
        if (hom_images()[g] == ra.elements()) {
          found = true;
          break;
        }
      }
      if (!found) {
        ordered_json d;
        d["element"] = f;
        d["endomorphism"] = hom_matrix_json(s.hom(f));
        d["ideal"] = princ.elements();
        d["submodule"] = ra.elements();
        d["other"] = {{"images_scanned", s.ring()->order()}};
        return make_failure(property, std::move(d));
      }
    }
    return make_certificate(
        property, {{"other", {{"principal_ideals_checked", first_gen.size()}}}});
  }

  if (property == "semi_projective") {
    const EndoRing& s = endo();
    const elem_t count = static_cast<elem_t>(s.ring()->order());
    for (elem_t f = 0; f < count; ++f) {
      std::set<elem_t> fs;
      for (elem_t t = 0; t < count; ++t) fs.insert(s.ring()->mul(f, t));
      for (elem_t g = 0; g < count; ++g) {
        if (!subset_sorted(hom_images()[g], hom_images()[f])) continue;
        if (!fs.count(g)) {
          ordered_json d;
          d["endomorphism"] = hom_matrix_json(s.hom(f));
          d["endomorphism2"] = hom_matrix_json(s.hom(g));
          d["ideal"] = std::vector<elem_t>(fs.begin(), fs.end());
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property, {{"other", {{"endomorphisms_checked", count}}}});
  }

  if (property == "semisimple") {
    for (const Submodule& n : submodules()) {
      if (!has_complement(n)) {
        ordered_json d;
        d["submodule"] = n.elements();
        d["other"] = {{"submodules_searched", submodules().size()}};
        return make_failure(property, std::move(d));
      }
    }
    return make_certificate(property,
                            {{"other", {{"submodules_checked", submodules().size()}}}});
  }

  if (property == "prime_module") {
    if (msize == 1) {
      ordered_json d;
      d["other"] = "the zero module is not prime: {0} is not a proper submodule";
      return make_failure(property, std::move(d));
    }
    const Submodule zero = zero_submodule(module_);
    const std::vector<elem_t> all = all_module_elements(*module_);
    for (const IdealHandle& t : endo_ideals()) {
      if (maps_into(endo(), t.elements(), all, zero)) continue;
      for (const Submodule& np : fully_invariant_subs()) {
        if (np.is_zero()) continue;
        if (maps_into(endo(), t.elements(), np.elements(), zero)) {
          ordered_json d;
          d["ideal"] = t.elements();
          d["submodule"] = np.elements();
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property,
                            {{"other", {{"ideals_checked", endo_ideals().size()}}}});
  }

  if (property == "semiprime_module") {
    if (msize == 1) {
      ordered_json d;
      d["other"] = "zero module: {0} equals the empty intersection of prime submodules";
      return make_certificate(property, std::move(d));
    }
    std::vector<const Submodule*> primes;
    for (const Submodule& p : fully_invariant_subs()) {
      if (p.is_full()) continue;  // prime submodules are proper
      if (prime_in(p)) primes.push_back(&p);
    }
    std::vector<elem_t> inter = all_module_elements(*module_);
    for (const Submodule* p : primes) inter = intersect_sorted(inter, p->elements());
    ordered_json cands = ordered_json::array();
    for (std::size_t i = 0; i < primes.size() && i < 16; ++i)
      cands.push_back(primes[i]->elements());
    if (inter.size() == 1) {
      ordered_json d;
      d["candidates"] = std::move(cands);
      d["other"] = {{"prime_submodules", primes.size()}};
      return make_certificate(property, std::move(d));
    }
    ordered_json d;
    d["submodule"] = inter;
    d["candidates"] = std::move(cands);
    d["other"] = {{"prime_submodules", primes.size()}};
    return make_failure(property, std::move(d));
  }

  throw std::invalid_argument("unknown module property: " + property);
}

RingAnalyzer::RingAnalyzer(RingPtr r, const SizeCaps& caps)
    : ring_(std::move(r)), caps_(caps) {}

const std::vector<IdealHandle>& RingAnalyzer::two_sided_ideals() {
  if (!ideals_) ideals_ = all_two_sided_ideals(ring_, caps_);
  return *ideals_;
}

const std::vector<elem_t>& RingAnalyzer::right_ideal_of(elem_t idem) {
  auto it = right_ideals_.find(idem);
  if (it == right_ideals_.end()) {
    std::set<elem_t> er;
    for (elem_t x = 0; x < ring_->order(); ++x) er.insert(ring_->mul(idem, x));
    it = right_ideals_.emplace(idem, std::vector<elem_t>(er.begin(), er.end())).first;
  }
  return it->second;
}

std::optional<elem_t> RingAnalyzer::idempotent_generating(
    const std::vector<elem_t>& right_ideal) {
  for (elem_t e : ring_->idempotents())
    if (right_ideal_of(e) == right_ideal) return e;
  return std::nullopt;
}

const Verdict& RingAnalyzer::check(const std::string& property) {
  auto it = memo_.find(property);
  if (it == memo_.end()) it = memo_.emplace(property, run(property)).first;
  return it->second;
}

std::vector<Verdict> RingAnalyzer::check_all() {
  std::vector<Verdict> out;
  out.reserve(ring_property_ids().size());
  for (const std::string& id : ring_property_ids()) out.push_back(check(id));
  return out;
}

// Shared scan for the annihilator-summand family of ring properties:
//   baer        — right annihilators of arbitrary subsets (intersection closure)
//   quasi_baer  — right annihilators of two-sided ideals
//   pq_baer     — right annihilators of principal two-sided ideals
//   rickart_pp  — right annihilators of single elements
// each of which must be generated as a right ideal by an idempotent.
Verdict RingAnalyzer::annihilator_summand_check(const std::string& property,
                                                bool principal_only, bool elementwise) {
  ordered_json units = ordered_json::object();
  std::size_t index = 0;
  auto demand_idempotent = [&](const std::vector<elem_t>& ann,
                               ordered_json context) -> std::optional<Verdict> {
    if (std::optional<elem_t> e = idempotent_generating(ann)) {
      if (units.size() < 64) units[std::to_string(index)] = *e;
      ++index;
      return std::nullopt;
    }
    ordered_json d = std::move(context);
    d["ideal"] = ann;
    d["candidates"] = ring_->idempotents();
    return make_failure(property, std::move(d));
  };

  if (elementwise) {
    for (elem_t a = 0; a < ring_->order(); ++a) {
      std::vector<elem_t> ann = right_annihilator_in_ring(ring_, {a}).elements();
      ordered_json ctx;
      ctx["element"] = a;
      if (auto v = demand_idempotent(ann, std::move(ctx))) return *v;
    }
  } else if (principal_only) {
    std::set<std::vector<elem_t>> seen;
    for (elem_t a = 0; a < ring_->order(); ++a) {
      IdealHandle princ = ideal_generated(ring_, {a}, Sidedness::two_sided, caps_);
      if (!seen.insert(princ.elements()).second) continue;
      std::vector<elem_t> ann = right_annihilator_in_ring(ring_, princ.elements()).elements();
      ordered_json ctx;
      ctx["element"] = a;
      ctx["other"] = {{"principal_ideal", princ.elements()}};
      if (auto v = demand_idempotent(ann, std::move(ctx))) return *v;
    }
  } else {
    for (const IdealHandle& i : two_sided_ideals()) {
      std::vector<elem_t> ann = right_annihilator_in_ring(ring_, i.elements()).elements();
      ordered_json ctx;
      ctx["other"] = {{"annihilated_ideal", i.elements()}};
      if (auto v = demand_idempotent(ann, std::move(ctx))) return *v;
    }
  }
  ordered_json d;
  d["units"] = std::move(units);
  d["other"] = {{"annihilators_checked", index}};
  return make_certificate(property, std::move(d));
}

Verdict RingAnalyzer::run(const std::string& property) {
  const std::uint64_t rsize = ring_->order();

  if (property == "baer") {
    // The right annihilator of a subset X is the intersection of the element
    // annihilators over X, so the family of all such annihilators is the
    // intersection closure of the element annihilators (seeded with r(∅)=R).
    std::map<std::vector<elem_t>, std::vector<elem_t>> family;  // annihilator -> X
    std::vector<std::pair<std::vector<elem_t>, elem_t>> seeds;
    for (elem_t x = 0; x < rsize; ++x)
      seeds.emplace_back(right_annihilator_in_ring(ring_, {x}).elements(), x);
    std::vector<elem_t> whole(rsize);
    for (elem_t x = 0; x < rsize; ++x) whole[x] = x;
    std::deque<std::vector<elem_t>> work;
    family[whole] = {};
    work.push_back(whole);
    while (!work.empty()) {
      std::vector<elem_t> cur = std::move(work.front());
      work.pop_front();
      std::vector<elem_t> xs = family.at(cur);
      for (const auto& [ann, x] : seeds) {
        std::vector<elem_t> meet = intersect_sorted(cur, ann);
        if (family.count(meet)) continue;
        if (family.size() >= caps_.ring)
          throw SizeCapExceeded("annihilator family exceeds cap of " +
                                std::to_string(caps_.ring));
        std::vector<elem_t> wit = xs;
        wit.push_back(x);
        family[meet] = std::move(wit);
        work.push_back(meet);
      }
    }
    ordered_json units = ordered_json::object();
    std::size_t index = 0;
    for (const auto& [ann, xs] : family) {
      if (std::optional<elem_t> e = idempotent_generating(ann)) {
        if (units.size() < 64) units[std::to_string(index)] = *e;
        ++index;
        continue;
      }
      ordered_json d;
      d["ideal"] = ann;
      d["other"] = {{"annihilated_elements", xs}};
      d["candidates"] = ring_->idempotents();
      return make_failure(property, std::move(d));
    }
    ordered_json d;
    d["units"] = std::move(units);
    d["other"] = {{"annihilators_checked", family.size()}};
    return make_certificate(property, std::move(d));
  }

  if (property == "quasi_baer") return annihilator_summand_check(property, false, false);
  if (property == "pq_baer") return annihilator_summand_check(property, true, false);
  if (property == "rickart_pp") return annihilator_summand_check(property, false, true);

  if (property == "aip" || property == "centrally_aip") {
    const bool centrally = property == "centrally_aip";
    ordered_json units = ordered_json::object();
    std::size_t index = 0;
    for (const IdealHandle& i : two_sided_ideals()) {
      IdealHandle ann = left_annihilator_in_ring(ring_, i.elements());
      Verdict inner = centrally ? is_centrally_s_unital(ann) : is_right_s_unital(ann);
      if (!inner.holds) {
        ordered_json d;
        d["element"] = inner.witness.at("element");
        d["ideal"] = i.elements();
        d["other"] = {{"left_annihilator", ann.elements()}};
        d["candidates"] = inner.witness.at("candidates");
        return make_failure(property, std::move(d));
      }
      if (inner.witness.contains("units") && units.size() < 32)
        units[std::to_string(index)] = inner.witness.at("units");
      ++index;
    }
    ordered_json d;
    d["units"] = std::move(units);
    d["other"] = {{"ideals_checked", two_sided_ideals().size()}};
    return make_certificate(property, std::move(d));
  }

  if (property == "app") {
    for (elem_t a = 0; a < rsize; ++a) {
      IdealHandle ann = left_annihilator_in_ring(ring_, {a});
      Verdict inner = is_right_s_unital(ann);
      if (!inner.holds) {
        ordered_json d;
        d["element"] = a;
        d["ideal"] = ann.elements();
        d["other"] = {{"stuck_element", inner.witness.at("element")}};
        d["candidates"] = inner.witness.at("candidates");
        return make_failure(property, std::move(d));
      }
    }
    return make_certificate(property, {{"other", {{"elements_checked", rsize}}}});
  }

  if (property == "abelian") {
    for (elem_t e : ring_->idempotents()) {
      if (ring_->is_central(e)) continue;
      for (elem_t x = 0; x < rsize; ++x) {
        if (ring_->mul(e, x) != ring_->mul(x, e)) {
          ordered_json d;
          d["idempotent"] = e;
          d["element"] = x;
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(
        property, {{"other", {{"idempotents_checked", ring_->idempotents().size()}}}});
  }

  if (property == "reduced") {
    for (elem_t a = 1; a < rsize; ++a) {
      if (ring_->mul(a, a) == 0) {
        ordered_json d;
        d["element"] = a;
        return make_failure(property, std::move(d));
      }
    }
    return make_certificate(property, {{"other", {{"elements_checked", rsize}}}});
  }

  if (property == "semiprime" || property == "prime") {
    const bool want_prime = property == "prime";
    for (const IdealHandle& i : two_sided_ideals()) {
      if (i.is_zero()) continue;
      for (const IdealHandle& j : two_sided_ideals()) {
        if (j.is_zero()) continue;
        if (!want_prime && !(i == j)) continue;
        bool product_zero = true;
        for (elem_t x : i.elements()) {
          for (elem_t y : j.elements()) {
            if (ring_->mul(x, y) != 0) {
              product_zero = false;
              break;
            }
          }
          if (!product_zero) break;
        }
        if (product_zero) {
          ordered_json d;
          d["ideal"] = i.elements();
          if (want_prime) d["other"] = {{"ideal2", j.elements()}};
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property,
                            {{"other", {{"ideals_checked", two_sided_ideals().size()}}}});
  }

  if (property == "local") {
    if (rsize == 1)
      return make_failure(property, {{"other", "the zero ring is not local"}});
    const std::vector<bool>& units = ring_->unit_mask();
    std::vector<elem_t> nonunits;
    for (elem_t x = 0; x < rsize; ++x)
      if (!units[x]) nonunits.push_back(x);
    for (elem_t a : nonunits) {
      for (elem_t b : nonunits) {
        elem_t sum = ring_->add(a, b);
        if (units[sum]) {
          ordered_json d;
          d["element"] = a;
          d["other"] = {{"second_element", b}, {"unit_sum", sum}};
          return make_failure(property, std::move(d));
        }
      }
      for (elem_t g : additive_generators(*ring_)) {
        if (units[ring_->mul(a, g)] || units[ring_->mul(g, a)]) {
          ordered_json d;
          d["element"] = a;
          d["other"] = {{"multiplier", g}};
          return make_failure(property, std::move(d));
        }
      }
    }
    ordered_json d;
    d["ideal"] = nonunits;
    return make_certificate(property, std::move(d));
  }

  if (property == "domain") {
    if (rsize == 1)
      return make_failure(property, {{"other", "the zero ring is not a domain"}});
    for (elem_t a = 1; a < rsize; ++a) {
      for (elem_t b = 1; b < rsize; ++b) {
        if (ring_->mul(a, b) == 0) {
          ordered_json d;
          d["element"] = a;
          d["other"] = {{"second_element", b}};
          return make_failure(property, std::move(d));
        }
      }
    }
    return make_certificate(property, {{"other", {{"elements_checked", rsize}}}});
  }

  throw std::invalid_argument("unknown ring property: " + property);
}

Verdict check_module_property(const ModulePtr& m, const std::string& property,
                              const SizeCaps& caps) {
  ModuleAnalyzer a(m, caps);
  return a.check(property);
}

Verdict check_ring_property(const RingPtr& r, const std::string& property,
                            const SizeCaps& caps) {
  RingAnalyzer a(r, caps);
  return a.check(property);
}

}  // namespace finalg
