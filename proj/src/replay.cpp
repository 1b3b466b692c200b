#include "finalg/replay.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "finalg/errors.hpp"
#include "finalg/hom.hpp"
#include "finalg/lattice.hpp"
#include "finalg/props.hpp"

namespace finalg {

namespace {

using nlohmann::ordered_json;

ReplayResult pass() { return {true, {}}; }
ReplayResult fail(std::string why) { return {false, std::move(why)}; }

std::vector<elem_t> ids_from(const ordered_json& j) {
  std::vector<elem_t> out;
  for (const auto& v : j) out.push_back(v.get<elem_t>());
  return out;
}

bool sorted_has(const std::vector<elem_t>& v, elem_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// ---------------------------------------------------------------------------
// Module-side replay: everything is rebuilt from the raw hom enumeration.

struct EndoView {
  ModulePtr m;
  std::vector<ModuleHom> homs;
  std::map<std::vector<std::uint32_t>, elem_t> index;

  explicit EndoView(const ModulePtr& mod, const SizeCaps& caps)
      : m(mod), homs(hom_group(mod, mod, caps)) {
    for (elem_t i = 0; i < homs.size(); ++i) index[homs[i].matrix()] = i;
  }

  elem_t count() const { return static_cast<elem_t>(homs.size()); }

  std::optional<elem_t> id_of(const ModuleHom& h) const {
    auto it = index.find(h.matrix());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // (a * b)(x) = a(b(x)): ring multiplication is composition.
  std::optional<elem_t> mul(elem_t a, elem_t b) const {
    return id_of(compose(homs[a], homs[b]));
  }

  // Pointwise sum of two endomorphisms.
  std::optional<elem_t> add(elem_t a, elem_t b) const {
    std::vector<std::uint32_t> mat(homs[a].matrix().size());
    const auto& g = m->group();
    std::size_t rk = g.rank();
    for (std::size_t i = 0; i < rk; ++i) {
      elem_t sum = m->add(homs[a].generator_image(i), homs[b].generator_image(i));
      for (std::size_t j = 0; j < rk; ++j) mat[i * rk + j] = g.coord(sum, j);
    }
    auto it = index.find(mat);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  bool is_idempotent(elem_t e) const { return mul(e, e) == e; }

  bool is_central(elem_t z) const {
    for (elem_t h = 0; h < count(); ++h)
      if (mul(z, h) != mul(h, z)) return false;
    return true;
  }
};

// A sorted element set is a submodule when it contains 0 and is closed under
// addition and the ring action.
bool is_submodule_set(const FiniteModule& m, const std::vector<elem_t>& n) {
  if (n.empty() || n[0] != 0) return false;
  if (!std::is_sorted(n.begin(), n.end())) return false;
  if (n.back() >= m.order()) return false;
  for (elem_t a : n)
    for (elem_t b : n)
      if (!sorted_has(n, m.add(a, b))) return false;
  for (elem_t a : n)
    for (elem_t r = 0; r < m.ring()->order(); ++r)
      if (!sorted_has(n, m.act(a, r))) return false;
  return true;
}

bool is_fully_invariant_set(const EndoView& s, const std::vector<elem_t>& n) {
  for (elem_t h = 0; h < s.count(); ++h)
    for (elem_t x : n)
      if (!sorted_has(n, s.homs[h].apply(x))) return false;
  return true;
}

bool is_cyclic_set(const FiniteModule& m, const std::vector<elem_t>& n) {
  for (elem_t g : n) {
    std::set<elem_t> orbit;
    for (elem_t r = 0; r < m.ring()->order(); ++r) orbit.insert(m.act(g, r));
    if (std::vector<elem_t>(orbit.begin(), orbit.end()) == n) return true;
  }
  return false;
}

std::vector<elem_t> annihilator_ids(const EndoView& s, const std::vector<elem_t>& n) {
  std::vector<elem_t> out;
  for (elem_t h = 0; h < s.count(); ++h) {
    bool kills = true;
    for (elem_t x : n)
      if (s.homs[h].apply(x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(h);
  }
  return out;
}

std::vector<elem_t> idempotent_ids(const EndoView& s) {
  std::vector<elem_t> out;
  for (elem_t e = 0; e < s.count(); ++e)
    if (s.is_idempotent(e)) out.push_back(e);
  return out;
}

// Left ideal S*e as a sorted id set.
std::vector<elem_t> left_multiples(const EndoView& s, elem_t e) {
  std::set<elem_t> se;
  for (elem_t t = 0; t < s.count(); ++t) {
    auto p = s.mul(t, e);
    if (!p) return {};
    se.insert(*p);
  }
  return {se.begin(), se.end()};
}

// Two-sided ideal of S generated by f: additive closure of {s f t}.
std::optional<std::vector<elem_t>> principal_ideal_ids(const EndoView& s, elem_t f) {
  std::set<elem_t> seeds;
  for (elem_t a = 0; a < s.count(); ++a)
    for (elem_t b = 0; b < s.count(); ++b) {
      auto af = s.mul(a, f);
      if (!af) return std::nullopt;
      auto afb = s.mul(*af, b);
      if (!afb) return std::nullopt;
      seeds.insert(*afb);
    }
  std::set<elem_t> closure = {0};
  std::vector<elem_t> work = {0};
  while (!work.empty()) {
    elem_t cur = work.back();
    work.pop_back();
    for (elem_t g : seeds) {
      auto nx = s.add(cur, g);
      if (!nx) return std::nullopt;
      if (closure.insert(*nx).second) work.push_back(*nx);
    }
  }
  return std::vector<elem_t>(closure.begin(), closure.end());
}

std::optional<ModuleHom> hom_from_witness(const ModulePtr& m, const ordered_json& j) {
  std::vector<std::uint32_t> mat;
  for (const auto& row : j)
    for (const auto& entry : row) mat.push_back(entry.get<std::uint32_t>());
  try {
    return ModuleHom(m, m, std::move(mat));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// The witness stores submodules as sorted element lists.
std::vector<elem_t> witness_submodule(const ordered_json& w, const char* key = "submodule") {
  return ids_from(w.at(key));
}

ReplayResult check_no_complement(const ModulePtr& m, const std::vector<elem_t>& n,
                                 const SizeCaps& caps) {
  // In a finite module, K complements N exactly when N ∩ K = 0 and
  // |N| * |K| = |M|.
  for (const Submodule& k : all_submodules(m, caps)) {
    if (k.order() * n.size() != m->order()) continue;
    std::size_t common = 0;
    for (elem_t x : k.elements())
      if (sorted_has(n, x)) ++common;
    if (common == 1)
      return fail("witness submodule has a direct complement after all");
  }
  return pass();
}

ReplayResult replay_module_failure(const ModulePtr& m, const Verdict& v,
                                   const SizeCaps& caps) {
  const ordered_json& w = v.witness;
  const std::string& p = v.property;
  const std::uint64_t msize = m->order();

  if (p == "prime_module" && msize == 1) return pass();  // false by convention

  EndoView s(m, caps);

  if (p == "rickart" || p == "semisimple") {
    std::vector<elem_t> n = witness_submodule(w);
    if (!is_submodule_set(*m, n)) return fail("witness set is not a submodule");
    if (p == "rickart") {
      auto f = hom_from_witness(m, w.at("endomorphism"));
      if (!f) return fail("witness endomorphism is not linear");
      std::vector<elem_t> ker;
      for (elem_t x = 0; x < msize; ++x)
        if (f->apply(x) == 0) ker.push_back(x);
      if (ker != n) return fail("witness submodule is not the kernel of the map");
    }
    return check_no_complement(m, n, caps);
  }

  if (p == "baer" || p == "quasi_baer" || p == "pq_baer") {
    std::vector<elem_t> n = witness_submodule(w);
    if (!is_submodule_set(*m, n)) return fail("witness set is not a submodule");
    if (p == "quasi_baer" && !is_fully_invariant_set(s, n))
      return fail("witness submodule is not fully invariant");
    if (p == "pq_baer" && !is_cyclic_set(*m, n))
      return fail("witness submodule is not cyclic");
    std::vector<elem_t> ann = annihilator_ids(s, n);
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the annihilator of the submodule");
    if (ids_from(w.at("candidates")) != idempotent_ids(s))
      return fail("witness candidate set is not the idempotent set");
    for (elem_t e : idempotent_ids(s))
      if (left_multiples(s, e) == ann)
        return fail("annihilator is generated by an idempotent after all");
    return pass();
  }

  if (p == "abelian") {
    elem_t e = w.at("idempotent").get<elem_t>();
    elem_t x = w.at("element").get<elem_t>();
    if (e >= s.count() || x >= s.count()) return fail("witness id out of range");
    if (!s.is_idempotent(e)) return fail("witness map is not idempotent");
    if (s.homs[e].matrix() !=
        hom_from_witness(m, w.at("endomorphism"))->matrix())
      return fail("witness matrix does not match the idempotent id");
    if (s.mul(e, x) == s.mul(x, e)) return fail("witness pair commutes after all");
    return pass();
  }

  if (p == "reduced") {
    auto f = hom_from_witness(m, w.at("endomorphism"));
    if (!f) return fail("witness endomorphism is not linear");
    elem_t x = w.at("element").get<elem_t>();
    elem_t c = w.at("other").at("common_element").get<elem_t>();
    if (f->apply(x) != 0) return fail("witness map does not kill the element");
    if (c == 0) return fail("common element is zero");
    bool in_image = false;
    for (elem_t y = 0; y < msize && !in_image; ++y) in_image = f->apply(y) == c;
    if (!in_image) return fail("common element is not in the image");
    bool in_orbit = false;
    for (elem_t h = 0; h < s.count() && !in_orbit; ++h)
      in_orbit = s.homs[h].apply(x) == c;
    if (!in_orbit) return fail("common element is not in the orbit of the element");
    return pass();
  }

  if (p == "rigid") {
    auto f = hom_from_witness(m, w.at("endomorphism"));
    if (!f) return fail("witness endomorphism is not linear");
    elem_t x = w.at("element").get<elem_t>();
    elem_t fx = f->apply(x);
    if (fx == 0) return fail("f(m) is already zero");
    if (f->apply(fx) != 0) return fail("f(f(m)) is not zero");
    return pass();
  }

  if (p == "symmetric" || p == "semicommutative") {
    auto f = hom_from_witness(m, w.at("endomorphism"));
    auto g = hom_from_witness(m, w.at("endomorphism2"));
    if (!f || !g) return fail("witness endomorphism is not linear");
    elem_t x = w.at("element").get<elem_t>();
    if (p == "symmetric") {
      if (f->apply(g->apply(x)) != 0) return fail("f(g(m)) is not zero");
      if (g->apply(f->apply(x)) == 0) return fail("g(f(m)) is zero after all");
    } else {
      if (f->apply(x) != 0) return fail("f(m) is not zero");
      if (f->apply(g->apply(x)) == 0) return fail("f(g(m)) is zero after all");
    }
    return pass();
  }

  if (p == "ifp") {
    auto f = hom_from_witness(m, w.at("endomorphism"));
    auto g = hom_from_witness(m, w.at("endomorphism2"));
    if (!f || !g) return fail("witness endomorphism is not linear");
    std::vector<elem_t> n = witness_submodule(w);
    std::vector<elem_t> ker;
    for (elem_t x = 0; x < msize; ++x)
      if (f->apply(x) == 0) ker.push_back(x);
    if (ker != n) return fail("witness submodule is not the kernel of the map");
    elem_t x = w.at("element").get<elem_t>();
    if (!sorted_has(n, x)) return fail("witness element is not in the kernel");
    if (sorted_has(n, g->apply(x)))
      return fail("the kernel absorbs the witness image after all");
    return pass();
  }

  if (p == "retractable") {
    std::vector<elem_t> n = witness_submodule(w);
    if (!is_submodule_set(*m, n)) return fail("witness set is not a submodule");
    if (n.size() == 1) return fail("witness submodule is zero");
    for (elem_t h = 1; h < s.count(); ++h) {
      bool inside = true;
      for (elem_t x = 0; x < msize && inside; ++x)
        inside = sorted_has(n, s.homs[h].apply(x));
      if (inside) return fail("a nonzero map lands inside the submodule after all");
    }
    return pass();
  }

  if (p == "endo_aip" || p == "endo_app" || p == "centrally_endo_aip") {
    std::vector<elem_t> n = witness_submodule(w);
    if (!is_submodule_set(*m, n)) return fail("witness set is not a submodule");
    if (p == "endo_app") {
      if (!is_cyclic_set(*m, n)) return fail("witness submodule is not cyclic");
    } else if (!is_fully_invariant_set(s, n)) {
      return fail("witness submodule is not fully invariant");
    }
    std::vector<elem_t> ann = annihilator_ids(s, n);
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the annihilator of the submodule");
    elem_t a = w.at("element").get<elem_t>();
    if (!sorted_has(ann, a)) return fail("stuck element is not in the annihilator");
    std::vector<elem_t> cands;
    if (p == "centrally_endo_aip") {
      for (elem_t z : ann)
        if (s.is_central(z)) cands.push_back(z);
    } else {
      cands = ann;
    }
    if (ids_from(w.at("candidates")) != cands)
      return fail("witness candidate set does not match the definition");
    for (elem_t x : cands)
      if (s.mul(a, x) == a) return fail("an s-unit exists after all");
    return pass();
  }

  if (p == "locally_pq_retractable") {
    elem_t f = w.at("element").get<elem_t>();
    if (f >= s.count()) return fail("witness id out of range");
    auto ideal = principal_ideal_ids(s, f);
    if (!ideal) return fail("endomorphism arithmetic left the hom set");
    if (ids_from(w.at("ideal")) != *ideal)
      return fail("witness ideal is not the principal ideal of the map");
    std::vector<elem_t> ra;
    for (elem_t x = 0; x < msize; ++x) {
      bool killed = true;
      for (elem_t t : *ideal)
        if (s.homs[t].apply(x) != 0) {
          killed = false;
          break;
        }
      if (killed) ra.push_back(x);
    }
    if (witness_submodule(w) != ra)
      return fail("witness submodule is not the right annihilator of the ideal");
    if (ra.size() == 1) return fail("the right annihilator is zero");
    for (elem_t h = 1; h < s.count(); ++h)
      if (s.homs[h].image_elements() == ra)
        return fail("some nonzero map has exactly that image after all");
    return pass();
  }

  if (p == "semi_projective") {
    auto f = hom_from_witness(m, w.at("endomorphism"));
    auto g = hom_from_witness(m, w.at("endomorphism2"));
    if (!f || !g) return fail("witness endomorphism is not linear");
    auto fid = s.id_of(*f), gid = s.id_of(*g);
    if (!fid || !gid) return fail("witness map is not an endomorphism of M");
    std::set<elem_t> fs;
    for (elem_t t = 0; t < s.count(); ++t) {
      auto ft = s.mul(*fid, t);
      if (!ft) return fail("endomorphism arithmetic left the hom set");
      fs.insert(*ft);
    }
    if (ids_from(w.at("ideal")) != std::vector<elem_t>(fs.begin(), fs.end()))
      return fail("witness ideal is not f*S");
    std::vector<elem_t> fim = f->image_elements();
    for (elem_t x = 0; x < msize; ++x)
      if (!sorted_has(fim, g->apply(x)))
        return fail("image of g is not inside the image of f");
    if (fs.count(*gid)) return fail("g lies in f*S after all");
    return pass();
  }

  if (p == "prime_module") {
    std::vector<elem_t> t = ids_from(w.at("ideal"));
    std::vector<elem_t> np = witness_submodule(w);
    if (!is_submodule_set(*m, np)) return fail("witness set is not a submodule");
    if (!is_fully_invariant_set(s, np))
      return fail("witness submodule is not fully invariant");
    if (np.size() == 1) return fail("witness submodule is zero");
    // T must be a two-sided ideal of S.
    for (elem_t a : t) {
      if (a >= s.count()) return fail("witness id out of range");
      for (elem_t b : t) {
        auto sum = s.add(a, b);
        if (!sum || !sorted_has(t, *sum)) return fail("ideal is not additively closed");
      }
      for (elem_t h = 0; h < s.count(); ++h) {
        auto lh = s.mul(h, a), rh = s.mul(a, h);
        if (!lh || !rh || !sorted_has(t, *lh) || !sorted_has(t, *rh))
          return fail("ideal is not closed under multiplication");
      }
    }
    for (elem_t a : t)
      for (elem_t x : np)
        if (s.homs[a].apply(x) != 0) return fail("T does not kill the submodule");
    bool moves = false;
    for (elem_t a : t)
      for (elem_t x = 0; x < msize && !moves; ++x) moves = s.homs[a].apply(x) != 0;
    if (!moves) return fail("T kills the whole module");
    return pass();
  }

  if (p == "semiprime_module") {
    // Recompute the prime submodules definitionally and intersect them.
    std::vector<std::vector<elem_t>> fi_sets;
    for (const Submodule& sub : all_submodules(m, caps))
      if (is_fully_invariant_set(s, sub.elements())) fi_sets.push_back(sub.elements());
    // Principal two-sided ideals of S suffice for the prime condition: any
    // ideal is a sum of principals and the defining implication descends.
    std::set<std::vector<elem_t>> principals;
    for (elem_t f = 0; f < s.count(); ++f) {
      auto ideal = principal_ideal_ids(s, f);
      if (!ideal) return fail("endomorphism arithmetic left the hom set");
      principals.insert(*ideal);
    }
    auto maps_inside = [&](const std::vector<elem_t>& t,
                           const std::vector<elem_t>& src,
                           const std::vector<elem_t>& dst) {
      for (elem_t a : t)
        for (elem_t x : src)
          if (!sorted_has(dst, s.homs[a].apply(x))) return false;
      return true;
    };
    std::vector<elem_t> all(msize);
    for (elem_t x = 0; x < msize; ++x) all[x] = x;
    std::vector<elem_t> inter = all;
    for (const auto& pset : fi_sets) {
      if (pset.size() == msize) continue;  // prime submodules are proper
      bool prime = true;
      for (const auto& t : principals) {
        if (maps_inside(t, all, pset)) continue;
        for (const auto& np : fi_sets) {
          if (std::includes(pset.begin(), pset.end(), np.begin(), np.end()))
            continue;
          if (maps_inside(t, np, pset)) {
            prime = false;
            break;
          }
        }
        if (!prime) break;
      }
      if (prime) {
        std::vector<elem_t> next;
        std::set_intersection(inter.begin(), inter.end(), pset.begin(), pset.end(),
                              std::back_inserter(next));
        inter = std::move(next);
      }
    }
    if (inter.size() <= 1) return fail("prime submodules intersect to zero after all");
    if (witness_submodule(w) != inter)
      return fail("witness intersection does not match the recomputed one");
    return pass();
  }

  return fail("no replay rule for module property " + p);
}

// ---------------------------------------------------------------------------
// Ring-side replay: raw table arithmetic only.

std::vector<elem_t> ring_right_ann(const FiniteRing& r, const std::vector<elem_t>& xs) {
  std::vector<elem_t> out;
  for (elem_t y = 0; y < r.order(); ++y) {
    bool kills = true;
    for (elem_t x : xs)
      if (r.mul(x, y) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(y);
  }
  return out;
}

std::vector<elem_t> ring_left_ann(const FiniteRing& r, const std::vector<elem_t>& xs) {
  std::vector<elem_t> out;
  for (elem_t y = 0; y < r.order(); ++y) {
    bool kills = true;
    for (elem_t x : xs)
      if (r.mul(y, x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(y);
  }
  return out;
}

std::vector<elem_t> ring_idempotents(const FiniteRing& r) {
  std::vector<elem_t> out;
  for (elem_t e = 0; e < r.order(); ++e)
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

std::vector<elem_t> right_multiples(const FiniteRing& r, elem_t e) {
  std::set<elem_t> er;
  for (elem_t x = 0; x < r.order(); ++x) er.insert(r.mul(e, x));
  return {er.begin(), er.end()};
}

bool is_two_sided_set(const FiniteRing& r, const std::vector<elem_t>& i) {
  if (i.empty() || i[0] != 0 || !std::is_sorted(i.begin(), i.end())) return false;
  for (elem_t a : i) {
    if (a >= r.order()) return false;
    for (elem_t b : i)
      if (!sorted_has(i, r.add(a, b))) return false;
    for (elem_t x = 0; x < r.order(); ++x)
      if (!sorted_has(i, r.mul(x, a)) || !sorted_has(i, r.mul(a, x))) return false;
  }
  return true;
}

// Two-sided ideal generated by a: fixpoint closure under +, left and right
// multiplication.
std::vector<elem_t> ring_principal_ideal(const FiniteRing& r, elem_t a) {
  std::set<elem_t> cur = {0, a};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<elem_t> snapshot(cur.begin(), cur.end());
    for (elem_t x : snapshot) {
      for (elem_t y : snapshot)
        if (cur.insert(r.add(x, y)).second) grew = true;
      for (elem_t z = 0; z < r.order(); ++z) {
        if (cur.insert(r.mul(z, x)).second) grew = true;
        if (cur.insert(r.mul(x, z)).second) grew = true;
      }
    }
  }
  return {cur.begin(), cur.end()};
}

bool ring_is_unit(const FiniteRing& r, elem_t a) {
  for (elem_t x = 0; x < r.order(); ++x)
    if (r.mul(a, x) == r.one() && r.mul(x, a) == r.one()) return true;
  return false;
}

ReplayResult check_no_idempotent_generator(const FiniteRing& r,
                                           const std::vector<elem_t>& ann,
                                           const ordered_json& w) {
  if (ids_from(w.at("candidates")) != ring_idempotents(r))
    return fail("witness candidate set is not the idempotent set");
  for (elem_t e : ring_idempotents(r))
    if (right_multiples(r, e) == ann)
      return fail("annihilator is generated by an idempotent after all");
  return pass();
}

ReplayResult replay_ring_failure(const RingPtr& rp, const Verdict& v) {
  const FiniteRing& r = *rp;
  const ordered_json& w = v.witness;
  const std::string& p = v.property;

  if ((p == "local" || p == "domain") && r.order() == 1)
    return pass();  // false for the zero ring by convention

  if (p == "baer") {
    std::vector<elem_t> xs = ids_from(w.at("other").at("annihilated_elements"));
    std::vector<elem_t> ann = ring_right_ann(r, xs);
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the right annihilator of the elements");
    return check_no_idempotent_generator(r, ann, w);
  }

  if (p == "quasi_baer") {
    std::vector<elem_t> i = ids_from(w.at("other").at("annihilated_ideal"));
    if (!is_two_sided_set(r, i)) return fail("witness set is not a two-sided ideal");
    std::vector<elem_t> ann = ring_right_ann(r, i);
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the right annihilator of the ideal");
    return check_no_idempotent_generator(r, ann, w);
  }

  if (p == "pq_baer") {
    elem_t a = w.at("element").get<elem_t>();
    std::vector<elem_t> princ = ring_principal_ideal(r, a);
    if (ids_from(w.at("other").at("principal_ideal")) != princ)
      return fail("witness principal ideal does not match the closure");
    std::vector<elem_t> ann = ring_right_ann(r, princ);
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the right annihilator of the ideal");
    return check_no_idempotent_generator(r, ann, w);
  }

  if (p == "rickart_pp") {
    elem_t a = w.at("element").get<elem_t>();
    std::vector<elem_t> ann = ring_right_ann(r, {a});
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the right annihilator of the element");
    return check_no_idempotent_generator(r, ann, w);
  }

  if (p == "aip" || p == "centrally_aip") {
    std::vector<elem_t> i = ids_from(w.at("ideal"));
    if (!is_two_sided_set(r, i)) return fail("witness set is not a two-sided ideal");
    std::vector<elem_t> ann = ring_left_ann(r, i);
    if (ids_from(w.at("other").at("left_annihilator")) != ann)
      return fail("witness annihilator does not match the recomputed one");
    elem_t a = w.at("element").get<elem_t>();
    if (!sorted_has(ann, a)) return fail("stuck element is not in the annihilator");
    std::vector<elem_t> cands;
    if (p == "centrally_aip") {
      for (elem_t z : ann)
        if (r.is_central(z)) cands.push_back(z);
    } else {
      cands = ann;
    }
    if (ids_from(w.at("candidates")) != cands)
      return fail("witness candidate set does not match the definition");
    for (elem_t x : cands)
      if (r.mul(a, x) == a) return fail("an s-unit exists after all");
    return pass();
  }

  if (p == "app") {
    elem_t a = w.at("element").get<elem_t>();
    std::vector<elem_t> ann = ring_left_ann(r, {a});
    if (ids_from(w.at("ideal")) != ann)
      return fail("witness ideal is not the left annihilator of the element");
    elem_t stuck = w.at("other").at("stuck_element").get<elem_t>();
    if (!sorted_has(ann, stuck)) return fail("stuck element is not in the annihilator");
    for (elem_t x : ann)
      if (r.mul(stuck, x) == stuck) return fail("an s-unit exists after all");
    return pass();
  }

  if (p == "abelian") {
    elem_t e = w.at("idempotent").get<elem_t>();
    elem_t x = w.at("element").get<elem_t>();
    if (r.mul(e, e) != e) return fail("witness element is not idempotent");
    if (r.mul(e, x) == r.mul(x, e)) return fail("witness pair commutes after all");
    return pass();
  }

  if (p == "reduced") {
    elem_t a = w.at("element").get<elem_t>();
    if (a == 0) return fail("witness element is zero");
    if (r.mul(a, a) != 0) return fail("witness element does not square to zero");
    return pass();
  }

  if (p == "semiprime" || p == "prime") {
    std::vector<elem_t> i = ids_from(w.at("ideal"));
    std::vector<elem_t> j =
        p == "prime" ? ids_from(w.at("other").at("ideal2")) : i;
    if (!is_two_sided_set(r, i) || !is_two_sided_set(r, j))
      return fail("witness set is not a two-sided ideal");
    if (i.size() == 1 || j.size() == 1) return fail("witness ideal is zero");
    for (elem_t x : i)
      for (elem_t y : j)
        if (r.mul(x, y) != 0) return fail("the ideal product is nonzero after all");
    return pass();
  }

  if (p == "local") {
    elem_t a = w.at("element").get<elem_t>();
    if (ring_is_unit(r, a)) return fail("witness element is a unit");
    const ordered_json& other = w.at("other");
    if (other.contains("second_element")) {
      elem_t b = other.at("second_element").get<elem_t>();
      if (ring_is_unit(r, b)) return fail("second element is a unit");
      if (!ring_is_unit(r, r.add(a, b))) return fail("the sum is not a unit");
    } else {
      elem_t g = other.at("multiplier").get<elem_t>();
      if (!ring_is_unit(r, r.mul(a, g)) && !ring_is_unit(r, r.mul(g, a)))
        return fail("no product with the multiplier is a unit");
    }
    return pass();
  }

  if (p == "domain") {
    elem_t a = w.at("element").get<elem_t>();
    elem_t b = w.at("other").at("second_element").get<elem_t>();
    if (a == 0 || b == 0) return fail("witness elements must be nonzero");
    if (r.mul(a, b) != 0) return fail("the witness product is nonzero after all");
    return pass();
  }

  return fail("no replay rule for ring property " + p);
}

}  // namespace

ReplayResult replay_module_verdict(const ModulePtr& m, const Verdict& v,
                                   const SizeCaps& caps) {
  if (!v.witness.contains("kind")) return fail("witness has no kind");
  const std::string kind = v.witness.at("kind").get<std::string>();
  if (v.holds != (kind == "certificate"))
    return fail("verdict flag does not match the witness kind");
  try {
    if (v.holds) {
      Verdict again = check_module_property(m, v.property, caps);
      if (!again.holds) return fail("recomputation contradicts the certificate");
      return pass();
    }
    return replay_module_failure(m, v, caps);
  } catch (const std::exception& e) {
    return fail(std::string("replay raised: ") + e.what());
  }
}

ReplayResult replay_ring_verdict(const RingPtr& r, const Verdict& v,
                                 const SizeCaps& caps) {
  if (!v.witness.contains("kind")) return fail("witness has no kind");
  const std::string kind = v.witness.at("kind").get<std::string>();
  if (v.holds != (kind == "certificate"))
    return fail("verdict flag does not match the witness kind");
  try {
    if (v.holds) {
      Verdict again = check_ring_property(r, v.property, caps);
      if (!again.holds) return fail("recomputation contradicts the certificate");
      return pass();
    }
    return replay_ring_failure(r, v);
  } catch (const std::exception& e) {
    return fail(std::string("replay raised: ") + e.what());
  }
}

ReplayResult replay_s_unital_verdict(const IdealHandle& i, const Verdict& v) {
  const FiniteRing& r = *i.ring();
  const bool left = v.property == "left_s_unital";
  const bool central = v.property == "centrally_s_unital";
  if (!left && !central && v.property != "right_s_unital")
    return fail("no replay rule for property " + v.property);
  auto serves = [&](elem_t a, elem_t x) {
    if (left) return r.mul(x, a) == a;
    if (central) return r.mul(a, x) == a && r.mul(x, a) == a && r.is_central(x);
    return r.mul(a, x) == a;
  };
  if (!v.holds) {
    elem_t a = v.witness.at("element").get<elem_t>();
    if (!i.contains(a)) return fail("stuck element is not in the ideal");
    for (elem_t x : i.elements()) {
      if (central && !r.is_central(x)) continue;
      if (serves(a, x)) return fail("an s-unit exists after all");
    }
    return pass();
  }
  // Certificate: every element of the ideal must be served; use the listed
  // units where present and rescan otherwise.
  for (elem_t a : i.elements()) {
    bool served = false;
    if (v.witness.contains("units")) {
      const auto& units = v.witness.at("units");
      auto it = units.find(std::to_string(a));
      if (it != units.end()) served = serves(a, it->get<elem_t>());
      if (it != units.end() && !served)
        return fail("a listed unit fails its equation");
    }
    for (elem_t x : i.elements()) {
      if (served) break;
      served = serves(a, x) && (!central || r.is_central(x));
    }
    if (!served) return fail("an ideal element has no s-unit");
  }
  return pass();
}

}  // namespace finalg
