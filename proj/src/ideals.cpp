#include "finalg/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "finalg/errors.hpp"

namespace finalg {

namespace {

bool sorted_contains(const std::vector<elem_t>& v, elem_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool size_then_lex(const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// The one-sided ideal generated by a set is the additive span of the
// generator conjugates: Ra = span{g_t a}, aR = span{a g_t} and
// RaR = span{g_t a g_u} over the additive generators g_t of R, because every
// ring element is an additive combination of the g_t and multiplication is
// biadditive.  Each span is multiplication-closed by construction, so the
// closure reduces to a breadth-first additive span.
std::vector<elem_t> close_ideal(const FiniteRing& r, const std::vector<elem_t>& gens,
                                Sidedness side, const SizeCaps& caps) {
  const std::size_t rk = r.rank();
  std::vector<elem_t> add_gens(rk);
  for (std::size_t t = 0; t < rk; ++t) {
    std::vector<std::uint32_t> c(rk, 0);
    c[t] = 1;
    add_gens[t] = r.group().encode(c);
  }
  std::vector<elem_t> seeds;
  for (elem_t a : gens) {
    if (a >= r.order()) throw NotAnIdeal("ideal generator out of range");
    switch (side) {
      case Sidedness::left:
        for (elem_t g : add_gens) seeds.push_back(r.mul(g, a));
        break;
      case Sidedness::right:
        for (elem_t g : add_gens) seeds.push_back(r.mul(a, g));
        break;
      case Sidedness::two_sided:
        for (elem_t g : add_gens)
          for (elem_t h : add_gens) seeds.push_back(r.mul(r.mul(g, a), h));
        break;
    }
  }
  std::set<elem_t> found{0};
  std::deque<elem_t> work{0};
  while (!work.empty()) {
    elem_t x = work.front();
    work.pop_front();
    for (elem_t s : seeds) {
      elem_t y = r.add(x, s);
      if (found.insert(y).second) {
        if (found.size() > caps.ring)
          throw SizeCapExceeded("ideal closure exceeds cap of " + std::to_string(caps.ring));
        work.push_back(y);
      }
    }
  }
  return std::vector<elem_t>(found.begin(), found.end());
}

nlohmann::ordered_json elems_json(const std::vector<elem_t>& v) {
  return nlohmann::ordered_json(v);
}

enum class UnitMode { right, left, central };

Verdict s_unital_check(const IdealHandle& i, UnitMode mode, const std::string& name) {
  const FiniteRing& r = *i.ring();
  std::vector<elem_t> candidates;
  if (mode == UnitMode::central) {
    for (elem_t z : r.central_elements())
      if (i.contains(z)) candidates.push_back(z);
  } else {
    candidates = i.elements();
  }
  nlohmann::ordered_json units = nlohmann::ordered_json::object();
  for (elem_t a : i.elements()) {
    bool served = false;
    for (elem_t x : candidates) {
      bool ok = (mode == UnitMode::left) ? r.mul(x, a) == a : r.mul(a, x) == a;
      if (ok && mode == UnitMode::central && r.mul(x, a) != a)
        throw std::logic_error("central unit fails the mirrored equation");
      if (ok) {
        units[std::to_string(a)] = x;
        served = true;
        break;
      }
    }
    if (!served) {
      nlohmann::ordered_json d;
      d["element"] = a;
      d["ideal"] = elems_json(i.elements());
      d["candidates"] = elems_json(candidates);
      return make_failure(name, std::move(d));
    }
  }
  nlohmann::ordered_json d;
  if (i.order() <= 64) {
    d["units"] = std::move(units);
  } else {
    d["other"] = {{"units_elided", i.order()}};
  }
  return make_certificate(name, std::move(d));
}

}  // namespace

std::string to_string(Sidedness s) {
  switch (s) {
    case Sidedness::left: return "left";
    case Sidedness::right: return "right";
    default: return "two_sided";
  }
}

IdealHandle::IdealHandle(RingPtr ring, std::vector<elem_t> elements, Sidedness side)
    : ring_(std::move(ring)), elems_(std::move(elements)), side_(side) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || elems_[0] != 0)
    throw NotAnIdeal("ideal must contain zero");
  if (elems_.back() >= ring_->order())
    throw NotAnIdeal("ideal element out of range");
  for (elem_t a : elems_)
    for (elem_t b : elems_)
      if (!sorted_contains(elems_, ring_->add(a, b)))
        throw NotAnIdeal("element set is not additively closed");
  const std::size_t rk = ring_->rank();
  for (std::size_t t = 0; t < rk; ++t) {
    std::vector<std::uint32_t> c(rk, 0);
    c[t] = 1;
    elem_t g = ring_->group().encode(c);
    for (elem_t a : elems_) {
      if (side_ != Sidedness::right && !sorted_contains(elems_, ring_->mul(g, a)))
        throw NotAnIdeal("element set is not closed under left multiplication");
      if (side_ != Sidedness::left && !sorted_contains(elems_, ring_->mul(a, g)))
        throw NotAnIdeal("element set is not closed under right multiplication");
    }
  }
}

bool IdealHandle::contains(elem_t x) const { return sorted_contains(elems_, x); }

IdealHandle zero_ideal(const RingPtr& r) {
  return IdealHandle(r, {0}, Sidedness::two_sided);
}

IdealHandle full_ideal(const RingPtr& r) {
  std::vector<elem_t> all(r->order());
  for (elem_t x = 0; x < r->order(); ++x) all[x] = x;
  return IdealHandle(r, std::move(all), Sidedness::two_sided);
}

IdealHandle ideal_generated(const RingPtr& r, const std::vector<elem_t>& gens,
                            Sidedness side, const SizeCaps& caps) {
  return IdealHandle(r, close_ideal(*r, gens, side, caps), side);
}

std::vector<elem_t> ideal_closure(const RingPtr& r, const std::vector<elem_t>& gens,
                                  Sidedness side, const SizeCaps& caps) {
  return close_ideal(*r, gens, side, caps);
}

std::vector<IdealHandle> principal_two_sided_ideals(const RingPtr& r, const SizeCaps& caps) {
  std::set<std::vector<elem_t>> seen;
  for (elem_t a = 0; a < r->order(); ++a)
    seen.insert(close_ideal(*r, {a}, Sidedness::two_sided, caps));
  std::vector<IdealHandle> out;
  out.reserve(seen.size());
  std::vector<std::vector<elem_t>> sets(seen.begin(), seen.end());
  std::sort(sets.begin(), sets.end(), size_then_lex);
  for (auto& s : sets) out.emplace_back(r, std::move(s), Sidedness::two_sided);
  return out;
}

std::vector<IdealHandle> all_two_sided_ideals(const RingPtr& r, const SizeCaps& caps) {
  std::vector<IdealHandle> seeds = principal_two_sided_ideals(r, caps);
  // The sum of two two-sided ideals is the set of pairwise sums, already a
  // two-sided ideal, so the join-closure needs no further generation step.
  std::set<std::vector<elem_t>> found;
  std::deque<std::vector<elem_t>> work;
  for (const auto& s : seeds)
    if (found.insert(s.elements()).second) work.push_back(s.elements());
  while (!work.empty()) {
    std::vector<elem_t> cur = std::move(work.front());
    work.pop_front();
    for (const auto& s : seeds) {
      std::set<elem_t> sum;
      for (elem_t a : cur)
        for (elem_t b : s.elements()) sum.insert(r->add(a, b));
      std::vector<elem_t> j(sum.begin(), sum.end());
      if (found.insert(j).second) {
        if (found.size() > caps.ring)
          throw SizeCapExceeded("ideal count exceeds cap of " + std::to_string(caps.ring));
        work.push_back(std::move(j));
      }
    }
  }
  std::vector<std::vector<elem_t>> sets(found.begin(), found.end());
  std::sort(sets.begin(), sets.end(), size_then_lex);
  std::vector<IdealHandle> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(r, std::move(s), Sidedness::two_sided);
  return out;
}

namespace {

IdealHandle annihilator(const RingPtr& r, const std::vector<elem_t>& xs, bool left) {
  std::vector<elem_t> out;
  for (elem_t a = 0; a < r->order(); ++a) {
    bool kills = true;
    for (elem_t x : xs) {
      elem_t p = left ? r->mul(a, x) : r->mul(x, a);
      if (p != 0) {
        kills = false;
        break;
      }
    }
    if (kills) out.push_back(a);
  }
  // A left annihilator is a left ideal; it is two-sided exactly when it is
  // also closed on the other side, which the generator scan below detects.
  const std::size_t rk = r->rank();
  bool other_side_closed = true;
  for (std::size_t t = 0; t < rk && other_side_closed; ++t) {
    std::vector<std::uint32_t> c(rk, 0);
    c[t] = 1;
    elem_t g = r->group().encode(c);
    for (elem_t a : out) {
      elem_t p = left ? r->mul(a, g) : r->mul(g, a);
      if (!sorted_contains(out, p)) {
        other_side_closed = false;
        break;
      }
    }
  }
  Sidedness side = other_side_closed ? Sidedness::two_sided
                                     : (left ? Sidedness::left : Sidedness::right);
  return IdealHandle(r, std::move(out), side);
}

}  // namespace

IdealHandle left_annihilator_in_ring(const RingPtr& r, const std::vector<elem_t>& xs) {
  return annihilator(r, xs, true);
}

IdealHandle right_annihilator_in_ring(const RingPtr& r, const std::vector<elem_t>& xs) {
  return annihilator(r, xs, false);
}

Verdict is_right_s_unital(const IdealHandle& i) {
  return s_unital_check(i, UnitMode::right, "right_s_unital");
}

Verdict is_left_s_unital(const IdealHandle& i) {
  return s_unital_check(i, UnitMode::left, "left_s_unital");
}

Verdict is_centrally_s_unital(const IdealHandle& i) {
  return s_unital_check(i, UnitMode::central, "centrally_s_unital");
}

}  // namespace finalg
