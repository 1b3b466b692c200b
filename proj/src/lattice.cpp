#include "finalg/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "finalg/errors.hpp"

namespace finalg {

namespace {

elem_t ring_gen(const FiniteRing& r, std::size_t t) {
  std::vector<std::uint32_t> c(r.rank(), 0);
  c[t] = 1;
  return r.group().encode(c);
}

// Closure of a generating set under addition and the generator ring action.
std::vector<elem_t> span_elements(const FiniteModule& m, std::vector<elem_t> work) {
  if (work.size() == 1) {
    // xR is already a submodule (x r + x r' = x (r + r')), so the span is the
    // plain ring orbit — no additive closure pass needed.
    const std::uint64_t n = m.ring()->order();
    std::vector<bool> in(m.order(), false);
    std::vector<elem_t> members;
    for (std::uint64_t s = 0; s < n; ++s) {
      elem_t y = m.act(work[0], static_cast<elem_t>(s));
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }
  std::vector<bool> in(m.order(), false);
  std::vector<elem_t> members{0};
  in[0] = true;
  std::deque<elem_t> queue;
  for (elem_t x : work)
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      queue.push_back(x);
    }
  const FiniteRing& r = *m.ring();
  while (!queue.empty()) {
    elem_t x = queue.front();
    queue.pop_front();
    auto push = [&](elem_t y) {
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    };
    // additive closure against current members (incremental pair sums)
    for (std::size_t i = 0; i < members.size(); ++i) push(m.add(x, members[i]));
    for (std::size_t t = 0; t < r.rank(); ++t) push(m.act(x, ring_gen(r, t)));
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<elem_t> join_sets(const FiniteModule& m, const std::vector<elem_t>& a,
                              const std::vector<elem_t>& b) {
  std::vector<bool> in(m.order(), false);
  std::vector<elem_t> out;
  for (elem_t x : a)
    for (elem_t y : b) {
      elem_t s = m.add(x, y);
      if (!in[s]) {
        in[s] = true;
        out.push_back(s);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool size_then_lex(const std::vector<elem_t>& a, const std::vector<elem_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Join-closure of a family of seed element sets (each already a submodule).
std::vector<std::vector<elem_t>> close_under_join(const FiniteModule& m,
                                                  std::vector<std::vector<elem_t>> seeds,
                                                  std::uint64_t cap) {
  std::set<std::vector<elem_t>> found;
  found.insert({0});
  for (auto& s : seeds) found.insert(std::move(s));
  std::vector<std::vector<elem_t>> seed_list(found.begin(), found.end());
  std::deque<std::vector<elem_t>> work(found.begin(), found.end());
  while (!work.empty()) {
    auto n = std::move(work.front());
    work.pop_front();
    for (const auto& c : seed_list) {
      auto j = join_sets(m, n, c);
      if (found.insert(j).second) {
        if (found.size() > cap)
          throw SizeCapExceeded("submodule count exceeds cap of " + std::to_string(cap));
        work.push_back(std::move(j));
      }
    }
  }
  std::vector<std::vector<elem_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

}  // namespace

Submodule::Submodule(ModulePtr parent, std::vector<elem_t> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || elems_[0] != 0)
    throw std::invalid_argument("submodule must contain zero");
  if (!elems_.empty() && elems_.back() >= parent_->order())
    throw std::invalid_argument("submodule element outside the parent");
  auto inside = [&](elem_t x) {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  };
  const FiniteRing& r = *parent_->ring();
  for (elem_t x : elems_) {
    for (elem_t y : elems_)
      if (!inside(parent_->add(x, y)))
        throw std::invalid_argument("element set is not additively closed");
    for (std::size_t t = 0; t < r.rank(); ++t)
      if (!inside(parent_->act(x, ring_gen(r, t))))
        throw std::invalid_argument("element set is not closed under the ring action");
  }
}

bool Submodule::contains(elem_t x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool Submodule::contains_all(const Submodule& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                       other.elems_.end());
}

Submodule zero_submodule(const ModulePtr& m) { return Submodule(m, {0}); }

Submodule full_submodule(const ModulePtr& m) {
  std::vector<elem_t> all(m->order());
  for (std::uint64_t i = 0; i < m->order(); ++i) all[i] = static_cast<elem_t>(i);
  return Submodule(m, std::move(all));
}

Submodule cyclic_submodule(const ModulePtr& m, elem_t x) {
  return Submodule(m, span_elements(*m, {x}));
}

Submodule submodule_generated(const ModulePtr& m, const std::vector<elem_t>& gens) {
  return Submodule(m, span_elements(*m, gens));
}

Submodule join(const Submodule& a, const Submodule& b) {
  if (a.parent() != b.parent())
    throw std::invalid_argument("join of submodules of different parents");
  return Submodule(a.parent(), join_sets(*a.parent(), a.elements(), b.elements()));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.parent() != b.parent())
    throw std::invalid_argument("intersection of submodules of different parents");
  std::vector<elem_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Submodule(a.parent(), std::move(out));
}

Submodule kernel(const ModuleHom& f) {
  return Submodule(f.source(), f.kernel_elements());
}

Submodule image(const ModuleHom& f) {
  return Submodule(f.target(), f.image_elements());
}

std::vector<Submodule> all_submodules(const ModulePtr& m, const SizeCaps& caps) {
  std::set<std::vector<elem_t>> cyclics;
  for (std::uint64_t x = 0; x < m->order(); ++x)
    cyclics.insert(span_elements(*m, {static_cast<elem_t>(x)}));
  auto sets = close_under_join(
      *m, std::vector<std::vector<elem_t>>(cyclics.begin(), cyclics.end()),
      caps.module);
  std::vector<Submodule> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(m, std::move(s));
  return out;
}

std::vector<Submodule> minimal_submodules(const ModulePtr& m) {
  // One cyclic span per element, computed once; a span is minimal exactly
  // when every nonzero member generates something of the same size (hence the
  // same span).
  std::vector<std::uint32_t> span_size(m->order(), 0);
  std::set<std::vector<elem_t>> seen;
  std::vector<const std::vector<elem_t>*> distinct;
  for (std::uint64_t x = 1; x < m->order(); ++x) {
    auto span = span_elements(*m, {static_cast<elem_t>(x)});
    span_size[x] = static_cast<std::uint32_t>(span.size());
    auto [it, fresh] = seen.insert(std::move(span));
    if (fresh) distinct.push_back(&*it);
  }
  std::vector<std::vector<elem_t>> keep;
  for (const auto* span : distinct) {
    bool minimal = true;
    for (elem_t y : *span) {
      if (y == 0) continue;
      if (span_size[y] < span->size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(*span);
  }
  std::sort(keep.begin(), keep.end(), size_then_lex);
  std::vector<Submodule> out;
  out.reserve(keep.size());
  for (auto& s : keep) out.emplace_back(m, std::move(s));
  return out;
}

bool is_fully_invariant(const EndoRing& s, const Submodule& n) {
  if (n.parent() != s.module())
    throw std::invalid_argument("submodule does not belong to the endomorphism ring's module");
  const AbelianGroup& sg = s.ring()->group();
  for (std::size_t i = 0; i < sg.rank(); ++i) {
    std::vector<std::uint32_t> c(sg.rank(), 0);
    c[i] = 1;
    elem_t f = sg.encode(c);
    for (elem_t x : n.elements())
      if (!n.contains(s.apply(f, x))) return false;
  }
  return true;
}

std::vector<Submodule> fully_invariant_submodules(const EndoRing& s,
                                                  const SizeCaps& caps) {
  const ModulePtr& m = s.module();
  const AbelianGroup& sg = s.ring()->group();
  std::vector<elem_t> basis_homs;
  for (std::size_t i = 0; i < sg.rank(); ++i) {
    std::vector<std::uint32_t> c(sg.rank(), 0);
    c[i] = 1;
    basis_homs.push_back(sg.encode(c));
  }

  // Fully invariant closure of one element: close under addition, the ring
  // generators and the endomorphism basis until stable.
  auto fi_closure = [&](elem_t x0) {
    std::vector<bool> in(m->order(), false);
    std::vector<elem_t> members{0};
    in[0] = true;
    std::deque<elem_t> queue;
    if (!in[x0]) {
      in[x0] = true;
      members.push_back(x0);
      queue.push_back(x0);
    }
    const FiniteRing& r = *m->ring();
    while (!queue.empty()) {
      elem_t x = queue.front();
      queue.pop_front();
      auto push = [&](elem_t y) {
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
          queue.push_back(y);
        }
      };
      for (std::size_t i = 0; i < members.size(); ++i) push(m->add(x, members[i]));
      for (std::size_t t = 0; t < r.rank(); ++t) push(m->act(x, ring_gen(r, t)));
      for (elem_t f : basis_homs) push(s.apply(f, x));
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::set<std::vector<elem_t>> atoms;
  for (std::uint64_t x = 0; x < m->order(); ++x)
    atoms.insert(fi_closure(static_cast<elem_t>(x)));
  auto sets = close_under_join(
      *m, std::vector<std::vector<elem_t>>(atoms.begin(), atoms.end()), caps.module);
  std::vector<Submodule> out;
  out.reserve(sets.size());
  for (auto& e : sets) out.emplace_back(m, std::move(e));
  return out;
}

std::optional<Submodule> direct_complement(const Submodule& n, const SizeCaps& caps) {
  const ModulePtr& m = n.parent();
  for (const auto& k : all_submodules(m, caps)) {
    if (n.order() * k.order() != m->order()) continue;
    if (intersect(n, k).order() == 1) return k;
  }
  return std::nullopt;
}

bool is_essential(const Submodule& n) {
  // Every nonzero submodule contains a minimal one, and a minimal submodule
  // meets N nontrivially iff it lies inside N.
  for (const auto& a : minimal_submodules(n.parent()))
    if (!n.contains_all(a)) return false;
  return true;
}

std::uint32_t uniform_dimension(const ModulePtr& m) {
  // Greedy extension over minimal submodules: the running sum stays direct
  // because a minimal submodule meets it in 0 or in itself, and any maximal
  // independent family of minimal submodules realizes the uniform dimension.
  std::vector<elem_t> sum{0};
  std::uint32_t dim = 0;
  for (const auto& a : minimal_submodules(m)) {
    elem_t gen = a.elements()[1];
    if (std::binary_search(sum.begin(), sum.end(), gen)) continue;
    sum = join_sets(*m, sum, a.elements());
    ++dim;
  }
  return dim;
}

std::uint32_t ring_right_uniform_dimension(const RingPtr& r) {
  return uniform_dimension(regular_module(r));
}

}  // namespace finalg
