#include "finalg/module.hpp"

#include <numeric>
#include <stdexcept>

#include "finalg/errors.hpp"
#include "finalg/intlat.hpp"

namespace finalg {

namespace {

constexpr std::uint64_t kActTableLimit = 1ull << 16;    // |M| * |R| entries
constexpr std::uint64_t kVerifyTripleLimit = 1ull << 20;  // |M| * |R|^2

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || a->same_presentation(*b);
}

elem_t ring_generator(const FiniteRing& r, std::size_t t) {
  std::vector<std::uint32_t> c(r.rank(), 0);
  c[t] = 1;
  return r.group().encode(c);
}

}  // namespace

FiniteModule::FiniteModule(AbelianGroup carrier, RingPtr ring,
                           std::vector<std::vector<elem_t>> action)
    : carrier_(std::move(carrier)), ring_(std::move(ring)) {
  std::size_t k = carrier_.rank(), rk = ring_->rank();
  if (action.size() != k) throw std::invalid_argument("action table has wrong shape");
  action_.resize(k * rk);
  for (std::size_t i = 0; i < k; ++i) {
    if (action[i].size() != rk)
      throw std::invalid_argument("action table has wrong shape");
    for (std::size_t t = 0; t < rk; ++t) action_[i * rk + t] = action[i][t];
  }
  // Well-definedness of the biadditive extension: each table entry must be
  // killed by both generator orders.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < rk; ++t) {
      elem_t v = action_[i * rk + t];
      if (carrier_.scale(carrier_.orders()[i], v) != 0 ||
          carrier_.scale(ring_->group().orders()[t], v) != 0)
        throw std::logic_error("module action table not biadditively extendable");
    }
  if (order() * ring_->order() * ring_->order() <= kVerifyTripleLimit) verify_axioms();
}

elem_t FiniteModule::act_biadditive(elem_t m, elem_t r) const {
  std::size_t k = carrier_.rank(), rk = ring_->rank();
  elem_t acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t mi = carrier_.coord(m, i);
    if (mi == 0) continue;
    for (std::size_t t = 0; t < rk; ++t) {
      std::uint32_t rt = ring_->group().coord(r, t);
      if (rt == 0) continue;
      acc = carrier_.add(
          acc, carrier_.scale(static_cast<std::uint64_t>(mi) * rt, action_[i * rk + t]));
    }
  }
  return acc;
}

void FiniteModule::ensure_table() const {
  std::call_once(table_once_, [this] {
    std::uint64_t nm = order(), nr = ring_->order();
    if (nm * nr > kActTableLimit) return;
    act_table_.resize(nm * nr);
    for (std::uint64_t m = 0; m < nm; ++m)
      for (std::uint64_t r = 0; r < nr; ++r)
        act_table_[m * nr + r] =
            act_biadditive(static_cast<elem_t>(m), static_cast<elem_t>(r));
    table_built_ = true;
  });
}

elem_t FiniteModule::act(elem_t m, elem_t r) const {
  ensure_table();
  if (table_built_) return act_table_[static_cast<std::uint64_t>(m) * ring_->order() + r];
  return act_biadditive(m, r);
}

void FiniteModule::verify_axioms() const {
  for (std::uint64_t m = 0; m < order(); ++m) {
    elem_t em = static_cast<elem_t>(m);
    if (act(em, ring_->one()) != em) throw std::logic_error("module unit law failed");
    for (std::uint64_t r = 0; r < ring_->order(); ++r) {
      elem_t er = static_cast<elem_t>(r);
      for (std::uint64_t s = 0; s < ring_->order(); ++s) {
        elem_t es = static_cast<elem_t>(s);
        if (act(act(em, er), es) != act(em, ring_->mul(er, es)))
          throw std::logic_error("module associativity failed");
        if (act(em, ring_->add(er, es)) != carrier_.add(act(em, er), act(em, es)))
          throw std::logic_error("module additivity in scalars failed");
      }
    }
  }
}

ModulePtr regular_module(const RingPtr& r) {
  std::size_t k = r->rank();
  std::vector<std::vector<elem_t>> action(k, std::vector<elem_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < k; ++t)
      action[i][t] = r->mul(ring_generator(*r, i), ring_generator(*r, t));
  return std::make_shared<FiniteModule>(r->group(), r, std::move(action));
}

ModulePtr z_module(const std::vector<std::uint32_t>& orders, const SizeCaps& caps) {
  std::vector<std::uint32_t> kept;
  std::uint64_t e = 1, size = 1;
  for (auto d : orders) {
    if (d == 0) throw std::invalid_argument("z_module factor must be >= 1");
    if (d == 1) continue;
    kept.push_back(d);
    e = std::lcm<std::uint64_t>(e, d);
    size *= d;
    if (size > caps.module)
      throw SizeCapExceeded("module order exceeds cap of " + std::to_string(caps.module));
  }
  RingPtr ring = cyclic_ring(static_cast<std::uint32_t>(e), caps);
  AbelianGroup carrier(kept);
  std::size_t k = carrier.rank(), rk = ring->rank();
  std::vector<std::vector<elem_t>> action(k, std::vector<elem_t>(rk));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> c(k, 0);
    c[i] = 1;
    for (std::size_t t = 0; t < rk; ++t) action[i][t] = carrier.encode(c);
  }
  return std::make_shared<FiniteModule>(carrier, ring, std::move(action));
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b, const SizeCaps& caps) {
  if (!same_ring(a->ring(), b->ring()))
    throw RingMismatch("direct sum of modules over different rings");
  if (a->order() * b->order() > caps.module)
    throw SizeCapExceeded("module order exceeds cap of " + std::to_string(caps.module));
  const auto& ga = a->group();
  const auto& gb = b->group();
  std::vector<std::uint32_t> orders = ga.orders();
  orders.insert(orders.end(), gb.orders().begin(), gb.orders().end());
  AbelianGroup carrier(orders);
  std::size_t ka = ga.rank(), k = carrier.rank(), rk = a->ring()->rank();

  auto embed = [&](std::size_t offset, const AbelianGroup& src, elem_t x) {
    std::vector<std::uint32_t> co(k, 0);
    for (std::size_t t = 0; t < src.rank(); ++t) co[offset + t] = src.coord(x, t);
    return carrier.encode(co);
  };

  std::vector<std::vector<elem_t>> action(k, std::vector<elem_t>(rk));
  for (std::size_t i = 0; i < k; ++i) {
    bool in_a = i < ka;
    const ModulePtr& src = in_a ? a : b;
    std::size_t local = in_a ? i : i - ka;
    std::vector<std::uint32_t> c(src->group().rank(), 0);
    c[local] = 1;
    elem_t gen = src->group().encode(c);
    for (std::size_t t = 0; t < rk; ++t)
      action[i][t] = embed(in_a ? 0 : ka, src->group(),
                           src->act(gen, ring_generator(*a->ring(), t)));
  }
  return std::make_shared<FiniteModule>(carrier, a->ring(), std::move(action));
}

ModulePtr free_module(const RingPtr& r, std::uint32_t n, const SizeCaps& caps) {
  if (n == 0) throw std::invalid_argument("free module rank must be >= 1");
  ModulePtr m = regular_module(r);
  ModulePtr acc = m;
  for (std::uint32_t i = 1; i < n; ++i) acc = direct_sum(acc, m, caps);
  return acc;
}

ExtractedModule extract_submodule(const ModulePtr& parent,
                                  const std::vector<elem_t>& elements) {
  const auto& g = parent->group();
  std::vector<std::vector<std::uint32_t>> gens;
  for (elem_t x : elements) gens.push_back(g.coords(x));
  SubgroupBasis basis(g.orders(), gens);

  AbelianGroup carrier(basis.orders());
  std::size_t k = carrier.rank(), rk = parent->ring()->rank();
  std::vector<elem_t> gen_images(k);
  for (std::size_t i = 0; i < k; ++i) gen_images[i] = g.encode(basis.basis()[i]);

  std::vector<std::vector<elem_t>> action(k, std::vector<elem_t>(rk));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < rk; ++t) {
      elem_t img = parent->act(gen_images[i], ring_generator(*parent->ring(), t));
      auto c = basis.coords(g.coords(img));
      if (!c) throw std::logic_error("element set is not closed under the ring action");
      action[i][t] = carrier.encode(*c);
    }

  ExtractedModule out;
  out.module =
      std::make_shared<FiniteModule>(carrier, parent->ring(), std::move(action));
  out.generator_images = std::move(gen_images);
  out.element_images.resize(carrier.order());
  for (std::uint64_t idx = 0; idx < carrier.order(); ++idx)
    out.element_images[idx] = g.encode(basis.element_at(idx));
  return out;
}

}  // namespace finalg
