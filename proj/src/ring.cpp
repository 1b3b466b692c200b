#include "finalg/ring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "finalg/errors.hpp"
#include "finalg/intlat.hpp"

namespace finalg {

namespace {

constexpr std::uint64_t kMulTableLimit = 1ull << 21;  // entries

std::uint64_t checked_order(const std::vector<std::uint32_t>& orders,
                            std::uint64_t cap, const char* what) {
  std::uint64_t n = 1;
  for (auto d : orders) {
    n *= d;
    if (n > cap)
      throw SizeCapExceeded(std::string(what) + " order exceeds cap of " +
                            std::to_string(cap));
  }
  return n;
}

}  // namespace

FiniteRing::FiniteRing(AbelianGroup add, std::vector<std::vector<elem_t>> products,
                       elem_t one)
    : add_(std::move(add)), one_(one) {
  std::size_t k = add_.rank();
  if (products.size() != k)
    throw std::invalid_argument("structure constant table has wrong shape");
  sc_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (products[i].size() != k)
      throw std::invalid_argument("structure constant table has wrong shape");
    for (std::size_t j = 0; j < k; ++j) sc_[i * k + j] = products[i][j];
  }
  if (order() <= 16) verify_axioms();
}

elem_t FiniteRing::mul_bilinear(elem_t a, elem_t b) const {
  std::size_t k = add_.rank();
  elem_t acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t ai = add_.coord(a, i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint32_t bj = add_.coord(b, j);
      if (bj == 0) continue;
      acc = add_.add(acc, add_.scale(static_cast<std::uint64_t>(ai) * bj, sc_[i * k + j]));
    }
  }
  return acc;
}

void FiniteRing::ensure_tables() const {
  std::call_once(table_once_, [this] {
    std::uint64_t n = order();
    if (n * n > kMulTableLimit) return;
    mul_table_.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        mul_table_[a * n + b] =
            mul_bilinear(static_cast<elem_t>(a), static_cast<elem_t>(b));
    table_built_ = true;
  });
}

elem_t FiniteRing::mul(elem_t a, elem_t b) const {
  ensure_tables();
  if (table_built_) return mul_table_[static_cast<std::uint64_t>(a) * order() + b];
  return mul_bilinear(a, b);
}

bool FiniteRing::is_central(elem_t z) const {
  for (std::uint64_t x = 0; x < order(); ++x) {
    elem_t e = static_cast<elem_t>(x);
    if (mul(z, e) != mul(e, z)) return false;
  }
  return true;
}

Semicentral FiniteRing::semicentral_class(elem_t e) const {
  bool left = true, right = true;
  for (std::uint64_t xi = 0; xi < order() && (left || right); ++xi) {
    elem_t x = static_cast<elem_t>(xi);
    elem_t exe = mul(e, mul(x, e));
    if (exe != mul(x, e)) left = false;
    if (exe != mul(e, x)) right = false;
  }
  if (left && right) return Semicentral::central;
  if (left) return Semicentral::left;
  if (right) return Semicentral::right;
  return Semicentral::no;
}

bool FiniteRing::is_commutative() const {
  std::size_t k = add_.rank();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (sc_[i * k + j] != sc_[j * k + i]) return false;
  return true;
}

const std::vector<elem_t>& FiniteRing::central_elements() const {
  std::call_once(central_once_, [this] {
    for (std::uint64_t x = 0; x < order(); ++x)
      if (is_central(static_cast<elem_t>(x))) central_.push_back(static_cast<elem_t>(x));
  });
  return central_;
}

const std::vector<elem_t>& FiniteRing::idempotents() const {
  std::call_once(idem_once_, [this] {
    for (std::uint64_t x = 0; x < order(); ++x)
      if (is_idempotent(static_cast<elem_t>(x)))
        idempotents_.push_back(static_cast<elem_t>(x));
  });
  return idempotents_;
}

const std::vector<bool>& FiniteRing::unit_mask() const {
  std::call_once(unit_once_, [this] {
    units_.assign(order(), false);
    for (std::uint64_t x = 0; x < order(); ++x) {
      for (std::uint64_t y = 0; y < order(); ++y) {
        // In a finite ring a one-sided inverse is two-sided.
        if (mul(static_cast<elem_t>(x), static_cast<elem_t>(y)) == one_) {
          units_[x] = true;
          break;
        }
      }
    }
  });
  return units_;
}

void FiniteRing::verify_axioms() const {
  std::uint64_t n = order();
  for (std::uint64_t a = 0; a < n; ++a) {
    elem_t ea = static_cast<elem_t>(a);
    if (mul(one_, ea) != ea || mul(ea, one_) != ea)
      throw std::logic_error("ring unit law failed");
    for (std::uint64_t b = 0; b < n; ++b) {
      elem_t eb = static_cast<elem_t>(b);
      for (std::uint64_t c = 0; c < n; ++c) {
        elem_t ec = static_cast<elem_t>(c);
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec)))
          throw std::logic_error("ring associativity failed");
        if (mul(add(ea, eb), ec) != add(mul(ea, ec), mul(eb, ec)))
          throw std::logic_error("ring right distributivity failed");
        if (mul(ec, add(ea, eb)) != add(mul(ec, ea), mul(ec, eb)))
          throw std::logic_error("ring left distributivity failed");
      }
    }
  }
}

RingPtr cyclic_ring(std::uint32_t n, const SizeCaps& caps) {
  if (n == 0) throw std::invalid_argument("cyclic ring needs n >= 1");
  if (n > caps.ring)
    throw SizeCapExceeded("ring order exceeds cap of " + std::to_string(caps.ring));
  if (n == 1)
    return std::make_shared<FiniteRing>(AbelianGroup{}, std::vector<std::vector<elem_t>>{},
                                        0);
  AbelianGroup g({n});
  return std::make_shared<FiniteRing>(g, std::vector<std::vector<elem_t>>{{1}}, 1);
}

namespace {

// Shared builder for full and upper-triangular matrix rings.  Cells are laid
// out row-major; each cell carries one copy of the base generators.
RingPtr build_matrix_like(const RingPtr& base, std::uint32_t k, bool upper_only,
                          const SizeCaps& caps, const char* what) {
  if (k == 0) throw std::invalid_argument("matrix size must be >= 1");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = upper_only ? i : 0; j < k; ++j)
      if (!upper_only || j >= i) cells.emplace_back(i, j);

  const auto& bg = base->group();
  std::size_t rb = bg.rank();
  std::vector<std::uint32_t> orders;
  for (std::size_t c = 0; c < cells.size(); ++c)
    orders.insert(orders.end(), bg.orders().begin(), bg.orders().end());
  checked_order(orders, caps.ring, what);
  AbelianGroup g(orders);

  auto cell_index = [&](std::uint32_t i, std::uint32_t j) -> std::size_t {
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c] == std::make_pair(i, j)) return c;
    return cells.size();
  };
  auto embed = [&](std::size_t cell, elem_t base_elem) -> elem_t {
    std::vector<std::uint32_t> co(g.rank(), 0);
    for (std::size_t t = 0; t < rb; ++t) co[cell * rb + t] = bg.coord(base_elem, t);
    return g.encode(co);
  };

  std::size_t rank = g.rank();
  std::vector<std::vector<elem_t>> sc(rank, std::vector<elem_t>(rank, 0));
  for (std::size_t ca = 0; ca < cells.size(); ++ca)
    for (std::size_t ta = 0; ta < rb; ++ta)
      for (std::size_t cb = 0; cb < cells.size(); ++cb)
        for (std::size_t tb = 0; tb < rb; ++tb) {
          if (cells[ca].second != cells[cb].first) continue;
          std::size_t target = cell_index(cells[ca].first, cells[cb].second);
          if (target == cells.size()) continue;  // cannot happen for these shapes
          elem_t prod = base->mul(bg.encode([&] {
                                    std::vector<std::uint32_t> c(rb, 0);
                                    c[ta] = 1;
                                    return c;
                                  }()),
                                  bg.encode([&] {
                                    std::vector<std::uint32_t> c(rb, 0);
                                    c[tb] = 1;
                                    return c;
                                  }()));
          sc[ca * rb + ta][cb * rb + tb] = embed(target, prod);
        }

  elem_t one = 0;
  for (std::uint32_t i = 0; i < k; ++i)
    one = g.add(one, embed(cell_index(i, i), base->one()));
  return std::make_shared<FiniteRing>(g, std::move(sc), one);
}

}  // namespace

RingPtr matrix_ring(const RingPtr& base, std::uint32_t k, const SizeCaps& caps) {
  return build_matrix_like(base, k, false, caps, "matrix ring");
}

RingPtr triangular_ring(const RingPtr& base, std::uint32_t k, const SizeCaps& caps) {
  return build_matrix_like(base, k, true, caps, "triangular ring");
}

RingPtr direct_product(const RingPtr& a, const RingPtr& b, const SizeCaps& caps) {
  const auto& ga = a->group();
  const auto& gb = b->group();
  std::vector<std::uint32_t> orders = ga.orders();
  orders.insert(orders.end(), gb.orders().begin(), gb.orders().end());
  checked_order(orders, caps.ring, "product ring");
  AbelianGroup g(orders);
  std::size_t ra = ga.rank(), rank = g.rank();

  auto embed_a = [&](elem_t x) {
    std::vector<std::uint32_t> co(rank, 0);
    for (std::size_t t = 0; t < ra; ++t) co[t] = ga.coord(x, t);
    return g.encode(co);
  };
  auto embed_b = [&](elem_t x) {
    std::vector<std::uint32_t> co(rank, 0);
    for (std::size_t t = 0; t < gb.rank(); ++t) co[ra + t] = gb.coord(x, t);
    return g.encode(co);
  };
  auto unit_vec = [](std::size_t rk, std::size_t at) {
    std::vector<std::uint32_t> c(rk, 0);
    c[at] = 1;
    return c;
  };

  std::vector<std::vector<elem_t>> sc(rank, std::vector<elem_t>(rank, 0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      sc[i][j] = embed_a(a->mul(ga.encode(unit_vec(ra, i)), ga.encode(unit_vec(ra, j))));
  for (std::size_t i = 0; i < gb.rank(); ++i)
    for (std::size_t j = 0; j < gb.rank(); ++j)
      sc[ra + i][ra + j] = embed_b(
          b->mul(gb.encode(unit_vec(gb.rank(), i)), gb.encode(unit_vec(gb.rank(), j))));

  elem_t one = g.add(embed_a(a->one()), embed_b(b->one()));
  return std::make_shared<FiniteRing>(g, std::move(sc), one);
}

RingPtr quotient_ring(const RingPtr& base, const std::vector<elem_t>& ideal_gens,
                      const SizeCaps& caps) {
  const auto& bg = base->group();
  for (elem_t x : ideal_gens)
    if (x >= bg.order()) throw RingMismatch("ideal generator outside the base ring");

  // Close the generators into a two-sided ideal: multiples by additive
  // generators together with additive closure span r*x*s by bilinearity.
  std::set<elem_t> ideal = {base->zero()};
  std::vector<elem_t> work;
  auto push = [&](elem_t x) {
    if (ideal.insert(x).second) work.push_back(x);
  };
  for (elem_t x : ideal_gens) push(x);
  while (!work.empty()) {
    elem_t x = work.back();
    work.pop_back();
    for (elem_t y : std::vector<elem_t>(ideal.begin(), ideal.end())) push(bg.add(x, y));
    for (std::size_t t = 0; t < bg.rank(); ++t) {
      std::vector<std::uint32_t> c(bg.rank(), 0);
      c[t] = 1;
      elem_t gen = bg.encode(c);
      push(base->mul(gen, x));
      push(base->mul(x, gen));
    }
  }

  std::vector<std::vector<std::uint32_t>> gen_coords;
  for (elem_t x : ideal) gen_coords.push_back(bg.coords(x));
  QuotientStructure q(bg.orders(), gen_coords);

  AbelianGroup g(q.orders());
  std::size_t rank = g.rank();
  std::vector<std::vector<elem_t>> sc(rank, std::vector<elem_t>(rank, 0));
  std::vector<elem_t> lifts(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<std::uint32_t> c(rank, 0);
    c[i] = 1;
    lifts[i] = bg.encode(q.lift(c));
  }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      sc[i][j] = g.encode(q.project(bg.coords(base->mul(lifts[i], lifts[j]))));
  elem_t one = g.encode(q.project(bg.coords(base->one())));
  return std::make_shared<FiniteRing>(g, std::move(sc), one);
}

std::string format_element(const FiniteRing& r, elem_t a) {
  std::string s = "(";
  auto c = r.group().coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace finalg
