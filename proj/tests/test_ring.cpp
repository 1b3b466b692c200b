#include <set>

#include "doctest.h"
#include "finalg/errors.hpp"
#include "finalg/ring.hpp"

using namespace finalg;

namespace {

// Element of a matrix-style ring from row-major cell values, each given as a
// base-ring element index.
elem_t mat_elem(const FiniteRing& r, const FiniteRing& base,
                const std::vector<elem_t>& cells) {
  std::size_t rb = base.rank();
  std::vector<std::uint32_t> co(r.rank(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t t = 0; t < rb; ++t) co[c * rb + t] = base.group().coord(cells[c], t);
  return r.group().encode(co);
}

}  // namespace

TEST_CASE("cyclic rings") {
  auto z6 = cyclic_ring(6);
  CHECK(z6->order() == 6);
  CHECK(z6->mul(4, 5) == 2);
  CHECK(z6->one() == 1);
  CHECK(z6->is_commutative());
  z6->verify_axioms();

  // 3 * 3 = 9 = 3 mod 6: a nontrivial idempotent
  CHECK(z6->is_idempotent(3));
  CHECK(z6->is_central(3));

  auto z1 = cyclic_ring(1);
  CHECK(z1->order() == 1);
  CHECK(z1->one() == z1->zero());
  CHECK(z1->is_idempotent(0));

  CHECK_THROWS_AS(cyclic_ring(5000), SizeCapExceeded);
}

TEST_CASE("matrix ring over Z_2") {
  auto z2 = cyclic_ring(2);
  auto m = matrix_ring(z2, 2);
  CHECK(m->order() == 16);
  m->verify_axioms();

  // cells row-major: e11=(1,0,0,0), e12=(0,1,0,0), e21, e22
  elem_t e11 = mat_elem(*m, *z2, {1, 0, 0, 0});
  elem_t e12 = mat_elem(*m, *z2, {0, 1, 0, 0});
  elem_t e21 = mat_elem(*m, *z2, {0, 0, 1, 0});
  elem_t e22 = mat_elem(*m, *z2, {0, 0, 0, 1});
  CHECK(m->mul(e11, e12) == e12);
  CHECK(m->mul(e12, e21) == e11);
  CHECK(m->mul(e12, e12) == m->zero());
  CHECK(m->one() == m->add(e11, e22));

  CHECK(m->is_idempotent(e11));
  CHECK(!m->is_central(e11));
  CHECK(m->semicentral_class(e11) == Semicentral::no);

  // central elements of a full matrix ring over a field: scalars
  CHECK(m->central_elements() == std::vector<elem_t>{m->zero(), m->one()});
  CHECK(!m->is_commutative());
}

TEST_CASE("upper triangular ring over Z_2") {
  auto z2 = cyclic_ring(2);
  auto t = triangular_ring(z2, 2);
  CHECK(t->order() == 8);
  t->verify_axioms();

  // cells row-major upper triangle: (0,0), (0,1), (1,1)
  elem_t e11 = mat_elem(*t, *z2, {1, 0, 0});
  elem_t e12 = mat_elem(*t, *z2, {0, 1, 0});
  elem_t e22 = mat_elem(*t, *z2, {0, 0, 1});

  CHECK(t->mul(e11, e22) == t->zero());
  CHECK(t->mul(t->mul(e11, e12), e22) == e12);  // e11*e12*e22 = e12, nonzero
  CHECK(t->mul(e11, e12) == e12);
  CHECK(t->mul(e12, e22) == e12);
  CHECK(t->mul(e12, e11) == t->zero());

  CHECK(t->semicentral_class(e11) == Semicentral::left);
  CHECK(t->semicentral_class(e22) == Semicentral::right);
  CHECK(t->central_elements() == std::vector<elem_t>{t->zero(), t->one()});
}

TEST_CASE("direct product matches CRT on Z_2 x Z_3") {
  auto p = direct_product(cyclic_ring(2), cyclic_ring(3));
  auto z6 = cyclic_ring(6);
  CHECK(p->order() == 6);
  p->verify_axioms();

  // explicit CRT bijection (a mod 2, b mod 3) <-> x mod 6
  auto crt = [&](elem_t x) -> elem_t {
    return p->group().encode({static_cast<std::uint32_t>(x % 2),
                              static_cast<std::uint32_t>(x % 3)});
  };
  for (elem_t a = 0; a < 6; ++a) {
    CHECK(crt(z6->one()) == p->one());
    for (elem_t b = 0; b < 6; ++b) {
      CHECK(crt(z6->add(a, b)) == p->add(crt(a), crt(b)));
      CHECK(crt(z6->mul(a, b)) == p->mul(crt(a), crt(b)));
    }
  }
}

TEST_CASE("quotient rings") {
  SUBCASE("Z_4 by (2) has order 2") {
    auto z4 = cyclic_ring(4);
    auto q = quotient_ring(z4, {2});
    CHECK(q->order() == 2);
    q->verify_axioms();
    CHECK(q->mul(1, 1) == 1);  // behaves as Z_2
  }
  SUBCASE("quotient by the whole ring is the zero ring") {
    auto z4 = cyclic_ring(4);
    auto q = quotient_ring(z4, {1});
    CHECK(q->order() == 1);
  }
  SUBCASE("T_2(Z_2) by the strictly upper cell") {
    auto t = triangular_ring(cyclic_ring(2), 2);
    elem_t e12 = t->group().encode({0, 1, 0});
    auto q = quotient_ring(t, {e12});
    CHECK(q->order() == 4);
    q->verify_axioms();
    CHECK(q->is_commutative());
  }
  SUBCASE("generator outside the ring is rejected") {
    auto z4 = cyclic_ring(4);
    CHECK_THROWS_AS(quotient_ring(z4, {17}), RingMismatch);
  }
}

TEST_CASE("unit detection") {
  auto z6 = cyclic_ring(6);
  const auto& u = z6->unit_mask();
  std::set<elem_t> units;
  for (elem_t x = 0; x < 6; ++x)
    if (u[x]) units.insert(x);
  CHECK(units == std::set<elem_t>{1, 5});

  auto z1 = cyclic_ring(1);
  CHECK(z1->unit_mask()[0]);  // 0 = 1 is a unit in the zero ring
}
