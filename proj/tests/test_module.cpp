#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "finalg/errors.hpp"
#include "finalg/module.hpp"

using namespace finalg;

TEST_CASE("regular module mirrors ring multiplication") {
  auto r = cyclic_ring(6);
  auto m = regular_module(r);
  CHECK(m->order() == 6);
  CHECK(m->ring() == r);
  for (elem_t a = 0; a < 6; ++a)
    for (elem_t b = 0; b < 6; ++b) CHECK(m->act(a, b) == r->mul(a, b));

  auto t2 = triangular_ring(cyclic_ring(2), 2);
  auto mt = regular_module(t2);
  CHECK(mt->order() == 8);
  for (elem_t a = 0; a < 8; ++a)
    for (elem_t b = 0; b < 8; ++b) CHECK(mt->act(a, b) == t2->mul(a, b));
  mt->verify_axioms();
}

TEST_CASE("z-modules act through the exponent ring") {
  auto m = z_module({2, 4});
  CHECK(m->order() == 8);
  CHECK(m->ring()->order() == 4);  // lcm(2, 4)
  CHECK(m->group().orders() == std::vector<std::uint32_t>{2, 4});

  // act(x, n) is n-fold addition of x
  for (elem_t x = 0; x < 8; ++x)
    for (elem_t n = 0; n < 4; ++n) CHECK(m->act(x, n) == m->group().scale(n, x));

  auto big = z_module({4, 6});
  CHECK(big->ring()->order() == 12);
  CHECK(big->order() == 24);
  big->verify_axioms();

  // Order-1 factors vanish
  auto same = z_module({1, 3, 1});
  CHECK(same->order() == 3);
  CHECK(same->ring()->order() == 3);

  auto zero = z_module({});
  CHECK(zero->order() == 1);
  CHECK(zero->ring()->order() == 1);
  CHECK(zero->act(0, 0) == 0);

  CHECK_THROWS_AS(z_module({100, 100}, SizeCaps{4096, 4096, 4096}), SizeCapExceeded);
}

TEST_CASE("direct sum acts componentwise") {
  auto r = cyclic_ring(4);
  auto a = regular_module(r);
  auto b = z_module({2});  // over Z_2, a different ring
  CHECK_THROWS_AS(direct_sum(a, b), RingMismatch);

  auto c = z_module({2, 4});  // over Z_4: same presentation as r, distinct object
  auto s = direct_sum(a, c);
  CHECK(s->order() == 32);
  CHECK(s->group().orders() == std::vector<std::uint32_t>{4, 2, 4});
  const auto& g = s->group();
  const auto& ga = a->group();
  const auto& gc = c->group();
  for (elem_t x = 0; x < 32; ++x)
    for (elem_t n = 0; n < 4; ++n) {
      elem_t y = s->act(x, n);
      elem_t xa = ga.encode({g.coord(x, 0)});
      elem_t xc = gc.encode({g.coord(x, 1), g.coord(x, 2)});
      CHECK(g.coord(y, 0) == ga.coord(a->act(xa, n), 0));
      elem_t yc = c->act(xc, n);
      CHECK(g.coord(y, 1) == gc.coord(yc, 0));
      CHECK(g.coord(y, 2) == gc.coord(yc, 1));
    }
}

TEST_CASE("free modules are sums of regular copies") {
  auto r = cyclic_ring(2);
  auto f = free_module(r, 2);
  CHECK(f->order() == 4);
  CHECK(f->group().orders() == std::vector<std::uint32_t>{2, 2});
  // (1,1) * 1 = (1,1)
  elem_t v = f->group().encode({1, 1});
  CHECK(f->act(v, 1) == v);
  CHECK(f->act(v, 0) == 0);

  auto t2 = triangular_ring(cyclic_ring(2), 2);
  auto f2 = free_module(t2, 2);
  CHECK(f2->order() == 64);
  f2->verify_axioms();
}

TEST_CASE("submodule extraction keeps the action") {
  auto r = cyclic_ring(4);
  auto m = regular_module(r);
  // {0, 2} is an ideal of Z_4, hence a submodule of the regular module.
  auto ex = extract_submodule(m, {0, 2});
  CHECK(ex.module->order() == 2);
  CHECK(ex.module->ring() == r);
  CHECK(ex.element_images.size() == 2);
  std::set<elem_t> imgs(ex.element_images.begin(), ex.element_images.end());
  CHECK(imgs == std::set<elem_t>{0, 2});
  // Action transfers: image(x * n) = image(x) * n in the parent.
  for (elem_t x = 0; x < 2; ++x)
    for (elem_t n = 0; n < 4; ++n) {
      elem_t inside = ex.module->act(x, n);
      CHECK(ex.element_images[inside] == m->act(ex.element_images[x], n));
    }

  auto t2 = triangular_ring(cyclic_ring(2), 2);
  auto mt = regular_module(t2);
  // Strictly upper triangular part is a right submodule of T_2(Z_2).
  elem_t e12 = t2->group().encode({0, 1, 0});
  auto ext = extract_submodule(mt, {e12});
  CHECK(ext.module->order() == 2);
  for (elem_t x = 0; x < 2; ++x)
    for (elem_t n = 0; n < 8; ++n)
      CHECK(ext.element_images[ext.module->act(x, n)] ==
            mt->act(ext.element_images[x], n));

  // Not closed under the action: e11 generates {0, e11}, but e11 * e12 = e12.
  elem_t e11 = t2->group().encode({1, 0, 0});
  CHECK_THROWS(extract_submodule(mt, {e11}));
}
