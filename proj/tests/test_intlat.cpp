#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "finalg/abelian.hpp"
#include "finalg/intlat.hpp"

using namespace finalg;

namespace {

IMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  IMat m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto& r : rows) {
    std::size_t j = 0;
    for (auto v : r) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool same_row_lattice_member(const IMat& h, std::vector<long long> v) {
  // v in row lattice of HNF h: forward-eliminate with pivot rows.
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols; ++c) {
    if (r < h.rows && h.at(r, c) != 0) {
      if (v[c] % h.at(r, c) != 0) return false;
      long long q = v[c] / h.at(r, c);
      for (std::size_t j = 0; j < h.cols; ++j) v[j] -= q * h.at(r, j);
      ++r;
    } else if (v[c] != 0) {
      return false;
    }
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace

TEST_CASE("abelian group arithmetic in mixed radix") {
  AbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  elem_t a = g.encode({1, 3});
  elem_t b = g.encode({1, 2});
  CHECK(g.coords(g.add(a, b)) == std::vector<std::uint32_t>{0, 1});
  CHECK(g.add(a, g.neg(a)) == g.zero());
  CHECK(g.coords(g.scale(3, a)) == std::vector<std::uint32_t>{1, 1});
  CHECK(g.element_order(a) == 4);
  CHECK(g.element_order(g.encode({1, 0})) == 2);
  CHECK(g.element_order(g.zero()) == 1);

  AbelianGroup trivial;
  CHECK(trivial.order() == 1);
  CHECK(trivial.add(0, 0) == 0);
}

TEST_CASE("hermite normal form preserves the row lattice") {
  IMat a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  IMat h = hermite_normal_form(a);
  // Every original row lies in the lattice of h and vice versa (h rows are
  // integer combinations by construction, so membership one way suffices
  // together with equal determinant-rank).
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::vector<long long> v(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) v[j] = a.at(i, j);
    CHECK(same_row_lattice_member(h, v));
  }
  for (std::size_t i = 0; i < h.rows; ++i) {
    for (std::size_t j = 0; j < i; ++j) CHECK(h.at(i, j) == 0);
  }
}

TEST_CASE("smith normal form factors correctly on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IMat a(dim(rng), dim(rng));
    for (auto& x : a.a) x = val(rng);
    SmithResult s = smith_normal_form(a);
    IMat lhs = s.u.mul(a).mul(s.v);
    for (std::size_t i = 0; i < lhs.rows; ++i)
      for (std::size_t j = 0; j < lhs.cols; ++j)
        CHECK(lhs.at(i, j) == s.d.at(i, j));
    // diagonal, nonnegative, divisibility chain
    long long prev = 0;
    for (std::size_t i = 0; i < std::min(s.d.rows, s.d.cols); ++i) {
      for (std::size_t j = 0; j < s.d.cols; ++j)
        if (j != i) CHECK(s.d.at(i, j) == 0);
      long long di = s.d.at(i, i);
      CHECK(di >= 0);
      if (prev != 0) CHECK((di == 0 || di % prev == 0));
      prev = di;
    }
    IMat vv = s.v.mul(s.vinv);
    for (std::size_t i = 0; i < vv.rows; ++i)
      for (std::size_t j = 0; j < vv.cols; ++j)
        CHECK(vv.at(i, j) == (i == j ? 1 : 0));
  }
}

TEST_CASE("quotient structure of Z_4 x Z_4 by the diagonal") {
  QuotientStructure q({4, 4}, {{1, 1}});
  CHECK(q.order() == 4);
  REQUIRE(q.orders().size() == 1);
  CHECK(q.orders()[0] == 4);
  CHECK(q.project({1, 1}) == std::vector<std::uint32_t>{0});
  auto p10 = q.project({1, 0});
  CHECK(q.project(q.lift(p10)) == p10);
  // (1,0) and (0,3) differ by (1,1)-multiples? (1,0)-(0,3)=(1,-3)=(1,1) mod 4
  CHECK(q.project({1, 0}) == q.project({0, 3}));
}

TEST_CASE("subgroup basis enumerates exactly the generated subgroup") {
  SUBCASE("subgroup of Z_2 x Z_4 generated by (1,2)") {
    SubgroupBasis s({2, 4}, {{1, 2}});
    CHECK(s.order() == 2);
    CHECK(s.contains({1, 2}));
    CHECK(s.contains({0, 0}));
    CHECK(!s.contains({1, 0}));
    CHECK(!s.contains({0, 2}));
  }
  SUBCASE("full group") {
    SubgroupBasis s({2, 4}, {{1, 0}, {0, 1}});
    CHECK(s.order() == 8);
  }
  SUBCASE("zero subgroup") {
    SubgroupBasis s({2, 4}, {});
    CHECK(s.order() == 1);
    CHECK(s.orders().empty());
    CHECK(s.element_at(0) == std::vector<std::uint32_t>{0, 0});
  }
  SUBCASE("random subgroups match brute-force closure") {
    std::mt19937 rng(777);
    std::vector<std::vector<std::uint32_t>> ambients = {
        {4, 6}, {2, 2, 2}, {8}, {3, 9}, {2, 4, 3}};
    for (auto& amb : ambients) {
      AbelianGroup g(amb);
      std::uniform_int_distribution<std::uint32_t> pick(
          0, static_cast<std::uint32_t>(g.order() - 1));
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint32_t> gen_idx = {pick(rng), pick(rng)};
        std::vector<std::vector<std::uint32_t>> gens;
        for (auto gi : gen_idx) gens.push_back(g.coords(gi));
        // brute-force closure under addition
        std::set<elem_t> closure = {g.zero()};
        bool grew = true;
        while (grew) {
          grew = false;
          for (elem_t x : std::vector<elem_t>(closure.begin(), closure.end()))
            for (auto gi : gen_idx) {
              elem_t y = g.add(x, gi);
              if (closure.insert(y).second) grew = true;
            }
        }
        SubgroupBasis s(amb, gens);
        REQUIRE(s.order() == closure.size());
        // enumeration hits each element exactly once
        std::set<elem_t> seen;
        for (std::uint64_t i = 0; i < s.order(); ++i) {
          elem_t e = g.encode(s.element_at(i));
          CHECK(closure.count(e) == 1);
          CHECK(seen.insert(e).second);
        }
        // coords round-trips and rejects non-members
        for (std::uint64_t i = 0; i < g.order(); ++i) {
          auto c = s.coords(g.coords(static_cast<elem_t>(i)));
          CHECK(c.has_value() == (closure.count(static_cast<elem_t>(i)) == 1));
          if (c) CHECK(g.encode(s.element(*c)) == i);
        }
      }
    }
  }
}

TEST_CASE("congruence kernel solves linear congruence systems") {
  SUBCASE("2x ≡ 0 mod 4 over Z_4") {
    // one unknown in Z_4, one congruence with coefficient 2 mod 4
    IMat t(1, 1);
    t.at(0, 0) = 2;
    SubgroupBasis k = congruence_kernel({4}, t, {4});
    CHECK(k.order() == 2);  // x in {0, 2}
    CHECK(k.contains({2}));
    CHECK(!k.contains({1}));
  }
  SUBCASE("no constraints yields the full group") {
    IMat t(2, 0);
    SubgroupBasis k = congruence_kernel({2, 3}, t, {});
    CHECK(k.order() == 6);
  }
  SUBCASE("brute force agreement on random systems") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::uint32_t> a = {2, 4, 3};
      std::vector<std::uint32_t> b = {2, 6};
      IMat t(a.size(), b.size());
      // choose coefficients satisfying a_i * t_ij ≡ 0 mod b_j
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          std::uint32_t step = b[j] / std::gcd(a[i], b[j]);
          std::uniform_int_distribution<std::uint32_t> mult(0, b[j] / step - 1);
          t.at(i, j) = step * mult(rng);
        }
      SubgroupBasis k = congruence_kernel(a, t, b);
      AbelianGroup g(a);
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < g.order(); ++x) {
        auto c = g.coords(static_cast<elem_t>(x));
        bool ok = true;
        for (std::size_t j = 0; j < b.size() && ok; ++j) {
          long long acc = 0;
          for (std::size_t i = 0; i < a.size(); ++i) acc += (long long)c[i] * t.at(i, j);
          ok = acc % b[j] == 0;
        }
        if (ok) {
          ++count;
          CHECK(k.contains(c));
        } else {
          CHECK(!k.contains(c));
        }
      }
      CHECK(k.order() == count);
    }
  }
}
