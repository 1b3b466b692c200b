#include "finalg/intlat.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "finalg/errors.hpp"

namespace finalg {

namespace {

long long ck_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("integer add overflow");
  return r;
}

long long ck_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("integer mul overflow");
  return r;
}

// floor division, used to reduce entries above HNF pivots into [0, pivot)
long long fdiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

std::uint32_t umod(long long v, std::uint32_t m) {
  if (m == 1) return 0;
  long long r = v % static_cast<long long>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

void row_addmul(IMat& m, std::size_t dst, std::size_t src, long long t) {
  if (t == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j)
    m.at(dst, j) = ck_add(m.at(dst, j), ck_mul(t, m.at(src, j)));
}

void row_swap(IMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void col_addmul(IMat& m, std::size_t dst, std::size_t src, long long t) {
  if (t == 0) return;
  for (std::size_t i = 0; i < m.rows; ++i)
    m.at(i, dst) = ck_add(m.at(i, dst), ck_mul(t, m.at(i, src)));
}

void col_swap(IMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void col_neg(IMat& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

void row_neg(IMat& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// Solve x * b = target for integer x, with b square, full rank, upper
// triangular (row-HNF of a full-rank lattice).  Returns nullopt when the
// target is not in the row lattice.
std::optional<std::vector<long long>> solve_upper(const IMat& b,
                                                  const std::vector<long long>& target) {
  std::size_t n = b.rows;
  std::vector<long long> x(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    long long rem = target[j];
    for (std::size_t i = 0; i < j; ++i) rem = ck_add(rem, -ck_mul(x[i], b.at(i, j)));
    if (b.at(j, j) == 0 || rem % b.at(j, j) != 0) return std::nullopt;
    x[j] = rem / b.at(j, j);
  }
  return x;
}

std::vector<long long> lift_u32(const std::vector<std::uint32_t>& v) {
  return std::vector<long long>(v.begin(), v.end());
}

IMat stack_with_diagonal(const std::vector<std::vector<std::uint32_t>>& gens,
                         const std::vector<std::uint32_t>& moduli) {
  std::size_t n = moduli.size();
  IMat m(gens.size() + n, n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    assert(gens[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = gens[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) m.at(gens.size() + j, j) = moduli[j];
  return m;
}

}  // namespace

IMat IMat::identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::mul(const IMat& o) const {
  assert(cols == o.rows);
  IMat r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        r.at(i, j) = ck_add(r.at(i, j), ck_mul(v, o.at(k, j)));
    }
  return r;
}

IMat hermite_normal_form(IMat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    // Euclid within the column until at most one nonzero entry remains at r.
    while (true) {
      std::size_t best = m.rows;
      for (std::size_t i = r; i < m.rows; ++i)
        if (m.at(i, c) != 0 &&
            (best == m.rows || std::llabs(m.at(i, c)) < std::llabs(m.at(best, c))))
          best = i;
      if (best == m.rows) break;
      row_swap(m, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows; ++i) {
        if (m.at(i, c) == 0) continue;
        row_addmul(m, i, r, -(m.at(i, c) / m.at(r, c)));
        if (m.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(r, c) != 0) {
      if (m.at(r, c) < 0) row_neg(m, r);
      for (std::size_t i = 0; i < r; ++i)
        row_addmul(m, i, r, -fdiv(m.at(i, c), m.at(r, c)));
      ++r;
    }
  }
  m.rows = r;
  m.a.resize(r * m.cols);
  return m;
}

SmithResult smith_normal_form(IMat m) {
  std::size_t rows = m.rows, cols = m.cols;
  SmithResult s{IMat::identity(rows), IMat::identity(cols), IMat::identity(cols),
                std::move(m)};
  IMat& d = s.d;

  auto rowop = [&](std::size_t dst, std::size_t src, long long t) {
    row_addmul(d, dst, src, t);
    row_addmul(s.u, dst, src, t);
  };
  auto rswap = [&](std::size_t i, std::size_t j) {
    row_swap(d, i, j);
    row_swap(s.u, i, j);
  };
  // Column op d_dst += t * d_src corresponds to right multiplication by an
  // elementary matrix E; apply E to v and E^-1 (a row op) to vinv.
  auto colop = [&](std::size_t dst, std::size_t src, long long t) {
    col_addmul(d, dst, src, t);
    col_addmul(s.v, dst, src, t);
    row_addmul(s.vinv, src, dst, -t);
  };
  auto cswap = [&](std::size_t i, std::size_t j) {
    col_swap(d, i, j);
    col_swap(s.v, i, j);
    row_swap(s.vinv, i, j);
  };
  auto cneg = [&](std::size_t j) {
    col_neg(d, j);
    col_neg(s.v, j);
    row_neg(s.vinv, j);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d.at(i, j) != 0 &&
            (pi == rows || std::llabs(d.at(i, j)) < std::llabs(d.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    rswap(t, pi);
    cswap(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (d.at(i, t) != 0) {
          rowop(i, t, -(d.at(i, t) / d.at(t, t)));
          if (d.at(i, t) != 0) rswap(t, i);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (d.at(t, j) != 0) {
          colop(j, t, -(d.at(t, j) / d.at(t, t)));
          if (d.at(t, j) != 0) {
            cswap(t, j);
            again = true;  // column swap may reintroduce entries below the pivot
          }
        }
      }
      if (!again) {
        // Divisibility chain: fold any non-divisible entry into the pivot row.
        for (std::size_t i = t + 1; i < rows && !again; ++i)
          for (std::size_t j = t + 1; j < cols && !again; ++j)
            if (d.at(i, j) % d.at(t, t) != 0) {
              rowop(t, i, 1);
              again = true;
            }
      }
    }
    if (d.at(t, t) < 0) cneg(t);
  }
  return s;
}

// Saturating product: callers compare orders against caps, so a group too big
// for 64 bits must report "huge", never a wrapped-around small number.
static std::uint64_t saturating_order(const std::vector<std::uint32_t>& orders) {
  std::uint64_t n = 1;
  for (auto o : orders)
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(o), &n))
      return UINT64_MAX;
  return n;
}

std::uint64_t QuotientStructure::order() const { return saturating_order(orders_); }

QuotientStructure::QuotientStructure(std::vector<std::uint32_t> ambient,
                                     const std::vector<std::vector<std::uint32_t>>& gens)
    : ambient_(std::move(ambient)) {
  std::size_t n = ambient_.size();
  SmithResult s = smith_normal_form(stack_with_diagonal(gens, ambient_));
  v_ = std::move(s.v);
  vinv_ = std::move(s.vinv);
  snf_diag_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    snf_diag_[i] = i < s.d.rows ? s.d.at(i, i) : 0;
    // The relation lattice contains diag(ambient), so it has full rank.
    assert(snf_diag_[i] > 0);
    if (snf_diag_[i] > 1) {
      keep_.push_back(i);
      orders_.push_back(static_cast<std::uint32_t>(snf_diag_[i]));
    }
  }
}

std::vector<std::uint32_t> QuotientStructure::project(
    const std::vector<std::uint32_t>& elem) const {
  assert(elem.size() == ambient_.size());
  std::vector<std::uint32_t> out(keep_.size());
  for (std::size_t k = 0; k < keep_.size(); ++k) {
    std::size_t i = keep_[k];
    long long y = 0;
    for (std::size_t j = 0; j < ambient_.size(); ++j)
      y = ck_add(y, ck_mul(elem[j], v_.at(j, i)));
    out[k] = umod(y, static_cast<std::uint32_t>(snf_diag_[i]));
  }
  return out;
}

std::vector<std::uint32_t> QuotientStructure::lift(
    const std::vector<std::uint32_t>& coords) const {
  assert(coords.size() == keep_.size());
  std::size_t n = ambient_.size();
  std::vector<std::uint32_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    long long x = 0;
    for (std::size_t k = 0; k < keep_.size(); ++k)
      x = ck_add(x, ck_mul(coords[k], vinv_.at(keep_[k], j)));
    out[j] = umod(x, ambient_[j]);
  }
  return out;
}

std::uint64_t SubgroupBasis::order() const { return saturating_order(orders_); }

SubgroupBasis::SubgroupBasis(std::vector<std::uint32_t> ambient,
                             const std::vector<std::vector<std::uint32_t>>& gens)
    : ambient_(std::move(ambient)) {
  std::size_t n = ambient_.size();
  if (n == 0) return;

  // Preimage lattice of the subgroup in Z^n; full rank because it contains
  // the diagonal relation lattice.
  b_ = hermite_normal_form(stack_with_diagonal(gens, ambient_));
  assert(b_.rows == n);

  // Express the relations on the basis of the preimage lattice, then read the
  // subgroup structure off the Smith form of that expression.
  IMat c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> target(n, 0);
    target[i] = ambient_[i];
    auto x = solve_upper(b_, target);
    assert(x.has_value());
    for (std::size_t j = 0; j < n; ++j) c.at(i, j) = (*x)[j];
  }
  SmithResult s = smith_normal_form(std::move(c));
  v_ = std::move(s.v);
  vinv_ = std::move(s.vinv);
  snf_diag_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    snf_diag_[i] = s.d.at(i, i);
    assert(snf_diag_[i] > 0);
    if (snf_diag_[i] > 1) {
      keep_.push_back(i);
      orders_.push_back(static_cast<std::uint32_t>(snf_diag_[i]));
    }
  }
  IMat w = vinv_.mul(b_);
  for (std::size_t k = 0; k < keep_.size(); ++k) {
    std::vector<std::uint32_t> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = umod(w.at(keep_[k], j), ambient_[j]);
    basis_.push_back(std::move(row));
  }
}

std::optional<std::vector<std::uint32_t>> SubgroupBasis::coords(
    const std::vector<std::uint32_t>& elem) const {
  if (ambient_.empty()) return std::vector<std::uint32_t>{};
  auto x = solve_upper(b_, lift_u32(elem));
  if (!x) return std::nullopt;
  std::vector<std::uint32_t> out(keep_.size());
  for (std::size_t k = 0; k < keep_.size(); ++k) {
    std::size_t i = keep_[k];
    long long y = 0;
    for (std::size_t j = 0; j < ambient_.size(); ++j)
      y = ck_add(y, ck_mul((*x)[j], v_.at(j, i)));
    out[k] = umod(y, static_cast<std::uint32_t>(snf_diag_[i]));
  }
  return out;
}

bool SubgroupBasis::contains(const std::vector<std::uint32_t>& elem) const {
  return coords(elem).has_value();
}

std::vector<std::uint32_t> SubgroupBasis::element(
    const std::vector<std::uint32_t>& coords) const {
  assert(coords.size() == orders_.size());
  std::vector<std::uint32_t> out(ambient_.size(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k)
    for (std::size_t j = 0; j < ambient_.size(); ++j)
      out[j] = umod(out[j] + static_cast<std::uint64_t>(coords[k]) % ambient_[j] *
                                 basis_[k][j] % ambient_[j],
                    ambient_[j]);
  return out;
}

std::vector<std::uint32_t> SubgroupBasis::element_at(std::uint64_t index) const {
  std::vector<std::uint32_t> c(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    c[k] = static_cast<std::uint32_t>(index % orders_[k]);
    index /= orders_[k];
  }
  return element(c);
}

SubgroupBasis congruence_kernel(const std::vector<std::uint32_t>& a_moduli,
                                const IMat& t,
                                const std::vector<std::uint32_t>& b_moduli) {
  std::size_t n = a_moduli.size(), m = b_moduli.size();
  assert(t.rows == n && t.cols == m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((ck_mul(a_moduli[i], t.at(i, j))) % b_moduli[j] != 0)
        throw std::logic_error("congruence map not defined on the ambient group");

  // Left null space of [[t],[diag(b)]] via HNF of the identity-augmented
  // matrix; rows whose constraint part vanished carry the kernel generators.
  IMat aug(n + m, m + n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug.at(i, j) = t.at(i, j);
    aug.at(i, m + i) = 1;
  }
  for (std::size_t j = 0; j < m; ++j) {
    aug.at(n + j, j) = b_moduli[j];
    aug.at(n + j, m + n + j) = 1;
  }
  IMat h = hermite_normal_form(std::move(aug));

  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t r = 0; r < h.rows; ++r) {
    bool in_kernel = true;
    for (std::size_t j = 0; j < m && in_kernel; ++j) in_kernel = h.at(r, j) == 0;
    if (!in_kernel) continue;
    std::vector<std::uint32_t> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = umod(h.at(r, m + j), a_moduli[j]);
    gens.push_back(std::move(x));
  }
  return SubgroupBasis(a_moduli, gens);
}

}  // namespace finalg
