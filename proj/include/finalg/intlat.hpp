#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace finalg {

// Dense integer matrix, row major.  Sizes here are tiny (dimensions are
// counts of additive generators, not of elements), so no sparsity is needed.
struct IMat {
  std::size_t rows = 0, cols = 0;
  std::vector<long long> a;

  IMat() = default;
  IMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IMat identity(std::size_t n);
  IMat mul(const IMat& o) const;  // overflow-checked product
};

// Row-style Hermite normal form.  Row operations only; the returned matrix
// has the same row lattice as the input, rows in echelon order with positive
// pivots and entries above each pivot reduced into [0, pivot).  Zero rows are
// dropped.
IMat hermite_normal_form(IMat m);

// Smith normal form U*A*V = D with U, V unimodular and D diagonal with a
// divisibility chain d_1 | d_2 | ... .  vinv is V^-1, tracked directly so the
// caller never inverts a matrix.
struct SmithResult {
  IMat u, v, vinv, d;
};
SmithResult smith_normal_form(IMat m);

// Quotient of Z_{c_1} x ... x Z_{c_n} by the subgroup generated by `gens`.
// Presents the quotient as a product of cyclic groups of the listed orders
// (order-1 factors dropped) with an explicit projection and a section.
class QuotientStructure {
 public:
  QuotientStructure(std::vector<std::uint32_t> ambient,
                    const std::vector<std::vector<std::uint32_t>>& gens);

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint64_t order() const;

  std::vector<std::uint32_t> project(const std::vector<std::uint32_t>& elem) const;
  std::vector<std::uint32_t> lift(const std::vector<std::uint32_t>& coords) const;

 private:
  std::vector<std::uint32_t> ambient_;
  IMat v_, vinv_;
  std::vector<long long> snf_diag_;  // full length n
  std::vector<std::size_t> keep_;    // coordinates with diag > 1
  std::vector<std::uint32_t> orders_;
};

// Subgroup of Z_{c_1} x ... x Z_{c_n} generated by `gens`, presented on an
// explicit basis: independent elements b_1..b_k of orders o_1..o_k such that
// every subgroup element is uniquely sum a_i b_i with 0 <= a_i < o_i.
class SubgroupBasis {
 public:
  SubgroupBasis(std::vector<std::uint32_t> ambient,
                const std::vector<std::vector<std::uint32_t>>& gens);

  const std::vector<std::uint32_t>& ambient() const { return ambient_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  const std::vector<std::vector<std::uint32_t>>& basis() const { return basis_; }
  std::uint64_t order() const;

  bool contains(const std::vector<std::uint32_t>& elem) const;
  // Coordinates of an element on the basis; nullopt if not in the subgroup.
  std::optional<std::vector<std::uint32_t>> coords(const std::vector<std::uint32_t>& elem) const;
  std::vector<std::uint32_t> element(const std::vector<std::uint32_t>& coords) const;
  // Mixed-radix enumeration over the basis orders.
  std::vector<std::uint32_t> element_at(std::uint64_t index) const;

 private:
  std::vector<std::uint32_t> ambient_;
  IMat b_;                           // HNF basis of the preimage lattice in Z^n
  IMat v_, vinv_;
  std::vector<long long> snf_diag_;  // structure of lattice/relations quotient
  std::vector<std::size_t> keep_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::vector<std::uint32_t>> basis_;
};

// Solutions x in Z_{a_1} x ... x Z_{a_n} of the homogeneous congruences
// x * t ≡ 0, column j taken mod b_j.  Requires a_i * t_{ij} ≡ 0 (mod b_j)
// so the constraint map is well defined on the ambient group.
SubgroupBasis congruence_kernel(const std::vector<std::uint32_t>& a_moduli,
                                const IMat& t,
                                const std::vector<std::uint32_t>& b_moduli);

}  // namespace finalg
