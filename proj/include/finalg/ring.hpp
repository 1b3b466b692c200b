#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "finalg/abelian.hpp"
#include "finalg/caps.hpp"

namespace finalg {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

enum class Semicentral { no, left, right, central };

// Finite unital associative ring.  The additive group is a product of cyclic
// groups; multiplication is stored as structure constants on generator pairs
// and extended bilinearly, so construction stays quadratic in the number of
// generators while elements remain cheap to enumerate exhaustively.
class FiniteRing {
 public:
  // products[i][j] = generator_i * generator_j as an element index.
  FiniteRing(AbelianGroup add, std::vector<std::vector<elem_t>> products, elem_t one);

  const AbelianGroup& group() const { return add_; }
  std::uint64_t order() const { return add_.order(); }
  std::size_t rank() const { return add_.rank(); }

  elem_t zero() const { return 0; }
  elem_t one() const { return one_; }
  elem_t add(elem_t a, elem_t b) const { return add_.add(a, b); }
  elem_t neg(elem_t a) const { return add_.neg(a); }
  elem_t sub(elem_t a, elem_t b) const { return add_.sub(a, b); }
  elem_t mul(elem_t a, elem_t b) const;

  bool is_idempotent(elem_t e) const { return mul(e, e) == e; }
  bool is_central(elem_t z) const;
  // Left semicentral: xe = exe for all x.  Right semicentral: ex = exe.
  Semicentral semicentral_class(elem_t e) const;
  bool is_commutative() const;

  // Cached element-level scans; safe for concurrent readers.
  const std::vector<elem_t>& central_elements() const;
  const std::vector<elem_t>& idempotents() const;
  const std::vector<bool>& unit_mask() const;  // x has a two-sided inverse

  // Exhaustively verifies associativity, unitality and distributivity of the
  // bilinear extension.  Cost is cubic in the order; use on small rings.
  void verify_axioms() const;

  // Same presentation: equal generator orders, structure constants and unit.
  bool same_presentation(const FiniteRing& o) const {
    return add_ == o.add_ && sc_ == o.sc_ && one_ == o.one_;
  }

 private:
  AbelianGroup add_;
  std::vector<elem_t> sc_;  // rank x rank structure constants
  elem_t one_;

  elem_t mul_bilinear(elem_t a, elem_t b) const;
  void ensure_tables() const;

  mutable std::once_flag table_once_, central_once_, idem_once_, unit_once_;
  mutable std::vector<elem_t> mul_table_;  // built lazily when order^2 is small
  mutable bool table_built_ = false;
  mutable std::vector<elem_t> central_, idempotents_;
  mutable std::vector<bool> units_;
};

RingPtr cyclic_ring(std::uint32_t n, const SizeCaps& caps = default_caps());
RingPtr matrix_ring(const RingPtr& base, std::uint32_t k,
                    const SizeCaps& caps = default_caps());
// Upper triangular k x k matrices over the base ring.
RingPtr triangular_ring(const RingPtr& base, std::uint32_t k,
                        const SizeCaps& caps = default_caps());
RingPtr direct_product(const RingPtr& a, const RingPtr& b,
                       const SizeCaps& caps = default_caps());
// Quotient by the two-sided ideal generated by the given elements.  Throws
// NotAnIdeal if the closure check fails (it cannot, for generated ideals) and
// RingMismatch when generator coordinates do not fit the base ring.
RingPtr quotient_ring(const RingPtr& base, const std::vector<elem_t>& ideal_gens,
                      const SizeCaps& caps = default_caps());

// Cell layout helpers for matrix/triangular rings: generator blocks are laid
// out row-major by cell, base generators contiguous within a cell.
std::string format_element(const FiniteRing& r, elem_t a);

}  // namespace finalg
