#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace finalg {

using elem_t = std::uint32_t;

// Finite abelian group presented as Z_{d_1} x ... x Z_{d_k}.  Elements are
// flat indices in mixed radix: index = sum_i coord_i * stride_i, which keeps
// exhaustive scans cheap and makes element sets plain sorted vectors.
//
// Every order d_i is >= 2; the trivial group has k = 0 and a single element 0.
class AbelianGroup {
 public:
  AbelianGroup() : order_(1) {}
  explicit AbelianGroup(std::vector<std::uint32_t> orders);

  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint64_t order() const { return order_; }

  elem_t zero() const { return 0; }

  std::uint32_t coord(elem_t a, std::size_t i) const {
    return static_cast<std::uint32_t>((a / strides_[i]) % orders_[i]);
  }
  std::vector<std::uint32_t> coords(elem_t a) const;
  elem_t encode(const std::vector<std::uint32_t>& c) const;

  elem_t add(elem_t a, elem_t b) const;
  elem_t neg(elem_t a) const;
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
  // n-fold sum of a (n may exceed the exponent; coordinates reduce mod d_i).
  elem_t scale(std::uint64_t n, elem_t a) const;

  // Additive order of an element: lcm over coordinates of d_i / gcd(d_i, a_i).
  std::uint64_t element_order(elem_t a) const;

  bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_;
};

}  // namespace finalg
