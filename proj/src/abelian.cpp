#include "finalg/abelian.hpp"

#include <cassert>
#include <stdexcept>

#include "finalg/errors.hpp"

namespace finalg {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders)
    : orders_(std::move(orders)) {
  strides_.resize(orders_.size());
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 2) throw std::invalid_argument("cyclic factor order must be >= 2");
    strides_[i] = acc;
    acc *= orders_[i];
    if (acc > (1ull << 32)) throw ArithmeticOverflow("abelian group order exceeds 2^32");
  }
  order_ = acc;
}

std::vector<std::uint32_t> AbelianGroup::coords(elem_t a) const {
  std::vector<std::uint32_t> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = coord(a, i);
  return c;
}

elem_t AbelianGroup::encode(const std::vector<std::uint32_t>& c) const {
  assert(c.size() == orders_.size());
  std::uint64_t a = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) a += (c[i] % orders_[i]) * strides_[i];
  return static_cast<elem_t>(a);
}

elem_t AbelianGroup::add(elem_t a, elem_t b) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint64_t s = coord(a, i) + coord(b, i);
    if (s >= orders_[i]) s -= orders_[i];
    r += s * strides_[i];
  }
  return static_cast<elem_t>(r);
}

elem_t AbelianGroup::neg(elem_t a) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint32_t c = coord(a, i);
    r += (c == 0 ? 0 : orders_[i] - c) * static_cast<std::uint64_t>(strides_[i]);
  }
  return static_cast<elem_t>(r);
}

elem_t AbelianGroup::scale(std::uint64_t n, elem_t a) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r += ((n % orders_[i]) * coord(a, i) % orders_[i]) * strides_[i];
  }
  return static_cast<elem_t>(r);
}

std::uint64_t AbelianGroup::element_order(elem_t a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint64_t d = orders_[i];
    std::uint64_t ci = d / std::gcd<std::uint64_t>(d, coord(a, i));
    ord = std::lcm(ord, ci);
  }
  return ord;
}

}  // namespace finalg
