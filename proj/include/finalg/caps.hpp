#pragma once

#include <cstdint>

namespace finalg {

// Upper bounds on structure sizes.  Construction and enumeration routines
// throw SizeCapExceeded instead of silently degrading when a result would
// exceed the relevant bound.
struct SizeCaps {
  std::uint64_t ring = 4096;    // elements in a constructed ring
  std::uint64_t module = 4096;  // elements in a constructed module
  std::uint64_t endo = 4096;    // homs in a computed Hom/End group
};

inline const SizeCaps& default_caps() {
  static const SizeCaps caps{};
  return caps;
}

}  // namespace finalg
