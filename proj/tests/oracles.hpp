#pragma once

// Naive exhaustive-definition checkers used as oracles against the optimized
// implementations.  Everything here scans whole element spaces, so keep the
// inputs small (|M| <= 32 or so).

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "finalg/lattice.hpp"
#include "finalg/module.hpp"
#include "finalg/ring.hpp"

namespace finalg::oracle {

inline elem_t unit_of(const AbelianGroup& g, std::size_t i) {
  std::vector<std::uint32_t> c(g.rank(), 0);
  c[i] = 1;
  return g.encode(c);
}

// All canonical hom matrices src -> tgt found by trying every additive
// generator image tuple and keeping those whose additive extension satisfies
// the definition of a linear map on every element pair.
inline std::vector<std::vector<std::uint32_t>> hom_matrices_by_filter(
    const ModulePtr& src, const ModulePtr& tgt) {
  const AbelianGroup& gs = src->group();
  const AbelianGroup& gt = tgt->group();
  std::size_t k = gs.rank(), l = gt.rank();
  std::vector<elem_t> imgs(k, 0);
  auto extend = [&](elem_t m) {
    elem_t acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      acc = gt.add(acc, gt.scale(gs.coord(m, i), imgs[i]));
    return acc;
  };

  std::vector<std::vector<std::uint32_t>> out;
  while (true) {
    bool ok = true;
    for (std::uint64_t a = 0; ok && a < src->order(); ++a)
      for (std::uint64_t b = a; ok && b < src->order(); ++b)
        if (extend(gs.add(static_cast<elem_t>(a), static_cast<elem_t>(b))) !=
            gt.add(extend(static_cast<elem_t>(a)), extend(static_cast<elem_t>(b))))
          ok = false;
    for (std::uint64_t m = 0; ok && m < src->order(); ++m)
      for (std::uint64_t r = 0; ok && r < src->ring()->order(); ++r)
        if (extend(src->act(static_cast<elem_t>(m), static_cast<elem_t>(r))) !=
            tgt->act(extend(static_cast<elem_t>(m)), static_cast<elem_t>(r)))
          ok = false;
    if (ok) {
      std::vector<std::uint32_t> mat(k * l);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) mat[i * l + j] = gt.coord(imgs[i], j);
      out.push_back(std::move(mat));
    }
    std::size_t pos = 0;
    while (pos < k && ++imgs[pos] >= tgt->order()) imgs[pos++] = 0;
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive search for a ring isomorphism over additive generator images.
inline bool rings_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return false;
  const AbelianGroup& ga = a.group();
  const AbelianGroup& gb = b.group();
  std::size_t k = ga.rank();
  if (k == 0) return true;  // both are the zero ring
  std::vector<elem_t> imgs(k, 0);
  auto extend = [&](elem_t x) {
    elem_t acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      acc = gb.add(acc, gb.scale(ga.coord(x, i), imgs[i]));
    return acc;
  };

  while (true) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < k; ++i)
      if (gb.scale(ga.orders()[i], imgs[i]) != 0) ok = false;
    if (ok && extend(a.one()) != b.one()) ok = false;
    if (ok) {
      std::vector<bool> seen(b.order(), false);
      for (std::uint64_t x = 0; ok && x < a.order(); ++x) {
        elem_t y = extend(static_cast<elem_t>(x));
        if (seen[y]) ok = false;
        seen[y] = true;
      }
    }
    for (std::size_t i = 0; ok && i < k; ++i)
      for (std::size_t j = 0; ok && j < k; ++j)
        if (extend(a.mul(unit_of(ga, i), unit_of(ga, j))) != b.mul(imgs[i], imgs[j]))
          ok = false;
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < k && ++imgs[pos] >= b.order()) imgs[pos++] = 0;
    if (pos == k) return false;
  }
}

// Essentiality straight from the definition: meet every nonzero submodule.
inline bool is_essential_by_scan(const Submodule& n) {
  for (const auto& k : all_submodules(n.parent())) {
    if (k.is_zero()) continue;
    if (intersect(n, k).order() == 1) return false;
  }
  return true;
}

// Fully invariant submodules by filtering the whole lattice with every hom.
inline std::vector<Submodule> fully_invariant_by_filter(const EndoRing& s) {
  std::vector<Submodule> out;
  for (const auto& n : all_submodules(s.module())) {
    bool fi = true;
    for (const auto& f : s.homs()) {
      for (elem_t x : n.elements())
        if (!n.contains(f.apply(x))) {
          fi = false;
          break;
        }
      if (!fi) break;
    }
    if (fi) out.push_back(n);
  }
  return out;
}

// Maximum independent family by backtracking over the whole lattice.
inline std::uint32_t udim_backtrack(const std::vector<Submodule>& subs,
                                    std::size_t start, const Submodule& sum) {
  std::uint32_t best = 0;
  for (std::size_t i = start; i < subs.size(); ++i) {
    if (subs[i].is_zero()) continue;
    if (intersect(subs[i], sum).order() != 1) continue;
    std::uint32_t got = 1 + udim_backtrack(subs, i + 1, join(sum, subs[i]));
    best = std::max(best, got);
  }
  return best;
}

inline std::uint32_t uniform_dimension_by_backtracking(const ModulePtr& m) {
  return udim_backtrack(all_submodules(m), 0, zero_submodule(m));
}

}  // namespace finalg::oracle
