#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "finalg/hom.hpp"
#include "finalg/module.hpp"

namespace finalg {

// Submodule of a fixed parent, held as a canonical sorted element set.  The
// constructor verifies closure under addition and the ring action, so a
// handle is always a genuine submodule.
class Submodule {
 public:
  Submodule(ModulePtr parent, std::vector<elem_t> elements);

  const ModulePtr& parent() const { return parent_; }
  const std::vector<elem_t>& elements() const { return elems_; }
  std::uint64_t order() const { return elems_.size(); }
  bool contains(elem_t x) const;
  bool contains_all(const Submodule& other) const;
  bool is_zero() const { return elems_.size() == 1; }
  bool is_full() const { return elems_.size() == parent_->order(); }

  bool operator==(const Submodule& o) const {
    return parent_ == o.parent_ && elems_ == o.elems_;
  }

 private:
  ModulePtr parent_;
  std::vector<elem_t> elems_;
};

Submodule zero_submodule(const ModulePtr& m);
Submodule full_submodule(const ModulePtr& m);
// xR; already a submodule since the ring is unital.
Submodule cyclic_submodule(const ModulePtr& m, elem_t x);
Submodule submodule_generated(const ModulePtr& m, const std::vector<elem_t>& gens);
Submodule join(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);

Submodule kernel(const ModuleHom& f);  // submodule of f.source()
Submodule image(const ModuleHom& f);   // submodule of f.target()

// Complete submodule list as the join-closure of the cyclic submodules,
// sorted by size then element set.  Throws SizeCapExceeded if the submodule
// count passes caps.module.
std::vector<Submodule> all_submodules(const ModulePtr& m,
                                      const SizeCaps& caps = default_caps());
// Minimal nonzero submodules: the cyclic submodules each of whose nonzero
// elements generates the whole thing.
std::vector<Submodule> minimal_submodules(const ModulePtr& m);

// f(N) ⊆ N for every endomorphism f; checked on the additive basis of S.
bool is_fully_invariant(const EndoRing& s, const Submodule& n);
// All fully invariant submodules: close each element under addition, the ring
// action and the endomorphism action, then close the results under join.
std::vector<Submodule> fully_invariant_submodules(const EndoRing& s,
                                                  const SizeCaps& caps = default_caps());

// Some K with N ⊕ K = M, if one exists.
std::optional<Submodule> direct_complement(const Submodule& n,
                                           const SizeCaps& caps = default_caps());
// N ∩ K ≠ 0 for every nonzero K; decided on minimal submodules.
bool is_essential(const Submodule& n);

// Maximum size of an independent family of nonzero submodules, computed by
// greedily extending an independent family of minimal submodules.
std::uint32_t uniform_dimension(const ModulePtr& m);
std::uint32_t ring_right_uniform_dimension(const RingPtr& r);

}  // namespace finalg
