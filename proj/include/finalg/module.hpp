#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "finalg/caps.hpp"
#include "finalg/ring.hpp"

namespace finalg {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// Finite right module over a finite ring.  The carrier is a product of cyclic
// groups; the action is stored on (carrier generator, ring generator) pairs
// and extended biadditively.  A full |M| x |R| action table is materialized
// lazily when small enough to be worth the memory.
class FiniteModule {
 public:
  // action[i][t] = carrier_generator_i * ring_generator_t
  FiniteModule(AbelianGroup carrier, RingPtr ring,
               std::vector<std::vector<elem_t>> action);

  const AbelianGroup& group() const { return carrier_; }
  const RingPtr& ring() const { return ring_; }
  std::uint64_t order() const { return carrier_.order(); }

  elem_t zero() const { return 0; }
  elem_t add(elem_t a, elem_t b) const { return carrier_.add(a, b); }
  elem_t neg(elem_t a) const { return carrier_.neg(a); }
  elem_t act(elem_t m, elem_t r) const;

  // Unitality and associativity of the biadditive extension, checked over all
  // of |M| x |R| (x |R| for associativity).  Constructors invoke this when the
  // triple count is small.
  void verify_axioms() const;

 private:
  AbelianGroup carrier_;
  RingPtr ring_;
  std::vector<elem_t> action_;  // rank x ring_rank generator table

  elem_t act_biadditive(elem_t m, elem_t r) const;
  void ensure_table() const;
  mutable std::once_flag table_once_;
  mutable std::vector<elem_t> act_table_;
  mutable bool table_built_ = false;
};

// R as a right module over itself.
ModulePtr regular_module(const RingPtr& r);
// Finite Z-module Z_{d_1} x ... x Z_{d_k}, modeled as a module over Z_e with
// e = lcm(d_i) so that scalars act through a finite ring.  Order-1 factors
// are dropped; the empty list gives the zero module over the zero ring.
ModulePtr z_module(const std::vector<std::uint32_t>& orders,
                   const SizeCaps& caps = default_caps());
// External direct sum; both summands must share one ring object.
ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b,
                     const SizeCaps& caps = default_caps());
ModulePtr free_module(const RingPtr& r, std::uint32_t n,
                      const SizeCaps& caps = default_caps());

// The submodule on the given element set as a module in its own right,
// together with the parent element realizing each new carrier generator.
struct ExtractedModule {
  ModulePtr module;
  std::vector<elem_t> generator_images;  // parent elements for the new generators
  std::vector<elem_t> element_images;    // new element index -> parent element
};
ExtractedModule extract_submodule(const ModulePtr& parent,
                                  const std::vector<elem_t>& elements);

}  // namespace finalg
