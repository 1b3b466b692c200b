#pragma once

#include <string>

#include "caps.hpp"
#include "ideals.hpp"
#include "module.hpp"
#include "ring.hpp"
#include "verdict.hpp"

namespace finalg {

// Outcome of re-validating a verdict against the structure it was issued for.
struct ReplayResult {
  bool ok = false;
  std::string detail;  // reason when !ok, empty otherwise
};

// Re-validate a module-property verdict from its serialized witness.
//
// Failure witnesses are replayed definitionally: the endomorphisms, ideals
// and submodules named in the witness are reconstructed from raw hom
// enumeration and module arithmetic, and each clause of the property
// definition is checked to confirm that the witness really exhibits a
// violation.  Success certificates are re-validated by recomputing the
// property.  The replay path shares only the arithmetic primitives with the
// property checkers, not their scan logic.
ReplayResult replay_module_verdict(const ModulePtr& m, const Verdict& v,
                                   const SizeCaps& caps = default_caps());

// Same contract for ring-property verdicts.
ReplayResult replay_ring_verdict(const RingPtr& r, const Verdict& v,
                                 const SizeCaps& caps = default_caps());

// Re-validate a standalone s-unital verdict (right_s_unital, left_s_unital,
// centrally_s_unital) against the ideal it was computed for.
ReplayResult replay_s_unital_verdict(const IdealHandle& i, const Verdict& v);

}  // namespace finalg
