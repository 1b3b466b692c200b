#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/hom.hpp"
#include "finalg/ideals.hpp"
#include "finalg/lattice.hpp"
#include "finalg/module.hpp"
#include "finalg/verdict.hpp"

namespace finalg {

// l_S(N) = {f in S : f(N) = 0}, marked two_sided when N is fully invariant
// (and verified to be, in that case), left otherwise.
IdealHandle left_annihilator(const EndoRing& s, const Submodule& n);

// r_M(I) = {m in M : f(m) = 0 for every f in I}.
Submodule right_annihilator_in_module(const EndoRing& s, const IdealHandle& i);

const std::vector<std::string>& module_property_ids();
const std::vector<std::string>& ring_property_ids();
bool is_module_property(const std::string& id);
bool is_ring_property(const std::string& id);

// Memoizing property checker for one module: the endomorphism ring, the
// submodule lattice and each verdict are computed once and reused across
// properties.  Construction is cheap; everything heavy is lazy.
class ModuleAnalyzer {
 public:
  explicit ModuleAnalyzer(ModulePtr m, const SizeCaps& caps = default_caps());

  const ModulePtr& module() const { return module_; }
  const SizeCaps& caps() const { return caps_; }

  // Throws std::invalid_argument for an unknown id; SizeCapExceeded may
  // propagate from the underlying lattice/endomorphism computations.
  const Verdict& check(const std::string& property);
  std::vector<Verdict> check_all();

  const EndoRing& endo();
  const std::vector<Submodule>& submodules();
  const std::vector<Submodule>& fully_invariant_subs();
  const std::vector<Submodule>& cyclic_subs();
  bool has_complement(const Submodule& n);

 private:
  Verdict run(const std::string& property);
  const std::vector<std::vector<elem_t>>& hom_images();
  const std::vector<elem_t>& left_ideal_of(elem_t idem);  // Se as sorted set
  const std::vector<IdealHandle>& endo_ideals();          // two-sided ideals of S
  Verdict summand_annihilator_check(const std::string& property,
                                    const std::vector<Submodule>& family);
  Verdict s_unital_annihilator_check(const std::string& property,
                                     const std::vector<Submodule>& family,
                                     bool centrally);
  bool prime_in(const Submodule& n);

  ModulePtr module_;
  SizeCaps caps_;
  std::optional<EndoRing> endo_;
  std::optional<std::vector<Submodule>> subs_, fi_subs_, cyclic_subs_;
  std::optional<std::vector<std::vector<elem_t>>> hom_images_;
  std::map<elem_t, std::vector<elem_t>> left_ideals_;
  std::optional<std::vector<IdealHandle>> endo_ideals_;
  std::map<std::string, Verdict> memo_;
};

// Memoizing property checker for one ring.
class RingAnalyzer {
 public:
  explicit RingAnalyzer(RingPtr r, const SizeCaps& caps = default_caps());

  const RingPtr& ring() const { return ring_; }
  const Verdict& check(const std::string& property);
  std::vector<Verdict> check_all();

  const std::vector<IdealHandle>& two_sided_ideals();

 private:
  Verdict run(const std::string& property);
  const std::vector<elem_t>& right_ideal_of(elem_t idem);  // eR as sorted set
  // Finds an idempotent e with eR equal to the set, or nullopt.
  std::optional<elem_t> idempotent_generating(const std::vector<elem_t>& right_ideal);
  Verdict annihilator_summand_check(const std::string& property, bool principal_only,
                                    bool elementwise);

  RingPtr ring_;
  SizeCaps caps_;
  std::optional<std::vector<IdealHandle>> ideals_;
  std::map<elem_t, std::vector<elem_t>> right_ideals_;
  std::map<std::string, Verdict> memo_;
};

Verdict check_module_property(const ModulePtr& m, const std::string& property,
                              const SizeCaps& caps = default_caps());
Verdict check_ring_property(const RingPtr& r, const std::string& property,
                            const SizeCaps& caps = default_caps());

}  // namespace finalg
