#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/ring.hpp"
#include "finalg/verdict.hpp"

namespace finalg {

enum class Sidedness { left, right, two_sided };

std::string to_string(Sidedness s);

// Ideal of a fixed ring, held as a canonical sorted element set.  The
// constructor verifies additive closure and closure under multiplication on
// the declared side(s), so a handle is always a genuine ideal.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<elem_t> elements, Sidedness side);

  const RingPtr& ring() const { return ring_; }
  const std::vector<elem_t>& elements() const { return elems_; }
  Sidedness sidedness() const { return side_; }
  std::uint64_t order() const { return elems_.size(); }
  bool contains(elem_t x) const;
  bool is_zero() const { return elems_.size() == 1; }
  bool is_full() const { return elems_.size() == ring_->order(); }

  bool operator==(const IdealHandle& o) const {
    return ring_ == o.ring_ && elems_ == o.elems_;
  }

 private:
  RingPtr ring_;
  std::vector<elem_t> elems_;
  Sidedness side_;
};

IdealHandle zero_ideal(const RingPtr& r);
IdealHandle full_ideal(const RingPtr& r);

// Closure of the generators under addition and multiplication by arbitrary
// ring elements on the declared side(s).  Empty generator set gives {0}.
IdealHandle ideal_generated(const RingPtr& r, const std::vector<elem_t>& gens,
                            Sidedness side, const SizeCaps& caps = default_caps());

// The same closure as a sorted raw element set, for callers that enumerate
// many generators and only construct (validated) handles for the distinct
// closures they keep.
std::vector<elem_t> ideal_closure(const RingPtr& r, const std::vector<elem_t>& gens,
                                  Sidedness side, const SizeCaps& caps = default_caps());

// Distinct principal two-sided ideals RaR, sorted by size then element set.
std::vector<IdealHandle> principal_two_sided_ideals(const RingPtr& r,
                                                    const SizeCaps& caps = default_caps());

// Every two-sided ideal, computed as the join-closure (pairwise sums) of the
// principal two-sided ideals, sorted by size then element set.  Throws
// SizeCapExceeded if the ideal count passes caps.ring.
std::vector<IdealHandle> all_two_sided_ideals(const RingPtr& r,
                                              const SizeCaps& caps = default_caps());

// l_R(X) = {a : a x = 0 for all x in X}.  Always a left ideal; the handle is
// marked two_sided when the set happens to be closed on the right as well
// (automatic when X spans a right ideal).  Mirrored for r_R(X).
IdealHandle left_annihilator_in_ring(const RingPtr& r, const std::vector<elem_t>& xs);
IdealHandle right_annihilator_in_ring(const RingPtr& r, const std::vector<elem_t>& xs);

// Right s-unital: for each a in I there is x in I with a x = a.  Left
// s-unital mirrors with x a = a.  Centrally s-unital: for each a in I some z
// in I central in the whole ring satisfies a z = a (and then z a = a too).
// Certificates map each a to its chosen unit; failures name the stuck element
// and the exhausted candidate set.
Verdict is_right_s_unital(const IdealHandle& i);
Verdict is_left_s_unital(const IdealHandle& i);
Verdict is_centrally_s_unital(const IdealHandle& i);

}  // namespace finalg
