#pragma once

#include <map>
#include <vector>

#include "finalg/module.hpp"

namespace finalg {

// R-linear map between right modules over one ring, stored as the matrix of
// additive-generator images: f(g_i) = sum_j mat[i][j] * h_j with entries
// reduced into [0, e_j).  Two homs are equal iff their canonical matrices are.
// The constructor rejects matrices that do not define a linear map.
class ModuleHom {
 public:
  // mat is row-major source_rank x target_rank.
  ModuleHom(ModulePtr src, ModulePtr tgt, std::vector<std::uint32_t> mat);

  const ModulePtr& source() const { return src_; }
  const ModulePtr& target() const { return tgt_; }
  const std::vector<std::uint32_t>& matrix() const { return mat_; }
  elem_t generator_image(std::size_t i) const { return gen_images_[i]; }

  elem_t apply(elem_t m) const;
  bool is_zero() const;
  bool is_monomorphism() const;  // trivial kernel
  std::vector<elem_t> kernel_elements() const;  // sorted ascending
  std::vector<elem_t> image_elements() const;   // sorted ascending

  bool operator==(const ModuleHom& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && mat_ == o.mat_;
  }

 private:
  ModulePtr src_, tgt_;
  std::vector<std::uint32_t> mat_;
  std::vector<elem_t> gen_images_;
};

ModuleHom identity_hom(const ModulePtr& m);
ModuleHom zero_hom(const ModulePtr& src, const ModulePtr& tgt);
// f after g: the hom m -> f(g(m)).  g's target must be f's source module.
ModuleHom compose(const ModuleHom& f, const ModuleHom& g);

// All R-linear maps src -> tgt, deterministically ordered with the zero hom
// first.  Additive homs are parametrized componentwise through
// Hom(Z_d, Z_e) = Z_gcd(d,e) and linearity is imposed as congruences on the
// parameters; the solution count is capped before any hom is materialized.
std::vector<ModuleHom> hom_group(const ModulePtr& src, const ModulePtr& tgt,
                                 const SizeCaps& caps = default_caps());

// S = End(M) presented as a finite ring: pointwise addition, composition
// (f*g)(m) = f(g(m)) as multiplication, so S acts on the left of M.  Ring
// element s <-> homs()[s], a bijection respecting both operations.
class EndoRing {
 public:
  explicit EndoRing(ModulePtr m, const SizeCaps& caps = default_caps());

  const RingPtr& ring() const { return ring_; }
  const ModulePtr& module() const { return module_; }
  const std::vector<ModuleHom>& homs() const { return homs_; }
  const ModuleHom& hom(elem_t s) const { return homs_[s]; }
  elem_t index_of(const ModuleHom& f) const;
  elem_t apply(elem_t s, elem_t m) const;  // homs()[s] applied to m

 private:
  ModulePtr module_;
  RingPtr ring_;
  std::vector<ModuleHom> homs_;
  std::map<std::vector<std::uint32_t>, elem_t> index_;
  std::vector<elem_t> table_;  // built when |S| * |M| is small
  bool table_built_ = false;
};

}  // namespace finalg
