#include "finalg/hom.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "finalg/errors.hpp"
#include "finalg/intlat.hpp"

namespace finalg {

namespace {

constexpr std::uint64_t kApplyTableLimit = 1ull << 22;  // |S| * |M| entries

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || a->same_presentation(*b);
}

elem_t unit_element(const AbelianGroup& g, std::size_t i) {
  std::vector<std::uint32_t> c(g.rank(), 0);
  c[i] = 1;
  return g.encode(c);
}

// Parametrization of Hom(src, tgt).  An additive map is a matrix a_{ij} with
// d_i * a_{ij} ≡ 0 (mod e_j), i.e. a_{ij} = t_{ij} * (e_j / gcd(d_i, e_j))
// with the parameter t_{ij} ranging over Z_gcd(d_i, e_j).  Linearity on
// (source generator, ring generator) pairs then becomes one congruence per
// target coordinate in the parameters, and the solution subgroup enumerates
// the hom group exactly.
struct HomSpace {
  std::vector<std::pair<std::size_t, std::size_t>> vars;  // (src gen, tgt coord)
  std::vector<std::uint32_t> moduli;                      // gcd(d_i, e_j) >= 2
  std::vector<std::uint32_t> scale;                       // e_j / gcd(d_i, e_j)
  std::optional<SubgroupBasis> sols;                      // engaged iff vars nonempty
  std::size_t tgt_rank = 0;

  std::uint64_t count() const { return sols ? sols->order() : 1; }
  std::vector<std::uint32_t> group_orders() const {
    return sols ? sols->orders() : std::vector<std::uint32_t>{};
  }
  std::vector<std::uint32_t> matrix_at(std::uint64_t idx) const {
    std::vector<std::uint32_t> mat(row_count_ * tgt_rank, 0);
    if (!sols) return mat;
    auto tvec = sols->element_at(idx);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      auto [i, j] = vars[v];
      // t < gcd and scale = e_j / gcd, so the product stays below e_j.
      mat[i * tgt_rank + j] =
          static_cast<std::uint32_t>(static_cast<std::uint64_t>(tvec[v]) * scale[v]);
    }
    return mat;
  }

  std::size_t row_count_ = 0;
};

HomSpace solve_hom_space(const ModulePtr& src, const ModulePtr& tgt) {
  if (!same_ring(src->ring(), tgt->ring()))
    throw RingMismatch("hom between modules over different rings");
  const AbelianGroup& gs = src->group();
  const AbelianGroup& gt = tgt->group();
  const FiniteRing& ring = *src->ring();
  std::size_t k = gs.rank(), l = gt.rank(), rk = ring.rank();

  HomSpace hs;
  hs.tgt_rank = l;
  hs.row_count_ = k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      std::uint32_t g = std::gcd(gs.orders()[i], gt.orders()[j]);
      if (g < 2) continue;
      hs.vars.emplace_back(i, j);
      hs.moduli.push_back(g);
      hs.scale.push_back(gt.orders()[j] / g);
    }
  if (hs.vars.empty()) return hs;

  // One congruence per (source generator i, ring generator t, target coord j').
  std::size_t cols = k * rk * l;
  IMat t(hs.vars.size(), cols);
  std::vector<std::uint32_t> bmod(cols, 1);
  for (std::size_t i = 0; i < k; ++i) {
    elem_t gi = unit_element(gs, i);
    for (std::size_t rt = 0; rt < rk; ++rt) {
      elem_t rho = unit_element(ring.group(), rt);
      elem_t lhs = src->act(gi, rho);  // g_i * rho in the source
      for (std::size_t jp = 0; jp < l; ++jp) {
        std::size_t col = (i * rk + rt) * l + jp;
        bmod[col] = gt.orders()[jp];
        for (std::size_t v = 0; v < hs.vars.size(); ++v) {
          auto [u, j] = hs.vars[v];
          long long c = 0;
          // f(g_i * rho) coordinate j': sum over source coords of lhs
          if (j == jp) c += static_cast<long long>(gs.coord(lhs, u)) * hs.scale[v];
          // (f(g_i) * rho) coordinate j': image generators h_j act by rho
          if (u == i)
            c -= static_cast<long long>(hs.scale[v]) *
                 gt.coord(tgt->act(unit_element(gt, j), rho), jp);
          t.at(v, col) = c;
        }
      }
    }
  }
  hs.sols.emplace(congruence_kernel(hs.moduli, t, bmod));
  return hs;
}

}  // namespace

ModuleHom::ModuleHom(ModulePtr src, ModulePtr tgt, std::vector<std::uint32_t> mat)
    : src_(std::move(src)), tgt_(std::move(tgt)), mat_(std::move(mat)) {
  if (!same_ring(src_->ring(), tgt_->ring()))
    throw RingMismatch("hom between modules over different rings");
  const AbelianGroup& gs = src_->group();
  const AbelianGroup& gt = tgt_->group();
  std::size_t k = gs.rank(), l = gt.rank();
  if (mat_.size() != k * l) throw std::invalid_argument("hom matrix has wrong shape");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) mat_[i * l + j] %= gt.orders()[j];

  gen_images_.resize(k);
  std::vector<std::uint32_t> row(l);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) row[j] = mat_[i * l + j];
    gen_images_[i] = gt.encode(row);
    if (gt.scale(gs.orders()[i], gen_images_[i]) != 0)
      throw std::logic_error("hom matrix violates generator orders");
  }
  // Linearity on (source generator, ring generator) pairs implies linearity
  // everywhere by biadditivity.
  const FiniteRing& ring = *src_->ring();
  for (std::size_t i = 0; i < k; ++i) {
    elem_t gi = unit_element(gs, i);
    for (std::size_t rt = 0; rt < ring.rank(); ++rt) {
      elem_t rho = unit_element(ring.group(), rt);
      if (apply(src_->act(gi, rho)) != tgt_->act(gen_images_[i], rho))
        throw std::logic_error("hom matrix does not define a linear map");
    }
  }
}

elem_t ModuleHom::apply(elem_t m) const {
  const AbelianGroup& gs = src_->group();
  const AbelianGroup& gt = tgt_->group();
  elem_t acc = 0;
  for (std::size_t i = 0; i < gs.rank(); ++i) {
    std::uint32_t c = gs.coord(m, i);
    if (c) acc = gt.add(acc, gt.scale(c, gen_images_[i]));
  }
  return acc;
}

bool ModuleHom::is_zero() const {
  return std::all_of(gen_images_.begin(), gen_images_.end(),
                     [](elem_t x) { return x == 0; });
}

bool ModuleHom::is_monomorphism() const {
  for (std::uint64_t m = 1; m < src_->order(); ++m)
    if (apply(static_cast<elem_t>(m)) == 0) return false;
  return true;
}

std::vector<elem_t> ModuleHom::kernel_elements() const {
  std::vector<elem_t> out;
  for (std::uint64_t m = 0; m < src_->order(); ++m)
    if (apply(static_cast<elem_t>(m)) == 0) out.push_back(static_cast<elem_t>(m));
  return out;
}

std::vector<elem_t> ModuleHom::image_elements() const {
  std::vector<elem_t> out;
  out.reserve(src_->order());
  for (std::uint64_t m = 0; m < src_->order(); ++m)
    out.push_back(apply(static_cast<elem_t>(m)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ModuleHom identity_hom(const ModulePtr& m) {
  std::size_t k = m->group().rank();
  std::vector<std::uint32_t> mat(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) mat[i * k + i] = 1;
  return ModuleHom(m, m, std::move(mat));
}

ModuleHom zero_hom(const ModulePtr& src, const ModulePtr& tgt) {
  return ModuleHom(src, tgt,
                   std::vector<std::uint32_t>(src->group().rank() * tgt->group().rank(), 0));
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
  if (g.target() != f.source())
    throw std::invalid_argument("compose: inner target is not outer source");
  const AbelianGroup& ga = g.source()->group();
  const AbelianGroup& gc = f.target()->group();
  std::size_t k = ga.rank(), l = gc.rank();
  std::vector<std::uint32_t> mat(k * l);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = gc.coords(f.apply(g.generator_image(i)));
    for (std::size_t j = 0; j < l; ++j) mat[i * l + j] = c[j];
  }
  return ModuleHom(g.source(), f.target(), std::move(mat));
}

std::vector<ModuleHom> hom_group(const ModulePtr& src, const ModulePtr& tgt,
                                 const SizeCaps& caps) {
  HomSpace hs = solve_hom_space(src, tgt);
  if (hs.count() > caps.endo)
    throw SizeCapExceeded("hom group size exceeds cap of " + std::to_string(caps.endo));
  std::vector<ModuleHom> out;
  out.reserve(hs.count());
  for (std::uint64_t idx = 0; idx < hs.count(); ++idx)
    out.emplace_back(src, tgt, hs.matrix_at(idx));
  return out;
}

EndoRing::EndoRing(ModulePtr m, const SizeCaps& caps) : module_(std::move(m)) {
  HomSpace hs = solve_hom_space(module_, module_);
  std::uint64_t n = hs.count();
  if (n > caps.endo)
    throw SizeCapExceeded("endomorphism ring order exceeds cap of " +
                          std::to_string(caps.endo));
  homs_.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    homs_.emplace_back(module_, module_, hs.matrix_at(idx));
    index_.emplace(homs_.back().matrix(), static_cast<elem_t>(idx));
  }

  AbelianGroup sg(hs.group_orders());
  if (sg.order() != n) throw std::logic_error("endomorphism basis is inconsistent");
  std::size_t r = sg.rank();
  std::vector<std::vector<elem_t>> products(r, std::vector<elem_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    elem_t gi = unit_element(sg, i);
    for (std::size_t j = 0; j < r; ++j) {
      elem_t gj = unit_element(sg, j);
      products[i][j] = index_.at(compose(homs_[gi], homs_[gj]).matrix());
    }
  }
  elem_t one = index_.at(identity_hom(module_).matrix());
  ring_ = std::make_shared<FiniteRing>(sg, std::move(products), one);

  if (n * module_->order() <= kApplyTableLimit) {
    table_.resize(n * module_->order());
    for (std::uint64_t s = 0; s < n; ++s)
      for (std::uint64_t x = 0; x < module_->order(); ++x)
        table_[s * module_->order() + x] = homs_[s].apply(static_cast<elem_t>(x));
    table_built_ = true;
  }
}

elem_t EndoRing::index_of(const ModuleHom& f) const {
  if (f.source() != module_ || f.target() != module_)
    throw std::invalid_argument("hom does not belong to this endomorphism ring");
  return index_.at(f.matrix());
}

elem_t EndoRing::apply(elem_t s, elem_t x) const {
  if (table_built_)
    return table_[static_cast<std::uint64_t>(s) * module_->order() + x];
  return homs_[s].apply(x);
}

}  // namespace finalg
