#include "cohwork/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohwork {

namespace {

std::string deg_str(int n) { return std::to_string(n); }

// Block that copies `count` consecutive columns starting at col_off into
// consecutive rows starting at row_off, scaled by c.
SpMat sp_select_block(int rows, int cols, int row_off, int col_off, int count,
                      uint32_t c) {
  SpMat m(rows, cols);
  if (c == 0)
    return m;
  for (int i = 0; i < count; ++i) {
    SparseVec col;
    col.push(row_off + i, c);
    m.col[static_cast<size_t>(col_off + i)] = std::move(col);
  }
  return m;
}

SpMat columns_matrix(int dim, const std::vector<SparseVec> &cols) {
  SpMat m(dim, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    m.col[j] = cols[j];
  return m;
}

} // namespace

Complex::Complex(Ring R, int lo, std::vector<FinMod> mods,
                 std::vector<ModHom> diffs)
    : R_(R), lo_(lo), mods_(std::move(mods)), diffs_(std::move(diffs)),
      cache_(std::make_shared<Cache>()) {
  size_t want = mods_.empty() ? 0 : mods_.size() - 1;
  if (diffs_.size() != want)
    throw std::invalid_argument("complex: need one differential per adjacent "
                                "pair of degrees");
  for (const auto &m : mods_)
    if (!(m.ring() == R_))
      throw std::invalid_argument("complex: mixed rings");
  for (size_t i = 0; i < diffs_.size(); ++i) {
    if (!diffs_[i].domain().same_presentation(mods_[i]) ||
        !diffs_[i].codomain().same_presentation(mods_[i + 1]))
      throw std::invalid_argument("complex: differential endpoints mismatch "
                                  "at degree " +
                                  deg_str(lo_ + static_cast<int>(i)));
  }
  for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!compose(diffs_[i + 1], diffs_[i]).is_zero())
      throw std::invalid_argument("complex: d.d != 0 at degree " +
                                  deg_str(lo_ + static_cast<int>(i)));
  }
}

Complex Complex::zero(Ring R) { return Complex(R, 0, {}, {}); }

Complex Complex::concentrated(FinMod m, int degree) {
  Ring R = m.ring();
  std::vector<FinMod> mods;
  mods.push_back(std::move(m));
  return Complex(R, degree, std::move(mods), {});
}

Complex Complex::two_term(const ModHom &d, int lo_degree) {
  Ring R = d.domain().ring();
  return Complex(R, lo_degree, {d.domain(), d.codomain()}, {d});
}

FinMod Complex::module(int n) const {
  if (!in_window(n))
    return FinMod::zero(R_);
  return mods_[static_cast<size_t>(n - lo_)];
}

ModHom Complex::d(int n) const {
  if (n >= lo_ && n < hi())
    return diffs_[static_cast<size_t>(n - lo_)];
  return ModHom::zero(module(n), module(n + 1));
}

int Complex::ngens(int n) const {
  if (!in_window(n))
    return 0;
  return mods_[static_cast<size_t>(n - lo_)].ngens();
}

long long Complex::im_size_log2(int n) const {
  if (n < lo_ || n >= hi())
    return 0;
  auto it = cache_->im_size.find(n);
  if (it != cache_->im_size.end())
    return it->second;
  Submodule im(module(n + 1), diffs_[static_cast<size_t>(n - lo_)].matrix().col);
  long long s = im.size_log2();
  cache_->im_size.emplace(n, s);
  return s;
}

long long Complex::h_size_log2(int n) const {
  if (!in_window(n))
    return 0;
  // |H^n| = |X^n| / (|im d^n| * |im d^{n-1}|) by rank-nullity over the
  // finite groups involved.
  return module(n).size_log2() - im_size_log2(n) - im_size_log2(n - 1);
}

bool Complex::is_acyclic() const {
  for (int n = lo(); n <= hi(); ++n)
    if (h_size_log2(n) != 0)
      return false;
  return true;
}

const Subquotient &Complex::h_subq(int n) const {
  auto it = cache_->h.find(n);
  if (it != cache_->h.end())
    return it->second;
  std::vector<SparseVec> num = hom_kernel_gens(d(n));
  std::vector<SparseVec> den = d(n - 1).matrix().col;
  for (const auto &r : module(n).relation_columns())
    den.push_back(r);
  auto res = cache_->h.emplace(
      n, Subquotient(R_, ngens(n), std::move(num), std::move(den)));
  return res.first->second;
}

Complex shift(const Complex &x, int n) {
  const Ring &R = x.ring();
  if (x.lo() > x.hi())
    return Complex::zero(R);
  std::vector<FinMod> mods;
  std::vector<ModHom> diffs;
  for (int i = x.lo(); i <= x.hi(); ++i)
    mods.push_back(x.module(i));
  for (int i = x.lo(); i < x.hi(); ++i)
    diffs.push_back(n % 2 == 0 ? x.d(i) : hom_neg(x.d(i)));
  return Complex(R, x.lo() - n, std::move(mods), std::move(diffs));
}

Complex direct_sum(const Complex &a, const Complex &b) {
  const Ring &R = a.ring();
  if (a.lo() > a.hi())
    return b;
  if (b.lo() > b.hi())
    return a;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::vector<FinMod> mods;
  std::vector<ModHom> diffs;
  for (int i = lo; i <= hi; ++i)
    mods.push_back(direct_sum(a.module(i), b.module(i)));
  for (int i = lo; i < hi; ++i)
    diffs.push_back(hom_diag_sum(a.d(i), b.d(i)));
  return Complex(R, lo, std::move(mods), std::move(diffs));
}

bool same_complex(const Complex &a, const Complex &b) {
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n) {
    if (!a.module(n).same_presentation(b.module(n)))
      return false;
    if (!a.d(n).equals(b.d(n)))
      return false;
  }
  return true;
}

ChainMap::ChainMap(Complex src, Complex dst, std::map<int, SpMat> comps)
    : src_(std::move(src)), dst_(std::move(dst)) {
  for (auto &[n, m] : comps) {
    if (m.rows != dst_.ngens(n) || m.cols != src_.ngens(n))
      throw std::invalid_argument("chain map: component shape mismatch at "
                                  "degree " +
                                  deg_str(n));
    if (!m.is_zero())
      comps_.emplace(n, std::move(m));
  }
  int lo = std::min(src_.lo(), dst_.lo()) - 1;
  int hi = std::max(src_.hi(), dst_.hi());
  for (int n = lo; n <= hi; ++n) {
    if (!compose(dst_.d(n), hom(n)).equals(compose(hom(n + 1), src_.d(n))))
      throw std::invalid_argument("chain map: does not commute with the "
                                  "differentials at degree " +
                                  deg_str(n));
  }
}

ChainMap ChainMap::identity(const Complex &x) { return scalar(x, 1); }

ChainMap ChainMap::zero_map(Complex src, Complex dst) {
  return ChainMap(std::move(src), std::move(dst), {});
}

ChainMap ChainMap::scalar(const Complex &x, uint32_t c) {
  std::map<int, SpMat> comps;
  for (int n = x.lo(); n <= x.hi(); ++n)
    comps.emplace(n, sp_scale(x.ring(), c, SpMat::identity(x.ngens(n))));
  return ChainMap(x, x, std::move(comps));
}

SpMat ChainMap::mat(int n) const {
  auto it = comps_.find(n);
  if (it != comps_.end())
    return it->second;
  return SpMat(dst_.ngens(n), src_.ngens(n));
}

ModHom ChainMap::hom(int n) const {
  return ModHom(src_.module(n), dst_.module(n), mat(n));
}

bool ChainMap::is_zero() const {
  for (const auto &[n, m] : comps_)
    if (!hom(n).is_zero())
      return false;
  return true;
}

ChainMap compose(const ChainMap &g, const ChainMap &f) {
  if (!same_complex(f.dst(), g.src()))
    throw std::invalid_argument("chain map compose: middle complex mismatch");
  const Ring &R = f.src().ring();
  std::map<int, SpMat> comps;
  int lo = std::max(f.src().lo(), g.dst().lo());
  int hi = std::min(f.src().hi(), g.dst().hi());
  for (int n = lo; n <= hi; ++n)
    comps.emplace(n, sp_mul(R, g.mat(n), f.mat(n)));
  return ChainMap(f.src(), g.dst(), std::move(comps));
}

ChainMap shift(const ChainMap &u, int n) {
  std::map<int, SpMat> comps;
  for (int i = u.src().lo() - n; i <= u.src().hi() - n; ++i)
    comps.emplace(i, u.mat(i + n));
  return ChainMap(shift(u.src(), n), shift(u.dst(), n), std::move(comps));
}

ChainMap direct_sum(const ChainMap &a, const ChainMap &b) {
  Complex src = direct_sum(a.src(), b.src());
  Complex dst = direct_sum(a.dst(), b.dst());
  std::map<int, SpMat> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    // Block positions must track the direct-sum layout, which pads both
    // summands to the union window.
    SpMat am = a.src().in_window(n) || a.dst().in_window(n)
                   ? a.mat(n)
                   : SpMat(a.dst().ngens(n), a.src().ngens(n));
    comps.emplace(n, sp_diag_sum(am, b.mat(n)));
  }
  return ChainMap(std::move(src), std::move(dst), std::move(comps));
}

ChainMap stack_map(const ChainMap &a, const ChainMap &b) {
  if (!same_complex(a.src(), b.src()))
    throw std::invalid_argument("stack_map: sources differ");
  Complex dst = direct_sum(a.dst(), b.dst());
  std::map<int, SpMat> comps;
  for (int n = a.src().lo(); n <= a.src().hi(); ++n)
    comps.emplace(n, sp_vcat(a.mat(n), b.mat(n)));
  return ChainMap(a.src(), std::move(dst), std::move(comps));
}

ChainMap sum_proj(const Complex &a, const Complex &b, int which) {
  if (which != 0 && which != 1)
    throw std::invalid_argument("sum_proj: which must be 0 or 1");
  Complex s = direct_sum(a, b);
  const Complex &t = which == 0 ? a : b;
  std::map<int, SpMat> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    int ra = a.ngens(n);
    int rb = b.ngens(n);
    int off = which == 0 ? 0 : ra;
    int rr = which == 0 ? ra : rb;
    SpMat m(rr, ra + rb);
    for (int j = 0; j < rr; ++j)
      m.col[static_cast<size_t>(off + j)].push(j, 1);
    comps.emplace(n, std::move(m));
  }
  return ChainMap(std::move(s), t, std::move(comps));
}

bool chain_maps_equal(const ChainMap &a, const ChainMap &b) {
  if (!same_complex(a.src(), b.src()) || !same_complex(a.dst(), b.dst()))
    return false;
  int lo = std::min(a.src().lo(), a.dst().lo());
  int hi = std::max(a.src().hi(), a.dst().hi());
  for (int n = lo; n <= hi; ++n)
    if (!a.hom(n).equals(b.hom(n)))
      return false;
  return true;
}

Complex cone(const ChainMap &u) {
  const Complex &x = u.src();
  const Complex &y = u.dst();
  const Ring &R = x.ring();
  bool xe = x.lo() > x.hi();
  bool ye = y.lo() > y.hi();
  if (xe && ye)
    return Complex::zero(R);
  int lo = xe ? y.lo() : (ye ? x.lo() - 1 : std::min(y.lo(), x.lo() - 1));
  int hi = xe ? y.hi() : (ye ? x.hi() - 1 : std::max(y.hi(), x.hi() - 1));
  std::vector<FinMod> mods;
  std::vector<ModHom> diffs;
  for (int i = lo; i <= hi; ++i)
    mods.push_back(direct_sum(y.module(i), x.module(i + 1)));
  for (int i = lo; i < hi; ++i) {
    SpMat zero(x.ngens(i + 2), y.ngens(i));
    SpMat block =
        sp_block2x2(R, y.d(i).matrix(), u.mat(i + 1), zero,
                    sp_scale(R, R.neg(1), x.d(i + 1).matrix()));
    diffs.emplace_back(mods[static_cast<size_t>(i - lo)],
                       mods[static_cast<size_t>(i - lo + 1)], block);
  }
  return Complex(R, lo, std::move(mods), std::move(diffs));
}

ChainMap cone_functorial(const ChainMap &g, const ChainMap &f,
                         const ChainMap &u, const ChainMap &v) {
  if (!same_complex(u.src(), f.src()) || !same_complex(u.dst(), g.src()) ||
      !same_complex(v.src(), f.dst()) || !same_complex(v.dst(), g.dst()))
    throw std::invalid_argument("cone_functorial: square endpoints mismatch");
  if (!chain_maps_equal(compose(g, u), compose(v, f)))
    throw std::invalid_argument("cone_functorial: square does not commute");
  Complex cu = cone(u);
  Complex cv = cone(v);
  std::map<int, SpMat> comps;
  for (int n = cu.lo(); n <= cu.hi(); ++n)
    comps.emplace(n, sp_diag_sum(g.mat(n), f.mat(n + 1)));
  return ChainMap(std::move(cu), std::move(cv), std::move(comps));
}

Triangle canonical_triangle(const ChainMap &u) {
  const Complex &x = u.src();
  const Complex &y = u.dst();
  const Ring &R = x.ring();
  Complex z = cone(u);
  std::map<int, SpMat> jc, dc;
  for (int n = z.lo(); n <= z.hi(); ++n) {
    int gy = y.ngens(n);
    int gx1 = x.ngens(n + 1);
    jc.emplace(n, sp_select_block(z.ngens(n), gy, 0, 0, gy, 1));
    dc.emplace(n, sp_select_block(gx1, z.ngens(n), 0, gy, gx1, R.neg(1)));
  }
  ChainMap j(y, z, std::move(jc));
  ChainMap delta(z, shift(x, 1), std::move(dc));
  return Triangle{x, y, std::move(z), u, std::move(j), std::move(delta)};
}

ModHom induced_h(const ChainMap &u, int n) {
  return induced_hom(u.src().h_subq(n), u.dst().h_subq(n), u.mat(n));
}

bool is_quasi_iso(const ChainMap &u) { return cone(u).is_acyclic(); }

bool is_quasi_iso_by_h(const ChainMap &u) {
  int lo = std::min(u.src().lo(), u.dst().lo());
  int hi = std::max(u.src().hi(), u.dst().hi());
  for (int n = lo; n <= hi; ++n) {
    HomParts p = hom_parts(induced_h(u, n));
    if (p.kernel.size_log2() != 0 || !p.cokernel.is_zero())
      return false;
  }
  return true;
}

bool is_quasi_iso_range(const ChainMap &u, int n_lo, int n_hi) {
  const Complex &x = u.src();
  const Complex &y = u.dst();
  const Ring &R = x.ring();
  for (int n = n_lo; n <= n_hi; ++n) {
    if (x.h_size_log2(n) != y.h_size_log2(n))
      return false;
    if (y.h_size_log2(n) == 0)
      continue;
    // Witness surjectivity of H^n(u): every target generator y must be
    // u(x) + d_Y(w) for a cocycle x, found by one joint solve over
    // (x, w, relation slack):
    //   [ u    d_Y  relY  0     ] (x)   (y)
    //   [ d_X  0    0     relX1 ] (w) = (0)
    int gy = y.ngens(n);
    int gx1 = x.ngens(n + 1);
    SpMat rel_y = columns_matrix(gy, y.module(n).relation_columns());
    SpMat rel_x1 = columns_matrix(gx1, x.module(n + 1).relation_columns());
    SpMat top = sp_hcat(sp_hcat(u.mat(n), y.d(n - 1).matrix()),
                        sp_hcat(rel_y, SpMat(gy, rel_x1.cols)));
    SpMat bottom =
        sp_hcat(sp_hcat(x.d(n).matrix(), SpMat(gx1, y.ngens(n - 1))),
                sp_hcat(SpMat(gx1, rel_y.cols), rel_x1));
    LinearSystem sys(R, sp_vcat(top, bottom));
    const Subquotient &hy = y.h_subq(n);
    int t = hy.module().ngens();
    for (int i = 0; i < t; ++i) {
      std::vector<uint32_t> e(static_cast<size_t>(t), 0u);
      e[static_cast<size_t>(i)] = 1;
      if (!sys.solve(hy.rep(e)))
        return false;
    }
  }
  return true;
}

namespace {

// Exactness of H(a) -> H(b) -> H(c) around a triangle A -> B -> C -> A[1]
// whose connecting map is given degreewise by conn(r): C^r -> A^{r+1}.
CheckReport les_verify(const Complex &a, const Complex &b, const Complex &c,
                       const ChainMap &ab, const ChainMap &bc,
                       const std::function<SpMat(int)> &conn,
                       const std::string &label) {
  CheckReport rep;
  int lo = std::min({a.lo(), b.lo(), c.lo()}) - 1;
  int hi = std::max({a.hi(), b.hi(), c.hi()}) + 1;
  std::map<int, ModHom> hab, hbc, hca;
  auto get = [](std::map<int, ModHom> &cache, int r,
                const std::function<ModHom(int)> &mk) -> const ModHom & {
    auto it = cache.find(r);
    if (it == cache.end())
      it = cache.emplace(r, mk(r)).first;
    return it->second;
  };
  std::function<ModHom(int)> mkab = [&](int r) {
    return induced_hom(a.h_subq(r), b.h_subq(r), ab.mat(r));
  };
  std::function<ModHom(int)> mkbc = [&](int r) {
    return induced_hom(b.h_subq(r), c.h_subq(r), bc.mat(r));
  };
  std::function<ModHom(int)> mkca = [&](int r) {
    return induced_hom(c.h_subq(r), a.h_subq(r + 1), conn(r));
  };
  auto fail = [&](int r, const std::string &spot, const ModHom &f,
                  const ModHom &g) {
    rep.ok = false;
    rep.detail = label + ": long exact sequence fails at H^" + deg_str(r) +
                 " of " + spot + " (im size 2^" +
                 std::to_string(hom_parts(f).image.size_log2()) +
                 ", ker size 2^" +
                 std::to_string(hom_parts(g).kernel.size_log2()) + ")";
  };
  for (int r = lo; r <= hi && rep.ok; ++r) {
    const ModHom &fa = get(hca, r - 1, mkca);
    const ModHom &ga = get(hab, r, mkab);
    if (!is_exact_at(fa, ga)) {
      fail(r, "the first term", fa, ga);
      break;
    }
    const ModHom &gb = get(hbc, r, mkbc);
    if (!is_exact_at(ga, gb)) {
      fail(r, "the second term", ga, gb);
      break;
    }
    const ModHom &gc = get(hca, r, mkca);
    if (!is_exact_at(gb, gc)) {
      fail(r, "the third term", gb, gc);
      break;
    }
  }
  return rep;
}

} // namespace

CheckReport triangle_les_verify(const ChainMap &u) {
  Triangle tri = canonical_triangle(u);
  auto conn = [&](int r) { return tri.delta.mat(r); };
  return les_verify(tri.x, tri.y, tri.z, tri.u, tri.j, conn, "triangle");
}

CheckReport composite_cone_triangle(const ChainMap &u, const ChainMap &v) {
  if (!same_complex(u.dst(), v.src()))
    throw std::invalid_argument("composite_cone_triangle: maps not "
                                "composable");
  ChainMap vu = compose(v, u);
  ChainMap ab = cone_functorial(v, ChainMap::identity(u.src()), u, vu);
  ChainMap bc = cone_functorial(ChainMap::identity(v.dst()), u, vu, v);
  const Complex &a = ab.src();
  const Complex &c = bc.dst();
  const Complex &y = u.dst();
  const Complex &z = v.dst();
  auto conn = [&](int r) {
    // Cone(v)^r = Z^r + Y^{r+1} -> Cone(u)^{r+1} = Y^{r+1} + X^{r+2}.
    return sp_select_block(a.ngens(r + 1), c.ngens(r), 0, z.ngens(r),
                           y.ngens(r + 1), 1);
  };
  return les_verify(a, ab.dst(), c, ab, bc, conn, "composite cone");
}

SesConeMaps ses_cone_maps(const ChainMap &u, const ChainMap &v) {
  if (!same_complex(u.dst(), v.src()))
    throw std::invalid_argument("ses_cone_maps: maps not composable");
  const Complex &x = u.src();
  const Complex &y = u.dst();
  const Complex &z = v.dst();
  int lo = std::min({x.lo(), y.lo(), z.lo()});
  int hi = std::max({x.hi(), y.hi(), z.hi()});
  for (int n = lo; n <= hi; ++n) {
    ModHom un = u.hom(n);
    ModHom vn = v.hom(n);
    if (Submodule(x.module(n), hom_kernel_gens(un)).size_log2() != 0)
      throw std::invalid_argument("ses_cone_maps: first map not injective "
                                  "at degree " +
                                  deg_str(n));
    if (!is_exact_at(un, vn))
      throw std::invalid_argument("ses_cone_maps: sequence not exact at the "
                                  "middle term in degree " +
                                  deg_str(n));
    if (Submodule(z.module(n), vn.matrix().col).size_log2() !=
        z.module(n).size_log2())
      throw std::invalid_argument("ses_cone_maps: second map not surjective "
                                  "at degree " +
                                  deg_str(n));
  }
  Complex cu = cone(u);
  Complex cvm = shift(cone(v), -1);
  std::map<int, SpMat> qc, lc;
  for (int n = cu.lo(); n <= cu.hi(); ++n)
    qc.emplace(n, sp_hcat(v.mat(n), SpMat(z.ngens(n), x.ngens(n + 1))));
  for (int n = x.lo(); n <= x.hi(); ++n)
    lc.emplace(n, sp_vcat(SpMat(z.ngens(n - 1), x.ngens(n)), u.mat(n)));
  ChainMap q(std::move(cu), z, std::move(qc));
  ChainMap l(x, std::move(cvm), std::move(lc));
  return SesConeMaps{std::move(q), std::move(l)};
}

CheckReport cube_verify(const Cube &cube) {
  const ChainMap &f = cube.f, &g = cube.g, &u = cube.u;
  const ChainMap &f1 = cube.f1, &g1 = cube.g1, &u1 = cube.u1;
  const ChainMap &v = cube.v, &vhat = cube.vhat;
  const Complex &c0 = f.src();
  const Complex &x = f.dst(), &y = u.dst();
  const Complex &x1 = f1.dst(), &y1 = u1.dst();
  if (!same_complex(g.src(), c0) || !same_complex(f1.src(), c0) ||
      !same_complex(g1.src(), c0) || !same_complex(u.src(), x) ||
      !same_complex(g.dst(), y) || !same_complex(u1.src(), x1) ||
      !same_complex(g1.dst(), y1) || !same_complex(v.src(), x) ||
      !same_complex(v.dst(), x1) || !same_complex(vhat.src(), y) ||
      !same_complex(vhat.dst(), y1))
    throw std::invalid_argument("cube_verify: vertex complexes mismatch");
  if (!chain_maps_equal(compose(u, f), g))
    throw std::invalid_argument("cube_verify: top face does not commute");
  if (!chain_maps_equal(compose(u1, f1), g1))
    throw std::invalid_argument("cube_verify: bottom face does not commute");
  if (!chain_maps_equal(compose(v, f), f1))
    throw std::invalid_argument("cube_verify: front face does not commute");
  if (!chain_maps_equal(compose(vhat, g), g1))
    throw std::invalid_argument("cube_verify: back face does not commute");
  if (!chain_maps_equal(compose(vhat, u), compose(u1, v)))
    throw std::invalid_argument("cube_verify: right face does not commute");

  ChainMap idc = ChainMap::identity(c0);
  ChainMap row1a = cone_functorial(u, idc, f, g);
  ChainMap row1b = cone_functorial(ChainMap::identity(y), f, g, u);
  ChainMap row2a = cone_functorial(u1, idc, f1, g1);
  ChainMap row2b = cone_functorial(ChainMap::identity(y1), f1, g1, u1);
  ChainMap col1a = cone_functorial(v, idc, f, f1);
  ChainMap col1b = cone_functorial(ChainMap::identity(x1), f, f1, v);
  ChainMap col2a = cone_functorial(vhat, idc, g, g1);
  ChainMap col2b = cone_functorial(ChainMap::identity(y1), g, g1, vhat);
  ChainMap cross = cone_functorial(vhat, v, u, u1);
  ChainMap bcross = cone_functorial(u1, u, v, vhat);

  CheckReport rep;
  auto square = [&](const ChainMap &lhs, const ChainMap &rhs,
                    const std::string &which) {
    if (rep.ok && !chain_maps_equal(lhs, rhs)) {
      rep.ok = false;
      rep.detail = "cone diagram square does not commute: " + which;
    }
  };
  square(compose(col2a, row1a), compose(row2a, col1a),
         "Cone(f) to Cone(g1)");
  square(compose(cross, row1b), compose(row2b, col2a),
         "Cone(g) to Cone(u1)");
  square(compose(col2b, row2a), compose(bcross, col1b),
         "Cone(f1) to Cone(vhat)");

  // The two squares against the shifted fourth column: conn composites,
  // checked as raw degreewise matrices.
  const Ring &R = c0.ring();
  auto conn_into = [&](const Complex &second_src, const Complex &first_cone,
                       const Complex &this_cone, int r) {
    // (b, a) -> (a, 0): Cone^r = B^r + A^{r+1} -> Cone(first)^{r+1}.
    return sp_select_block(first_cone.ngens(r + 1), this_cone.ngens(r), 0,
                           second_src.ngens(r),
                           this_cone.ngens(r) - second_src.ngens(r), 1);
  };
  int lo = std::min({row1b.dst().lo(), bcross.src().lo()});
  int hi = std::max({row1b.dst().hi(), bcross.src().hi()});
  for (int r = lo; r <= hi && rep.ok; ++r) {
    SpMat l1 = sp_mul(R, conn_into(y1, row2a.src(), cross.dst(), r),
                      cross.mat(r));
    SpMat r1 = sp_mul(R, col1a.mat(r + 1),
                      conn_into(y, row1a.src(), cross.src(), r));
    ModHom lh(cross.src().module(r), row2a.src().module(r + 1), l1);
    ModHom rh(cross.src().module(r), row2a.src().module(r + 1), r1);
    if (!lh.equals(rh)) {
      rep.ok = false;
      rep.detail = "cone diagram square does not commute: Cone(u) to "
                   "Cone(f1)[1] at degree " +
                   deg_str(r);
      break;
    }
    SpMat l2 = sp_mul(R, conn_into(y1, col2a.src(), bcross.dst(), r),
                      bcross.mat(r));
    SpMat r2 = sp_mul(R, row1a.mat(r + 1),
                      conn_into(x1, col1a.src(), bcross.src(), r));
    ModHom lh2(bcross.src().module(r), col2a.src().module(r + 1), l2);
    ModHom rh2(bcross.src().module(r), col2a.src().module(r + 1), r2);
    if (!lh2.equals(rh2)) {
      rep.ok = false;
      rep.detail = "cone diagram square does not commute: Cone(v) to "
                   "Cone(g)[1] at degree " +
                   deg_str(r);
      break;
    }
  }
  if (!rep.ok)
    return rep;

  auto round = [&](const ChainMap &ab, const ChainMap &bc,
                   const Complex &second_src, const std::string &label) {
    auto conn = [&](int r) {
      return conn_into(second_src, ab.src(), bc.dst(), r);
    };
    return les_verify(ab.src(), ab.dst(), bc.dst(), ab, bc, conn, label);
  };
  for (const CheckReport &r :
       {round(row1a, row1b, y, "cube row 1"),
        round(row2a, row2b, y1, "cube row 2"),
        round(col1a, col1b, x1, "cube column 1"),
        round(col2a, col2b, y1, "cube column 2")}) {
    if (!r.ok)
      return r;
  }
  return rep;
}

} // namespace cohwork
