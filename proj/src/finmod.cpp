#include "cohwork/finmod.hpp"

#include <algorithm>
#include <cassert>

namespace cohwork {

namespace {

std::vector<uint32_t> dense_apply(const Ring &R, const Mat &m,
                                  const std::vector<uint32_t> &v) {
  assert(static_cast<int>(v.size()) == m.cols);
  std::vector<uint32_t> out(static_cast<size_t>(m.rows), 0u);
  for (int i = 0; i < m.rows; ++i) {
    uint32_t acc = 0;
    for (int j = 0; j < m.cols; ++j)
      acc = R.add(acc, R.mul(m.at(i, j), v[static_cast<size_t>(j)]));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

} // namespace

FinMod::FinMod(Ring R, std::vector<int> exps) : R_(R), exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 1 || e > R_.k())
      throw std::invalid_argument("FinMod: generator exponent out of range");
}

FinMod FinMod::free_module(Ring R, int ngens) {
  return FinMod(R, std::vector<int>(static_cast<size_t>(ngens), R.k()));
}

long long FinMod::size_log2() const {
  long long s = 0;
  for (int e : exps_)
    s += e;
  return s;
}

std::vector<uint32_t> FinMod::invariant_factors() const {
  std::vector<int> es = exps_;
  std::sort(es.begin(), es.end(), std::greater<int>());
  std::vector<uint32_t> out;
  out.reserve(es.size());
  for (int e : es)
    out.push_back(uint32_t{1} << e);
  return out;
}

bool FinMod::isomorphic(const FinMod &other) const {
  return R_ == other.R_ && invariant_factors() == other.invariant_factors();
}

std::vector<uint32_t> FinMod::reduce_elem(std::vector<uint32_t> v) const {
  assert(v.size() == exps_.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] &= (uint32_t{1} << exps_[i]) - 1;
  return v;
}

bool FinMod::elems_equal(const std::vector<uint32_t> &a,
                         const std::vector<uint32_t> &b) const {
  assert(a.size() == exps_.size() && b.size() == exps_.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (((a[i] - b[i]) & ((uint32_t{1} << exps_[i]) - 1)) != 0)
      return false;
  return true;
}

bool FinMod::elem_is_zero(const std::vector<uint32_t> &a) const {
  assert(a.size() == exps_.size());
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ((uint32_t{1} << exps_[i]) - 1)) != 0)
      return false;
  return true;
}

std::vector<uint32_t> FinMod::add_elems(const std::vector<uint32_t> &a,
                                        const std::vector<uint32_t> &b) const {
  std::vector<uint32_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = R_.add(a[i], b[i]);
  return reduce_elem(std::move(out));
}

std::vector<uint32_t> FinMod::scale_elem(uint32_t c,
                                         const std::vector<uint32_t> &a) const {
  std::vector<uint32_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = R_.mul(c, a[i]);
  return reduce_elem(std::move(out));
}

std::vector<std::vector<uint32_t>> FinMod::enumerate() const {
  if (size_log2() > 20)
    throw std::runtime_error("FinMod::enumerate: module too large");
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur(exps_.size(), 0u);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    for (; i < exps_.size(); ++i) {
      cur[i] += 1;
      if (cur[i] < (uint32_t{1} << exps_[i]))
        break;
      cur[i] = 0;
    }
    if (i == exps_.size())
      break;
  }
  return out;
}

std::vector<SparseVec> FinMod::relation_columns() const {
  std::vector<SparseVec> out;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < R_.k()) {
      SparseVec v;
      v.push(static_cast<int32_t>(i), R_.pow2(exps_[i]));
      out.push_back(std::move(v));
    }
  return out;
}

long long FinMod::corelation_log2() const {
  long long s = 0;
  for (int e : exps_)
    s += R_.k() - e;
  return s;
}

FinMod direct_sum(const FinMod &a, const FinMod &b) {
  assert(a.ring() == b.ring());
  std::vector<int> es = a.exps();
  es.insert(es.end(), b.exps().begin(), b.exps().end());
  return FinMod(a.ring(), std::move(es));
}

Presentation canonical_presentation(const Ring &R, int ngens,
                                    const Mat &rels) {
  assert(rels.rows == ngens);
  SnfResult snf = smith_normal_form(R, rels);
  // Diagonal entry 2^b at position i means generator i of the transformed
  // basis has order 2^b; rows past the diagonal are relation-free.
  std::vector<int> exp_of_row(static_cast<size_t>(ngens), R.k());
  int ndiag = std::min(ngens, rels.cols);
  for (int i = 0; i < ndiag; ++i) {
    uint32_t d = snf.d.at(i, i);
    exp_of_row[static_cast<size_t>(i)] = d == 0 ? R.k() : R.val(d);
  }
  // Smith ordering gives ascending exponents; reverse for largest-first.
  std::vector<int> kept;
  for (int i = ngens - 1; i >= 0; --i)
    if (exp_of_row[static_cast<size_t>(i)] >= 1)
      kept.push_back(i);

  std::vector<int> exps;
  exps.reserve(kept.size());
  for (int r : kept)
    exps.push_back(exp_of_row[static_cast<size_t>(r)]);
  FinMod mod(R, exps);

  Mat to_canon(static_cast<int>(kept.size()), ngens);
  Mat from_canon(ngens, static_cast<int>(kept.size()));
  for (size_t p = 0; p < kept.size(); ++p) {
    uint32_t mask = (uint32_t{1} << exps[p]) - 1;
    for (int j = 0; j < ngens; ++j) {
      to_canon.at(static_cast<int>(p), j) = snf.u.at(kept[p], j) & mask;
      from_canon.at(j, static_cast<int>(p)) = snf.u_inv.at(j, kept[p]);
    }
  }
  return Presentation{std::move(mod), std::move(to_canon),
                      std::move(from_canon)};
}

ModHom::ModHom(FinMod dom, FinMod cod, SpMat mat)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(mat)) {
  assert(dom_.ring() == cod_.ring());
  assert(m_.rows == cod_.ngens() && m_.cols == dom_.ngens());
  const Ring &R = dom_.ring();
  for (int j = 0; j < m_.cols; ++j) {
    SparseVec reduced;
    for (auto &[i, v] : m_.col[static_cast<size_t>(j)].e) {
      // Well-definedness: 2^{e_dom_j} kills the generator, so its image
      // must die under the same power.
      int need = cod_.exp_of(i) - dom_.exp_of(j);
      if (need > 0 && R.val(v) < need)
        throw std::invalid_argument("ModHom: matrix not well-defined");
      uint32_t vr = v & ((uint32_t{1} << cod_.exp_of(i)) - 1);
      if (vr != 0)
        reduced.push(i, vr);
    }
    m_.col[static_cast<size_t>(j)] = std::move(reduced);
  }
}

ModHom::ModHom(FinMod dom, FinMod cod, const Mat &mat)
    : ModHom(std::move(dom), std::move(cod), SpMat::from_dense(mat)) {}

ModHom ModHom::identity(const FinMod &m) {
  return ModHom(m, m, SpMat::identity(m.ngens()));
}

ModHom ModHom::zero(const FinMod &dom, const FinMod &cod) {
  return ModHom(dom, cod, SpMat(cod.ngens(), dom.ngens()));
}

std::vector<uint32_t> ModHom::apply(const std::vector<uint32_t> &v) const {
  assert(static_cast<int>(v.size()) == dom_.ngens());
  const Ring &R = dom_.ring();
  std::vector<uint32_t> out(static_cast<size_t>(cod_.ngens()), 0u);
  for (int j = 0; j < m_.cols; ++j) {
    uint32_t c = v[static_cast<size_t>(j)];
    if (c == 0)
      continue;
    for (auto &[i, w] : m_.col[static_cast<size_t>(j)].e)
      out[static_cast<size_t>(i)] = R.add(out[static_cast<size_t>(i)], R.mul(c, w));
  }
  return cod_.reduce_elem(std::move(out));
}

SparseVec ModHom::apply_sparse(const SparseVec &v) const {
  return sp_apply(dom_.ring(), m_, v);
}

bool ModHom::is_zero() const {
  for (auto &c : m_.col)
    if (!c.empty())
      return false; // entries are stored reduced mod codomain orders
  return true;
}

bool ModHom::equals(const ModHom &other) const {
  if (!dom_.same_presentation(other.dom_) ||
      !cod_.same_presentation(other.cod_))
    return false;
  for (int j = 0; j < m_.cols; ++j)
    if (m_.col[static_cast<size_t>(j)].e != other.m_.col[static_cast<size_t>(j)].e)
      return false;
  return true;
}

ModHom compose(const ModHom &g, const ModHom &f) {
  assert(f.codomain().same_presentation(g.domain()));
  return ModHom(f.domain(), g.codomain(),
                sp_mul(f.domain().ring(), g.matrix(), f.matrix()));
}

ModHom hom_add(const ModHom &a, const ModHom &b) {
  assert(a.domain().same_presentation(b.domain()));
  assert(a.codomain().same_presentation(b.codomain()));
  return ModHom(a.domain(), a.codomain(),
                sp_add(a.domain().ring(), a.matrix(), b.matrix()));
}

ModHom hom_sub(const ModHom &a, const ModHom &b) {
  return hom_add(a, hom_neg(b));
}

ModHom hom_scale(uint32_t c, const ModHom &h) {
  return ModHom(h.domain(), h.codomain(),
                sp_scale(h.domain().ring(), c, h.matrix()));
}

ModHom hom_neg(const ModHom &h) {
  const Ring &R = h.domain().ring();
  return hom_scale(R.neg(1), h);
}

ModHom hom_diag_sum(const ModHom &a, const ModHom &b) {
  return ModHom(direct_sum(a.domain(), b.domain()),
                direct_sum(a.codomain(), b.codomain()),
                sp_diag_sum(a.matrix(), b.matrix()));
}

Submodule::Submodule(FinMod ambient, std::vector<SparseVec> gens)
    : ambient_(std::move(ambient)), gens_(std::move(gens)),
      lat_(ambient_.ring(), ambient_.ngens()) {
  for (const auto &g : gens_)
    lat_.insert(g);
  for (const auto &r : ambient_.relation_columns())
    lat_.insert(r);
  // No canonicalize: sizes need only the pivot leads, and membership
  // reduction is coset-exact against any staircase of the lattice.
}

bool Submodule::contains(const SparseVec &v) const {
  return lat_.contains(v);
}

bool Submodule::contains_dense(const std::vector<uint32_t> &v) const {
  return contains(sv_from_dense(v));
}

long long Submodule::size_log2() const {
  return lat_.size_log2() - ambient_.corelation_log2();
}

bool Submodule::equals(const Submodule &other) const {
  return lat_.same_lattice(other.lat_);
}

bool Submodule::contains_all(const Submodule &other) const {
  for (const auto &[row, col] : other.lat_.pivots())
    if (!lat_.contains(col))
      return false;
  return true;
}

Submodule intersect(const Submodule &s1, const Submodule &s2) {
  assert(s1.ambient().same_presentation(s2.ambient()));
  const Ring &R = s1.ambient().ring();
  int n = s1.ambient().ngens();
  // Stack (u; u) for generators of the first lattice and (w; 0) for the
  // second; lattice elements with zero top have bottoms in both spans.
  Staircase st(R, 2 * n);
  for (const auto &[row, col] : s1.lattice().pivots()) {
    SparseVec both = col;
    for (auto &[i, v] : col.e)
      both.push(i + n, v);
    st.insert(both);
  }
  for (const auto &[row, col] : s2.lattice().pivots())
    st.insert(col);
  std::vector<SparseVec> gens;
  for (const auto &[row, col] : st.pivots())
    if (row >= n)
      gens.push_back(sv_shift(col, -n));
  return Submodule(s1.ambient(), std::move(gens));
}

std::vector<SparseVec> hom_kernel_gens(const ModHom &h) {
  // Preimage of the codomain relation lattice: stack (h e_j; e_j) over the
  // codomain relations and read off bottoms of top-zero pivots.
  const Ring &R = h.domain().ring();
  int m = h.domain().ngens();
  int n = h.codomain().ngens();
  Staircase st(R, n + m);
  for (const auto &r : h.codomain().relation_columns())
    st.insert(r);
  for (int j = 0; j < m; ++j) {
    SparseVec col = h.matrix().col[static_cast<size_t>(j)];
    col.push(n + j, 1);
    st.insert(col);
  }
  std::vector<SparseVec> gens;
  for (const auto &[row, col] : st.pivots())
    if (row >= n)
      gens.push_back(sv_shift(col, -n));
  return gens;
}

HomParts hom_parts(const ModHom &h) {
  const Ring &R = h.domain().ring();
  int n = h.codomain().ngens();

  std::vector<SparseVec> im_gens = h.matrix().col;
  Submodule image(h.codomain(), im_gens);

  Submodule kernel(h.domain(), hom_kernel_gens(h));

  std::vector<SparseVec> num;
  for (int i = 0; i < n; ++i) {
    SparseVec e;
    e.push(i, 1);
    num.push_back(std::move(e));
  }
  std::vector<SparseVec> den = h.matrix().col;
  for (const auto &r : h.codomain().relation_columns())
    den.push_back(r);
  Subquotient coker(R, n, std::move(num), std::move(den));
  FinMod q = coker.module();
  Mat proj(q.ngens(), n);
  for (int i = 0; i < n; ++i) {
    SparseVec e;
    e.push(i, 1);
    std::vector<uint32_t> y = coker.coords(e);
    for (int t = 0; t < q.ngens(); ++t)
      proj.at(t, i) = y[static_cast<size_t>(t)];
  }
  ModHom proj_hom(h.codomain(), q, proj);
  return HomParts{std::move(kernel), std::move(image), std::move(q),
                  std::move(proj_hom)};
}

bool is_exact_at(const ModHom &f, const ModHom &g) {
  if (!f.codomain().same_presentation(g.domain()))
    throw std::invalid_argument("is_exact_at: maps not composable");
  HomParts pf = hom_parts(f);
  HomParts pg = hom_parts(g);
  return pf.image.equals(pg.kernel);
}

FinMod pontryagin_dual(const FinMod &m) { return m; }

ModHom dual_hom(const ModHom &h) {
  const Ring &R = h.domain().ring();
  const FinMod &M = h.domain();
  const FinMod &N = h.codomain();
  // <h* phi_i, g_j> = <phi_i, h g_j> forces (h*)_{ji} = h_{ij} 2^{e_j - e_i},
  // exact because well-definedness bounds val(h_{ij}) from below.
  SpMat t(M.ngens(), N.ngens());
  std::vector<std::vector<std::pair<int32_t, uint32_t>>> rows(
      static_cast<size_t>(N.ngens()));
  for (int j = 0; j < M.ngens(); ++j)
    for (auto &[i, v] : h.matrix().col[static_cast<size_t>(j)].e) {
      int shift = M.exp_of(j) - N.exp_of(i);
      uint32_t w = shift >= 0 ? R.mul(v, R.pow2(shift))
                              : R.reduce(v >> (-shift));
      if (w != 0)
        rows[static_cast<size_t>(i)].emplace_back(j, w);
    }
  for (int i = 0; i < N.ngens(); ++i) {
    auto &es = rows[static_cast<size_t>(i)];
    std::sort(es.begin(), es.end());
    for (auto &[j, w] : es)
      t.col[static_cast<size_t>(i)].push(j, w);
  }
  return ModHom(pontryagin_dual(N), pontryagin_dual(M), std::move(t));
}

ModHom double_dual_eval(const FinMod &m) {
  return ModHom(m, pontryagin_dual(pontryagin_dual(m)),
                SpMat::identity(m.ngens()));
}

Subquotient::Subquotient(Ring R, int dim, std::vector<SparseVec> num,
                         std::vector<SparseVec> den)
    : R_(R), dim_(dim), num_(R, dim), den_(R, dim) {
  for (const auto &v : num)
    num_.insert(v);
  for (const auto &v : den) {
    num_.insert(v); // quotient of num + den by den
    den_.insert(v);
  }
}

long long Subquotient::size_log2() const {
  return num_.size_log2() - den_.size_log2();
}

void Subquotient::ensure_presentation() const {
  if (built_)
    return;
  built_ = true;

  basis_.clear();
  for (const auto &[row, col] : num_.pivots())
    basis_.push_back(col);
  int m = static_cast<int>(basis_.size());

  track_.emplace(R_, dim_ + m);
  for (const auto &[row, col] : den_.pivots())
    track_->insert(col);
  for (int j = 0; j < m; ++j) {
    SparseVec col = basis_[static_cast<size_t>(j)];
    col.push(dim_ + j, 1);
    track_->insert(col);
  }

  // Relation lattice of the classes [b_j]: bottoms of top-zero pivots.
  Staircase rel(R_, m);
  for (const auto &[row, col] : track_->pivots())
    if (row >= dim_)
      rel.insert(sv_shift(col, -dim_));
  rel.canonicalize();

  // Unit pivots make their generators redundant; peel them off so the
  // dense Smith step below only sees the essential block.
  std::vector<bool> is_unit_row(static_cast<size_t>(m), false);
  for (const auto &[row, col] : rel.pivots())
    if (col.lead_value() == 1)
      is_unit_row[static_cast<size_t>(row)] = true;
  kept_.clear();
  std::vector<int> pos(static_cast<size_t>(m), -1);
  for (int r = 0; r < m; ++r)
    if (!is_unit_row[static_cast<size_t>(r)]) {
      pos[static_cast<size_t>(r)] = static_cast<int>(kept_.size());
      kept_.push_back(r);
    }
  int s = static_cast<int>(kept_.size());

  subst_ = Mat(s, m);
  for (int r = 0; r < m; ++r)
    if (pos[static_cast<size_t>(r)] >= 0)
      subst_.at(pos[static_cast<size_t>(r)], r) = 1;
  std::vector<const SparseVec *> essential;
  for (const auto &[row, col] : rel.pivots()) {
    if (col.lead_value() == 1) {
      // After canonicalization the tail avoids every unit pivot row, so
      // the substitution lands entirely in the kept block.
      for (size_t t = 1; t < col.e.size(); ++t) {
        auto [i, v] = col.e[t];
        assert(pos[static_cast<size_t>(i)] >= 0);
        subst_.at(pos[static_cast<size_t>(i)], row) = R_.neg(v);
      }
    } else {
      essential.push_back(&col);
    }
  }

  Mat p(s, static_cast<int>(essential.size()));
  for (size_t c = 0; c < essential.size(); ++c)
    for (auto &[i, v] : essential[c]->e) {
      assert(pos[static_cast<size_t>(i)] >= 0);
      p.at(pos[static_cast<size_t>(i)], static_cast<int>(c)) = v;
    }

  SnfResult snf = smith_normal_form(R_, p);
  u_ = snf.u;
  u_inv_ = snf.u_inv;
  std::vector<int> exp_of_row(static_cast<size_t>(s), R_.k());
  int ndiag = std::min(s, p.cols);
  for (int i = 0; i < ndiag; ++i) {
    uint32_t d = snf.d.at(i, i);
    exp_of_row[static_cast<size_t>(i)] = d == 0 ? R_.k() : R_.val(d);
  }
  order_.clear();
  for (int i = s - 1; i >= 0; --i) // Smith order ascends; we want largest first
    if (exp_of_row[static_cast<size_t>(i)] >= 1)
      order_.push_back(i);
  std::vector<int> exps;
  for (int r : order_)
    exps.push_back(exp_of_row[static_cast<size_t>(r)]);
  module_ = FinMod(R_, std::move(exps));
}

const FinMod &Subquotient::module() const {
  ensure_presentation();
  return *module_;
}

std::vector<uint32_t> Subquotient::coords(const SparseVec &v) const {
  ensure_presentation();
  SparseVec r = track_->reduce(v);
  if (!r.empty() && r.lead_index() < dim_)
    throw std::invalid_argument("Subquotient::coords: vector not in span");
  int m = static_cast<int>(basis_.size());
  std::vector<uint32_t> z(static_cast<size_t>(m), 0u);
  for (auto &[i, val] : r.e)
    z[static_cast<size_t>(i - dim_)] = R_.neg(val);
  std::vector<uint32_t> x = dense_apply(R_, subst_, z);
  std::vector<uint32_t> y = dense_apply(R_, u_, x);
  std::vector<uint32_t> out;
  out.reserve(order_.size());
  for (size_t p = 0; p < order_.size(); ++p)
    out.push_back(y[static_cast<size_t>(order_[p])] &
                  ((uint32_t{1} << module_->exp_of(static_cast<int>(p))) - 1));
  return out;
}

SparseVec Subquotient::rep(const std::vector<uint32_t> &y) const {
  ensure_presentation();
  assert(y.size() == order_.size());
  std::vector<uint32_t> ysnf(static_cast<size_t>(u_.rows), 0u);
  for (size_t p = 0; p < order_.size(); ++p)
    ysnf[static_cast<size_t>(order_[p])] = y[p];
  std::vector<uint32_t> x = dense_apply(R_, u_inv_, ysnf);
  SparseVec acc;
  for (size_t t = 0; t < kept_.size(); ++t)
    if (x[t] != 0)
      acc = sv_axpy(R_, acc, x[t], basis_[static_cast<size_t>(kept_[t])]);
  return acc;
}

QuotientData quotient_by(const Submodule &s) {
  const FinMod &amb = s.ambient();
  const Ring &R = amb.ring();
  int n = amb.ngens();
  std::vector<SparseVec> num;
  for (int i = 0; i < n; ++i) {
    SparseVec e;
    e.push(i, 1);
    num.push_back(std::move(e));
  }
  std::vector<SparseVec> den = s.gens();
  for (const auto &r : amb.relation_columns())
    den.push_back(r);
  Subquotient sq(R, n, std::move(num), std::move(den));
  FinMod q = sq.module();
  Mat proj(q.ngens(), n);
  for (int i = 0; i < n; ++i) {
    SparseVec e;
    e.push(i, 1);
    std::vector<uint32_t> y = sq.coords(e);
    for (int t = 0; t < q.ngens(); ++t)
      proj.at(t, i) = y[static_cast<size_t>(t)];
  }
  return QuotientData{q, ModHom(amb, q, proj)};
}

FinMod submodule_presentation(const Submodule &s) {
  const FinMod &amb = s.ambient();
  std::vector<SparseVec> num = s.gens();
  std::vector<SparseVec> den;
  for (const auto &r : amb.relation_columns()) {
    num.push_back(r);
    den.push_back(r);
  }
  return Subquotient(amb.ring(), amb.ngens(), std::move(num), std::move(den))
      .module();
}

ModHom induced_hom(const Subquotient &src, const Subquotient &dst,
                   const SpMat &h) {
  const FinMod &a = src.module();
  const FinMod &b = dst.module();
  const Ring &R = src.ring();
  Mat m(b.ngens(), a.ngens());
  for (int j = 0; j < a.ngens(); ++j) {
    std::vector<uint32_t> e(static_cast<size_t>(a.ngens()), 0u);
    e[static_cast<size_t>(j)] = 1;
    SparseVec v = src.rep(e);
    std::vector<uint32_t> y = dst.coords(sp_apply(R, h, v));
    for (int i = 0; i < b.ngens(); ++i)
      m.at(i, j) = y[static_cast<size_t>(i)];
  }
  return ModHom(a, b, m);
}

} // namespace cohwork
