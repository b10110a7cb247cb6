#include "cohwork/gmodule.hpp"

#include <stdexcept>

namespace cohwork {

GModule::GModule(FinGroup g, FinMod base, std::vector<ModHom> action)
    : g_(std::move(g)), base_(std::move(base)), action_(std::move(action)) {
  if (static_cast<int>(action_.size()) != g_.order())
    throw std::invalid_argument("gmodule: need one action map per element");
  for (const auto &h : action_)
    if (!h.domain().same_presentation(base_) ||
        !h.codomain().same_presentation(base_))
      throw std::invalid_argument(
          "gmodule: action maps must be endomorphisms of the base");
  if (!action_[0].equals(ModHom::identity(base_)))
    throw std::invalid_argument("gmodule: identity must act trivially");
  // Multiplicativity; combined with the identity axiom this also forces
  // every action map to be invertible.
  for (int a = 0; a < g_.order(); ++a)
    for (int b = 0; b < g_.order(); ++b)
      if (!compose(this->action(a), this->action(b))
               .equals(this->action(g_.mul(a, b))))
        throw std::invalid_argument("gmodule: action is not multiplicative");
}

GModule GModule::trivial(FinGroup g, FinMod base) {
  std::vector<ModHom> acts(static_cast<size_t>(g.order()),
                           ModHom::identity(base));
  return GModule(std::move(g), std::move(base), std::move(acts));
}

GModule twist(const GModule &m, const Character &chi, int i) {
  if (!chi.group().same_table(m.group()))
    throw std::invalid_argument("twist: character is for a different group");
  if (!(chi.ring() == m.base().ring()))
    throw std::invalid_argument("twist: character ring mismatch");
  std::vector<ModHom> acts;
  acts.reserve(static_cast<size_t>(m.group().order()));
  for (int g = 0; g < m.group().order(); ++g)
    acts.push_back(hom_scale(chi.power(g, i), m.action(g)));
  return GModule(m.group(), m.base(), std::move(acts));
}

GModule direct_sum(const GModule &a, const GModule &b) {
  if (!a.group().same_table(b.group()))
    throw std::invalid_argument("gmodule direct_sum: group mismatch");
  FinMod base = direct_sum(a.base(), b.base());
  std::vector<ModHom> acts;
  acts.reserve(static_cast<size_t>(a.group().order()));
  for (int g = 0; g < a.group().order(); ++g)
    acts.push_back(hom_diag_sum(a.action(g), b.action(g)));
  return GModule(a.group(), std::move(base), std::move(acts));
}

GModule kummer_dual(const GModule &m, const Character &chi) {
  if (!chi.group().same_table(m.group()))
    throw std::invalid_argument(
        "kummer_dual: character is for a different group");
  if (!(chi.ring() == m.base().ring()))
    throw std::invalid_argument("kummer_dual: character ring mismatch");
  std::vector<ModHom> acts;
  acts.reserve(static_cast<size_t>(m.group().order()));
  for (int g = 0; g < m.group().order(); ++g)
    acts.push_back(
        hom_scale(chi.value(g), dual_hom(m.action(m.group().inv(g)))));
  return GModule(m.group(), pontryagin_dual(m.base()), std::move(acts));
}

GPairing::GPairing(GModule a, GModule b, GModule c, SpMat table)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      table_(std::move(table)) {
  const Ring &R = a_.base().ring();
  if (!b_.group().same_table(a_.group()) || !c_.group().same_table(a_.group()))
    throw std::invalid_argument("pairing: groups differ");
  int ra = a_.base().ngens(), rb = b_.base().ngens(), rc = c_.base().ngens();
  if (table_.rows != rc || table_.cols != ra * rb)
    throw std::invalid_argument("pairing: table has wrong shape");
  for (int j = 0; j < ra; ++j)
    for (int l = 0; l < rb; ++l) {
      const SparseVec &col = table_.col[static_cast<size_t>(j * rb + l)];
      int e = std::min(a_.base().exp_of(j), b_.base().exp_of(l));
      for (const auto &[t, v] : col.e)
        if (R.val(v) < c_.base().exp_of(t) - e)
          throw std::invalid_argument("pairing: not bilinear on torsion");
    }
  // Equivariance on basis pairs: b(g x, g y) = g b(x, y).
  for (int g = 0; g < a_.group().order(); ++g) {
    const SpMat &ma = a_.action(g).matrix();
    const SpMat &mb = b_.action(g).matrix();
    for (int j = 0; j < ra; ++j)
      for (int l = 0; l < rb; ++l) {
        std::vector<uint32_t> lhs(static_cast<size_t>(rc), 0);
        for (const auto &[i1, v1] : ma.col[static_cast<size_t>(j)].e)
          for (const auto &[i2, v2] : mb.col[static_cast<size_t>(l)].e) {
            const SparseVec &col =
                table_.col[static_cast<size_t>(i1 * rb + i2)];
            uint32_t cf = R.mul(v1, v2);
            for (const auto &[t, v] : col.e)
              lhs[static_cast<size_t>(t)] =
                  R.add(lhs[static_cast<size_t>(t)], R.mul(cf, v));
          }
        std::vector<uint32_t> base(static_cast<size_t>(rc), 0);
        for (const auto &[t, v] : table_.col[static_cast<size_t>(j * rb + l)].e)
          base[static_cast<size_t>(t)] = v;
        std::vector<uint32_t> rhs = c_.action(g).apply(base);
        lhs = c_.base().reduce_elem(lhs);
        if (lhs != rhs)
          throw std::invalid_argument("pairing: not equivariant");
      }
  }
}

std::vector<uint32_t> GPairing::apply(const std::vector<uint32_t> &va,
                                      const std::vector<uint32_t> &vb) const {
  const Ring &R = a_.base().ring();
  int ra = a_.base().ngens(), rb = b_.base().ngens(), rc = c_.base().ngens();
  std::vector<uint32_t> out(static_cast<size_t>(rc), 0);
  for (int j = 0; j < ra; ++j) {
    if (va[static_cast<size_t>(j)] == 0)
      continue;
    for (int l = 0; l < rb; ++l) {
      uint32_t cf = R.mul(va[static_cast<size_t>(j)], vb[static_cast<size_t>(l)]);
      if (cf == 0)
        continue;
      for (const auto &[t, v] : table_.col[static_cast<size_t>(j * rb + l)].e)
        out[static_cast<size_t>(t)] =
            R.add(out[static_cast<size_t>(t)], R.mul(cf, v));
    }
  }
  return c_.base().reduce_elem(out);
}

GPairing eval_pairing(const GModule &m, const Character &chi) {
  const Ring &R = m.base().ring();
  GModule dual = kummer_dual(m, chi);
  GModule out =
      twist(GModule::trivial(m.group(), FinMod::cyclic(R, R.k())), chi, 1);
  int r = m.base().ngens();
  SpMat table(1, r * r);
  for (int j = 0; j < r; ++j)
    table.col[static_cast<size_t>(j * r + j)].push(
        0, R.pow2(R.k() - m.base().exp_of(j)));
  return GPairing(m, std::move(dual), std::move(out), std::move(table));
}

} // namespace cohwork
