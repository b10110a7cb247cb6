#include "cohwork/arch.hpp"

#include <stdexcept>
#include <utility>

namespace cohwork {

ArchPlace ArchPlace::real(FinGroup g, int sigma) {
  if (sigma <= 0 || sigma >= g.order() || g.mul(sigma, sigma) != 0)
    throw std::invalid_argument("ArchPlace::real: generator must be an involution");
  return ArchPlace(std::move(g), sigma);
}

ArchPlace ArchPlace::complex(FinGroup g) { return ArchPlace(std::move(g), 0); }

SubgroupData ArchPlace::decomposition() const {
  if (is_real())
    return subgroup_from(g_, {0, sigma_});
  return subgroup_from(g_, {0});
}

Complex complete_complex(const ArchPlace &place, const GModule &m, int D) {
  if (D < 2)
    throw std::invalid_argument("complete_complex: window radius must be at least 2");
  if (m.group().order() != (place.is_real() ? 2 : 1))
    throw std::invalid_argument(
        "complete_complex: module group does not match the place");
  const FinMod &base = m.base();
  ModHom ident(base, base, SpMat::identity(base.ngens()));
  ModHom even = hom_sub(m.action(place.is_real() ? 1 : 0), ident);
  ModHom odd = ident; // norm of the trivial group
  if (place.is_real())
    odd = hom_add(m.action(0), m.action(1));
  std::vector<FinMod> mods(static_cast<size_t>(2 * D + 1), base);
  std::vector<ModHom> diffs;
  for (int n = -D; n < D; ++n)
    diffs.push_back(n % 2 == 0 ? even : odd);
  return Complex(base.ring(), -D, std::move(mods), std::move(diffs));
}

FinMod tate_cohomology(const ArchPlace &place, const GModule &m, int n, int D) {
  if (n <= -D || n >= D)
    throw std::invalid_argument("tate_cohomology: degree outside the window");
  return complete_complex(place, m, D).cohomology(n);
}

ChainMap tau_map(const ArchPlace &place, const GModule &m, int D) {
  Complex src = normalized_cochain_complex(m, D);
  Complex dst = complete_complex(place, m, D);
  // Real places have a single nonidentity element, so C^n has one tuple
  // block and evaluation at (sigma, ..., sigma) is the identity matrix.
  std::map<int, SpMat> comps;
  comps[0] = SpMat::identity(m.base().ngens());
  if (place.is_real())
    for (int n = 1; n <= D; ++n)
      comps[n] = SpMat::identity(m.base().ngens());
  return ChainMap(std::move(src), std::move(dst), std::move(comps));
}

std::vector<uint32_t> tate_cup(const GPairing &pr, int p,
                               const std::vector<uint32_t> &a, int q,
                               const std::vector<uint32_t> &b) {
  bool p_odd = p % 2 != 0;
  bool q_odd = q % 2 != 0;
  if (!p_odd)
    return pr.apply(a, b);
  if (!q_odd)
    throw std::invalid_argument("tate_cup: odd-even degrees not supported");
  int sigma = pr.rhs().group().order() == 2 ? 1 : 0;
  return pr.apply(a, pr.rhs().act(sigma, b));
}

ArchDuality arch_duality_check(const ArchPlace &place, const GModule &m, int n,
                               int D) {
  if (!place.is_real())
    throw std::invalid_argument("arch_duality_check: place must be real");
  if (D < 3)
    throw std::invalid_argument(
        "arch_duality_check: window too small for the degree-2 target");
  if (n < 3 - D || n > D - 1)
    throw std::invalid_argument("arch_duality_check: degree outside the window");

  const Ring &R = m.base().ring();
  Character chi(m.group(), R, {1, R.neg(1)}); // involution acts by -1
  GModule md = kummer_dual(m, chi);
  GPairing pr = eval_pairing(m, chi);

  Complex cm = complete_complex(place, m, D);
  Complex cd = complete_complex(place, md, D);
  Complex ct = complete_complex(place, pr.out(), D);
  const Subquotient &ha = cm.h_subq(n);
  const Subquotient &hb = cd.h_subq(2 - n);
  const Subquotient &ht = ct.h_subq(2);

  FinMod hn = ha.module();
  FinMod hdual = hb.module();
  int ra = hn.ngens(), rb = hdual.ngens();
  int dim = m.base().ngens();
  Mat pairing(ra, rb);
  for (int i = 0; i < ra; ++i) {
    std::vector<uint32_t> ei(static_cast<size_t>(ra), 0);
    ei[static_cast<size_t>(i)] = 1;
    std::vector<uint32_t> va = sv_to_dense(ha.rep(ei), dim);
    for (int j = 0; j < rb; ++j) {
      std::vector<uint32_t> ej(static_cast<size_t>(rb), 0);
      ej[static_cast<size_t>(j)] = 1;
      std::vector<uint32_t> vb = sv_to_dense(hb.rep(ej), dim);
      std::vector<uint32_t> cup = tate_cup(pr, n, va, 2 - n, vb);
      std::vector<uint32_t> y = ht.coords(sv_from_dense(cup));
      pairing.at(i, j) = y.empty() ? 0 : y[0];
    }
  }

  // Tate groups at an order-2 place are elementary 2-groups, so perfection
  // is equal size plus full rank of the matrix over Z/2.
  Ring f2(1);
  Mat p2 = pairing;
  for (int i = 0; i < p2.rows; ++i)
    for (int j = 0; j < p2.cols; ++j)
      p2.at(i, j) = f2.reduce(p2.at(i, j));
  SnfResult s = smith_normal_form(f2, p2);
  long long rank = 0;
  for (int e : s.exps)
    if (e == 0)
      ++rank;
  bool perfect =
      hn.size_log2() == hdual.size_log2() && rank == hn.size_log2();
  return ArchDuality{n, std::move(hn), std::move(hdual), std::move(pairing),
                     perfect};
}

} // namespace cohwork
