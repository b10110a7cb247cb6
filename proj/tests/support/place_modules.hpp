#pragma once

// Fixed and random modules over the order-2 place group, covering every
// action shape the archimedean layer meets: trivial, sign lines, the
// regular representation, upper-triangular involutions, Kummer duals and
// direct sums.

#include "cohwork/arch.hpp"
#include "cohwork/random_gen.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace place_mod {

using namespace cohwork;

inline FinGroup c2() { return FinGroup::cyclic(2); }

inline Character sign_char(const Ring &R) {
  return Character(c2(), R, {1, R.neg(1)});
}

inline ModHom ident_hom(const FinMod &m) {
  return ModHom(m, m, SpMat::identity(m.ngens()));
}

inline GModule sign_module(const Ring &R, FinMod base) {
  ModHom s = hom_scale(R.neg(1), ident_hom(base));
  return GModule(c2(), base, {ident_hom(base), s});
}

inline GModule regular_module(const Ring &R, int e) {
  FinMod base(R, {e, e});
  SpMat swap(2, 2);
  swap.col[0].push(1, 1);
  swap.col[1].push(0, 1);
  return GModule(c2(), base, {ident_hom(base), ModHom(base, base, swap)});
}

// sigma = [[1, c], [0, -1]]; squares to the identity for every c, and c
// needs val(c) >= e1 - e2 to be a well-defined entry.
inline GModule triangular_module(const Ring &R, int e1, int e2, uint32_t c) {
  FinMod base(R, {e1, e2});
  SpMat s(2, 2);
  s.col[0].push(0, 1);
  if (R.reduce(c) != 0)
    s.col[1].push(0, R.reduce(c));
  s.col[1].push(1, R.neg(1));
  return GModule(c2(), base, {ident_hom(base), ModHom(base, base, s)});
}

inline GModule dsum(const GModule &a, const GModule &b) {
  std::vector<ModHom> acts;
  for (int g = 0; g < 2; ++g)
    acts.push_back(hom_diag_sum(a.action(g), b.action(g)));
  return GModule(c2(), direct_sum(a.base(), b.base()), std::move(acts));
}

inline GModule random_place_module(std::mt19937 &rng, const Ring &R) {
  int k = R.k();
  auto primitive = [&](int flavor) {
    switch (flavor) {
    case 0: {
      std::vector<int> exps(1 + static_cast<size_t>(gen::draw(rng, 2)));
      for (int &e : exps)
        e = 1 + gen::draw(rng, k);
      return GModule::trivial(c2(), FinMod(R, exps));
    }
    case 1:
      return sign_module(R, FinMod(R, {1 + gen::draw(rng, k)}));
    case 2:
      return regular_module(R, 1 + gen::draw(rng, k));
    default: {
      int e1 = 1 + gen::draw(rng, k), e2 = 1 + gen::draw(rng, k);
      uint32_t c =
          R.mul(R.pow2(std::max(0, e1 - e2)), gen::draw_scalar(rng, R));
      return triangular_module(R, e1, e2, c);
    }
    }
  };
  GModule m = primitive(gen::draw(rng, 4));
  if (gen::draw(rng, 3) == 0)
    m = dsum(m, primitive(gen::draw(rng, 4)));
  if (gen::draw(rng, 3) == 0)
    m = kummer_dual(m, sign_char(R));
  return m;
}

// Fixed battery for exhaustive checks; every module is small enough to
// enumerate.
inline std::vector<GModule> battery(const Ring &R) {
  int k = R.k();
  std::vector<GModule> out;
  out.push_back(GModule::trivial(c2(), FinMod::cyclic(R, 1)));
  out.push_back(GModule::trivial(c2(), FinMod::cyclic(R, k)));
  out.push_back(GModule::trivial(c2(), FinMod(R, {1, k})));
  out.push_back(sign_module(R, FinMod::cyclic(R, k)));
  out.push_back(sign_module(R, FinMod::cyclic(R, 1)));
  out.push_back(regular_module(R, 1));
  out.push_back(regular_module(R, k));
  out.push_back(triangular_module(R, k, 1, R.pow2(k - 1)));
  out.push_back(triangular_module(R, 1, k, 1));
  out.push_back(kummer_dual(out[3], sign_char(R)));
  out.push_back(kummer_dual(out[6], sign_char(R)));
  out.push_back(dsum(out[0], out[3]));
  return out;
}

} // namespace place_mod
