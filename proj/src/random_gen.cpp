#include "cohwork/random_gen.hpp"

namespace cohwork::gen {

FinMod random_module(std::mt19937 &rng, const Ring &R, int max_gens) {
  int n = 1 + draw(rng, max_gens);
  std::vector<int> exps;
  for (int i = 0; i < n; ++i)
    exps.push_back(1 + draw(rng, R.k()));
  return FinMod(R, std::move(exps));
}

ModHom random_modhom(std::mt19937 &rng, const FinMod &dom, const FinMod &cod) {
  const Ring &R = dom.ring();
  SpMat m(cod.ngens(), dom.ngens());
  for (int j = 0; j < dom.ngens(); ++j) {
    SparseVec col;
    for (int i = 0; i < cod.ngens(); ++i) {
      int need = std::max(0, cod.exp_of(i) - dom.exp_of(j));
      uint32_t c = R.mul(R.pow2(need), draw_scalar(rng, R));
      col.push(i, c);
    }
    m.col[static_cast<size_t>(j)] = std::move(col);
  }
  return ModHom(dom, cod, std::move(m));
}

namespace {

Complex random_piece(std::mt19937 &rng, const Ring &R) {
  int s = -2 + draw(rng, 5);
  switch (draw(rng, 3)) {
  case 0:
    return Complex::concentrated(random_module(rng, R, 2), s);
  case 1: {
    FinMod m = FinMod::cyclic(R, 1 + draw(rng, R.k()));
    SpMat d(1, 1);
    d.col[0].push(0, draw_scalar(rng, R));
    return Complex::two_term(ModHom(m, m, std::move(d)), s);
  }
  default: {
    FinMod a = random_module(rng, R, 2);
    FinMod b = random_module(rng, R, 2);
    return Complex::two_term(random_modhom(rng, a, b), s);
  }
  }
}

// Matched pair of two-term complexes (M -2^a-> M) and (M -2^b-> M) in the
// same degree, with a map solving the commuting square for them.
ChainMap elementary_map(std::mt19937 &rng, const Ring &R) {
  int e = 1 + draw(rng, R.k());
  int s = -2 + draw(rng, 5);
  int a = draw(rng, e + 1);
  int b = draw(rng, e + 1);
  FinMod m = FinMod::cyclic(R, e);
  auto two = [&](int val) {
    SpMat d(1, 1);
    d.col[0].push(0, R.pow2(val));
    return Complex::two_term(ModHom(m, m, std::move(d)), s);
  };
  uint32_t t = draw_scalar(rng, R);
  uint32_t p0 = b >= a ? t : R.mul(R.pow2(a - b), t);
  uint32_t p1 = b >= a ? R.mul(R.pow2(b - a), t) : t;
  std::map<int, SpMat> comps;
  SpMat c0(1, 1), c1(1, 1);
  c0.col[0].push(0, p0);
  c1.col[0].push(0, p1);
  comps.emplace(s, std::move(c0));
  comps.emplace(s + 1, std::move(c1));
  return ChainMap(two(a), two(b), std::move(comps));
}

} // namespace

Complex random_complex(std::mt19937 &rng, const Ring &R, int depth) {
  Complex acc = random_piece(rng, R);
  int extra = draw(rng, 3);
  for (int i = 0; i < extra; ++i)
    acc = direct_sum(acc, random_piece(rng, R));
  if (depth > 0 && draw(rng, 3) == 0)
    acc = direct_sum(acc, cone(random_chain_map(rng, R, depth - 1)));
  return acc;
}

ChainMap random_chain_map(std::mt19937 &rng, const Ring &R, int depth) {
  switch (draw(rng, depth > 0 ? 5 : 3)) {
  case 0:
    return ChainMap::scalar(random_complex(rng, R, depth),
                            draw_scalar(rng, R));
  case 1:
    return ChainMap::zero_map(random_complex(rng, R, depth),
                              random_complex(rng, R, depth));
  case 2: {
    ChainMap acc = elementary_map(rng, R);
    int extra = draw(rng, 3);
    for (int i = 0; i < extra; ++i)
      acc = direct_sum(acc, elementary_map(rng, R));
    return acc;
  }
  case 3: {
    Triangle tri = canonical_triangle(random_chain_map(rng, R, depth - 1));
    return draw(rng, 2) == 0 ? tri.j : tri.delta;
  }
  default:
    return shift(random_chain_map(rng, R, depth - 1), -1 + draw(rng, 3));
  }
}

SesTriple random_ses(std::mt19937 &rng, const Ring &R) {
  switch (draw(rng, 3)) {
  case 0: {
    // Split: X -> X + Z -> Z.
    Complex x = random_complex(rng, R, 0);
    Complex z = random_complex(rng, R, 0);
    Complex y = direct_sum(x, z);
    std::map<int, SpMat> ic, pc;
    for (int n = y.lo(); n <= y.hi(); ++n) {
      ic.emplace(n, sp_vcat(SpMat::identity(x.ngens(n)),
                            SpMat(z.ngens(n), x.ngens(n))));
      pc.emplace(n, sp_hcat(SpMat(z.ngens(n), x.ngens(n)),
                            SpMat::identity(z.ngens(n))));
    }
    ChainMap incl(x, y, std::move(ic));
    ChainMap proj(std::move(y), std::move(z), std::move(pc));
    return SesTriple{std::move(incl), std::move(proj)};
  }
  case 1: {
    // 0 -> 2^j Y -> Y -> Y / 2^j Y -> 0.
    Complex y = random_complex(rng, R, 1);
    int j = 1 + draw(rng, R.k() - 1 > 0 ? R.k() - 1 : 1);
    std::vector<FinMod> xm, zm;
    std::vector<std::vector<int>> keep; // degree -> surviving gen indices
    for (int n = y.lo(); n <= y.hi(); ++n) {
      std::vector<int> xe, ze, kp;
      const FinMod m = y.module(n);
      for (int i = 0; i < m.ngens(); ++i) {
        ze.push_back(std::min(m.exp_of(i), j));
        if (m.exp_of(i) > j) {
          xe.push_back(m.exp_of(i) - j);
          kp.push_back(i);
        }
      }
      xm.emplace_back(R, std::move(xe));
      zm.emplace_back(R, std::move(ze));
      keep.push_back(std::move(kp));
    }
    std::vector<ModHom> xd, zd;
    for (int n = y.lo(); n < y.hi(); ++n) {
      SpMat dm = y.d(n).matrix();
      const auto &kdom = keep[static_cast<size_t>(n - y.lo())];
      const auto &kcod = keep[static_cast<size_t>(n + 1 - y.lo())];
      SpMat sub(static_cast<int>(kcod.size()), static_cast<int>(kdom.size()));
      for (size_t jj = 0; jj < kdom.size(); ++jj) {
        SparseVec col;
        for (size_t ii = 0; ii < kcod.size(); ++ii)
          col.push(static_cast<int>(ii),
                   sv_get(dm.col[static_cast<size_t>(kdom[jj])],
                          kcod[ii]));
        sub.col[jj] = std::move(col);
      }
      xd.emplace_back(xm[static_cast<size_t>(n - y.lo())],
                      xm[static_cast<size_t>(n + 1 - y.lo())],
                      std::move(sub));
      zd.emplace_back(zm[static_cast<size_t>(n - y.lo())],
                      zm[static_cast<size_t>(n + 1 - y.lo())], dm);
    }
    Complex x(R, y.lo(), std::move(xm), std::move(xd));
    Complex z(R, y.lo(), std::move(zm), std::move(zd));
    std::map<int, SpMat> ic, pc;
    for (int n = y.lo(); n <= y.hi(); ++n) {
      const auto &kp = keep[static_cast<size_t>(n - y.lo())];
      SpMat up(y.ngens(n), static_cast<int>(kp.size()));
      for (size_t jj = 0; jj < kp.size(); ++jj)
        up.col[jj].push(kp[jj], R.pow2(j));
      ic.emplace(n, std::move(up));
      pc.emplace(n, SpMat::identity(y.ngens(n)));
    }
    ChainMap incl(x, y, std::move(ic));
    ChainMap proj(y, z, std::move(pc));
    return SesTriple{std::move(incl), std::move(proj)};
  }
  default: {
    // Degreewise split 0 -> Y -> Cone(u) -> X[1] -> 0.
    ChainMap u = random_chain_map(rng, R, 1);
    Triangle tri = canonical_triangle(u);
    const Complex &x = tri.x;
    const Complex &y = tri.y;
    Complex x1 = shift(x, 1);
    std::map<int, SpMat> pc;
    for (int n = tri.z.lo(); n <= tri.z.hi(); ++n) {
      SpMat m(x.ngens(n + 1), tri.z.ngens(n));
      for (int i = 0; i < x.ngens(n + 1); ++i)
        m.col[static_cast<size_t>(y.ngens(n) + i)].push(i, 1);
      pc.emplace(n, std::move(m));
    }
    ChainMap proj(tri.z, std::move(x1), std::move(pc));
    return SesTriple{tri.j, std::move(proj)};
  }
  }
}

Cube random_cube(std::mt19937 &rng, const Ring &R) {
  ChainMap f = random_chain_map(rng, R, 1);
  const Complex &x = f.dst();
  ChainMap u = draw(rng, 2) == 0
                   ? ChainMap::scalar(x, draw_scalar(rng, R))
                   : canonical_triangle(
                         ChainMap::scalar(x, draw_scalar(rng, R)))
                         .j;
  if (draw(rng, 2) == 0) {
    // Scalar verticals.
    uint32_t t = draw_scalar(rng, R);
    ChainMap v = ChainMap::scalar(x, t);
    ChainMap vhat = ChainMap::scalar(u.dst(), t);
    ChainMap g = compose(u, f);
    ChainMap f1 = compose(v, f);
    ChainMap g1 = compose(vhat, g);
    return Cube{f, g, u, std::move(f1), std::move(g1), u, std::move(v),
                std::move(vhat)};
  }
  // Cone-inclusion verticals: v = j of s: X -> X, vhat = j of u.s.
  ChainMap s = ChainMap::scalar(x, draw_scalar(rng, R));
  ChainMap us = compose(u, s);
  ChainMap v = canonical_triangle(s).j;
  ChainMap vhat = canonical_triangle(us).j;
  ChainMap u1 = cone_functorial(u, ChainMap::identity(x), s, us);
  ChainMap g = compose(u, f);
  ChainMap f1 = compose(v, f);
  ChainMap g1 = compose(u1, f1);
  return Cube{f,
              std::move(g),
              u,
              std::move(f1),
              std::move(g1),
              std::move(u1),
              std::move(v),
              std::move(vhat)};
}

} // namespace cohwork::gen
