#include "cohwork/cochain.hpp"

#include <map>
#include <stdexcept>

namespace cohwork {

namespace {

// Desk-scale guard: cochain spaces beyond this would make even the sparse
// differentials unreasonable to hold.
constexpr long long kMaxCochainRank = 1ll << 22;

// Advance base-(nt) digits, rightmost fastest; false once exhausted.
bool next_digits(std::vector<int> &digits, int nt) {
  for (size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < nt)
      return true;
    digits[i] = 0;
  }
  return false;
}

long long digits_index(const std::vector<int> &digits, int nt) {
  long long idx = 0;
  for (int d : digits)
    idx = idx * nt + d;
  return idx;
}

} // namespace

long long cochain_rank(const FinGroup &g, const FinMod &base, int n) {
  if (n < 0)
    return 0;
  long long tuples = 1;
  for (int i = 0; i < n; ++i) {
    tuples *= g.order() - 1;
    if (tuples > kMaxCochainRank)
      throw std::invalid_argument("cochain space too large");
  }
  long long rank = tuples * base.ngens();
  if (rank > kMaxCochainRank)
    throw std::invalid_argument("cochain space too large");
  return rank;
}

long long tuple_index(const FinGroup &g, const std::vector<int> &tuple) {
  long long idx = 0;
  for (int e : tuple) {
    if (e < 1 || e >= g.order())
      throw std::invalid_argument("tuple_index: arguments must be nontrivial");
    idx = idx * (g.order() - 1) + (e - 1);
  }
  return idx;
}

std::vector<int> tuple_from_index(const FinGroup &g, int n, long long index) {
  int nt = g.order() - 1;
  std::vector<int> tuple(static_cast<size_t>(n));
  for (int i = n; i-- > 0;) {
    tuple[static_cast<size_t>(i)] = static_cast<int>(index % nt) + 1;
    index /= nt;
  }
  if (index != 0)
    throw std::invalid_argument("tuple_from_index: index out of range");
  return tuple;
}

Complex normalized_cochain_complex(const GModule &m, int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("normalized_cochain_complex: negative degree");
  const Ring &R = m.base().ring();
  const FinGroup &G = m.group();
  int nt = G.order() - 1;
  int r = m.base().ngens();

  std::vector<FinMod> mods;
  mods.reserve(static_cast<size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n) {
    long long rank = cochain_rank(G, m.base(), n);
    std::vector<int> exps;
    exps.reserve(static_cast<size_t>(rank));
    for (long long t = 0; t * r < rank; ++t)
      for (int j = 0; j < r; ++j)
        exps.push_back(m.base().exp_of(j));
    mods.emplace_back(R, std::move(exps));
  }

  std::vector<ModHom> diffs;
  diffs.reserve(static_cast<size_t>(max_degree));
  for (int n = 0; n < max_degree; ++n) {
    SpMat d(mods[static_cast<size_t>(n + 1)].ngens(),
            mods[static_cast<size_t>(n)].ngens());
    uint32_t last_sign = (n + 1) % 2 ? R.neg(1) : 1u;
    std::vector<int> digits(static_cast<size_t>(n), 0);
    long long tidx = 0;
    if (nt == 0 && n > 0) { // no nontrivial tuples at all
      diffs.emplace_back(mods[static_cast<size_t>(n)],
                         mods[static_cast<size_t>(n + 1)], std::move(d));
      continue;
    }
    do {
      // digits d_i encode the tuple (d_0+1, ..., d_{n-1}+1)
      for (int j = 0; j < r; ++j) {
        std::map<int32_t, uint32_t> acc;
        auto add = [&](long long out_tuple, int row_in_block, uint32_t v) {
          int32_t row = static_cast<int32_t>(out_tuple * r + row_in_block);
          uint32_t s = R.add(acc.count(row) ? acc[row] : 0u, v);
          if (s == 0)
            acc.erase(row);
          else
            acc[row] = s;
        };
        // g f(g_2, ..) lands on tuples (g, t)
        long long pw_n = 1;
        for (int i = 0; i < n; ++i)
          pw_n *= nt;
        for (int a = 1; a <= nt; ++a) {
          long long out = (a - 1) * pw_n + tidx;
          for (const auto &[i, v] :
               m.action(a).matrix().col[static_cast<size_t>(j)].e)
            add(out, i, v);
        }
        // merged arguments (t_1.., a, b, ..t_n), a b = t_i
        std::vector<int> out_digits(static_cast<size_t>(n) + 1);
        for (int pos = 1; pos <= n; ++pos) {
          int h = digits[static_cast<size_t>(pos - 1)] + 1;
          uint32_t sign = pos % 2 ? R.neg(1) : 1u;
          for (int a = 1; a <= nt; ++a) {
            int b = G.mul(G.inv(a), h);
            if (b == 0)
              continue; // first factor equals the merged product
            for (int i = 0; i < pos - 1; ++i)
              out_digits[static_cast<size_t>(i)] =
                  digits[static_cast<size_t>(i)];
            out_digits[static_cast<size_t>(pos - 1)] = a - 1;
            out_digits[static_cast<size_t>(pos)] = b - 1;
            for (int i = pos; i < n; ++i)
              out_digits[static_cast<size_t>(i) + 1] =
                  digits[static_cast<size_t>(i)];
            add(digits_index(out_digits, nt), j, sign);
          }
        }
        // trailing f(g_1, .., g_n) lands on tuples (t, g)
        for (int a = 1; a <= nt; ++a)
          add(tidx * nt + (a - 1), j, last_sign);

        SparseVec &colv = d.col[static_cast<size_t>(tidx * r + j)];
        for (const auto &[row, v] : acc)
          colv.push(row, v);
      }
      ++tidx;
    } while (next_digits(digits, nt));
    diffs.emplace_back(mods[static_cast<size_t>(n)],
                       mods[static_cast<size_t>(n + 1)], std::move(d));
  }
  return Complex(R, 0, std::move(mods), std::move(diffs));
}

FinMod group_cohomology(const GModule &m, int n) {
  if (n < 0)
    throw std::invalid_argument("group_cohomology: negative degree");
  Complex c = normalized_cochain_complex(m, n + 1);
  return c.cohomology(n);
}

ChainMap coefficient_chain_map(const GModule &src, const GModule &dst,
                               const ModHom &phi, int max_degree) {
  if (!src.group().same_table(dst.group()))
    throw std::invalid_argument("coefficient map: group mismatch");
  if (!phi.domain().same_presentation(src.base()) ||
      !phi.codomain().same_presentation(dst.base()))
    throw std::invalid_argument("coefficient map: phi endpoints mismatch");
  Complex cs = normalized_cochain_complex(src, max_degree);
  Complex cd = normalized_cochain_complex(dst, max_degree);
  int rs = src.base().ngens();
  int rd = dst.base().ngens();
  const SpMat &pm = phi.matrix();
  std::map<int, SpMat> comps;
  for (int n = 0; n <= max_degree; ++n) {
    long long tuples = 1;
    for (int t = 0; t < n; ++t)
      tuples *= src.group().order() - 1;
    SpMat m(static_cast<int>(tuples * rd), static_cast<int>(tuples * rs));
    for (long long t = 0; t < tuples; ++t)
      for (int a = 0; a < rs; ++a) {
        SparseVec &out = m.col[static_cast<size_t>(t * rs + a)];
        for (auto [i, v] : pm.col[static_cast<size_t>(a)].e)
          out.push(static_cast<int32_t>(t * rd + i), v);
      }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(std::move(cs), std::move(cd), std::move(comps));
}

GModule restrict_module(const GModule &m, const SubgroupData &h) {
  std::vector<ModHom> acts;
  acts.reserve(h.elems.size());
  for (int p : h.elems)
    acts.push_back(m.action(p));
  return GModule(h.group, m.base(), std::move(acts));
}

ChainMap restriction_chain_map(const GModule &m, const SubgroupData &h,
                               int max_degree) {
  Complex src = normalized_cochain_complex(m, max_degree);
  Complex dst =
      normalized_cochain_complex(restrict_module(m, h), max_degree);
  int r = m.base().ngens();
  int nt = m.group().order() - 1;
  int hnt = h.group.order() - 1;
  std::map<int, SpMat> comps;
  for (int n = 0; n <= max_degree; ++n) {
    SpMat c(dst.ngens(n), src.ngens(n));
    std::vector<int> digits(static_cast<size_t>(n), 0);
    long long hidx = 0;
    if (hnt > 0 || n == 0)
      do {
        long long gidx = 0;
        for (int d : digits)
          gidx = gidx * nt + (h.to_parent(d + 1) - 1);
        for (int j = 0; j < r; ++j)
          c.col[static_cast<size_t>(gidx * r + j)].push(
              static_cast<int32_t>(hidx * r + j), 1);
        ++hidx;
      } while (next_digits(digits, hnt));
    comps.emplace(n, std::move(c));
  }
  return ChainMap(std::move(src), std::move(dst), std::move(comps));
}

namespace {

// x = h * rep[coset_of[x]] with h_of[x] the subgroup index of h.
struct CosetData {
  std::vector<int> rep;
  std::vector<int> coset_of;
  std::vector<int> h_of;
};

CosetData right_cosets(const FinGroup &g, const SubgroupData &h) {
  int n = g.order();
  CosetData cd;
  cd.coset_of.assign(static_cast<size_t>(n), -1);
  cd.h_of.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (cd.coset_of[static_cast<size_t>(x)] >= 0)
      continue;
    int t = static_cast<int>(cd.rep.size());
    cd.rep.push_back(x);
    for (size_t i = 0; i < h.elems.size(); ++i) {
      int y = g.mul(h.elems[i], x);
      cd.coset_of[static_cast<size_t>(y)] = t;
      cd.h_of[static_cast<size_t>(y)] = static_cast<int>(i);
    }
  }
  return cd;
}

} // namespace

GModule induced_module_h(const FinGroup &g, const SubgroupData &h,
                         const GModule &m_over_h) {
  if (!m_over_h.group().same_table(h.group))
    throw std::invalid_argument(
        "induced_module_h: module is not over the subgroup");
  const Ring &R = m_over_h.base().ring();
  CosetData cd = right_cosets(g, h);
  int c = static_cast<int>(cd.rep.size());
  int rm = m_over_h.base().ngens();

  std::vector<int> exps;
  exps.reserve(static_cast<size_t>(c * rm));
  for (int t = 0; t < c; ++t)
    for (int j = 0; j < rm; ++j)
      exps.push_back(m_over_h.base().exp_of(j));
  FinMod base(R, std::move(exps));

  // (a phi)(r_t) = h phi(r_t') where r_t a = h r_t'.
  std::vector<ModHom> acts;
  acts.reserve(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    SpMat mat(c * rm, c * rm);
    for (int t = 0; t < c; ++t) {
      int x = g.mul(cd.rep[static_cast<size_t>(t)], a);
      int t2 = cd.coset_of[static_cast<size_t>(x)];
      const SpMat &hm =
          m_over_h.action(cd.h_of[static_cast<size_t>(x)]).matrix();
      for (int j = 0; j < rm; ++j) {
        SparseVec &col = mat.col[static_cast<size_t>(t2 * rm + j)];
        for (const auto &[i, v] : hm.col[static_cast<size_t>(j)].e)
          col.push(t * rm + i, v);
      }
    }
    acts.emplace_back(base, base, std::move(mat));
  }
  return GModule(g, std::move(base), std::move(acts));
}

InducedData induced_module(const GModule &m, const SubgroupData &h) {
  GModule ind = induced_module_h(m.group(), h, restrict_module(m, h));
  CosetData cd = right_cosets(m.group(), h);
  int c = static_cast<int>(cd.rep.size());
  int rm = m.base().ngens();
  SpMat u(c * rm, rm);
  for (int j = 0; j < rm; ++j) {
    SparseVec &col = u.col[static_cast<size_t>(j)];
    for (int t = 0; t < c; ++t) {
      const SpMat &am = m.action(cd.rep[static_cast<size_t>(t)]).matrix();
      for (const auto &[i, v] : am.col[static_cast<size_t>(j)].e)
        col.push(t * rm + i, v);
    }
  }
  ModHom unit(m.base(), ind.base(), std::move(u));
  return InducedData{std::move(ind), std::move(unit)};
}

ShapiroData shapiro_chain_map(const FinGroup &g, const SubgroupData &h,
                              const GModule &m_over_h, int max_degree) {
  GModule ind = induced_module_h(g, h, m_over_h);
  Complex src = normalized_cochain_complex(ind, max_degree);
  Complex dst = normalized_cochain_complex(m_over_h, max_degree);
  int nt = g.order() - 1;
  int hnt = h.group.order() - 1;
  int rm = m_over_h.base().ngens();
  int rind = ind.base().ngens();
  std::map<int, SpMat> comps;
  for (int n = 0; n <= max_degree; ++n) {
    SpMat c(dst.ngens(n), src.ngens(n));
    std::vector<int> digits(static_cast<size_t>(n), 0);
    long long hidx = 0;
    if (hnt > 0 || n == 0)
      do {
        long long gidx = 0;
        for (int d : digits)
          gidx = gidx * nt + (h.to_parent(d + 1) - 1);
        // phi(1) is the identity-coset block, which sits first.
        for (int j = 0; j < rm; ++j)
          c.col[static_cast<size_t>(gidx * rind + j)].push(
              static_cast<int32_t>(hidx * rm + j), 1);
        ++hidx;
      } while (next_digits(digits, hnt));
    comps.emplace(n, std::move(c));
  }
  return ShapiroData{std::move(ind),
                     ChainMap(std::move(src), std::move(dst), std::move(comps))};
}

std::vector<uint32_t> cup_product(const GPairing &pr, int p,
                                  const std::vector<uint32_t> &f, int q,
                                  const std::vector<uint32_t> &g) {
  if (p < 0 || q < 0)
    throw std::invalid_argument("cup_product: negative degree");
  const GModule &A = pr.lhs();
  const GModule &B = pr.rhs();
  const GModule &C = pr.out();
  const FinGroup &G = A.group();
  int nt = G.order() - 1;
  int ra = A.base().ngens(), rb = B.base().ngens(), rc = C.base().ngens();

  Complex ca = normalized_cochain_complex(A, p + 1);
  if (static_cast<long long>(f.size()) != ca.ngens(p))
    throw std::invalid_argument("cup_product: left cochain has wrong size");
  if (!ca.module(p + 1).elem_is_zero(ca.d(p).apply(f)))
    throw std::invalid_argument("cup_product: left factor is not a cocycle");
  Complex cb = normalized_cochain_complex(B, q + 1);
  if (static_cast<long long>(g.size()) != cb.ngens(q))
    throw std::invalid_argument("cup_product: right cochain has wrong size");
  if (!cb.module(q + 1).elem_is_zero(cb.d(q).apply(g)))
    throw std::invalid_argument("cup_product: right factor is not a cocycle");

  long long out_rank = cochain_rank(G, C.base(), p + q);
  std::vector<uint32_t> out(static_cast<size_t>(out_rank), 0);
  if (out_rank == 0)
    return out;
  std::vector<int> digits(static_cast<size_t>(p + q), 0);
  long long sidx = 0;
  do {
    long long fidx = 0;
    int prod = 0;
    for (int i = 0; i < p; ++i) {
      fidx = fidx * nt + digits[static_cast<size_t>(i)];
      prod = G.mul(prod, digits[static_cast<size_t>(i)] + 1);
    }
    long long bidx = 0;
    for (int i = p; i < p + q; ++i)
      bidx = bidx * nt + digits[static_cast<size_t>(i)];

    std::vector<uint32_t> va(f.begin() + fidx * ra,
                             f.begin() + (fidx + 1) * ra);
    std::vector<uint32_t> vb(g.begin() + bidx * rb,
                             g.begin() + (bidx + 1) * rb);
    std::vector<uint32_t> w = pr.apply(va, B.act(prod, vb));
    for (int t = 0; t < rc; ++t)
      out[static_cast<size_t>(sidx * rc + t)] = w[static_cast<size_t>(t)];
    ++sidx;
  } while (next_digits(digits, nt));
  return out; // blocks are reduced by the pairing already
}

} // namespace cohwork
