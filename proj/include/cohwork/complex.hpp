#pragma once

#include "finmod.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cohwork {

// Bounded cochain complex of diagonal modules.  Degrees outside the
// support window [lo, hi] are zero; all accessors are total over Z.
class Complex {
public:
  // mods[i] sits in degree lo + i; diffs[i]: mods[i] -> mods[i+1].
  // Throws if the shapes mismatch or some d.d != 0.
  Complex(Ring R, int lo, std::vector<FinMod> mods, std::vector<ModHom> diffs);

  static Complex zero(Ring R);
  static Complex concentrated(FinMod m, int degree);
  // 0 -> dom(d) -> cod(d) -> 0 with dom(d) placed in degree lo_degree.
  static Complex two_term(const ModHom &d, int lo_degree);

  const Ring &ring() const { return R_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(mods_.size()) - 1; }
  bool in_window(int n) const { return n >= lo() && n <= hi(); }

  FinMod module(int n) const;
  ModHom d(int n) const; // module(n) -> module(n+1)
  int ngens(int n) const;

  // H^n = ker d^n / im d^{n-1} presented over the plain generator
  // coordinates of module(n).  Cached; copies of the complex share it.
  const Subquotient &h_subq(int n) const;
  FinMod cohomology(int n) const { return h_subq(n).module(); }

  // log2 |H^n| by size counting alone.  Never builds a presentation, so
  // this is the cohomology entry point that scales to induced-module
  // cochain sizes where h_subq would be hopeless.
  long long h_size_log2(int n) const;
  bool is_acyclic() const;

private:
  Ring R_;
  int lo_ = 0;
  std::vector<FinMod> mods_;
  std::vector<ModHom> diffs_;

  struct Cache {
    std::map<int, Subquotient> h;
    std::map<int, long long> im_size; // log2 |im d^n| in module(n+1)
  };
  std::shared_ptr<Cache> cache_;

  long long im_size_log2(int n) const;
};

Complex shift(const Complex &x, int n);
Complex direct_sum(const Complex &a, const Complex &b);
// Degreewise same module presentations and equal differentials.
bool same_complex(const Complex &a, const Complex &b);

class ChainMap {
public:
  // comps[n]: src.module(n) -> dst.module(n); degrees absent from the map
  // are zero.  Throws, naming the degree, if a square with the
  // differentials fails to commute.
  ChainMap(Complex src, Complex dst, std::map<int, SpMat> comps);

  static ChainMap identity(const Complex &x);
  static ChainMap zero_map(Complex src, Complex dst);
  // c times the identity on x.
  static ChainMap scalar(const Complex &x, uint32_t c);

  const Complex &src() const { return src_; }
  const Complex &dst() const { return dst_; }
  SpMat mat(int n) const;
  ModHom hom(int n) const;
  bool is_zero() const;

private:
  Complex src_, dst_;
  std::map<int, SpMat> comps_;
};

ChainMap compose(const ChainMap &g, const ChainMap &f); // g after f
ChainMap shift(const ChainMap &u, int n);
ChainMap direct_sum(const ChainMap &a, const ChainMap &b);
// (a; b): a shared source into direct_sum(a.dst, b.dst).
ChainMap stack_map(const ChainMap &a, const ChainMap &b);
// Projection of direct_sum(a, b) onto one summand (0 = a, 1 = b).
ChainMap sum_proj(const Complex &a, const Complex &b, int which);
bool chain_maps_equal(const ChainMap &a, const ChainMap &b);

// Cone(u) = Y + X[1] with differential [[d_Y, u],[0, -d_X]].
Complex cone(const ChainMap &u);

// (g, f[1]): Cone(u) -> Cone(v) for a commuting square g.u = v.f
// (checked; throws otherwise).
ChainMap cone_functorial(const ChainMap &g, const ChainMap &f,
                         const ChainMap &u, const ChainMap &v);

// X -u-> Y -j-> Cone(u) -(-pi)-> X[1].
struct Triangle {
  Complex x, y, z;
  ChainMap u, j, delta;
};
Triangle canonical_triangle(const ChainMap &u);

// Map induced by u on H^n; both cohomologies are presented, so keep the
// complexes small here.
ModHom induced_h(const ChainMap &u, int n);

// Cone acyclic over its window.
bool is_quasi_iso(const ChainMap &u);
// Literal comparison: every induced H^n(u) is an isomorphism.
bool is_quasi_iso_by_h(const ChainMap &u);
// Degree-range variant for truncated windows: |H^n| agrees over
// [n_lo, n_hi] and the induced map is surjective there.  Surjectivity is
// witnessed by joint lifting solves, so the source cohomology is never
// presented; only h_subq(dst) must be affordable.
bool is_quasi_iso_range(const ChainMap &u, int n_lo, int n_hi);

struct CheckReport {
  bool ok = true;
  std::string detail;
};

// Exactness of H^r(X) -> H^r(Y) -> H^r(Cone u) -> H^{r+1}(X) at every
// spot over the window, connecting map realized on representatives.
CheckReport triangle_les_verify(const ChainMap &u);

// Triangle Cone(u) -(v,id)-> Cone(v.u) -(id,u[1])-> Cone(v) for
// composable u: X -> Y, v: Y -> Z; verifies its long sequence is exact.
CheckReport composite_cone_triangle(const ChainMap &u, const ChainMap &v);

struct SesConeMaps {
  ChainMap q; // Cone(u) -> Z, (y, x) -> v(y)
  ChainMap l; // X -> Cone(v)[-1], x -> (0, u(x))
};
// 0 -> X -u-> Y -v-> Z -> 0 degreewise exact (checked; throws otherwise).
SesConeMaps ses_cone_maps(const ChainMap &u, const ChainMap &v);

// Commutative cube over identity edges of C: top face C -f-> X -u-> Y
// with g = u.f, bottom face C -f1-> X1 -u1-> Y1 with g1 = u1.f1,
// verticals v: X -> X1 and vhat: Y -> Y1.
struct Cube {
  ChainMap f, g, u;
  ChainMap f1, g1, u1;
  ChainMap v, vhat;
};
// Throws if a face fails to commute (naming the face); the report covers
// commutativity of every square of the derived cone diagram and the long
// exact sequences of its first two rows and columns.
CheckReport cube_verify(const Cube &cube);

} // namespace cohwork
