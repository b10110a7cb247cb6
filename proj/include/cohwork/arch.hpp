#pragma once

#include "cochain.hpp"

namespace cohwork {

// Archimedean place of a finite model: the decomposition group inside the
// ambient group has order 2 (real, generated by a chosen involution) or
// order 1 (complex).
class ArchPlace {
public:
  static ArchPlace real(FinGroup g, int sigma);
  static ArchPlace complex(FinGroup g);

  bool is_real() const { return sigma_ != 0; }
  const FinGroup &group() const { return g_; }
  // The involution for a real place, the identity for a complex one.
  int sigma() const { return sigma_; }
  // {1, sigma} respectively {1} inside the ambient group.
  SubgroupData decomposition() const;

private:
  ArchPlace(FinGroup g, int s) : g_(std::move(g)), sigma_(s) {}
  FinGroup g_;
  int sigma_;
};

// Complete periodic complex of a place module on the window [-D, D]: every
// term is M, with d = sigma - 1 in even degrees and the norm
// N = sum_{g in G_v} g in odd degrees.  Complex places give the acyclic
// zero/identity pattern.  The module must live over the place group.
Complex complete_complex(const ArchPlace &place, const GModule &m, int D);

// 2-periodic Tate cohomology of the place module; needs |n| <= D - 1.
FinMod tate_cohomology(const ArchPlace &place, const GModule &m, int n,
                       int D = 4);

// Comparison chain map from the normalized cochain complex of the place
// group into the complete complex: the identity in degree 0, evaluation at
// (sigma, ..., sigma) above.  Induces isomorphisms on H^n for
// 1 <= n <= D - 1 and the canonical surjection M^{G_v} ->> Htate^0 at 0.
ChainMap tau_map(const ArchPlace &place, const GModule &m, int D);

// Cup product of periodic-complex cocycles in degrees p and q through an
// equivariant pairing: a.b when p is even, a.(sigma b) when p and q are
// both odd (the order-2 diagonal approximation).  The odd-even pattern
// never arises in the dualities checked here and is rejected.
std::vector<uint32_t> tate_cup(const GPairing &pr, int p,
                               const std::vector<uint32_t> &a, int q,
                               const std::vector<uint32_t> &b);

struct ArchDuality {
  int degree;
  FinMod hn;    // Tate cohomology of M in degree n
  FinMod hdual; // Tate cohomology of the Kummer dual in degree 2 - n
  Mat pairing;  // cup values in the Z/2 target: hn rows, hdual columns
  bool perfect;
};

// Tate cup pairing Htate^n(M) x Htate^{2-n}(M*) -> Htate^2(Z/2^k(1)) = Z/2
// at a real place, where M* is the Kummer dual along the character sending
// the involution to -1.  Perfect means the matrix identifies Htate^n(M)
// with the Z/2-dual of Htate^{2-n}(M*).
ArchDuality arch_duality_check(const ArchPlace &place, const GModule &m,
                               int n, int D = 4);

} // namespace cohwork
