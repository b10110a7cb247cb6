#pragma once

#include "finmod.hpp"
#include "group.hpp"

namespace cohwork {

// Module with a left action of a finite group: one invertible hom per
// element.  Multiplicativity and the identity axiom are checked at
// construction, which also forces invertibility.
class GModule {
public:
  GModule(FinGroup g, FinMod base, std::vector<ModHom> action);
  static GModule trivial(FinGroup g, FinMod base);

  const FinGroup &group() const { return g_; }
  const FinMod &base() const { return base_; }
  const ModHom &action(int g) const { return action_[static_cast<size_t>(g)]; }
  std::vector<uint32_t> act(int g, const std::vector<uint32_t> &v) const {
    return action(g).apply(v);
  }

private:
  FinGroup g_;
  FinMod base_;
  std::vector<ModHom> action_;
};

// Same base module, action scaled by chi^i.
GModule twist(const GModule &m, const Character &chi, int i);

// Blockwise sum of bases and actions; groups must share a table.
GModule direct_sum(const GModule &a, const GModule &b);

// Pontryagin dual with (g.phi)(m) = chi(g) phi(g^{-1} m).
GModule kummer_dual(const GModule &m, const Character &chi);

// G-equivariant bilinear pairing a x b -> c.  Stored as a linear map on
// tensor coordinates: column j*rank(b)+l holds the value on (e_j, e'_l).
class GPairing {
public:
  GPairing(GModule a, GModule b, GModule c, SpMat table);

  const GModule &lhs() const { return a_; }
  const GModule &rhs() const { return b_; }
  const GModule &out() const { return c_; }
  std::vector<uint32_t> apply(const std::vector<uint32_t> &va,
                              const std::vector<uint32_t> &vb) const;

private:
  GModule a_, b_, c_;
  SpMat table_;
};

// Evaluation pairing M x kummer_dual(M, chi) -> twist(trivial 2^k, chi)
// (rank-one module with G acting through chi).
GPairing eval_pairing(const GModule &m, const Character &chi);

} // namespace cohwork
