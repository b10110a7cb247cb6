#pragma once

#include "complex.hpp"
#include "gmodule.hpp"

namespace cohwork {

// Degree-n generators of the normalized cochain space are pairs (tuple in
// (G \ 1)^n, base generator), tuple-major with the leftmost argument most
// significant.  Tuples are lists of element indices.
long long cochain_rank(const FinGroup &g, const FinMod &base, int n);
long long tuple_index(const FinGroup &g, const std::vector<int> &tuple);
std::vector<int> tuple_from_index(const FinGroup &g, int n, long long index);

// C^0 .. C^max_degree with the inhomogeneous differential; cochains vanish
// on tuples containing the identity.
Complex normalized_cochain_complex(const GModule &m, int max_degree);

// H^n(G, M) as an abstract module; builds cochains through degree n + 1.
FinMod group_cohomology(const GModule &m, int n);

// C(G, M) -> C(G, N) applying an equivariant phi: M -> N to values.
// Equivariance is caught by the chain-map squares.
ChainMap coefficient_chain_map(const GModule &src, const GModule &dst,
                               const ModHom &phi, int max_degree);

// The same module with the action forgotten down to a subgroup.
GModule restrict_module(const GModule &m, const SubgroupData &h);

// C(G, M) -> C(H, res M): restriction of cochains to subgroup tuples.
// Degree 0 is the identity on M.
ChainMap restriction_chain_map(const GModule &m, const SubgroupData &h,
                               int max_degree);

// Ind_H^G of an H-module: H-equivariant maps G -> M under right
// translation.  Coordinates are values on right-coset representatives,
// coset-major; the identity coset comes first with representative 1.
GModule induced_module_h(const FinGroup &g, const SubgroupData &h,
                         const GModule &m_over_h);

// Adjunction unit m -> (x -> x m) into Ind_H^G(res_H M) for a G-module M.
struct InducedData {
  GModule ind;
  ModHom unit;
};
InducedData induced_module(const GModule &m, const SubgroupData &h);

// Evaluation at the identity after restriction of arguments:
// C(G, Ind_H^G M) -> C(H, M).  A quasi-isomorphism in every degree.
struct ShapiroData {
  GModule ind;
  ChainMap map;
};
ShapiroData shapiro_chain_map(const FinGroup &g, const SubgroupData &h,
                              const GModule &m_over_h, int max_degree);

// (f cup g)(g_1..g_{p+q}) = b(f(g_1..g_p), (g_1...g_p) g(g_{p+1}..g_{p+q})).
// Both inputs must be cocycles; returns the product cocycle.
std::vector<uint32_t> cup_product(const GPairing &pr, int p,
                                  const std::vector<uint32_t> &f, int q,
                                  const std::vector<uint32_t> &g);

} // namespace cohwork
