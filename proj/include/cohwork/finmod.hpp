#pragma once

// Finite modules over Z/2^k in canonical diagonal form, homomorphisms,
// submodules, and subquotients.
//
// Every FinMod is kept diagonal: generator i has order 2^{exps[i]}.  A
// presentation by an arbitrary relation matrix is canonicalized once, at
// construction, through Smith normal form (canonical_presentation); after
// that all arithmetic is componentwise.  This keeps the huge free modules
// showing up as cochain spaces cheap: no relation matrix is ever stored
// for them.
//
// Subquotient is the workhorse behind cohomology groups: it presents
// span(num)/span(den) inside R^dim canonically without ever running a
// dense elimination at ambient scale.  Unit-pivot generators are peeled
// off the relation lattice first, so the dense Smith step only sees the
// small essential block.

#include "cohwork/matrix.hpp"
#include "cohwork/ring.hpp"
#include "cohwork/staircase.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace cohwork {

class FinMod {
public:
  // Generator i has order 2^{exps[i]}; every exponent must lie in [1, k].
  // Zero-exponent generators are a construction-time error: factories drop
  // dead generators before building the module.
  FinMod(Ring R, std::vector<int> exps);

  static FinMod zero(Ring R) { return FinMod(R, {}); }
  static FinMod free_module(Ring R, int ngens);
  static FinMod cyclic(Ring R, int exp) { return FinMod(R, {exp}); }

  const Ring &ring() const { return R_; }
  int ngens() const { return static_cast<int>(exps_.size()); }
  const std::vector<int> &exps() const { return exps_; }
  int exp_of(int i) const { return exps_[static_cast<size_t>(i)]; }

  bool is_zero() const { return exps_.empty(); }
  long long size_log2() const;

  // Orders of the cyclic factors, largest first, e.g. [4, 2].
  std::vector<uint32_t> invariant_factors() const;
  bool isomorphic(const FinMod &other) const;
  // Same generators in the same order; required for hom composition.
  bool same_presentation(const FinMod &other) const {
    return R_ == other.R_ && exps_ == other.exps_;
  }

  // Elements are dense coordinate vectors of length ngens.
  std::vector<uint32_t> reduce_elem(std::vector<uint32_t> v) const;
  bool elems_equal(const std::vector<uint32_t> &a,
                   const std::vector<uint32_t> &b) const;
  bool elem_is_zero(const std::vector<uint32_t> &a) const;
  std::vector<uint32_t> add_elems(const std::vector<uint32_t> &a,
                                  const std::vector<uint32_t> &b) const;
  std::vector<uint32_t> scale_elem(uint32_t c,
                                   const std::vector<uint32_t> &a) const;

  // All elements, in lexicographic coordinate order.  Guarded: only for
  // modules with at most 2^20 elements (test oracles and tiny reports).
  std::vector<std::vector<uint32_t>> enumerate() const;

  // Relation columns 2^{e_i} e_i with e_i < k, as sparse vectors.
  std::vector<SparseVec> relation_columns() const;
  // Sum of (k - e_i): log2 of the relation lattice size inside R^ngens.
  long long corelation_log2() const;

private:
  Ring R_;
  std::vector<int> exps_;
};

FinMod direct_sum(const FinMod &a, const FinMod &b);

// Canonicalization of an arbitrary presentation R^ngens / (columns of rels).
// to_canon maps old coordinates to canonical ones and from_canon is a
// section: to_canon * from_canon = identity on the canonical module.
struct Presentation {
  FinMod module;
  Mat to_canon;
  Mat from_canon;
};
Presentation canonical_presentation(const Ring &R, int ngens, const Mat &rels);

class ModHom {
public:
  // mat is codomain.ngens x domain.ngens, possibly sparse.  Construction
  // checks well-definedness: val(mat[i][j]) >= exps_cod[i] - exps_dom[j].
  ModHom(FinMod dom, FinMod cod, SpMat mat);
  ModHom(FinMod dom, FinMod cod, const Mat &mat);

  static ModHom identity(const FinMod &m);
  static ModHom zero(const FinMod &dom, const FinMod &cod);

  const FinMod &domain() const { return dom_; }
  const FinMod &codomain() const { return cod_; }
  const SpMat &matrix() const { return m_; }
  Mat dense() const { return m_.to_dense(); }

  std::vector<uint32_t> apply(const std::vector<uint32_t> &v) const;
  SparseVec apply_sparse(const SparseVec &v) const;

  bool is_zero() const;
  bool equals(const ModHom &other) const;

private:
  FinMod dom_, cod_;
  SpMat m_;
};

ModHom compose(const ModHom &g, const ModHom &f); // g after f
ModHom hom_add(const ModHom &a, const ModHom &b);
ModHom hom_sub(const ModHom &a, const ModHom &b);
ModHom hom_scale(uint32_t c, const ModHom &h);
ModHom hom_neg(const ModHom &h);
// Block sum acting on direct_sum(dom_a, dom_b) -> direct_sum(cod_a, cod_b).
ModHom hom_diag_sum(const ModHom &a, const ModHom &b);

class Submodule {
public:
  Submodule(FinMod ambient, std::vector<SparseVec> gens);

  const FinMod &ambient() const { return ambient_; }
  const std::vector<SparseVec> &gens() const { return gens_; }

  bool contains(const SparseVec &v) const;
  bool contains_dense(const std::vector<uint32_t> &v) const;
  long long size_log2() const;
  bool equals(const Submodule &other) const;
  bool contains_all(const Submodule &other) const;

  // Lattice in R^ngens spanned by the generators plus ambient relations.
  const Staircase &lattice() const { return lat_; }

private:
  FinMod ambient_;
  std::vector<SparseVec> gens_;
  Staircase lat_;
};

Submodule intersect(const Submodule &s1, const Submodule &s2);

struct HomParts {
  Submodule kernel; // of the domain
  Submodule image;  // of the codomain
  FinMod cokernel;
  ModHom coker_proj; // codomain -> cokernel
};
HomParts hom_parts(const ModHom &h);

// Generators of ker(h) in plain domain coordinates.  Cheaper than
// hom_parts when the cokernel presentation is not needed.
std::vector<SparseVec> hom_kernel_gens(const ModHom &h);

// True iff image(f) = kernel(g) inside the middle module.
bool is_exact_at(const ModHom &f, const ModHom &g);

// Pontryagin dual against Z/2^k.  Generator i of the dual pairs with
// generator i of M through <phi_i, g_j> = delta_ij 2^{k - e_i}.
FinMod pontryagin_dual(const FinMod &m);
ModHom dual_hom(const ModHom &h); // contravariant: (M -> N) to (N* -> M*)
// Natural evaluation M -> M**; the identity matrix in the chosen bases,
// returned as a hom so naturality squares can be checked literally.
ModHom double_dual_eval(const FinMod &m);

// span(num)/span(den) inside R^dim, with den contained in span(num).
// Ambient relations of a diagonal module must be passed inside den (and
// implicitly num) by the caller; Subquotient itself treats R^dim as free.
class Subquotient {
public:
  Subquotient(Ring R, int dim, std::vector<SparseVec> num,
              std::vector<SparseVec> den);

  const Ring &ring() const { return R_; }
  int dim() const { return dim_; }

  long long size_log2() const;
  // Canonical diagonal form of the quotient.
  const FinMod &module() const;
  // Class of an ambient vector in canonical coordinates; v must lie in
  // span(num).
  std::vector<uint32_t> coords(const SparseVec &v) const;
  // A representative of a canonical class.
  SparseVec rep(const std::vector<uint32_t> &y) const;
  bool in_num(const SparseVec &v) const { return num_.contains(num_.reduce(v)); }

private:
  void ensure_presentation() const;

  Ring R_;
  int dim_;
  Staircase num_; // Howell staircase of span(num gens + den gens)
  Staircase den_;

  // Lazily built presentation data.
  mutable bool built_ = false;
  mutable std::vector<SparseVec> basis_;    // pivot columns of num_
  mutable std::optional<Staircase> track_;  // stacked staircase over R^{dim+m}
  mutable std::vector<int> kept_;           // rows of R^m surviving unit peel
  mutable Mat subst_;                       // R^m -> R^kept substitution
  mutable Mat u_, u_inv_;                   // Smith transforms on the peeled block
  mutable std::vector<int> order_;          // canonical position -> peeled row
  mutable std::optional<FinMod> module_;
};

// Quotient of a diagonal module by a submodule, with the projection.
struct QuotientData {
  FinMod quotient;
  ModHom proj; // ambient -> quotient
};
QuotientData quotient_by(const Submodule &s);

// The submodule itself as an abstract diagonal module.
FinMod submodule_presentation(const Submodule &s);

// Induced hom on subquotients: x + den_src maps to h(x) + den_dst.  The
// caller asserts h maps num_src into num_dst and den_src into den_dst.
ModHom induced_hom(const Subquotient &src, const Subquotient &dst,
                   const SpMat &h);

} // namespace cohwork
