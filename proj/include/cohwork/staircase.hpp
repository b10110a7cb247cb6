#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cohwork/matrix.hpp"
#include "cohwork/ring.hpp"

namespace cohwork {

/// Submodule of (Z/2^k)^dim maintained as a column staircase in Howell form:
/// one column per pivot row, the pivot entry is the column's leading nonzero
/// and is an exact power of 2, and for every pivot of valuation a > 0 the
/// annihilator multiple 2^(k-a) * column is itself in the span of deeper
/// columns.  That closure property is what makes leading-coefficient
/// reduction a complete membership test over Z/2^k.
class Staircase {
 public:
  Staircase(Ring R, int dim) : R_(R), dim_(dim) {}

  const Ring& ring() const { return R_; }
  int dim() const { return dim_; }

  void insert(SparseVec v);

  /// Residual of v after reduction against the staircase; zero iff v is in
  /// the lattice.  After canonicalize() residuals are unique coset
  /// representatives, so reduce() is a normal form.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Reduce entries above every pivot so coset representatives are unique.
  void canonicalize();
  bool canonical() const { return canonical_; }

  /// log2 of the number of lattice elements.
  int64_t size_log2() const;

  bool same_lattice(const Staircase& other) const;

  const std::map<int32_t, SparseVec>& pivots() const { return cols_; }
  std::vector<SparseVec> columns() const;

 private:
  Ring R_;
  int dim_;
  bool canonical_ = true;  // empty staircase is canonical
  std::map<int32_t, SparseVec> cols_;

  // Dense reduction accumulator, reused across calls and zeroed on exit, so
  // pivot tails are applied in place instead of re-merging sparse vectors.
  mutable std::vector<uint32_t> den_;
};

/// Graph lattice of a matrix: the staircase of the columns (A e_j, e_j)
/// stacked in R^(rows + cols).  Provides kernel generators and linear solves
/// without ever forming a dense decomposition.
class LinearSystem {
 public:
  LinearSystem(const Ring& R, const SpMat& a);

  /// Generators of { x : A x = 0 }.
  const std::vector<SparseVec>& kernel_gens() const { return kernel_; }

  /// Some x with A x = b, if one exists.
  std::optional<SparseVec> solve(const SparseVec& b) const;

  bool in_image(const SparseVec& b) const;

 private:
  Ring R_;
  int rows_, cols_;
  Staircase st_;
  std::vector<SparseVec> kernel_;
};

}  // namespace cohwork
