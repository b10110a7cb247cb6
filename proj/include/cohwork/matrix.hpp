#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cohwork/ring.hpp"

namespace cohwork {

/// Dense row-major matrix over Z/2^k.  Used for module presentations, group
/// actions and homs, which stay small; large objects (cochain differentials)
/// use SpMat below.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0u) {}

  uint32_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  uint32_t at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n);
  static Mat from_rows(std::initializer_list<std::initializer_list<int64_t>> rows_init,
                       const Ring& R);

  bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Ring& R, const Mat& x, const Mat& y);
Mat mat_add(const Ring& R, const Mat& x, const Mat& y);
Mat mat_sub(const Ring& R, const Mat& x, const Mat& y);
Mat mat_scale(const Ring& R, uint32_t c, const Mat& x);
Mat mat_hcat(const Mat& x, const Mat& y);
Mat mat_vcat(const Mat& x, const Mat& y);
/// Block diagonal [x 0; 0 y].
Mat mat_diag_sum(const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);
bool mat_is_zero(const Mat& x);

/// Smith normal form over Z/2^k: u * a * v = d with u, v invertible and d
/// diagonal with entries powers of 2 (0 stands for 2^k), each dividing the
/// next.  u_inv and v_inv are maintained alongside.
struct SnfResult {
  Mat d;
  Mat u, u_inv;
  Mat v, v_inv;
  /// Per-diagonal-slot valuations: exps[i] = val(d[i,i]), with val(0) = k.
  /// Has min(rows, cols) entries; generators beyond the diagonal are
  /// relation-free (treated as valuation k by callers).
  std::vector<int> exps;
};

SnfResult smith_normal_form(const Ring& R, Mat a);

/// Sorted sparse vector: (index, nonzero value) pairs with strictly
/// increasing indices.
struct SparseVec {
  std::vector<std::pair<int32_t, uint32_t>> e;

  bool empty() const { return e.empty(); }
  int32_t lead_index() const { return e.front().first; }
  uint32_t lead_value() const { return e.front().second; }
  void push(int32_t i, uint32_t v) {
    if (v != 0) e.emplace_back(i, v);
  }

  bool operator==(const SparseVec& o) const = default;
};

SparseVec sv_from_dense(const std::vector<uint32_t>& v);
std::vector<uint32_t> sv_to_dense(const SparseVec& v, int dim);
/// x + c*y
SparseVec sv_axpy(const Ring& R, const SparseVec& x, uint32_t c, const SparseVec& y);
SparseVec sv_scale(const Ring& R, uint32_t c, const SparseVec& x);
/// Shift all indices by off.
SparseVec sv_shift(const SparseVec& x, int32_t off);
uint32_t sv_get(const SparseVec& x, int32_t i);
/// Dot product <x, y>.
uint32_t sv_dot(const Ring& R, const SparseVec& x, const SparseVec& y);

/// Column-sparse matrix over Z/2^k.
struct SpMat {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  SpMat() = default;
  SpMat(int r, int c) : rows(r), cols(c), col(size_t(c)) {}

  static SpMat identity(int n);
  static SpMat from_dense(const Mat& m);
  Mat to_dense() const;
  bool is_zero() const;

  bool operator==(const SpMat& o) const = default;
};

SpMat sp_mul(const Ring& R, const SpMat& x, const SpMat& y);
SparseVec sp_apply(const Ring& R, const SpMat& x, const SparseVec& v);
SpMat sp_add(const Ring& R, const SpMat& x, const SpMat& y);
SpMat sp_scale(const Ring& R, uint32_t c, const SpMat& x);
SpMat sp_hcat(const SpMat& x, const SpMat& y);
SpMat sp_vcat(const SpMat& x, const SpMat& y);
SpMat sp_diag_sum(const SpMat& x, const SpMat& y);
/// 2x2 block matrix [[a, b], [c, d]]; dimensions must be consistent.
SpMat sp_block2x2(const Ring& R, const SpMat& a, const SpMat& b, const SpMat& c,
                  const SpMat& d);

}  // namespace cohwork
