#include "cohwork/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohwork {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<int64_t>> rows_init,
                   const Ring& R) {
  int r = int(rows_init.size());
  int c = r == 0 ? 0 : int(rows_init.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows_init) {
    if (int(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    int j = 0;
    for (int64_t x : row) m.at(i, j++) = R.reduce(x);
    ++i;
  }
  return m;
}

Mat mat_mul(const Ring& R, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      uint32_t xv = x.at(i, l);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = R.add(z.at(i, j), R.mul(xv, y.at(l, j)));
    }
  return z;
}

Mat mat_add(const Ring& R, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape");
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = R.add(x.a[i], y.a[i]);
  return z;
}

Mat mat_sub(const Ring& R, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_sub: shape");
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = R.sub(x.a[i], y.a[i]);
  return z;
}

Mat mat_scale(const Ring& R, uint32_t c, const Mat& x) {
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = R.mul(c, x.a[i]);
  return z;
}

Mat mat_hcat(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("mat_hcat: row mismatch");
  Mat z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

Mat mat_vcat(const Mat& x, const Mat& y) {
  if (x.cols != y.cols) throw std::invalid_argument("mat_vcat: col mismatch");
  Mat z(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
  return z;
}

Mat mat_diag_sum(const Mat& x, const Mat& y) {
  Mat z(x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) z.at(x.rows + i, x.cols + j) = y.at(i, j);
  return z;
}

Mat mat_transpose(const Mat& x) {
  Mat z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

bool mat_is_zero(const Mat& x) {
  return std::all_of(x.a.begin(), x.a.end(), [](uint32_t v) { return v == 0; });
}

namespace {

// Elementary ops applied to the work matrix while maintaining u, u_inv (row
// side) and v, v_inv (column side) so that u*a*v = d holds throughout.
struct SnfWork {
  const Ring& R;
  Mat d, u, ui, v, vi;

  void row_swap(int i, int j) {
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    // u_inv: swap columns i, j
    for (int r = 0; r < ui.rows; ++r) std::swap(ui.at(r, i), ui.at(r, j));
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vi.cols; ++c) std::swap(vi.at(i, c), vi.at(j, c));
  }
  // row i *= c (c a unit)
  void row_scale(int i, uint32_t c) {
    uint32_t cinv = R.inv_unit(c);
    for (int j = 0; j < d.cols; ++j) d.at(i, j) = R.mul(c, d.at(i, j));
    for (int j = 0; j < u.cols; ++j) u.at(i, j) = R.mul(c, u.at(i, j));
    for (int r = 0; r < ui.rows; ++r) ui.at(r, i) = R.mul(cinv, ui.at(r, i));
  }
  // row j += c * row i
  void row_axpy(int j, uint32_t c, int i) {
    for (int x = 0; x < d.cols; ++x) d.at(j, x) = R.add(d.at(j, x), R.mul(c, d.at(i, x)));
    for (int x = 0; x < u.cols; ++x) u.at(j, x) = R.add(u.at(j, x), R.mul(c, u.at(i, x)));
    // u_inv: col i -= c * col j
    for (int r = 0; r < ui.rows; ++r)
      ui.at(r, i) = R.sub(ui.at(r, i), R.mul(c, ui.at(r, j)));
  }
  // col j += c * col i
  void col_axpy(int j, uint32_t c, int i) {
    for (int r = 0; r < d.rows; ++r) d.at(r, j) = R.add(d.at(r, j), R.mul(c, d.at(r, i)));
    for (int r = 0; r < v.rows; ++r) v.at(r, j) = R.add(v.at(r, j), R.mul(c, v.at(r, i)));
    for (int x = 0; x < vi.cols; ++x)
      vi.at(i, x) = R.sub(vi.at(i, x), R.mul(c, vi.at(j, x)));
  }
};

}  // namespace

SnfResult smith_normal_form(const Ring& R, Mat a) {
  SnfWork w{R, std::move(a), Mat::identity(0), Mat::identity(0), Mat::identity(0),
            Mat::identity(0)};
  w.u = Mat::identity(w.d.rows);
  w.ui = Mat::identity(w.d.rows);
  w.v = Mat::identity(w.d.cols);
  w.vi = Mat::identity(w.d.cols);

  int n = std::min(w.d.rows, w.d.cols);
  for (int p = 0; p < n; ++p) {
    // Deterministic pivot: minimal 2-adic valuation, first in row-major order
    // within the trailing submatrix.
    int best_i = -1, best_j = -1, best_v = R.k() + 1;
    for (int i = p; i < w.d.rows && best_v > 0; ++i)
      for (int j = p; j < w.d.cols; ++j) {
        uint32_t x = w.d.at(i, j);
        if (x == 0) continue;
        int vv = R.val(x);
        if (vv < best_v) {
          best_v = vv;
          best_i = i;
          best_j = j;
          if (vv == 0) break;
        }
      }
    if (best_i < 0) break;  // submatrix is zero
    if (best_i != p) w.row_swap(p, best_i);
    if (best_j != p) w.col_swap(p, best_j);
    uint32_t piv = w.d.at(p, p);
    if (R.unit_part(piv) != 1) w.row_scale(p, R.inv_unit(R.unit_part(piv)));
    piv = w.d.at(p, p);
    // Pivot has minimal valuation, so every elimination quotient is exact and
    // the trailing submatrix keeps valuations >= val(piv).
    for (int i = p + 1; i < w.d.rows; ++i) {
      uint32_t x = w.d.at(i, p);
      if (x != 0) w.row_axpy(i, R.neg(R.div_exact(x, piv)), p);
    }
    for (int j = p + 1; j < w.d.cols; ++j) {
      uint32_t x = w.d.at(p, j);
      if (x != 0) w.col_axpy(j, R.neg(R.div_exact(x, piv)), p);
    }
  }

  SnfResult res;
  res.d = std::move(w.d);
  res.u = std::move(w.u);
  res.u_inv = std::move(w.ui);
  res.v = std::move(w.v);
  res.v_inv = std::move(w.vi);
  for (int i = 0; i < n; ++i) res.exps.push_back(R.val(res.d.at(i, i)));
  return res;
}

SparseVec sv_from_dense(const std::vector<uint32_t>& v) {
  SparseVec s;
  for (int32_t i = 0; i < int32_t(v.size()); ++i) s.push(i, v[size_t(i)]);
  return s;
}

std::vector<uint32_t> sv_to_dense(const SparseVec& v, int dim) {
  std::vector<uint32_t> d(size_t(dim), 0u);
  for (auto [i, x] : v.e) d[size_t(i)] = x;
  return d;
}

SparseVec sv_axpy(const Ring& R, const SparseVec& x, uint32_t c, const SparseVec& y) {
  if (c == 0) return x;
  SparseVec z;
  z.e.reserve(x.e.size() + y.e.size());
  size_t i = 0, j = 0;
  while (i < x.e.size() || j < y.e.size()) {
    if (j >= y.e.size() || (i < x.e.size() && x.e[i].first < y.e[j].first)) {
      z.e.push_back(x.e[i++]);
    } else if (i >= x.e.size() || y.e[j].first < x.e[i].first) {
      uint32_t val = R.mul(c, y.e[j].second);
      if (val != 0) z.e.emplace_back(y.e[j].first, val);
      ++j;
    } else {
      uint32_t val = R.add(x.e[i].second, R.mul(c, y.e[j].second));
      if (val != 0) z.e.emplace_back(x.e[i].first, val);
      ++i;
      ++j;
    }
  }
  return z;
}

SparseVec sv_scale(const Ring& R, uint32_t c, const SparseVec& x) {
  SparseVec z;
  z.e.reserve(x.e.size());
  for (auto [i, v] : x.e) z.push(i, R.mul(c, v));
  return z;
}

SparseVec sv_shift(const SparseVec& x, int32_t off) {
  SparseVec z = x;
  for (auto& [i, v] : z.e) i += off;
  return z;
}

uint32_t sv_get(const SparseVec& x, int32_t i) {
  auto it = std::lower_bound(x.e.begin(), x.e.end(), i,
                             [](const auto& p, int32_t key) { return p.first < key; });
  return (it != x.e.end() && it->first == i) ? it->second : 0u;
}

uint32_t sv_dot(const Ring& R, const SparseVec& x, const SparseVec& y) {
  uint32_t acc = 0;
  size_t i = 0, j = 0;
  while (i < x.e.size() && j < y.e.size()) {
    if (x.e[i].first < y.e[j].first) ++i;
    else if (y.e[j].first < x.e[i].first) ++j;
    else acc = R.add(acc, R.mul(x.e[i++].second, y.e[j++].second));
  }
  return acc;
}

SpMat SpMat::identity(int n) {
  SpMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[size_t(i)].push(i, 1);
  return m;
}

SpMat SpMat::from_dense(const Mat& m) {
  SpMat s(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) s.col[size_t(j)].push(i, m.at(i, j));
  return s;
}

Mat SpMat::to_dense() const {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto [i, v] : col[size_t(j)].e) m.at(i, j) = v;
  return m;
}

bool SpMat::is_zero() const {
  return std::all_of(col.begin(), col.end(), [](const SparseVec& c) { return c.empty(); });
}

SpMat sp_mul(const Ring& R, const SpMat& x, const SpMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("sp_mul: shape mismatch");
  SpMat z(x.rows, y.cols);
  for (int j = 0; j < y.cols; ++j) {
    SparseVec acc;
    for (auto [l, c] : y.col[size_t(j)].e) acc = sv_axpy(R, acc, c, x.col[size_t(l)]);
    z.col[size_t(j)] = std::move(acc);
  }
  return z;
}

SparseVec sp_apply(const Ring& R, const SpMat& x, const SparseVec& v) {
  SparseVec acc;
  for (auto [l, c] : v.e) acc = sv_axpy(R, acc, c, x.col[size_t(l)]);
  return acc;
}

SpMat sp_add(const Ring& R, const SpMat& x, const SpMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("sp_add: shape");
  SpMat z(x.rows, x.cols);
  for (int j = 0; j < x.cols; ++j)
    z.col[size_t(j)] = sv_axpy(R, x.col[size_t(j)], 1, y.col[size_t(j)]);
  return z;
}

SpMat sp_scale(const Ring& R, uint32_t c, const SpMat& x) {
  SpMat z(x.rows, x.cols);
  for (int j = 0; j < x.cols; ++j) z.col[size_t(j)] = sv_scale(R, c, x.col[size_t(j)]);
  return z;
}

SpMat sp_hcat(const SpMat& x, const SpMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("sp_hcat: row mismatch");
  SpMat z(x.rows, x.cols + y.cols);
  for (int j = 0; j < x.cols; ++j) z.col[size_t(j)] = x.col[size_t(j)];
  for (int j = 0; j < y.cols; ++j) z.col[size_t(x.cols + j)] = y.col[size_t(j)];
  return z;
}

SpMat sp_vcat(const SpMat& x, const SpMat& y) {
  if (x.cols != y.cols) throw std::invalid_argument("sp_vcat: col mismatch");
  SpMat z(x.rows + y.rows, x.cols);
  for (int j = 0; j < x.cols; ++j) {
    SparseVec c = x.col[size_t(j)];
    for (auto [i, v] : y.col[size_t(j)].e) c.e.emplace_back(i + x.rows, v);
    z.col[size_t(j)] = std::move(c);
  }
  return z;
}

SpMat sp_diag_sum(const SpMat& x, const SpMat& y) {
  SpMat z(x.rows + y.rows, x.cols + y.cols);
  for (int j = 0; j < x.cols; ++j) z.col[size_t(j)] = x.col[size_t(j)];
  for (int j = 0; j < y.cols; ++j)
    z.col[size_t(x.cols + j)] = sv_shift(y.col[size_t(j)], x.rows);
  return z;
}

SpMat sp_block2x2(const Ring& R, const SpMat& a, const SpMat& b, const SpMat& c,
                  const SpMat& d) {
  (void)R;
  if (a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols)
    throw std::invalid_argument("sp_block2x2: inconsistent blocks");
  return sp_hcat(sp_vcat(a, c), sp_vcat(b, d));
}

}  // namespace cohwork
