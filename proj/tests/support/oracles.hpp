#pragma once

// Brute-force reference implementations used only by tests.  These are kept
// deliberately naive and independent of the library's linear algebra so that
// agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cohwork/matrix.hpp"
#include "cohwork/ring.hpp"

namespace oracle {

using cohwork::Mat;
using cohwork::Ring;

// Invariant factors of R^rows / colspan(A) over R = Z/2^k, computed by a
// textbook integer Smith reduction of [A | 2^k I] with int64 arithmetic.
inline std::vector<int64_t> module_factors_int_snf(const Ring& R, const Mat& a) {
  int n = a.rows, m = a.cols + a.rows;
  std::vector<std::vector<int64_t>> w(size_t(n), std::vector<int64_t>(size_t(m), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < a.cols; ++j) w[size_t(i)][size_t(j)] = int64_t(a.at(i, j));
    w[size_t(i)][size_t(a.cols + i)] = int64_t(1) << R.k();
  }
  int p = 0;
  while (p < n && p < m) {
    // find smallest nonzero |entry| in trailing block
    int bi = -1, bj = -1;
    int64_t best = 0;
    for (int i = p; i < n; ++i)
      for (int j = p; j < m; ++j) {
        int64_t v = w[size_t(i)][size_t(j)];
        if (v == 0) continue;
        if (bi < 0 || std::abs(v) < std::abs(best)) { bi = i; bj = j; best = v; }
      }
    if (bi < 0) break;
    std::swap(w[size_t(p)], w[size_t(bi)]);
    for (int i = 0; i < n; ++i) std::swap(w[size_t(i)][size_t(p)], w[size_t(i)][size_t(bj)]);
    bool clean = true;
    for (int i = p + 1; i < n; ++i) {
      int64_t q = w[size_t(i)][size_t(p)] / w[size_t(p)][size_t(p)];
      if (q != 0)
        for (int j = p; j < m; ++j) w[size_t(i)][size_t(j)] -= q * w[size_t(p)][size_t(j)];
      if (w[size_t(i)][size_t(p)] != 0) clean = false;
    }
    for (int j = p + 1; j < m; ++j) {
      int64_t q = w[size_t(p)][size_t(j)] / w[size_t(p)][size_t(p)];
      if (q != 0)
        for (int i = p; i < n; ++i) w[size_t(i)][size_t(j)] -= q * w[size_t(i)][size_t(p)];
      if (w[size_t(p)][size_t(j)] != 0) clean = false;
    }
    if (clean) ++p;
  }
  std::vector<int64_t> diag;
  for (int i = 0; i < std::min(n, m); ++i) {
    int64_t v = std::abs(w[size_t(i)][size_t(i)]);
    if (v > 1) diag.push_back(v);
  }
  // fix divisibility: repeatedly replace (a, b) by (gcd, lcm)
  for (bool again = true; again;) {
    again = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        int64_t g = std::gcd(diag[i], diag[j]);
        if (diag[i] % diag[j] != 0 && diag[j] % diag[i] != 0) {
          int64_t l = diag[i] / g * diag[j];
          diag[i] = l; diag[j] = g;
          again = true;
        }
      }
  }
  std::sort(diag.begin(), diag.end(), std::greater<>());
  while (!diag.empty() && diag.back() == 1) diag.pop_back();
  return diag;
}

// All elements of the subgroup of (Z/2^k)^dim generated by gens, as dense
// vectors.  Closure by repeated addition; sizes must stay tiny.
inline std::set<std::vector<uint32_t>> span_enumerate(
    const Ring& R, int dim, const std::vector<std::vector<uint32_t>>& gens) {
  std::set<std::vector<uint32_t>> seen;
  std::vector<std::vector<uint32_t>> frontier;
  std::vector<uint32_t> zero(size_t(dim), 0u);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<std::vector<uint32_t>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        std::vector<uint32_t> w(size_t(dim), 0u);
        for (int i = 0; i < dim; ++i) w[size_t(i)] = R.add(v[size_t(i)], g[size_t(i)]);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return seen;
}

// Invariant factors (largest first) of the quotient num/den of two enumerated
// subgroups den <= num of (Z/2^k)^dim, found by counting 2^j-torsion: if
// M = ⊕ Z/2^{λ_i} then log2|M[2^j]| = Σ min(λ_i, j), whose successive
// differences give the conjugate partition of the λ's.
inline std::vector<int64_t> quotient_factors_enum(
    const Ring& R, int dim, const std::set<std::vector<uint32_t>>& num,
    const std::set<std::vector<uint32_t>>& den) {
  std::vector<int> m(size_t(R.k()) + 1, 0);
  for (int j = 0; j <= R.k(); ++j) {
    int64_t count = 0;
    for (const auto& x : num) {
      std::vector<uint32_t> y(size_t(dim), 0u);
      for (int i = 0; i < dim; ++i) y[size_t(i)] = R.mul(R.pow2(j), x[size_t(i)]);
      if (den.count(y)) ++count;
    }
    int lg = 0;
    while ((int64_t(1) << lg) < count) ++lg;
    int dlg = 0;
    while ((size_t(1) << dlg) < den.size()) ++dlg;
    m[size_t(j)] = lg - dlg;
  }
  std::vector<int64_t> factors;
  for (int j = R.k(); j >= 1; --j) {
    int count_ge_j = m[size_t(j)] - m[size_t(j) - 1];
    int count_ge_j1 = j < R.k() ? m[size_t(j) + 1] - m[size_t(j)] : 0;
    for (int t = 0; t < count_ge_j - count_ge_j1; ++t)
      factors.push_back(int64_t(1) << j);
  }
  return factors;
}

// Every vector of (Z/2^k)^dim; dim * k must be small.
inline std::vector<std::vector<uint32_t>> all_vectors(const Ring& R, int dim) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur(size_t(dim), 0u);
  uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= R.mod();
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t t = idx;
    for (int i = 0; i < dim; ++i) { cur[size_t(i)] = uint32_t(t % R.mod()); t /= R.mod(); }
    out.push_back(cur);
  }
  return out;
}

}  // namespace oracle
