#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cohwork/matrix.hpp"
#include "cohwork/ring.hpp"
#include "cohwork/staircase.hpp"
#include "support/oracles.hpp"

using namespace cohwork;

namespace {

// Deterministic bounded sampling on top of mt19937_64 (avoids the
// implementation-defined std distributions).
uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

Mat random_mat(std::mt19937_64& rng, const Ring& R, int rows, int cols) {
  Mat m(rows, cols);
  for (auto& x : m.a) x = uint32_t(draw(rng, R.mod()));
  return m;
}

}  // namespace

TEST_CASE("ring arithmetic in Z/2^k") {
  Ring R(4);
  CHECK(R.mod() == 16);
  CHECK(R.reduce(-1) == 15);
  CHECK(R.val(0) == 4);
  CHECK(R.val(8) == 3);
  CHECK(R.val(12) == 2);
  for (uint32_t u = 1; u < 16; u += 2) CHECK(R.mul(u, R.inv_unit(u)) == 1);
  CHECK(R.div_exact(12, 2) == 6);
  // 6/2 = 3 and 14/2 = 7: exact division of even by even
  CHECK(R.mul(R.div_exact(6, 2), 2) == 6);
  CHECK(R.divides(2, 12));
  CHECK(!R.divides(4, 2));
  CHECK_THROWS_AS(Ring(0), std::invalid_argument);
  CHECK_THROWS_AS(Ring(40), std::invalid_argument);
}

TEST_CASE("smith normal form: pinned examples") {
  Ring R(4);
  SUBCASE("[[2,4],[6,8]] mod 16 -> diag(2,4)") {
    Mat a = Mat::from_rows({{2, 4}, {6, 8}}, R);
    auto s = smith_normal_form(R, a);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    CHECK(s.d.at(0, 1) == 0);
    CHECK(s.d.at(1, 0) == 0);
    CHECK(mat_mul(R, mat_mul(R, s.u, a), s.v) == s.d);
    CHECK(mat_mul(R, s.u, s.u_inv) == Mat::identity(2));
    CHECK(mat_mul(R, s.v, s.v_inv) == Mat::identity(2));
  }
  SUBCASE("zero and unit one-by-one") {
    auto z = smith_normal_form(R, Mat::from_rows({{0}}, R));
    CHECK(z.d.at(0, 0) == 0);
    auto o = smith_normal_form(R, Mat::from_rows({{5}}, R));
    CHECK(o.d.at(0, 0) == 1);
  }
  SUBCASE("empty shapes") {
    auto e = smith_normal_form(R, Mat(0, 3));
    CHECK(e.d.rows == 0);
    auto f = smith_normal_form(R, Mat(2, 0));
    CHECK(f.exps.empty());
  }
}

TEST_CASE("smith normal form: random roundtrip and divisibility chain") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 500; ++t) {
    Ring R(int(2 + draw(rng, 5)));  // k in [2, 6]
    int rows = int(1 + draw(rng, 6)), cols = int(1 + draw(rng, 6));
    Mat a = random_mat(rng, R, rows, cols);
    auto s = smith_normal_form(R, a);
    CHECK(mat_mul(R, mat_mul(R, s.u, a), s.v) == s.d);
    CHECK(mat_mul(R, s.u, s.u_inv) == Mat::identity(rows));
    CHECK(mat_mul(R, s.v, s.v_inv) == Mat::identity(cols));
    int n = std::min(rows, cols);
    for (int i = 0; i < n; ++i) {
      uint32_t di = s.d.at(i, i);
      // entries are exact powers of two (0 stands for 2^k)
      CHECK((di == 0 || di == (uint32_t(1) << R.val(di))));
      if (i > 0) CHECK(R.val(s.d.at(i - 1, i - 1)) <= R.val(di));
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    }
  }
}

TEST_CASE("smith normal form agrees with integer-SNF oracle on module factors") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 200; ++t) {
    Ring R(int(2 + draw(rng, 3)));
    int rows = int(1 + draw(rng, 4)), cols = int(draw(rng, 5));
    Mat a = random_mat(rng, R, rows, cols);
    auto s = smith_normal_form(R, a);
    // diag exponent e gives summand Z/2^e; slots beyond the diagonal are free.
    std::vector<int64_t> got;
    for (int i = 0; i < rows; ++i) {
      int e = i < int(s.exps.size()) ? s.exps[size_t(i)] : R.k();
      if (e > 0) got.push_back(int64_t(1) << e);
    }
    std::sort(got.begin(), got.end(), std::greater<>());
    CHECK(got == oracle::module_factors_int_snf(R, a));
  }
}

TEST_CASE("sparse vector ops") {
  Ring R(4);
  SparseVec x = sv_from_dense({1, 0, 3, 0});
  SparseVec y = sv_from_dense({0, 2, 15, 4});
  auto z = sv_axpy(R, x, 1, y);
  CHECK(sv_to_dense(z, 4) == std::vector<uint32_t>{1, 2, 2, 4});
  auto w = sv_axpy(R, x, 5, y);  // 3 + 5*15 = 78 = 14 mod 16
  CHECK(sv_get(w, 2) == 14);
  CHECK(sv_get(w, 0) == 1);
  CHECK(sv_dot(R, x, y) == R.reduce(3 * 15));
  auto s = sv_shift(x, 10);
  CHECK(s.lead_index() == 10);
}

TEST_CASE("staircase matches brute-force span enumeration") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 120; ++t) {
    Ring R(int(1 + draw(rng, 3)));  // k in [1,3]
    int dim = int(1 + draw(rng, 3));
    int ngens = int(draw(rng, 4));
    std::vector<std::vector<uint32_t>> gens;
    for (int g = 0; g < ngens; ++g) {
      std::vector<uint32_t> v(size_t(dim), 0u);
      for (auto& x : v) x = uint32_t(draw(rng, R.mod()));
      gens.push_back(v);
    }
    Staircase st(R, dim);
    for (const auto& g : gens) st.insert(sv_from_dense(g));
    auto truth = oracle::span_enumerate(R, dim, gens);
    CHECK((int64_t(1) << st.size_log2()) == int64_t(truth.size()));
    for (const auto& v : oracle::all_vectors(R, dim)) {
      bool in_truth = truth.count(v) > 0;
      CHECK(st.contains(sv_from_dense(v)) == in_truth);
    }
  }
}

TEST_CASE("staircase canonical residuals are coset normal forms") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    Ring R(int(2 + draw(rng, 2)));
    int dim = int(2 + draw(rng, 2));
    Staircase st(R, dim);
    std::vector<std::vector<uint32_t>> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<uint32_t> v(size_t(dim), 0u);
      for (auto& x : v) x = uint32_t(draw(rng, R.mod()));
      gens.push_back(v);
      st.insert(sv_from_dense(v));
    }
    st.canonicalize();
    auto truth = oracle::span_enumerate(R, dim, gens);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<uint32_t> v(size_t(dim), 0u);
      for (auto& x : v) x = uint32_t(draw(rng, R.mod()));
      auto nf = st.reduce(sv_from_dense(v));
      // shifting by any lattice element must not change the normal form
      auto it = truth.begin();
      std::advance(it, long(draw(rng, truth.size())));
      std::vector<uint32_t> v2(size_t(dim), 0u);
      for (int i = 0; i < dim; ++i) v2[size_t(i)] = R.add(v[size_t(i)], (*it)[size_t(i)]);
      CHECK(st.reduce(sv_from_dense(v2)) == nf);
    }
  }
}

TEST_CASE("staircase same_lattice under regenerated spans") {
  std::mt19937_64 rng(5150);
  Ring R(4);
  for (int t = 0; t < 40; ++t) {
    int dim = 3;
    std::vector<SparseVec> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<uint32_t> v(size_t(dim), 0u);
      for (auto& x : v) x = uint32_t(draw(rng, R.mod()));
      gens.push_back(sv_from_dense(v));
    }
    Staircase a(R, dim), b(R, dim);
    for (const auto& g : gens) a.insert(g);
    // b gets the same span from scrambled combinations
    for (int i = 0; i < int(gens.size()); ++i) {
      SparseVec v = gens[size_t(i)];
      v = sv_axpy(R, v, uint32_t(2 * draw(rng, 8)), gens[size_t(draw(rng, gens.size()))]);
      b.insert(v);
    }
    for (const auto& g : gens) b.insert(g);
    CHECK(a.same_lattice(b));
    b.insert(sv_from_dense({1, 0, 0}));
    CHECK((b.size_log2() == a.size_log2()) == a.contains(sv_from_dense({1, 0, 0})));
  }
}

TEST_CASE("linear system: kernel and solve against enumeration") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 80; ++t) {
    Ring R(int(1 + draw(rng, 3)));
    int rows = int(1 + draw(rng, 3)), cols = int(1 + draw(rng, 3));
    Mat a = random_mat(rng, R, rows, cols);
    LinearSystem sys(R, SpMat::from_dense(a));

    // every reported kernel generator really is in the kernel
    for (const auto& g : sys.kernel_gens()) {
      auto img = sp_apply(R, SpMat::from_dense(a), g);
      CHECK(img.empty());
    }
    // the kernel generators span exactly the brute-force kernel
    std::vector<std::vector<uint32_t>> kg;
    for (const auto& g : sys.kernel_gens()) kg.push_back(sv_to_dense(g, cols));
    auto kspan = oracle::span_enumerate(R, cols, kg);
    size_t truth_count = 0;
    for (const auto& x : oracle::all_vectors(R, cols)) {
      std::vector<uint32_t> y(size_t(rows), 0u);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          y[size_t(i)] = R.add(y[size_t(i)], R.mul(a.at(i, j), x[size_t(j)]));
      bool in_ker = std::all_of(y.begin(), y.end(), [](uint32_t v) { return v == 0; });
      if (in_ker) {
        ++truth_count;
        CHECK(kspan.count(x) == 1);
      }
    }
    CHECK(truth_count == kspan.size());

    // solve returns a preimage exactly for image vectors
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<uint32_t> b(size_t(rows), 0u);
      for (auto& x : b) x = uint32_t(draw(rng, R.mod()));
      auto sol = sys.solve(sv_from_dense(b));
      bool truth_in_image = false;
      for (const auto& x : oracle::all_vectors(R, cols)) {
        std::vector<uint32_t> y(size_t(rows), 0u);
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j)
            y[size_t(i)] = R.add(y[size_t(i)], R.mul(a.at(i, j), x[size_t(j)]));
        if (y == b) { truth_in_image = true; break; }
      }
      CHECK(sol.has_value() == truth_in_image);
      if (sol) {
        auto img = sp_apply(R, SpMat::from_dense(a), *sol);
        CHECK(sv_to_dense(img, rows) == b);
      }
    }
  }
}

TEST_CASE("sparse matrix block assembly") {
  Ring R(3);
  Mat a = Mat::from_rows({{1, 2}, {3, 4}}, R);
  Mat b = Mat::from_rows({{5}, {6}}, R);
  auto h = sp_hcat(SpMat::from_dense(a), SpMat::from_dense(b));
  CHECK(h.to_dense() == mat_hcat(a, b));
  auto v = sp_vcat(SpMat::from_dense(a), SpMat::from_dense(mat_transpose(b)));
  CHECK(v.to_dense() == mat_vcat(a, mat_transpose(b)));
  auto d = sp_diag_sum(SpMat::from_dense(a), SpMat::from_dense(b));
  CHECK(d.to_dense() == mat_diag_sum(a, b));
  auto m = sp_mul(R, SpMat::from_dense(a), SpMat::from_dense(b));
  CHECK(m.to_dense() == mat_mul(R, a, b));
}
