#include <doctest.h>

#include "cechkit/errors.hpp"
#include "cechkit/matrix.hpp"
#include "cechkit/quotient_space.hpp"
#include "oracle.hpp"

using namespace cechkit;

namespace {

Mat random_mat(const PrimeField& f, std::mt19937_64& g, std::size_t rows, std::size_t cols,
               int zero_percent) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (oracle::uniform(g, 0, 99) >= zero_percent)
        m(r, c) = f.from_int(oracle::uniform(g, -50, 50));
  return m;
}

oracle::Dense dense(const Mat& m) {
  oracle::Dense d = oracle::zeros(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

// Low-rank matrices exercise the interesting cases far more often.
Mat random_low_rank(const PrimeField& f, std::mt19937_64& g, std::size_t rows, std::size_t cols) {
  const std::size_t k = static_cast<std::size_t>(oracle::uniform(g, 0, 3));
  return multiply(f, random_mat(f, g, rows, k, 20), random_mat(f, g, k, cols, 20));
}

}  // namespace

TEST_CASE("prime field rejects composite and oversized moduli") {
  CHECK_THROWS_AS(PrimeField(6), NonPrimeModulus);
  CHECK_THROWS_AS(PrimeField(1), NonPrimeModulus);
  CHECK_THROWS_AS(PrimeField(0), NonPrimeModulus);
  CHECK_THROWS_AS(PrimeField(2147483659ULL), NonPrimeModulus);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647ULL));
  CHECK(PrimeField().characteristic() == 32003);
}

TEST_CASE("field inverses and signed representatives") {
  const PrimeField f(101);
  for (Scalar a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.to_signed(100) == -1);
  CHECK(f.to_signed(50) == 50);
  CHECK(f.to_signed(51) == -50);
  const PrimeField big(2147483647ULL);
  CHECK(big.mul(big.from_int(-1), big.from_int(-1)) == 1);
}

TEST_CASE("rank agrees with an independent elimination") {
  for (std::uint64_t p : {101ULL, 32003ULL}) {
    const PrimeField f(p);
    auto g = oracle::rng(11);
    for (int t = 0; t < 300; ++t) {
      const std::size_t rows = oracle::uniform(g, 0, 7), cols = oracle::uniform(g, 0, 7);
      const Mat m = t % 2 ? random_low_rank(f, g, rows, cols) : random_mat(f, g, rows, cols, 50);
      CHECK(rank(f, m) == oracle::rank_mod(dense(m), static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("echelon form pivots on the first nonzero column in row order") {
  const PrimeField f(32003);
  const Mat m = Mat::from_rows(f, {{0, 2, 4, 1}, {0, 1, 2, 0}, {0, 0, 0, 3}});
  const EchelonForm e = row_reduce(f, m);
  CHECK(e.pivot_cols == std::vector<std::size_t>{1, 3});
  CHECK(e.reduced == Mat::from_rows(f, {{0, 1, 2, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  CHECK(row_reduce(f, m, 2).pivot_cols == std::vector<std::size_t>{1});
}

TEST_CASE("rank-nullity, kernels and images on random matrices") {
  const PrimeField f(32003);
  auto g = oracle::rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = oracle::uniform(g, 1, 6), cols = oracle::uniform(g, 1, 6);
    const Mat m = random_low_rank(f, g, rows, cols);
    const Kernel k = kernel(f, m);
    CHECK(rank(f, m) + k.basis.cols() == cols);
    CHECK(multiply(f, m, k.basis).is_zero());
    CHECK(rank(f, k.basis) == k.basis.cols());
    for (std::size_t j = 0; j < k.free_cols.size(); ++j)
      for (std::size_t i = 0; i < k.free_cols.size(); ++i)
        CHECK(k.basis(k.free_cols[i], j) == (i == j ? 1u : 0u));
    const Mat im = image_basis(f, m);
    CHECK(im.cols() == rank(f, m));
    CHECK(rank(f, hstack(im, m)) == im.cols());
  }
}

TEST_CASE("solve finds solutions exactly when they exist") {
  const PrimeField f(32003);
  auto g = oracle::rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = oracle::uniform(g, 1, 5), cols = oracle::uniform(g, 1, 5);
    const Mat a = random_low_rank(f, g, rows, cols);
    const Mat x = random_mat(f, g, cols, 2, 30);
    const Mat b = multiply(f, a, x);
    const auto sol = solve(f, a, b);
    REQUIRE(sol.has_value());
    CHECK(multiply(f, a, *sol) == b);
    const Mat c = random_mat(f, g, rows, 1, 0);
    const bool consistent = rank(f, hstack(a, c)) == rank(f, a);
    CHECK(solve(f, a, c).has_value() == consistent);
  }
}

TEST_CASE("quotient spaces: projection, lift and induced maps") {
  const PrimeField f(32003);
  auto g = oracle::rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = oracle::uniform(g, 1, 6);
    const Mat rel = random_low_rank(f, g, n, oracle::uniform(g, 0, 4));
    const QuotientSpace q(f, n, rel);
    CHECK(q.dim() + rank(f, rel) == n);
    CHECK(multiply(f, q.projection(), q.lift()) == Mat::identity(q.dim()));
    if (rel.cols() > 0) CHECK(multiply(f, q.projection(), rel).is_zero());
    // The identity preserves relations and induces the identity.
    CHECK(induced_map(f, Mat::identity(n), q, q) == Mat::identity(q.dim()));
  }
  // The span of e_0 is not carried into the span of e_1.
  const QuotientSpace src(f, 2, Mat::from_rows(f, {{1}, {0}}));
  const QuotientSpace dst(f, 2, Mat::from_rows(f, {{0}, {1}}));
  CHECK_THROWS_AS(induced_map(f, Mat::identity(2), src, dst), RelationNotPreserved);
  const Mat swap = Mat::from_rows(f, {{0, 1}, {1, 0}});
  CHECK(induced_map(f, swap, src, dst) == Mat::identity(1));
}
