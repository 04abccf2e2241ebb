#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ponsyz/exact/matrix.hpp"
#include "ponsyz/exact/scalar.hpp"
#include "ponsyz/random.hpp"

using namespace ponsyz;

namespace {

Matrix<Rational> rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(rational(0, 7)), "0");
  EXPECT_THROW(rational(1, 0), Error);
}

TEST(ModP, FieldArithmetic) {
  using F = ModP<>;
  F a(123456789), b(987654321);
  EXPECT_EQ(a * a.inverse(), F(1));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(F(-1) + F(1), F(0));
  EXPECT_EQ(reduce_mod<2147483647u>(rational(1, 2)) * F(2), F(1));
  EXPECT_THROW(F(0).inverse(), Error);
}

TEST(Matrix, RankOfSingular3x3) {
  const auto m = rational_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(rank(m), 2u);
  const auto kernel = kernel_basis(m);
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(kernel[0], (std::vector<Rational>{1, -2, 1}));
}

TEST(Matrix, FullRankDeterminant) {
  const auto m = rational_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  EXPECT_EQ(rank(m), 3u);
  EXPECT_EQ(det_fraction_free(m), Rational(-3));
}

TEST(Matrix, FourByFourDeterminant) {
  const auto m = rational_matrix({{2, -1, 3, 0}, {4, 5, -2, 1}, {0, 3, 7, -4}, {1, 1, 1, 1}});
  EXPECT_EQ(det_fraction_free(m), Rational(190));
  EXPECT_EQ(oracle::leibniz_det(m), Rational(190));
}

TEST(Matrix, SolveInconsistentAndConsistent) {
  const auto m = rational_matrix({{1, 1}, {2, 2}});
  EXPECT_FALSE(solve(m, std::vector<Rational>{1, 3}).has_value());
  const auto x = solve(m, std::vector<Rational>{1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(multiply(m, *x), (std::vector<Rational>{1, 2}));
  EXPECT_THROW((void)solve(m, std::vector<Rational>{1}), Error);
}

TEST(Matrix, DeterminantRequiresSquare) { EXPECT_THROW((void)det_fraction_free(Matrix<Rational>(2, 3)), Error); }

TEST(Matrix, CokernelAnnihilatesImage) {
  const auto m = rational_matrix({{1, 2}, {2, 4}, {0, 1}});
  const auto cok = cokernel_basis(m);
  ASSERT_EQ(cok.size(), 1u);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += cok[0][i] * m(i, j);
    EXPECT_EQ(s, 0);
  }
}

TEST(MatrixProperty, RankNullityAndKernel) {
  SeededRng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    auto m = oracle::random_integer_matrix(rng, rows, cols, 3);
    // Force some dependence now and then.
    if (rows > 1 && trial % 3 == 0)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2;
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + kernel.size(), cols);
    EXPECT_EQ(rank(m), oracle::minor_rank(m));
    for (const auto& v : kernel)
      for (const auto& entry : multiply(m, v)) EXPECT_EQ(entry, 0);
  }
}

TEST(MatrixProperty, DeterminantMatchesLeibnizAndRank) {
  SeededRng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    auto m = oracle::random_integer_matrix(rng, n, n, 2);
    const Rational det = det_fraction_free(m);
    EXPECT_EQ(det, oracle::leibniz_det(m));
    EXPECT_EQ(det != 0, rank(m) == n);
  }
}

TEST(MatrixProperty, SolveAgreesWithRankTest) {
  SeededRng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto m = oracle::random_integer_matrix(rng, rows, cols, 2);
    std::vector<Rational> b(rows);
    for (auto& x : b) x = rng.coefficient(3);
    Matrix<Rational> augmented(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) augmented(i, j) = m(i, j);
      augmented(i, cols) = b[i];
    }
    const auto x = solve(m, b);
    EXPECT_EQ(x.has_value(), rank(augmented) == rank(m));
    if (x) {
      EXPECT_EQ(multiply(m, *x), b);
    }
  }
}

TEST(MatrixProperty, ModularRankMatchesRationalRank) {
  SeededRng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto cols = static_cast<std::size_t>(rng.uniform(2, 6));
    auto m = oracle::random_integer_matrix(rng, rows, cols, 50);
    if (trial % 2 == 0)
      for (std::size_t i = 0; i < rows; ++i) m(i, cols - 1) = m(i, 0) - m(i, 1);
    Matrix<ModP<>> mp(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mp(i, j) = reduce_mod<2147483647u>(m(i, j));
    EXPECT_EQ(rank(mp), rank(m));
  }
}

TEST(MatrixProperty, TransposeAndRowSwapInvariants) {
  SeededRng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
    auto m = oracle::random_integer_matrix(rng, n, n, 4);
    EXPECT_EQ(det_fraction_free(transpose(m)), det_fraction_free(m));
    const Rational before = det_fraction_free(m);
    m.swap_rows(0, n - 1);
    EXPECT_EQ(det_fraction_free(m), -before);
  }
}
