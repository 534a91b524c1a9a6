#include <gtest/gtest.h>

#include <random>

#include "isotropica/field.hpp"
#include "isotropica/forms.hpp"
#include "isotropica/linalg.hpp"
#include "isotropica/matrix.hpp"
#include "oracles.hpp"

using namespace isotropica;

namespace {

MatrixFp random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  MatrixFp m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::uint32_t>(uniform_below(rng, f.order()));
  return m;
}

std::vector<oracle::Vec> rows_of(const MatrixFp& m) {
  std::vector<oracle::Vec> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

}  // namespace

TEST(FieldSpec, AcceptsSmallPrimesOnly) {
  EXPECT_EQ(FieldSpec::prime(2).name(), "GF(2)");
  EXPECT_EQ(FieldSpec::prime(97).p, 97u);
  EXPECT_THROW(FieldSpec::prime(1), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(9), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(101), std::invalid_argument);
  EXPECT_EQ(FieldSpec::parse("GF(7)"), FieldSpec::prime(7));
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rational());
  EXPECT_THROW(FieldSpec::parse("GF(8)"), std::invalid_argument);
}

TEST(PrimeField, ArithmeticIsCanonical) {
  const PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_int(15), 1u);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(RationalField, LowestTerms) {
  const RationalField q;
  const auto half = q.inv(q.from_int(2));
  EXPECT_EQ(q.to_string(q.add(half, half)), "1");
  EXPECT_EQ(q.to_string(q.mul(q.from_int(6), q.inv(q.from_int(-4)))), "-3/2");
}

TEST(Rref, IdentityIsFixed) {
  const PrimeField f(5);
  const auto r = rref(MatrixFp::identity(f, 3));
  EXPECT_EQ(r.reduced, MatrixFp::identity(f, 3));
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ZeroMatrix) {
  const PrimeField f(2);
  const MatrixFp z(f, 2, 4);
  const auto r = rref(z);
  EXPECT_EQ(r.reduced, z);
  EXPECT_TRUE(r.pivot_columns.empty());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, AlreadyReduced) {
  const PrimeField f(7);
  const auto m = MatrixFp::from_ints(f, {{1, 0, 2, 3}, {0, 1, 4, 5}});
  const auto r = rref(m);
  EXPECT_EQ(r.reduced, m);
  EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(KernelBasis, Examples) {
  const PrimeField f2(2);
  EXPECT_EQ(kernel_basis(MatrixFp::identity(f2, 4)).rows(), 0u);
  const auto k0 = kernel_basis(MatrixFp(f2, 2, 3));
  EXPECT_EQ(rank(k0), 3u);
  const auto k1 = kernel_basis(MatrixFp::from_ints(f2, {{1, 1}}));
  EXPECT_EQ(k1, MatrixFp::from_ints(f2, {{1, 1}}));
}

TEST(RankOfStack, Examples) {
  const PrimeField f(3);
  const std::vector<MatrixFp> twice{MatrixFp::identity(f, 2), MatrixFp::identity(f, 2)};
  EXPECT_EQ(rank_of_stack(f, std::span<const MatrixFp>(twice), 2), 2u);
  EXPECT_EQ(rank_of_stack(f, std::span<const MatrixFp>(), 5), 0u);

  const RationalField q;
  const std::vector<MatrixQ> blocks{MatrixQ::from_ints(q, {{1, 2}, {2, 4}}), MatrixQ::from_ints(q, {{0, 1}})};
  EXPECT_EQ(rank_of_stack(q, std::span<const MatrixQ>(blocks), 2), 2u);

  const std::vector<MatrixFp> bad{MatrixFp::identity(f, 2), MatrixFp::identity(f, 3)};
  EXPECT_THROW(rank_of_stack(f, std::span<const MatrixFp>(bad), 2), DimensionMismatch);
}

TEST(Determinant, MatchesCofactorOverQ) {
  const RationalField q;
  const auto m = MatrixQ::from_ints(q, {{2, -1, 0}, {1, 3, 4}, {0, 5, -2}});
  // 2(3*-2 - 4*5) - (-1)(1*-2 - 0) = -52 - 2
  EXPECT_EQ(q.to_string(determinant(m)), "-54");
  MatrixQ inv(q, 0, 0);
  ASSERT_TRUE(invert(m, inv));
  EXPECT_EQ(m * inv, MatrixQ::identity(q, 3));
  EXPECT_FALSE(invert(MatrixQ::from_ints(q, {{1, 2}, {2, 4}}), inv));
}

class LinalgProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(LinalgProperties, RrefRankKernel) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rows = 1 + uniform_below(rng, 8);
    const auto cols = 1 + uniform_below(rng, 8);
    const auto m = random_matrix(f, rows, cols, rng);
    const auto r = rref(m);
    ASSERT_EQ(rref(r.reduced).reduced, r.reduced);
    ASSERT_EQ(r.rank, rank(m.transpose()));
    ASSERT_EQ(r.rank, oracle::rank(rows_of(m), f.order()));
    const auto k = kernel_basis(m);
    ASSERT_EQ(k.rows(), cols - r.rank);
    ASSERT_TRUE((m * k.transpose()).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, LinalgProperties, ::testing::Values(2u, 3u, 7u));

TEST(LinalgProperties, SolutionCountMatchesKernel) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = 1 + uniform_below(rng, 4);
      const auto cols = 1 + uniform_below(rng, 4);
      const auto m = random_matrix(f, rows, cols, rng);
      std::uint64_t solutions = 0;
      for (const auto& x : oracle::all_vectors(cols, p)) {
        const auto y = m.apply(x);
        bool zero = true;
        for (auto e : y) zero = zero && e == 0;
        if (zero) ++solutions;
      }
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < kernel_basis(m).rows(); ++i) expected *= p;
      ASSERT_EQ(solutions, expected);
    }
  }
}

TEST(Matrix, ShapeChecks) {
  const PrimeField f(5);
  EXPECT_THROW(MatrixFp(f, 2, 3) * MatrixFp(f, 2, 3), DimensionMismatch);
  EXPECT_THROW(MatrixFp(f, 2, 3) + MatrixFp(f, 3, 2), DimensionMismatch);
  const PrimeField g(3);
  EXPECT_THROW(MatrixFp(f, 2, 2) + MatrixFp(g, 2, 2), DimensionMismatch);
}
