#include <gtest/gtest.h>

#include <random>
#include <set>

#include "isotropica/enumerate.hpp"
#include "isotropica/forms.hpp"
#include "isotropica/pluecker.hpp"
#include "isotropica/polyfit.hpp"
#include "isotropica/schubert.hpp"
#include "oracles.hpp"

using namespace isotropica;

namespace {

SubspaceFp span_fp(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows, std::size_t n) {
  return SubspaceFp::span(MatrixFp::from_ints(PrimeField(p), rows, n));
}

std::uint32_t coord(const PlueckerPoint<PrimeField>& pt, std::vector<std::size_t> one_based) {
  for (auto& i : one_based) --i;
  return pt.at(one_based);
}

}  // namespace

TEST(Enumerate, GaussianBinomialCounts) {
  EXPECT_EQ(enumerate_grassmannian(4, 2, PrimeField(2), Budget::unlimited()).size(), 35u);
  EXPECT_EQ(enumerate_grassmannian(3, 3, PrimeField(5), Budget::unlimited()).size(), 1u);
  EXPECT_EQ(enumerate_grassmannian(3, 1, PrimeField(3), Budget::unlimited()).size(), 13u);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (q == 3 && n == 4 && k >= 3) continue;  // brute force is 81^k matrices
        const GrassmannianCells cells(n, k, PrimeField(q));
        EXPECT_EQ(cells.size(), oracle::grassmannian_size(n, k, q)) << n << " " << k << " " << q;
      }
}

TEST(Enumerate, SizesEqualGaussianBinomialsAndAreDistinct) {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        const GrassmannianCells cells(n, k, PrimeField(q));
        ASSERT_EQ(mpz_class(static_cast<unsigned long>(cells.size())), gaussian_binomial(n, k, q));
        if (cells.size() > 20000) continue;
        std::set<std::vector<std::uint32_t>> seen;
        for (auto cur = cells.cursor(); !cur.done(); cur.next()) {
          const auto& b = cur.basis();
          ASSERT_EQ(rref(b).reduced, b);
          ASSERT_EQ(rank(b), k);
          seen.emplace(b.entries().begin(), b.entries().end());
        }
        ASSERT_EQ(seen.size(), cells.size());
      }
}

TEST(Enumerate, SeekAgreesWithIteration) {
  const GrassmannianCells cells(5, 2, PrimeField(3));
  std::uint64_t i = 0;
  for (auto cur = cells.cursor(); !cur.done(); cur.next(), ++i) {
    ASSERT_EQ(cur.index(), i);
    ASSERT_EQ(cells.at(i), cur.subspace());
  }
}

TEST(Enumerate, BudgetRefusal) {
  EXPECT_THROW(enumerate_grassmannian(6, 3, PrimeField(5), Budget{1000}), BudgetExceeded);
  try {
    enumerate_grassmannian(4, 2, PrimeField(2), Budget{10});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.projected(), 35u);
    EXPECT_EQ(e.budget(), 10u);
  }
}

TEST(Pluecker, CoordinateSubspace) {
  const auto u = SubspaceFp::coordinate(PrimeField(5), 4, std::vector<std::size_t>{0, 1});
  const auto p = pluecker_of(u);
  EXPECT_EQ(coord(p, {1, 2}), 1u);
  std::uint32_t others = 0;
  for (auto c : p.coords()) others += c;
  EXPECT_EQ(others, 1u);
}

TEST(Pluecker, MinorsOverF7) {
  const auto u = span_fp(7, {{1, 0, 2, 3}, {0, 1, 4, 5}}, 4);
  const auto p = pluecker_of(u);
  EXPECT_EQ(coord(p, {1, 2}), 1u);
  EXPECT_EQ(coord(p, {1, 3}), 4u);
  EXPECT_EQ(coord(p, {1, 4}), 5u);
  EXPECT_EQ(coord(p, {2, 3}), 5u);
  EXPECT_EQ(coord(p, {2, 4}), 4u);
  EXPECT_EQ(coord(p, {3, 4}), 5u);
  const auto back = subspace_of_pluecker(p);
  EXPECT_EQ(back, u);
  EXPECT_EQ(back.basis()(0, 2), 2u);
}

TEST(Pluecker, LinesAreNormalizedVectors) {
  const auto u = span_fp(5, {{0, 3, 1, 4}}, 4);
  const auto p = pluecker_of(u);
  EXPECT_EQ(p.coords(), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  for (auto r : grassmann_relations_residual(p)) EXPECT_EQ(r, 0u);
}

TEST(Pluecker, RejectsNonDecomposable) {
  const PrimeField f(2);
  const auto p = PlueckerPoint<PrimeField>::from_entries(f, 4, 2, {{{0, 1}, 1}, {{2, 3}, 1}});
  EXPECT_FALSE(satisfies_grassmann_relations(p));
  EXPECT_THROW(subspace_of_pluecker(p), NotDecomposable);
}

TEST(Pluecker, ZeroDimensionalHasNoWedge) {
  EXPECT_THROW(pluecker_of(SubspaceFp::zero(PrimeField(3), 4)), std::invalid_argument);
}

TEST(Pluecker, SweepsPass) {
  for (auto [n, k, q] : std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>{
           {4, 2, 2}, {4, 2, 3}, {5, 2, 2}, {3, 1, 5}, {4, 3, 3}}) {
    const auto sweep = verify_pluecker_sweep(n, k, q, Budget::unlimited());
    EXPECT_TRUE(sweep.passed()) << n << " " << k << " " << q;
  }
}

TEST(Pluecker, RecoversFromLaterPivots) {
  // p_12 = 0 forces a different pivot tuple
  const auto u = span_fp(3, {{0, 1, 0, 2}, {0, 0, 1, 1}}, 4);
  EXPECT_EQ(subspace_of_pluecker(pluecker_of(u)), u);
}

TEST(Polyfit, RecoversKnownPolynomial) {
  const std::vector<std::uint64_t> xs{2, 3, 5, 7};
  std::vector<mpz_class> ys;
  for (auto x : xs) ys.emplace_back(static_cast<unsigned long>(x * x * x + 2 * x + 1));
  const auto fit = interpolate(xs, ys);
  EXPECT_EQ(fit.degree, 3);
  EXPECT_EQ(fit.coefficients[1], 2);
  EXPECT_EQ(fit(mpq_class(4)), 73);
}

TEST(Polyfit, ZeroPolynomial) {
  const std::vector<std::uint64_t> xs{2, 3};
  const std::vector<mpz_class> ys{0, 0};
  EXPECT_EQ(interpolate(xs, ys).degree, -1);
}

TEST(Schubert, MembershipExamples) {
  const PrimeField f(3);
  const Flag<PrimeField> flag(
      {SubspaceFp::leading(f, 4, 1), SubspaceFp::coordinate(f, 4, std::vector<std::size_t>{0, 1, 2})});
  EXPECT_TRUE(schubert_membership(SubspaceFp::coordinate(f, 4, std::vector<std::size_t>{0, 2}), flag));
  EXPECT_FALSE(schubert_membership(SubspaceFp::coordinate(f, 4, std::vector<std::size_t>{1, 3}), flag));

  const std::vector<std::size_t> full{3, 4};
  const auto trivial = Flag<PrimeField>::coordinate(f, 4, full);
  for (const auto& u : enumerate_grassmannian(4, 2, f, Budget::unlimited())) EXPECT_TRUE(schubert_membership(u, trivial));
}

TEST(Schubert, RejectsBadFlags) {
  const PrimeField f(2);
  EXPECT_THROW(Flag<PrimeField>({SubspaceFp::leading(f, 4, 2), SubspaceFp::leading(f, 4, 2)}), std::invalid_argument);
  EXPECT_THROW(Flag<PrimeField>({SubspaceFp::coordinate(f, 4, std::vector<std::size_t>{3}),
                                 SubspaceFp::leading(f, 4, 2)}),
               std::invalid_argument);
}

TEST(Schubert, MembershipIsMonotoneUnderRefinement) {
  const PrimeField f(2);
  const std::vector<std::size_t> coarse{2, 4};
  const std::vector<std::size_t> fine{1, 4};
  const auto a = Flag<PrimeField>::coordinate(f, 4, coarse);
  const auto b = Flag<PrimeField>::coordinate(f, 4, fine);
  for (const auto& u : enumerate_grassmannian(4, 2, f, Budget::unlimited()))
    if (schubert_membership(u, b)) EXPECT_TRUE(schubert_membership(u, a));
}

TEST(Schubert, FastCountMatchesMembership) {
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 3}, {2, 4}, {1, 2}, {2, 3}}) {
    const PrimeField f(3);
    const auto flag = Flag<PrimeField>::coordinate(f, 4, dims);
    std::uint64_t slow = 0;
    for (const auto& u : enumerate_grassmannian(4, 2, f, Budget::unlimited())) slow += schubert_membership(u, flag);
    EXPECT_EQ(count_schubert_cell(4, dims, 3), slow);
  }
}

TEST(Schubert, DimensionExamples) {
  const std::vector<std::size_t> a13{1, 3};
  const std::vector<std::size_t> a34{3, 4};
  EXPECT_EQ(schubert_formula_dim(a13), 1);
  EXPECT_EQ(schubert_formula_dim(a34), 4);
  EXPECT_EQ(count_schubert_cell(4, a34, 2), 35u);
  const auto check = schubert_dimension_check(4, a13);
  EXPECT_EQ(check.counted_degree, 1);
  EXPECT_TRUE(check.matches());
}

TEST(GrassmannStrata, Dimensions) {
  EXPECT_EQ(g_s_dimension(4, 2, 0), 4);
  EXPECT_EQ(g_s_dimension(4, 2, 1), 3);
  EXPECT_EQ(g_s_dimension(4, 2, 2), 0);
  EXPECT_EQ(g_s_dimension(6, 2, 0), 8);
  EXPECT_EQ(g_s_min(5, 3), 1u);
  EXPECT_THROW(g_s_dimension(5, 3, 0), std::invalid_argument);
  EXPECT_EQ(count_g_s(4, 2, 2, 3), 1u);
}

TEST(GrassmannStrata, Nesting) {
  const PrimeField f(2);
  const auto u = SubspaceFp::leading(f, 5, 2);
  for (const auto& v : enumerate_grassmannian(5, 2, f, Budget::unlimited())) {
    if (g_s_membership(v, u, 2)) EXPECT_TRUE(g_s_membership(v, u, 1));
    if (g_s_membership(v, u, 1)) EXPECT_TRUE(g_s_membership(v, u, 0));
    EXPECT_EQ(g_s_membership(v, u, 2), v == u);
  }
}

TEST(GrassmannStrata, DegreeMatches) {
  for (std::size_t s = 0; s <= 2; ++s) EXPECT_TRUE(g_s_dimension_check(4, 2, s).matches()) << s;
}

TEST(Grassmannian, DegreeIsKTimesNMinusK) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto check = grassmannian_dimension_check(n, k);
      EXPECT_EQ(check.formula_dim, static_cast<int>(k * (n - k)));
      EXPECT_TRUE(check.matches()) << n << " " << k;
    }
}
