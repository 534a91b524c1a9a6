#include <gtest/gtest.h>

#include <random>

#include "isotropica/algebra.hpp"
#include "isotropica/forms.hpp"
#include "isotropica/incidence.hpp"
#include "isotropica/polyfit.hpp"
#include "oracles.hpp"

using namespace isotropica;

namespace {

SubspaceFp coordinate(const PrimeField& f, std::size_t n, std::vector<std::size_t> idx) {
  return SubspaceFp::coordinate(f, n, idx);
}

std::vector<oracle::Vec> all_members(const SubspaceFp& u) {
  std::vector<oracle::Vec> out;
  const auto p = u.field().order();
  for (const auto& c : oracle::all_vectors(u.dim(), p)) {
    oracle::Vec v(u.ambient_dim(), 0);
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + c[i] * u.basis()(i, j)) % p;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(FormTuple, RejectsNonAlternating) {
  const PrimeField f(2);
  // skew but with a nonzero diagonal in characteristic 2
  EXPECT_THROW(FormTupleFp({MatrixFp::from_ints(f, {{1, 0}, {0, 0}})}), std::invalid_argument);
  EXPECT_THROW(FormTupleFp({MatrixFp::from_ints(PrimeField(3), {{0, 1}, {1, 0}})}), std::invalid_argument);
  EXPECT_THROW(FormTupleFp(std::vector<MatrixFp>{}), std::invalid_argument);
  EXPECT_THROW(FormTupleFp({MatrixFp(f, 2, 2), MatrixFp(f, 3, 3)}), DimensionMismatch);
}

TEST(Evaluate, AlternatingAndSkew) {
  const PrimeField f(5);
  std::mt19937_64 rng(3);
  const auto phi = random_form_tuple(5, 3, f, rng);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::uint32_t> x(5), y(5);
    for (auto& e : x) e = static_cast<std::uint32_t>(uniform_below(rng, 5));
    for (auto& e : y) e = static_cast<std::uint32_t>(uniform_below(rng, 5));
    for (auto v : evaluate<PrimeField>(phi, x, x)) EXPECT_EQ(v, 0u);
    const auto xy = evaluate<PrimeField>(phi, x, y);
    const auto yx = evaluate<PrimeField>(phi, y, x);
    for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(xy[l], f.neg(yx[l]));
  }
}

TEST(Evaluate, HeisenbergBlock) {
  const auto h = heisenberg_form(1, PrimeField(3));
  const std::vector<std::uint32_t> e1{1, 0}, e2{0, 1};
  EXPECT_EQ(evaluate<PrimeField>(h, e1, e2), std::vector<std::uint32_t>{1});
}

TEST(IsIsotropic, Examples) {
  const PrimeField f(3);
  const auto h = heisenberg_form(2, f);
  EXPECT_TRUE(is_isotropic(h, coordinate(f, 4, {1, 3})));
  EXPECT_FALSE(is_isotropic(h, coordinate(f, 4, {0, 1})));
  EXPECT_TRUE(is_isotropic(h, SubspaceFp::zero(f, 4)));
  std::mt19937_64 rng(9);
  const auto phi = random_form_tuple(4, 3, f, rng);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_isotropic(phi, random_subspace(4, 1, f, rng)));
}

TEST(IsIsotropic, AgreesWithAllPairsOfVectors) {
  std::mt19937_64 rng(21);
  const PrimeField f(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto phi = random_form_tuple(5, 2, f, rng);
    const auto u = random_subspace(5, 2 + uniform_below(rng, 2), f, rng);
    bool brute = true;
    const auto members = all_members(u);
    for (const auto& m : phi.matrices()) {
      std::vector<std::uint32_t> dense(m.entries().begin(), m.entries().end());
      for (const auto& x : members)
        for (const auto& y : members) brute = brute && oracle::form(dense, x, y, 2) == 0;
    }
    ASSERT_EQ(is_isotropic(phi, u), brute);
  }
}

TEST(VanishingSpace, Examples) {
  const PrimeField f(5);
  const std::vector<SubspaceFp> one{coordinate(f, 4, {0, 1})};
  EXPECT_EQ(vanishing_space_dim<PrimeField>(one, 4, 2), 10u);
  const std::vector<SubspaceFp> pair{coordinate(f, 4, {0, 1}), coordinate(f, 4, {1, 2})};
  EXPECT_EQ(vanishing_space_dim<PrimeField>(pair, 4, 1), 4u);
  const std::vector<SubspaceFp> same{coordinate(f, 4, {0, 1}), coordinate(f, 4, {0, 1})};
  EXPECT_EQ(vanishing_space_dim<PrimeField>(same, 4, 3), vanishing_space_dim<PrimeField>(one, 4, 3));
}

TEST(VanishingSpace, CountsVanishingFormsByBruteForce) {
  // 2^d forms on F_2^4 vanish on U, so d for t forms is t times that
  const PrimeField f(2);
  const auto forms = oracle::all_alternating(4, 2);
  for (const auto& u : enumerate_grassmannian(4, 2, f, Budget::unlimited())) {
    std::size_t vanish = 0;
    const auto members = all_members(u);
    for (const auto& m : forms) {
      bool ok = true;
      for (const auto& x : members)
        for (const auto& y : members) ok = ok && oracle::form(m, x, y, 2) == 0;
      vanish += ok;
    }
    const std::vector<SubspaceFp> one{u};
    for (std::size_t t = 1; t <= 3; ++t) ASSERT_EQ(std::size_t(1) << vanishing_space_dim<PrimeField>(one, 4, t) / t, vanish);
  }
}

TEST(VanishingSpace, IndependentOfTheSubspace) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (int i = 0; i < 20; ++i) {
        const std::vector<SubspaceQ> one{random_subspace_q(n, k, rng)};
        ASSERT_EQ(vanishing_space_dim<RationalField>(one, n, 2), predicted_vanishing_dim(n, k, 2));
      }
}

TEST(VanishingSpace, PairsDependOnlyOnIntersection) {
  std::mt19937_64 rng(6);
  const PrimeField f(7);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k <= 3 && k <= n; ++k)
      for (std::size_t s = 0; s <= k; ++s) {
        if (2 * k - s > n) continue;
        for (int i = 0; i < 10; ++i) {
          const auto [a, b] = split_pair(random_subspace(n, 2 * k - s, f, rng), k, s);
          ASSERT_EQ(intersection_dim(a, b), s);
          const std::vector<SubspaceFp> both{a, b};
          ASSERT_EQ(vanishing_space_dim<PrimeField>(both, n, 2), predicted_vanishing_dim_pair(n, k, 2, s));
        }
      }
  EXPECT_THROW(predicted_vanishing_dim_pair(4, 3, 1, 1), std::invalid_argument);
}

TEST(SkewSymmetrize, Examples) {
  const PrimeField f(5);
  const std::vector<MatrixFp> c{MatrixFp::from_ints(f, {{0, 1}, {0, 0}})};
  EXPECT_EQ(skew_symmetrize<PrimeField>(c)[0], MatrixFp::from_ints(f, {{0, 1}, {-1, 0}}));
  const std::vector<MatrixFp> sym{MatrixFp::from_ints(f, {{1, 2}, {2, 3}})};
  EXPECT_TRUE(skew_symmetrize<PrimeField>(sym).is_zero());
  std::mt19937_64 rng(1);
  const auto phi = random_form_tuple(5, 3, f, rng);
  const auto upper = upper_part(phi);
  EXPECT_EQ(skew_symmetrize<PrimeField>(upper), phi);
}

TEST(RandomFormTuple, Deterministic) {
  const PrimeField f(3);
  EXPECT_EQ(random_form_tuple(5, 2, f, 42), random_form_tuple(5, 2, f, 42));
  EXPECT_FALSE(random_form_tuple(5, 2, f, 42) == random_form_tuple(5, 2, f, 43));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) (void)random_form_tuple(4, 2, f, seed);
}

TEST(ChangeBasis, PreservesIsotropy) {
  std::mt19937_64 rng(8);
  const PrimeField f(5);
  const auto phi = random_form_tuple(4, 2, f, rng);
  const auto p = random_invertible(4, f, rng);
  const auto psi = phi.change_basis(p);
  // U is isotropic for psi iff P U is isotropic for phi
  for (int i = 0; i < 50; ++i) {
    const auto u = random_subspace(4, 2, f, rng);
    const auto image = SubspaceFp::span(u.basis() * p.transpose());
    EXPECT_EQ(is_isotropic(psi, u), is_isotropic(phi, image));
  }
}

TEST(Incidence, SpotValue) {
  const auto c = count_incidence_points(4, 2, 2, 2, Budget::unlimited());
  EXPECT_EQ(c.count, 35805);
  EXPECT_EQ(c.predicted_dim, 13);
}

TEST(Incidence, SmallCases) {
  EXPECT_EQ(count_incidence_points(3, 3, 1, 2).count, 0);
  EXPECT_EQ(count_incidence_points(2, 1, 1, 2).count, 3);
  EXPECT_EQ(predicted_incidence_dim(2, 1, 1), 1);
}

TEST(Incidence, MatchesBruteForcePairs) {
  // every 2-dim subspace of F_2^4 has three unordered bases {x, y}
  const auto forms = oracle::all_alternating(4, 2);
  const auto vecs = oracle::all_vectors(4, 2);
  std::uint64_t pairs = 0;
  for (std::size_t m = 1; m < forms.size(); ++m)
    for (std::size_t a = 1; a < vecs.size(); ++a)
      for (std::size_t b = a + 1; b < vecs.size(); ++b)
        if (oracle::form(forms[m], vecs[a], vecs[b], 2) == 0) ++pairs;
  EXPECT_EQ(count_incidence_points(4, 2, 1, 2).count, pairs / 3);
}

TEST(Incidence, Factorizes) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto c = count_incidence_points(5, 2, 2, q);
    const auto d = predicted_vanishing_dim(5, 2, 2);
    EXPECT_EQ(c.count, gaussian_binomial(5, 2, q) * projective_point_count(q, d));
  }
}

TEST(Incidence, SerialAndParallelAgree) {
  const auto a = count_incidence_points(5, 3, 2, 3, Budget::unlimited(), Execution::serial);
  const auto b = count_incidence_points(5, 3, 2, 3, Budget::unlimited(), Execution::parallel);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.fibres, b.fibres);
}

TEST(Incidence, DegreeMatchesPrediction) {
  const auto d = incidence_degree_check(4, 2, 1);
  EXPECT_EQ(d.fitted_degree, 8);
  EXPECT_TRUE(d.matches());
}
