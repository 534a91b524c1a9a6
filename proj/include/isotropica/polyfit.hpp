#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace isotropica {

/// Exact interpolating polynomial through (x_i, y_i) with distinct x_i.
struct PolynomialFit {
  std::vector<mpq_class> coefficients;  // coefficients[d] multiplies x^d
  int degree = -1;                      // -1 for the zero polynomial

  mpq_class operator()(const mpq_class& x) const;
};

/// Unique polynomial of degree < xs.size() through the samples (Newton divided differences).
PolynomialFit interpolate(std::span<const std::uint64_t> xs, std::span<const mpz_class> ys);

/// Primes needed to pin a polynomial of degree <= bound.
std::vector<std::uint64_t> sample_primes_for_degree(int degree_bound);

/// q^e - 1 over q - 1 (number of points of P^{e-1}(F_q)); 0 when e = 0.
mpz_class projective_point_count(std::uint64_t q, std::size_t linear_dim);

}  // namespace isotropica
