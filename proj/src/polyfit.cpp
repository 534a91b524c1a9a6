#include "isotropica/polyfit.hpp"

#include <stdexcept>

#include "isotropica/errors.hpp"
#include "isotropica/field.hpp"

namespace isotropica {

mpq_class PolynomialFit::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolynomialFit interpolate(std::span<const std::uint64_t> xs, std::span<const mpz_class> ys) {
  if (xs.size() != ys.size()) throw DimensionMismatch("sample abscissae and values differ in length");
  const std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("interpolation nodes must be distinct");

  auto as_q = [](std::uint64_t v) { return mpq_class(mpz_class(static_cast<unsigned long>(v))); };

  // Divided differences in place: dd[i] ends as f[x_0..x_i].
  std::vector<mpq_class> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (as_q(xs[i]) - as_q(xs[i - level]));
      if (i == level) break;
    }
  }

  // Expand the Newton form by Horner from the top coefficient down.
  PolynomialFit fit;
  fit.coefficients.assign(m == 0 ? 1 : m, mpq_class(0));
  std::vector<mpq_class> poly{m == 0 ? mpq_class(0) : dd[m - 1]};
  for (std::size_t i = m - 1; m > 0 && i-- > 0;) {
    // poly <- poly * (x - x_i) + dd[i]
    std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
    const auto xi = as_q(xs[i]);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xi;
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  for (std::size_t d = 0; d < poly.size() && d < fit.coefficients.size(); ++d) fit.coefficients[d] = poly[d];
  for (int d = static_cast<int>(fit.coefficients.size()) - 1; d >= 0; --d) {
    if (sgn(fit.coefficients[static_cast<std::size_t>(d)]) != 0) {
      fit.degree = d;
      break;
    }
  }
  return fit;
}

std::vector<std::uint64_t> sample_primes_for_degree(int degree_bound) {
  if (degree_bound < 0) degree_bound = 0;
  const auto primes = first_primes(static_cast<std::size_t>(degree_bound) + 1);
  return {primes.begin(), primes.end()};
}

mpz_class projective_point_count(std::uint64_t q, std::size_t linear_dim) {
  if (linear_dim == 0) return 0;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q), linear_dim);
  return (power - 1) / static_cast<unsigned long>(q - 1);
}

}  // namespace isotropica
