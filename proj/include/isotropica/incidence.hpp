#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "isotropica/enumerate.hpp"
#include "isotropica/scan.hpp"

namespace isotropica {

/// F_q-points of the incidence variety {(P(U), [phi]) : U in G(k,n), U isotropic for phi}.
struct IncidenceCount {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::uint32_t q = 0;
  mpz_class count;
  int predicted_dim = 0;
  /// linear dimension of the vanishing space -> number of U with that fibre
  std::map<std::size_t, std::uint64_t> fibres;
};

/// t(n(n-1) - k(k-1))/2 - 1 + k(n-k).
int predicted_incidence_dim(std::size_t n, std::size_t k, std::size_t t);

/// Sums, over every U in G(k,n)(F_q), the number of projective points of the space of
/// t-tuples vanishing on U. The fibre dimension of each U is computed by rank.
IncidenceCount count_incidence_points(std::size_t n, std::size_t k, std::size_t t, std::uint32_t q,
                                      const Budget& budget = Budget::from_env(),
                                      Execution exec = Execution::parallel);

/// Degree of q -> count(q) through the fibre decomposition count = sum_d N_d(q) (q^d - 1)/(q - 1):
/// each N_d is fitted exactly at k(n-k)+1 primes (it counts points of a subset of G(k,n)), and
/// the degree is max_d (deg N_d + d - 1). Leading coefficients are positive, so nothing cancels.
struct IncidenceDegree {
  int predicted_dim = 0;
  int fitted_degree = -1;
  std::vector<IncidenceCount> samples;

  bool matches() const { return predicted_dim == fitted_degree; }
};

IncidenceDegree incidence_degree_check(std::size_t n, std::size_t k, std::size_t t,
                                       const Budget& budget = Budget::from_env(),
                                       Execution exec = Execution::parallel);

}  // namespace isotropica
