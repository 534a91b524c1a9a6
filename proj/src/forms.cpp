#include "isotropica/forms.hpp"

namespace isotropica {

std::size_t predicted_vanishing_dim(std::size_t n, std::size_t k, std::size_t t) {
  if (k > n) throw std::invalid_argument("k exceeds n");
  return t * (n * (n - 1) - k * (k - 1)) / 2;
}

std::size_t predicted_vanishing_dim_pair(std::size_t n, std::size_t k, std::size_t t, std::size_t s) {
  if (k > n || s > k || 2 * k - s > n) throw std::invalid_argument("no two k-subspaces of F^n meet in dimension s");
  // n(n-1)/2 - k(k-1) + s(s-1)/2 is nonnegative whenever 2k - s <= n
  return t * (n * (n - 1) / 2 - k * (k - 1) + s * (s - 1) / 2);
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

FormTupleFp random_form_tuple(std::size_t n, std::size_t t, const PrimeField& field, std::mt19937_64& rng) {
  std::vector<std::vector<PrimeField::Scalar>> uppers(t);
  for (auto& up : uppers) {
    up.resize(n * (n - 1) / 2);
    for (auto& e : up) e = static_cast<PrimeField::Scalar>(uniform_below(rng, field.order()));
  }
  return FormTupleFp::from_upper(field, n, uppers);
}

FormTupleFp random_form_tuple(std::size_t n, std::size_t t, const PrimeField& field, std::uint64_t seed) {
  auto rng = stream_engine(seed, 0);
  return random_form_tuple(n, t, field, rng);
}

SubspaceFp random_subspace(std::size_t n, std::size_t k, const PrimeField& field, std::mt19937_64& rng) {
  if (k > n) throw std::invalid_argument("k exceeds n");
  while (true) {
    MatrixFp gens(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) gens(r, c) = static_cast<std::uint32_t>(uniform_below(rng, field.order()));
    auto u = SubspaceFp::span(std::move(gens));
    if (u.dim() == k) return u;
  }
}

SubspaceQ random_subspace_q(std::size_t n, std::size_t k, std::mt19937_64& rng, std::int64_t range) {
  if (k > n) throw std::invalid_argument("k exceeds n");
  const RationalField q;
  const auto width = static_cast<std::uint64_t>(2 * range + 1);
  while (true) {
    MatrixQ gens(q, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        gens(r, c) = q.from_int(static_cast<std::int64_t>(uniform_below(rng, width)) - range);
    auto u = SubspaceQ::span(std::move(gens));
    if (u.dim() == k) return u;
  }
}

MatrixFp random_invertible(std::size_t n, const PrimeField& field, std::mt19937_64& rng) {
  while (true) {
    MatrixFp m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<std::uint32_t>(uniform_below(rng, field.order()));
    if (rank(m) == n) return m;
  }
}

}  // namespace isotropica
