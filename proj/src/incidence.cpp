#include "isotropica/incidence.hpp"

#include <algorithm>
#include <set>

#include "isotropica/fp_kernels.hpp"
#include "isotropica/polyfit.hpp"

namespace isotropica {

namespace {

using Histogram = std::map<std::size_t, std::uint64_t>;

/// Fibre dimension of one U. The constraints phi_l(f_i, f_j) = 0 act on the t forms
/// independently with the same coefficient rows, so the rank is t times the rank of one block.
class FibreDimension {
 public:
  FibreDimension(std::size_t n, std::size_t k, std::size_t t)
      : n_(n), t_(t), width_(n * (n - 1) / 2), rows_(k * (k - 1) / 2), scratch_(rows_ * width_) {}

  void operator()(Histogram& hist, const GrassmannianCells::Cursor& cur) {
    const auto& b = cur.basis();
    const std::uint32_t p = b.field().order();
    std::size_t r = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = i + 1; j < b.rows(); ++j, ++r) {
        std::size_t c = 0;
        for (std::size_t a = 0; a < n_; ++a)
          for (std::size_t bb = a + 1; bb < n_; ++bb, ++c)
            scratch_[r * width_ + c] = (b(i, a) * b(j, bb) + (p - b(i, bb)) * b(j, a)) % p;
      }
    const auto block_rank = fp::rank_in_place(scratch_.data(), rows_, width_, p);
    ++hist[t_ * (width_ - block_rank)];
  }

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t width_;
  std::size_t rows_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace

int predicted_incidence_dim(std::size_t n, std::size_t k, std::size_t t) {
  if (k > n) throw std::invalid_argument("k exceeds n");
  return static_cast<int>(t * (n * (n - 1) - k * (k - 1)) / 2) - 1 + static_cast<int>(k * (n - k));
}

IncidenceCount count_incidence_points(std::size_t n, std::size_t k, std::size_t t, std::uint32_t q,
                                      const Budget& budget, Execution exec) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  const GrassmannianCells cells(n, k, PrimeField(q));
  cells.require_within(budget, "count_incidence_points");

  IncidenceCount out;
  out.n = n;
  out.k = k;
  out.t = t;
  out.q = q;
  out.predicted_dim = predicted_incidence_dim(n, k, t);
  out.fibres = reduce_subspaces(
      cells, Histogram{}, FibreDimension(n, k, t),
      [](Histogram& into, const Histogram& from) {
        for (const auto& [d, c] : from) into[d] += c;
      },
      exec);
  out.count = 0;
  for (const auto& [d, c] : out.fibres) out.count += projective_point_count(q, d) * static_cast<unsigned long>(c);
  return out;
}

IncidenceDegree incidence_degree_check(std::size_t n, std::size_t k, std::size_t t, const Budget& budget,
                                       Execution exec) {
  IncidenceDegree out;
  out.predicted_dim = predicted_incidence_dim(n, k, t);
  const auto primes = sample_primes_for_degree(static_cast<int>(k * (n - k)));
  for (auto q : primes) {
    GrassmannianCells(n, k, PrimeField(static_cast<std::uint32_t>(q))).require_within(budget, "incidence_degree_check");
  }
  std::set<std::size_t> dims;
  for (auto q : primes) {
    out.samples.push_back(count_incidence_points(n, k, t, static_cast<std::uint32_t>(q), budget, exec));
    for (const auto& [d, c] : out.samples.back().fibres) dims.insert(d);
  }
  for (auto d : dims) {
    if (d == 0) continue;  // no nonzero tuples in the fibre
    std::vector<mpz_class> values;
    for (const auto& s : out.samples) {
      const auto it = s.fibres.find(d);
      values.emplace_back(static_cast<unsigned long>(it == s.fibres.end() ? 0 : it->second));
    }
    const int deg = interpolate(primes, values).degree;
    if (deg >= 0) out.fitted_degree = std::max(out.fitted_degree, deg + static_cast<int>(d) - 1);
  }
  return out;
}

}  // namespace isotropica
