#include "isotropica/schubert.hpp"

#include <stdexcept>
#include <string>

#include "isotropica/fp_kernels.hpp"

namespace isotropica {

namespace {

/// dim(U cap span(e_1..e_a)) = k - rank(columns a..n-1 of the basis of U).
class LeadingIntersection {
 public:
  explicit LeadingIntersection(std::size_t n, std::size_t k) : scratch_(n * k) {}

  std::size_t operator()(const MatrixFp& basis, std::size_t a) {
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    const std::size_t width = n - a;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < width; ++c) scratch_[r * width + c] = basis(r, a + c);
    return k - fp::rank_in_place(scratch_.data(), k, width, basis.field().order());
  }

 private:
  std::vector<std::uint32_t> scratch_;
};

struct CoordinateSchubertPredicate {
  std::vector<std::size_t> dims;
  LeadingIntersection meet;

  bool operator()(const GrassmannianCells::Cursor& cur) {
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (meet(cur.basis(), dims[i]) < i + 1) return false;
    return true;
  }
};

struct GsPredicate {
  std::size_t k;
  std::size_t s;
  LeadingIntersection meet;

  bool operator()(const GrassmannianCells::Cursor& cur) { return meet(cur.basis(), k) >= s; }
};

template <class CountFn>
DegreeCheck fit_counts(int formula_dim, int degree_bound, std::size_t n, std::size_t k, const Budget& budget,
                       const std::string& what, CountFn count) {
  DegreeCheck out;
  out.formula_dim = formula_dim;
  out.primes = sample_primes_for_degree(degree_bound);
  for (auto q : out.primes) {
    GrassmannianCells(n, k, PrimeField(static_cast<std::uint32_t>(q))).require_within(budget, what);
  }
  for (auto q : out.primes) {
    out.counts.emplace_back(static_cast<unsigned long>(count(static_cast<std::uint32_t>(q))));
  }
  out.counted_degree = interpolate(out.primes, out.counts).degree;
  return out;
}

}  // namespace

int schubert_formula_dim(std::span<const std::size_t> flag_dims) {
  int dim = 0;
  for (std::size_t i = 0; i < flag_dims.size(); ++i) dim += static_cast<int>(flag_dims[i]) - static_cast<int>(i + 1);
  return dim;
}

void require_flag_dims(std::size_t n, std::span<const std::size_t> flag_dims) {
  for (std::size_t i = 0; i < flag_dims.size(); ++i) {
    if (flag_dims[i] < 1 || flag_dims[i] > n || (i > 0 && flag_dims[i] <= flag_dims[i - 1])) {
      throw std::invalid_argument("flag dimensions must satisfy 1 <= a_1 < ... < a_k <= n");
    }
  }
}

std::uint64_t count_schubert_cell(std::size_t n, std::span<const std::size_t> flag_dims, std::uint32_t q,
                                  Execution exec) {
  require_flag_dims(n, flag_dims);
  const std::size_t k = flag_dims.size();
  const GrassmannianCells cells(n, k, PrimeField(q));
  CoordinateSchubertPredicate pred{{flag_dims.begin(), flag_dims.end()}, LeadingIntersection(n, k)};
  return count_matching(cells, pred, exec);
}

DegreeCheck schubert_dimension_check(std::size_t n, std::span<const std::size_t> flag_dims, const Budget& budget,
                                     Execution exec) {
  require_flag_dims(n, flag_dims);
  const std::size_t k = flag_dims.size();
  const int bound = k == 0 ? 0 : static_cast<int>(k * (flag_dims.back() - k));
  return fit_counts(schubert_formula_dim(flag_dims), bound, n, k, budget, "schubert_dimension_check",
                    [&](std::uint32_t q) { return count_schubert_cell(n, flag_dims, q, exec); });
}

std::size_t g_s_min(std::size_t n, std::size_t k) { return 2 * k > n ? 2 * k - n : 0; }

int g_s_dimension(std::size_t n, std::size_t k, std::size_t s) {
  if (k > n) throw std::invalid_argument("k exceeds n");
  if (s < g_s_min(n, k) || s > k) {
    throw std::invalid_argument("s = " + std::to_string(s) + " outside [max(0,2k-n), k]");
  }
  return static_cast<int>((k - s) * (n - k + s));
}

std::vector<std::size_t> g_s_flag_dims(std::size_t n, std::size_t k, std::size_t s) {
  g_s_dimension(n, k, s);
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i <= k; ++i) dims.push_back(i <= s ? k - s + i : n - k + i);
  return dims;
}

std::uint64_t count_g_s(std::size_t n, std::size_t k, std::size_t s, std::uint32_t q, Execution exec) {
  g_s_dimension(n, k, s);
  const GrassmannianCells cells(n, k, PrimeField(q));
  GsPredicate pred{k, s, LeadingIntersection(n, k)};
  return count_matching(cells, pred, exec);
}

DegreeCheck g_s_dimension_check(std::size_t n, std::size_t k, std::size_t s, const Budget& budget, Execution exec) {
  const int formula = g_s_dimension(n, k, s);
  return fit_counts(formula, static_cast<int>(k * (n - k)), n, k, budget, "g_s_dimension_check",
                    [&](std::uint32_t q) { return count_g_s(n, k, s, q, exec); });
}

DegreeCheck grassmannian_dimension_check(std::size_t n, std::size_t k) {
  DegreeCheck out;
  out.formula_dim = static_cast<int>(k * (n - k));
  out.primes = sample_primes_for_degree(out.formula_dim);
  for (auto q : out.primes) {
    const GrassmannianCells cells(n, k, PrimeField(static_cast<std::uint32_t>(q)));
    if (cells.size() == UINT64_MAX) throw std::overflow_error("Grassmannian point count overflows 64 bits");
    out.counts.emplace_back(static_cast<unsigned long>(cells.size()));
  }
  out.counted_degree = interpolate(out.primes, out.counts).degree;
  return out;
}

}  // namespace isotropica
