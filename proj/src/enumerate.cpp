#include "isotropica/enumerate.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace isotropica {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* raw = std::getenv(kEnvVar); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(raw, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) b.max_tests = v;
  }
  return b;
}

void Budget::require(std::uint64_t projected, const std::string& what) const {
  if (projected > max_tests) throw BudgetExceeded(what, projected, max_tests);
}

mpz_class gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  mpz_class num = 1;
  mpz_class den = 1;
  const mpz_class qq(static_cast<unsigned long>(q));
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

GrassmannianCells::GrassmannianCells(std::size_t n, std::size_t k, PrimeField field)
    : n_(n), k_(k), field_(field) {
  if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  pivot_sets_ = combinations(n, k);
  free_.resize(pivot_sets_.size());
  offsets_.resize(pivot_sets_.size());
  for (std::size_t c = 0; c < pivot_sets_.size(); ++c) {
    const auto& piv = pivot_sets_[c];
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = piv[r] + 1; col < n; ++col)
        if (!is_pivot[col]) free_[c].push_back({r, col});
    offsets_[c] = total_;
    total_ = saturating_add(total_, saturating_pow(field_.order(), free_[c].size()));
  }
}

void GrassmannianCells::require_within(const Budget& budget, const std::string& what) const {
  budget.require(total_, what + " over G(" + std::to_string(k_) + "," + std::to_string(n_) + ")(GF(" +
                             std::to_string(field_.order()) + "))");
}

SubspaceFp GrassmannianCells::at(std::uint64_t index) const { return Cursor(*this, index).subspace(); }

GrassmannianCells::Cursor::Cursor(const GrassmannianCells& cells, std::uint64_t start)
    : cells_(&cells), index_(start), basis_(cells.field_, cells.k_, cells.n_) {
  if (done()) return;
  // Last cell whose offset is <= start.
  std::size_t lo = 0, hi = cells.offsets_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (cells.offsets_[mid] <= start) lo = mid; else hi = mid;
  }
  cell_ = lo;
  load_cell();
  // Decode the offset inside the cell as base-q digits, last position least significant.
  std::uint64_t local = start - cells.offsets_[cell_];
  const auto q = cells.field_.order();
  const auto& free = cells.free_[cell_];
  for (std::size_t i = free.size(); i-- > 0;) {
    digits_[i] = static_cast<std::uint32_t>(local % q);
    local /= q;
    basis_(free[i].row, free[i].col) = digits_[i];
  }
}

void GrassmannianCells::Cursor::load_cell() {
  const auto& piv = cells_->pivot_sets_[cell_];
  basis_ = MatrixFp(cells_->field_, cells_->k_, cells_->n_);
  for (std::size_t r = 0; r < piv.size(); ++r) basis_(r, piv[r]) = 1;
  digits_.assign(cells_->free_[cell_].size(), 0);
}

void GrassmannianCells::Cursor::next() {
  ++index_;
  if (done()) return;
  const auto q = cells_->field_.order();
  const auto& free = cells_->free_[cell_];
  for (std::size_t i = free.size(); i-- > 0;) {
    if (++digits_[i] < q) {
      basis_(free[i].row, free[i].col) = digits_[i];
      return;
    }
    digits_[i] = 0;
    basis_(free[i].row, free[i].col) = 0;
  }
  ++cell_;
  load_cell();
}

std::vector<SubspaceFp> enumerate_grassmannian(std::size_t n, std::size_t k, const PrimeField& field,
                                               const Budget& budget) {
  const GrassmannianCells cells(n, k, field);
  cells.require_within(budget, "enumerate_grassmannian");
  std::vector<SubspaceFp> out;
  out.reserve(cells.size());
  for (auto cur = cells.cursor(); !cur.done(); cur.next()) out.push_back(cur.subspace());
  return out;
}

}  // namespace isotropica
