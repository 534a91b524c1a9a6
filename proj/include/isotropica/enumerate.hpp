#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "isotropica/matrix.hpp"
#include "isotropica/subspace.hpp"

namespace isotropica {

/// Upper limit on subspace tests for an exhaustive scan.
struct Budget {
  static constexpr std::uint64_t kDefault = 10'000'000;
  static constexpr const char* kEnvVar = "ISOTROPICA_BUDGET";

  std::uint64_t max_tests = kDefault;

  /// kDefault, or the value of ISOTROPICA_BUDGET when set to a positive integer.
  static Budget from_env();
  static Budget unlimited() { return Budget{UINT64_MAX}; }

  /// Throws BudgetExceeded when projected > max_tests.
  void require(std::uint64_t projected, const std::string& what) const;
};

/// Number of k-subspaces of F_q^n by the product formula, as an exact integer.
mpz_class gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// Number of k-element subsets of an n-set.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// All k-element subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// The Schubert-cell decomposition of G(k,n)(F_q) by pivot set. Every k-subspace has a unique
/// RREF basis; it is determined by its pivot columns and the entries in the non-pivot columns
/// to the right of each pivot ("free" positions). Subspaces are indexed globally in
/// lexicographic order of (pivot set, free entries), with the last free position varying fastest.
class GrassmannianCells {
 public:
  GrassmannianCells(std::size_t n, std::size_t k, PrimeField field);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const PrimeField& field() const noexcept { return field_; }

  /// Total number of subspaces; saturates at UINT64_MAX.
  std::uint64_t size() const noexcept { return total_; }

  std::size_t cell_count() const noexcept { return pivot_sets_.size(); }
  const std::vector<std::size_t>& pivots(std::size_t cell) const { return pivot_sets_[cell]; }
  std::size_t free_positions(std::size_t cell) const { return free_[cell].size(); }

  /// The subspace with global index `index` (< size()).
  SubspaceFp at(std::uint64_t index) const;

  void require_within(const Budget& budget, const std::string& what) const;

  /// Sequential walk over the enumeration starting at a global index. basis() is always RREF.
  class Cursor {
   public:
    Cursor(const GrassmannianCells& cells, std::uint64_t start);

    const MatrixFp& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const { return cells_->pivot_sets_[cell_]; }
    std::uint64_t index() const noexcept { return index_; }
    bool done() const noexcept { return index_ >= cells_->total_; }
    SubspaceFp subspace() const { return SubspaceFp::from_rref(basis_, pivots()); }

    void next();

   private:
    void load_cell();

    const GrassmannianCells* cells_;
    std::uint64_t index_;
    std::size_t cell_ = 0;
    std::vector<std::uint32_t> digits_;
    MatrixFp basis_;
  };

  Cursor cursor(std::uint64_t start = 0) const { return Cursor(*this, start); }

 private:
  struct Position {
    std::size_t row;
    std::size_t col;
  };

  std::size_t n_;
  std::size_t k_;
  PrimeField field_;
  std::vector<std::vector<std::size_t>> pivot_sets_;
  std::vector<std::vector<Position>> free_;
  std::vector<std::uint64_t> offsets_;  // offsets_[c] = first global index of cell c
  std::uint64_t total_ = 0;
};

/// Every k-subspace of F_q^n, in enumeration order. Refuses when the count exceeds the budget.
std::vector<SubspaceFp> enumerate_grassmannian(std::size_t n, std::size_t k, const PrimeField& field,
                                               const Budget& budget = Budget::from_env());

}  // namespace isotropica
