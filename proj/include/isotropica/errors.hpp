#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isotropica {

/// Operand shapes (rows, columns, ambient dimension, field) do not agree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would visit more subspaces than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t projected, std::uint64_t budget)
      : std::runtime_error(what + ": projected " + std::to_string(projected) +
                           " subspace tests exceed budget " + std::to_string(budget)),
        projected_(projected),
        budget_(budget) {}

  std::uint64_t projected() const noexcept { return projected_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t projected_;
  std::uint64_t budget_;
};

/// A Pluecker vector that fails the quadratic Grassmann relations.
class NotDecomposable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed value disagrees with the closed-form value it is supposed to reproduce.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace isotropica
