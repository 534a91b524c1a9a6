#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isotropica/errors.hpp"
#include "isotropica/linalg.hpp"
#include "isotropica/matrix.hpp"

namespace isotropica {

/// A k-dimensional subspace of F^n, held as its canonical RREF basis (k x n, rank k).
/// Two subspaces are equal exactly when their basis matrices are equal.
template <class Field>
class Subspace {
 public:
  using Scalar = typename Field::Scalar;

  /// Row space of `generators`; zero and dependent rows are discarded.
  static Subspace span(Matrix<Field> generators) {
    auto pivots = rref_in_place(generators);
    generators.truncate_rows(pivots.size());
    return Subspace(std::move(generators), std::move(pivots));
  }

  /// Trusts that `basis` is already in RREF with full row rank (enumeration fast path).
  static Subspace from_rref(Matrix<Field> basis, std::vector<std::size_t> pivots) {
    return Subspace(std::move(basis), std::move(pivots));
  }

  static Subspace zero(Field field, std::size_t n) { return Subspace(Matrix<Field>(field, 0, n), {}); }

  static Subspace whole(Field field, std::size_t n) { return span(Matrix<Field>::identity(field, n)); }

  /// span(e_i : i in indices), 0-based.
  static Subspace coordinate(Field field, std::size_t n, std::span<const std::size_t> indices) {
    Matrix<Field> gens(field, indices.size(), n);
    for (std::size_t r = 0; r < indices.size(); ++r) {
      if (indices[r] >= n) throw DimensionMismatch("coordinate index out of range");
      gens(r, indices[r]) = field.one();
    }
    return span(std::move(gens));
  }

  /// span(e_0, ..., e_{count-1}).
  static Subspace leading(Field field, std::size_t n, std::size_t count) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    return coordinate(std::move(field), n, idx);
  }

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix<Field>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  bool contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector length differs from ambient dimension");
    // Reduce v against the RREF rows; v is inside iff the remainder is zero.
    const auto& f = field();
    std::vector<Scalar> rem(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
      const auto coeff = rem[pivots_[r]];
      if (f.is_zero(coeff)) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c) rem[c] = f.sub(rem[c], f.mul(coeff, basis_(r, c)));
    }
    for (const auto& e : rem)
      if (!f.is_zero(e)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis().row(r))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix<Field> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<Field> basis_;
  std::vector<std::size_t> pivots_;
};

using SubspaceFp = Subspace<PrimeField>;
using SubspaceQ = Subspace<RationalField>;

template <class Field>
void require_same_ambient(const Subspace<Field>& a, const Subspace<Field>& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field())) {
    throw DimensionMismatch("subspaces live in different ambient spaces");
  }
}

/// dim(A + B).
template <class Field>
std::size_t sum_dim(const Subspace<Field>& a, const Subspace<Field>& b) {
  require_same_ambient(a, b);
  const Matrix<Field> blocks[] = {a.basis(), b.basis()};
  return rank_of_stack(a.field(), std::span<const Matrix<Field>>(blocks), a.ambient_dim());
}

/// dim(A cap B) = dim A + dim B - rank[A; B].
template <class Field>
std::size_t intersection_dim(const Subspace<Field>& a, const Subspace<Field>& b) {
  return a.dim() + b.dim() - sum_dim(a, b);
}

}  // namespace isotropica
