#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isotropica/errors.hpp"
#include "isotropica/matrix.hpp"

namespace isotropica {

template <class Field>
struct RrefResult {
  Matrix<Field> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination in place. Leaves the canonical reduced row echelon form
/// (leading ones, pivot columns cleared above and below) and returns the pivot columns.
template <class Field>
std::vector<std::size_t> rref_in_place(Matrix<Field>& m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t found = lead_row;
    while (found < m.rows() && f.is_zero(m(found, col))) ++found;
    if (found == m.rows()) continue;
    m.swap_rows(found, lead_row);

    const auto scale = f.inv(m(lead_row, col));
    if (!f.is_one(scale)) {
      for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) = f.mul(m(lead_row, c), scale);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead_row, c)));
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

template <class Field>
RrefResult<Field> rref(Matrix<Field> m) {
  auto pivots = rref_in_place(m);
  const auto rank = pivots.size();
  return {std::move(m), std::move(pivots), rank};
}

template <class Field>
std::size_t rank(Matrix<Field> m) {
  return rref_in_place(m).size();
}

/// Basis of the right null space {x : m x = 0}, one basis vector per row.
/// Row i corresponds to the i-th free column and has a 1 there.
template <class Field>
Matrix<Field> kernel_basis(const Matrix<Field>& m) {
  const auto result = rref(m);
  const auto& f = m.field();
  const std::size_t n = m.cols();

  std::vector<bool> is_pivot(n, false);
  for (auto c : result.pivot_columns) is_pivot[c] = true;

  Matrix<Field> basis(f, n - result.rank, n);
  std::size_t out_row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(out_row, free) = f.one();
    for (std::size_t i = 0; i < result.rank; ++i) {
      basis(out_row, result.pivot_columns[i]) = f.neg(result.reduced(i, free));
    }
    ++out_row;
  }
  return basis;
}

/// Vertical concatenation. All blocks must have `cols` columns and share a field.
template <class Field>
Matrix<Field> vstack(const Field& field, std::span<const Matrix<Field>> blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) {
      throw DimensionMismatch("stacked block has " + std::to_string(b.cols()) + " columns, expected " +
                              std::to_string(cols));
    }
    if (!(b.field() == field)) throw DimensionMismatch("stacked blocks over different fields");
    total += b.rows();
  }
  Matrix<Field> out(field, total, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c) = b(i, c);
  }
  return out;
}

/// Rank of the vertical concatenation of `blocks`.
template <class Field>
std::size_t rank_of_stack(const Field& field, std::span<const Matrix<Field>> blocks, std::size_t cols) {
  return rank(vstack(field, blocks, cols));
}

template <class Field>
std::size_t rank_of_stack(std::span<const Matrix<Field>> blocks) {
  if (blocks.empty()) throw DimensionMismatch("column count of an empty stack is unknown");
  return rank_of_stack(blocks.front().field(), blocks, blocks.front().cols());
}

/// Determinant of a square matrix by elimination.
template <class Field>
typename Field::Scalar determinant(Matrix<Field> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square " + m.shape());
  const auto& f = m.field();
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(m(piv, col))) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      m.swap_rows(piv, col);
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const auto inv = f.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (f.is_zero(m(r, col))) continue;
      const auto factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
    }
  }
  return det;
}

/// Writes the inverse of a square matrix into `out`; returns false when singular.
template <class Field>
bool invert(const Matrix<Field>& m, Matrix<Field>& out) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix<Field> aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return false;
  out = Matrix<Field>(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return true;
}

}  // namespace isotropica
