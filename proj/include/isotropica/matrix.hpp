#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isotropica/errors.hpp"
#include "isotropica/field.hpp"

namespace isotropica {

/// Dense row-major matrix over a field. Every entry is kept in canonical form.
template <class Field>
class Matrix {
 public:
  using Scalar = typename Field::Scalar;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  /// Integer entries, reduced into the field. All rows must have equal length.
  static Matrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("ragged integer rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.from_int(rows[r][c]);
    }
    return m;
  }

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Single row vector.
  static Matrix row_vector(Field field, std::span<const Scalar> entries) {
    Matrix m(std::move(field), 1, entries.size());
    for (std::size_t c = 0; c < entries.size(); ++c) m(0, c) = entries[c];
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> row_copy(std::size_t r) const {
    auto view = row(r);
    return {view.begin(), view.end()};
  }

  std::span<const Scalar> entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Keeps the first `count` rows.
  void truncate_rows(std::size_t count) {
    if (count >= rows_) return;
    rows_ = count;
    data_.resize(rows_ * cols_);
  }

  void append_row(std::span<const Scalar> entries) {
    if (entries.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    data_.insert(data_.end(), entries.begin(), entries.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Submatrix on the listed columns, all rows.
  Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
    return out;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  Matrix operator+(const Matrix& other) const {
    require_same_shape(other);
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
    return out;
  }

  Matrix operator-(const Matrix& other) const {
    require_same_shape(other);
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
    return out;
  }

  Matrix operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) {
      throw DimensionMismatch("product of " + shape() + " and " + other.shape());
    }
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(r, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t c = 0; c < other.cols_; ++c) {
          out(r, c) = field_.add(out(r, c), field_.mul(a, other(k, c)));
        }
      }
    }
    return out;
  }

  /// Matrix times column vector.
  std::vector<Scalar> apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) throw DimensionMismatch("vector length does not match columns");
    std::vector<Scalar> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] = field_.add(out[r], field_.mul((*this)(r, c), x[c]));
    return out;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(field_.to_string((*this)(r, c)));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_)) {
      throw DimensionMismatch("shape mismatch " + shape() + " vs " + other.shape());
    }
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

using MatrixFp = Matrix<PrimeField>;
using MatrixQ = Matrix<RationalField>;

/// Dot product x . y.
template <class Field>
typename Field::Scalar dot(const Field& field, std::span<const typename Field::Scalar> x,
                           std::span<const typename Field::Scalar> y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot product of unequal lengths");
  auto acc = field.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = field.add(acc, field.mul(x[i], y[i]));
  return acc;
}

/// x^T M y.
template <class Field>
typename Field::Scalar bilinear(const Matrix<Field>& m, std::span<const typename Field::Scalar> x,
                                std::span<const typename Field::Scalar> y) {
  if (m.rows() != x.size() || m.cols() != y.size()) {
    throw DimensionMismatch("bilinear form " + m.shape() + " applied to vectors of length " +
                            std::to_string(x.size()) + ", " + std::to_string(y.size()));
  }
  const auto& f = m.field();
  auto acc = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    auto inner = f.zero();
    for (std::size_t j = 0; j < y.size(); ++j) inner = f.add(inner, f.mul(m(i, j), y[j]));
    acc = f.add(acc, f.mul(x[i], inner));
  }
  return acc;
}

}  // namespace isotropica
