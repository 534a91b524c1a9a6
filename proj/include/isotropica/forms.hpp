#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "isotropica/errors.hpp"
#include "isotropica/linalg.hpp"
#include "isotropica/matrix.hpp"
#include "isotropica/subspace.hpp"

namespace isotropica {

/// A t-tuple (phi_1, ..., phi_t) of alternating bilinear forms on F^n, t >= 1. Each matrix is
/// skew-symmetric with zero diagonal; both conditions are checked because they differ in
/// characteristic 2.
template <class Field>
class FormTuple {
 public:
  using Scalar = typename Field::Scalar;

  explicit FormTuple(std::vector<Matrix<Field>> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw std::invalid_argument("a form tuple needs t >= 1 forms");
    const auto n = matrices_.front().rows();
    const auto& f = matrices_.front().field();
    for (std::size_t l = 0; l < matrices_.size(); ++l) {
      const auto& m = matrices_[l];
      if (m.rows() != n || m.cols() != n || !(m.field() == f)) {
        throw DimensionMismatch("form " + std::to_string(l + 1) + " is not " + std::to_string(n) + "x" +
                                std::to_string(n) + " over the common field");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!f.is_zero(m(i, i))) {
          throw std::invalid_argument("form " + std::to_string(l + 1) + " has a nonzero diagonal entry");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!(m(i, j) == f.neg(m(j, i)))) {
            throw std::invalid_argument("form " + std::to_string(l + 1) + " is not skew-symmetric");
          }
        }
      }
    }
  }

  /// t zero forms on F^n.
  static FormTuple zero(Field field, std::size_t n, std::size_t t) {
    return FormTuple(std::vector<Matrix<Field>>(t, Matrix<Field>(field, n, n)));
  }

  /// Builds each form from its strictly upper triangular entries, row by row:
  /// (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static FormTuple from_upper(Field field, std::size_t n, const std::vector<std::vector<Scalar>>& uppers) {
    std::vector<Matrix<Field>> ms;
    for (const auto& up : uppers) {
      if (up.size() != n * (n - 1) / 2) throw DimensionMismatch("upper-triangle length is not n(n-1)/2");
      Matrix<Field> m(field, n, n);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++pos) {
          m(i, j) = up[pos];
          m(j, i) = field.neg(up[pos]);
        }
      ms.push_back(std::move(m));
    }
    return FormTuple(std::move(ms));
  }

  const Field& field() const noexcept { return matrices_.front().field(); }
  std::size_t n() const noexcept { return matrices_.front().rows(); }
  std::size_t t() const noexcept { return matrices_.size(); }
  const std::vector<Matrix<Field>>& matrices() const noexcept { return matrices_; }
  const Matrix<Field>& operator[](std::size_t l) const { return matrices_[l]; }

  bool is_zero() const {
    for (const auto& m : matrices_)
      if (!m.is_zero()) return false;
    return true;
  }

  /// The tuple in another basis: M -> P^T M P for each form, where the columns of P are the
  /// new basis vectors written in the old basis.
  FormTuple change_basis(const Matrix<Field>& p) const {
    std::vector<Matrix<Field>> out;
    const auto pt = p.transpose();
    for (const auto& m : matrices_) out.push_back(pt * m * p);
    return FormTuple(std::move(out));
  }

  friend bool operator==(const FormTuple& a, const FormTuple& b) { return a.matrices_ == b.matrices_; }

 private:
  std::vector<Matrix<Field>> matrices_;
};

using FormTupleFp = FormTuple<PrimeField>;
using FormTupleQ = FormTuple<RationalField>;

/// (x^T M_1 y, ..., x^T M_t y).
template <class Field>
std::vector<typename Field::Scalar> evaluate(const FormTuple<Field>& phi, std::span<const typename Field::Scalar> x,
                                             std::span<const typename Field::Scalar> y) {
  if (x.size() != phi.n() || y.size() != phi.n()) throw DimensionMismatch("vector length differs from n");
  std::vector<typename Field::Scalar> out;
  out.reserve(phi.t());
  for (const auto& m : phi.matrices()) out.push_back(bilinear(m, x, y));
  return out;
}

/// B M_l B^T = 0 for every form, B the basis of u.
template <class Field>
bool is_isotropic(const FormTuple<Field>& phi, const Subspace<Field>& u) {
  if (u.ambient_dim() != phi.n()) throw DimensionMismatch("subspace and forms live in different spaces");
  const auto& b = u.basis();
  const auto& f = phi.field();
  for (const auto& m : phi.matrices()) {
    const auto mt = m.transpose();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      const auto mi = mt.apply(b.row(i));  // row_i(B) M
      for (std::size_t j = i + 1; j < b.rows(); ++j)
        if (!f.is_zero(dot(f, std::span<const typename Field::Scalar>(mi), b.row(j)))) return false;
    }
  }
  return true;
}

/// Number of coordinates of a t-tuple of alternating forms on F^n: t n(n-1)/2.
inline std::size_t alternating_tuple_dim(std::size_t n, std::size_t t) { return t * n * (n - 1) / 2; }

/// Coefficient row of the linear functional phi -> phi(x, y) on alternating forms, in the
/// from_upper coordinate order: entry for (a<b) is x_a y_b - x_b y_a.
template <class Field>
std::vector<typename Field::Scalar> pair_functional(const Field& f, std::span<const typename Field::Scalar> x,
                                                    std::span<const typename Field::Scalar> y) {
  const std::size_t n = x.size();
  std::vector<typename Field::Scalar> row;
  row.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) row.push_back(f.sub(f.mul(x[a], y[b]), f.mul(x[b], y[a])));
  return row;
}

/// Linear dimension of the space of t-tuples of alternating forms on F^n vanishing on every
/// listed subspace: t n(n-1)/2 minus the rank of the joint constraint system
/// {phi_l(f_i, f_j) = 0 : l, i < j, over each subspace's basis}. Supports one or two subspaces.
template <class Field>
std::size_t vanishing_space_dim(std::span<const Subspace<Field>> subspaces, std::size_t n, std::size_t t) {
  if (subspaces.empty() || subspaces.size() > 2) {
    throw std::invalid_argument("vanishing_space_dim supports one or two subspaces");
  }
  const auto& f = subspaces.front().field();
  const std::size_t width = n * (n - 1) / 2;
  const std::size_t vars = t * width;
  Matrix<Field> system(f, 0, vars);
  std::vector<typename Field::Scalar> row(vars, f.zero());
  for (const auto& u : subspaces) {
    if (u.ambient_dim() != n || !(u.field() == f)) throw DimensionMismatch("subspace not in F^n");
    const auto& b = u.basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = i + 1; j < b.rows(); ++j) {
        const auto functional = pair_functional(f, b.row(i), b.row(j));
        for (std::size_t l = 0; l < t; ++l) {
          std::fill(row.begin(), row.end(), f.zero());
          std::copy(functional.begin(), functional.end(), row.begin() + static_cast<std::ptrdiff_t>(l * width));
          system.append_row(row);
        }
      }
  }
  return vars - rank(std::move(system));
}

/// From a subspace W of dimension 2k - s with basis w_1..w_{2k-s}: U = <w_1..w_k> and
/// U' = <w_1..w_s, w_{k+1}..w_{2k-s}>, so dim(U meet U') = s exactly.
template <class Field>
std::pair<Subspace<Field>, Subspace<Field>> split_pair(const Subspace<Field>& w, std::size_t k, std::size_t s) {
  if (s > k || w.dim() != 2 * k - s) throw DimensionMismatch("split_pair needs dim W = 2k - s");
  const auto& b = w.basis();
  Matrix<Field> first(w.field(), 0, w.ambient_dim());
  Matrix<Field> second(w.field(), 0, w.ambient_dim());
  for (std::size_t i = 0; i < k; ++i) first.append_row(b.row(i));
  for (std::size_t i = 0; i < s; ++i) second.append_row(b.row(i));
  for (std::size_t i = k; i < 2 * k - s; ++i) second.append_row(b.row(i));
  return {Subspace<Field>::span(std::move(first)), Subspace<Field>::span(std::move(second))};
}

/// t(n(n-1) - k(k-1))/2: vanishing tuples for one k-subspace.
std::size_t predicted_vanishing_dim(std::size_t n, std::size_t k, std::size_t t);

/// t(n(n-1)/2 - k(k-1) + s(s-1)/2): vanishing tuples for two k-subspaces meeting in dimension s.
std::size_t predicted_vanishing_dim_pair(std::size_t n, std::size_t k, std::size_t t, std::size_t s);

/// C_i - C_i^T for each square matrix. The result has zero diagonal in every characteristic.
template <class Field>
FormTuple<Field> skew_symmetrize(std::span<const Matrix<Field>> c_list) {
  std::vector<Matrix<Field>> out;
  for (const auto& c : c_list) {
    if (c.rows() != c.cols()) throw DimensionMismatch("skew_symmetrize of non-square " + c.shape());
    auto s = c - c.transpose();
    for (std::size_t i = 0; i < s.rows(); ++i) {
      if (!s.field().is_zero(s(i, i))) throw InvariantViolation("C - C^T has a nonzero diagonal entry");
    }
    out.push_back(std::move(s));
  }
  return FormTuple<Field>(std::move(out));
}

/// C_l with C_l[i][j] = phi_l[i][j] for i < j and 0 otherwise; skew_symmetrize inverts this.
template <class Field>
std::vector<Matrix<Field>> upper_part(const FormTuple<Field>& phi) {
  std::vector<Matrix<Field>> out;
  for (const auto& m : phi.matrices()) {
    Matrix<Field> c(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i + 1; j < m.cols(); ++j) c(i, j) = m(i, j);
    out.push_back(std::move(c));
  }
  return out;
}

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

/// Engine for stream `stream` of a run seeded with `seed`; streams are independent of each other.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream);

/// Independent uniform entries above the diagonal, reflected skew. Deterministic in seed.
FormTupleFp random_form_tuple(std::size_t n, std::size_t t, const PrimeField& field, std::uint64_t seed);
FormTupleFp random_form_tuple(std::size_t n, std::size_t t, const PrimeField& field, std::mt19937_64& rng);

/// Uniformly random k-subspace of F_q^n: span of random vectors, retried until rank k.
SubspaceFp random_subspace(std::size_t n, std::size_t k, const PrimeField& field, std::mt19937_64& rng);

/// Random k-subspace of Q^n spanned by vectors with integer entries in [-range, range].
SubspaceQ random_subspace_q(std::size_t n, std::size_t k, std::mt19937_64& rng, std::int64_t range = 3);

/// Random invertible n x n matrix.
MatrixFp random_invertible(std::size_t n, const PrimeField& field, std::mt19937_64& rng);

}  // namespace isotropica
