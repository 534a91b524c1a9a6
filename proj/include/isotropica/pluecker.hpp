#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isotropica/enumerate.hpp"
#include "isotropica/errors.hpp"
#include "isotropica/linalg.hpp"
#include "isotropica/subspace.hpp"

namespace isotropica {

/// Lexicographic rank of a strictly increasing k-subset of {0..n-1}.
std::size_t combination_rank(std::size_t n, std::span<const std::size_t> tuple);

/// Maps every length-k index sequence over {0..n-1} to (sign, lexicographic rank of its sorted
/// form). Sequences with a repeated index have sign 0. Sequences are encoded base n, first index
/// most significant.
class SequenceTable {
 public:
  SequenceTable(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return sign_.size(); }

  int sign(std::size_t code) const { return sign_[code]; }
  std::size_t rank(std::size_t code) const { return rank_[code]; }

  std::size_t encode(std::span<const std::size_t> seq) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<int> sign_;
  std::vector<std::size_t> rank_;
};

/// Homogeneous Pluecker coordinates of a point of P(wedge^k F^n), scaled so the first nonzero
/// coordinate in lexicographic tuple order is 1. coords()[i] belongs to the i-th k-subset of
/// {0..n-1} in lexicographic order.
template <class Field>
class PlueckerPoint {
 public:
  using Scalar = typename Field::Scalar;

  /// Normalizes; throws std::invalid_argument if every coordinate is zero.
  static PlueckerPoint from_coordinates(Field field, std::size_t n, std::size_t k, std::vector<Scalar> coords) {
    if (k == 0 || k > n) throw std::invalid_argument("Pluecker point needs 1 <= k <= n");
    if (coords.size() != binomial(n, k)) throw DimensionMismatch("coordinate count is not C(n,k)");
    std::size_t lead = 0;
    while (lead < coords.size() && field.is_zero(coords[lead])) ++lead;
    if (lead == coords.size()) throw std::invalid_argument("all Pluecker coordinates are zero");
    const auto scale = field.inv(coords[lead]);
    for (auto& c : coords) c = field.mul(c, scale);
    return PlueckerPoint(std::move(field), n, k, std::move(coords));
  }

  /// Sparse construction from (increasing 0-based tuple, value) pairs; unlisted tuples are 0.
  static PlueckerPoint from_entries(Field field, std::size_t n, std::size_t k,
                                    const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& entries) {
    std::vector<Scalar> coords(binomial(n, k), field.zero());
    for (const auto& [tuple, value] : entries) {
      if (tuple.size() != k) throw DimensionMismatch("Pluecker index tuple has wrong length");
      for (std::size_t i = 0; i + 1 < k; ++i)
        if (tuple[i] >= tuple[i + 1]) throw std::invalid_argument("Pluecker index tuple not increasing");
      if (tuple.back() >= n) throw DimensionMismatch("Pluecker index out of range");
      coords[combination_rank(n, tuple)] = value;
    }
    return from_coordinates(std::move(field), n, k, std::move(coords));
  }

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  /// Coordinate of an increasing 0-based tuple.
  const Scalar& at(std::span<const std::size_t> tuple) const { return coords_[combination_rank(n_, tuple)]; }

  friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.coords_ == b.coords_;
  }

 private:
  PlueckerPoint(Field field, std::size_t n, std::size_t k, std::vector<Scalar> coords)
      : field_(std::move(field)), n_(n), k_(k), coords_(std::move(coords)) {}

  Field field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Scalar> coords_;
};

/// All k x k minors of the basis matrix, normalized. Throws std::invalid_argument for k = 0.
template <class Field>
PlueckerPoint<Field> pluecker_of(const Subspace<Field>& u) {
  if (u.dim() == 0) throw std::invalid_argument("Pluecker point of the zero subspace (empty wedge)");
  const std::size_t n = u.ambient_dim();
  const std::size_t k = u.dim();
  std::vector<typename Field::Scalar> coords;
  coords.reserve(binomial(n, k));
  for (const auto& cols : combinations(n, k)) coords.push_back(determinant(u.basis().select_columns(cols)));
  return PlueckerPoint<Field>::from_coordinates(u.field(), n, k, std::move(coords));
}

/// Evaluates sum_{r=1}^{k+1} (-1)^r p[i_1..i_{k-1} j_r] p[j_1..^j_r..j_{k+1}] for every
/// sequence i in {0..n-1}^{k-1} and j in {0..n-1}^{k+1} (the full redundant set, repeats
/// included). Coordinates of non-increasing sequences follow the alternating convention.
/// Result order: i-sequence major, j-sequence minor, both base-n encoded.
template <class Field>
std::vector<typename Field::Scalar> grassmann_relations_residual(const PlueckerPoint<Field>& p) {
  const std::size_t n = p.n();
  const std::size_t k = p.k();
  const auto& f = p.field();
  const SequenceTable table(n, k);

  auto coordinate = [&](std::size_t code) {
    const int s = table.sign(code);
    if (s == 0) return f.zero();
    const auto& v = p.coords()[table.rank(code)];
    return s > 0 ? v : f.neg(v);
  };

  std::size_t i_count = 1, j_count = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) i_count *= n;
  for (std::size_t i = 0; i < k + 1; ++i) j_count *= n;

  std::vector<typename Field::Scalar> residuals;
  residuals.reserve(i_count * j_count);
  std::vector<std::size_t> j_digits(k + 1);
  for (std::size_t icode = 0; icode < i_count; ++icode) {
    for (std::size_t jcode = 0; jcode < j_count; ++jcode) {
      std::size_t rest = jcode;
      for (std::size_t d = k + 1; d-- > 0;) {
        j_digits[d] = rest % n;
        rest /= n;
      }
      auto sum = f.zero();
      for (std::size_t r = 0; r <= k; ++r) {
        const auto left = coordinate(icode * n + j_digits[r]);
        if (f.is_zero(left)) continue;
        std::size_t without = 0;
        for (std::size_t d = 0; d <= k; ++d)
          if (d != r) without = without * n + j_digits[d];
        const auto term = f.mul(left, coordinate(without));
        // r is 0-based here; the 1-based sign (-1)^(r+1)
        sum = (r % 2 == 0) ? f.sub(sum, term) : f.add(sum, term);
      }
      residuals.push_back(std::move(sum));
    }
  }
  return residuals;
}

template <class Field>
bool satisfies_grassmann_relations(const PlueckerPoint<Field>& p) {
  for (const auto& r : grassmann_relations_residual(p))
    if (!p.field().is_zero(r)) return false;
  return true;
}

/// Recovers U from P(U). Uses the lexicographically first tuple I with p_I != 0 as the pivot
/// block: f_i = e_{I_i} + sum_{r not in I} a_{ir} e_r with a_{ir} = (-1)^{k-i} p[I minus I_i, r] / p_I
/// (1-based i, r appended last). Throws NotDecomposable when the relations fail.
template <class Field>
Subspace<Field> subspace_of_pluecker(const PlueckerPoint<Field>& p) {
  if (!satisfies_grassmann_relations(p)) {
    throw NotDecomposable("point violates the Grassmann-Pluecker relations");
  }
  const std::size_t n = p.n();
  const std::size_t k = p.k();
  const auto& f = p.field();
  const SequenceTable table(n, k);

  const auto tuples = combinations(n, k);
  std::size_t lead = 0;
  while (f.is_zero(p.coords()[lead])) ++lead;
  const auto& pivot = tuples[lead];
  const auto inv_lead = f.inv(p.coords()[lead]);

  std::vector<bool> in_pivot(n, false);
  for (auto c : pivot) in_pivot[c] = true;

  Matrix<Field> gens(f, k, n);
  std::vector<std::size_t> seq(k);
  for (std::size_t i = 0; i < k; ++i) {
    gens(i, pivot[i]) = f.one();
    for (std::size_t r = 0; r < n; ++r) {
      if (in_pivot[r]) continue;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (j != i) seq[pos++] = pivot[j];
      seq[pos] = r;
      const auto code = table.encode(seq);
      const int s = table.sign(code);
      if (s == 0) continue;
      auto a = f.mul(p.coords()[table.rank(code)], inv_lead);
      if (s < 0) a = f.neg(a);
      // (-1)^{k-i} with 1-based i equals (-1)^{k-1-i} with 0-based i
      if ((k - 1 - i) % 2 == 1) a = f.neg(a);
      gens(i, r) = a;
    }
  }
  auto u = Subspace<Field>::span(std::move(gens));
  if (!(pluecker_of(u) == p)) throw NotDecomposable("recovered subspace does not reproduce the point");
  return u;
}

struct PlueckerSweep {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  std::uint64_t round_trips = 0;    // subspace_of_pluecker(pluecker_of(U)) == U
  std::uint64_t relations_ok = 0;   // every Grassmann-Pluecker residual is zero

  bool passed() const { return round_trips == total && relations_ok == total; }
};

/// Checks every point of G(k,n)(F_q), 1 <= k <= n.
PlueckerSweep verify_pluecker_sweep(std::size_t n, std::size_t k, std::uint32_t q,
                                    const Budget& budget = Budget::from_env());

}  // namespace isotropica
