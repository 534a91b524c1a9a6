#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "isotropica/enumerate.hpp"
#include "isotropica/errors.hpp"
#include "isotropica/polyfit.hpp"
#include "isotropica/scan.hpp"
#include "isotropica/subspace.hpp"

namespace isotropica {

/// Strictly increasing chain V_1 < V_2 < ... < V_k in a common ambient space.
template <class Field>
class Flag {
 public:
  explicit Flag(std::vector<Subspace<Field>> chain) : chain_(std::move(chain)) {
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
      require_same_ambient(chain_[i], chain_[i + 1]);
      // containment by rank: dim(V_i + V_{i+1}) == dim V_{i+1}
      if (chain_[i].dim() >= chain_[i + 1].dim() || sum_dim(chain_[i], chain_[i + 1]) != chain_[i + 1].dim()) {
        throw std::invalid_argument("flag is not strictly increasing at step " + std::to_string(i + 1));
      }
    }
    if (!chain_.empty() && chain_.front().dim() == 0) throw std::invalid_argument("flag starts with the zero space");
  }

  /// V_i = span(e_1, ..., e_{dims[i]}).
  static Flag coordinate(Field field, std::size_t n, std::span<const std::size_t> dims) {
    std::vector<Subspace<Field>> chain;
    for (auto d : dims) {
      if (d > n) throw DimensionMismatch("flag dimension exceeds ambient dimension");
      chain.push_back(Subspace<Field>::leading(field, n, d));
    }
    return Flag(std::move(chain));
  }

  std::size_t length() const noexcept { return chain_.size(); }
  const Subspace<Field>& operator[](std::size_t i) const { return chain_[i]; }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& v : chain_) out.push_back(v.dim());
    return out;
  }

 private:
  std::vector<Subspace<Field>> chain_;
};

/// dim(U cap V_i) >= i for i = 1..k, via stacked-basis ranks.
template <class Field>
bool schubert_membership(const Subspace<Field>& u, const Flag<Field>& flag) {
  if (flag.length() != u.dim()) throw DimensionMismatch("flag length must equal dim U");
  for (std::size_t i = 0; i < flag.length(); ++i)
    if (intersection_dim(u, flag[i]) < i + 1) return false;
  return true;
}

/// sum_i (a_i - i) for flag dimensions a_1 < ... < a_k.
int schubert_formula_dim(std::span<const std::size_t> flag_dims);

/// Validates 1 <= a_1 < ... < a_k <= n.
void require_flag_dims(std::size_t n, std::span<const std::size_t> flag_dims);

/// Formula dimension next to the degree of the point count q -> #X(F_q), fitted exactly at the
/// first B+1 primes, where B is an a priori degree bound for X (the dimension of a Grassmannian
/// containing X).
struct DegreeCheck {
  int formula_dim = 0;
  int counted_degree = -1;
  std::vector<std::uint64_t> primes;
  std::vector<mpz_class> counts;

  bool matches() const { return formula_dim == counted_degree; }
};

/// Number of U in G(k,n)(F_q) lying in the Schubert cell of the coordinate flag with the given dims.
std::uint64_t count_schubert_cell(std::size_t n, std::span<const std::size_t> flag_dims, std::uint32_t q,
                                  Execution exec = Execution::parallel);

/// Degree bound k(a_k - k): the cell lies in G(k, V_k).
DegreeCheck schubert_dimension_check(std::size_t n, std::span<const std::size_t> flag_dims,
                                     const Budget& budget = Budget::from_env(),
                                     Execution exec = Execution::parallel);

/// s_0 = max(0, 2k - n).
std::size_t g_s_min(std::size_t n, std::size_t k);

/// (k - s)(n - k + s); throws std::invalid_argument for s outside [s_0, k].
int g_s_dimension(std::size_t n, std::size_t k, std::size_t s);

/// The coordinate flag dims that realize G_s(span(e_1..e_k)) as a Schubert cell:
/// a_i = k - s + i for i <= s and a_i = n - k + i for i > s.
std::vector<std::size_t> g_s_flag_dims(std::size_t n, std::size_t k, std::size_t s);

template <class Field>
bool g_s_membership(const Subspace<Field>& u_prime, const Subspace<Field>& u, std::size_t s) {
  if (u.dim() != u_prime.dim()) throw DimensionMismatch("G_s compares subspaces of equal dimension");
  const auto s0 = g_s_min(u.ambient_dim(), u.dim());
  if (s < s0 || s > u.dim()) throw std::invalid_argument("s outside [max(0,2k-n), k]");
  return intersection_dim(u, u_prime) >= s;
}

/// Number of U' in G(k,n)(F_q) with dim(U' cap span(e_1..e_k)) >= s.
std::uint64_t count_g_s(std::size_t n, std::size_t k, std::size_t s, std::uint32_t q,
                        Execution exec = Execution::parallel);

DegreeCheck g_s_dimension_check(std::size_t n, std::size_t k, std::size_t s,
                                const Budget& budget = Budget::from_env(), Execution exec = Execution::parallel);

/// Degree of q -> #G(k,n)(F_q) fitted from the enumerator's cell sizes, against k(n-k).
DegreeCheck grassmannian_dimension_check(std::size_t n, std::size_t k);

}  // namespace isotropica
