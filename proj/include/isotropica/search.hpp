#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isotropica/enumerate.hpp"
#include "isotropica/forms.hpp"
#include "isotropica/linalg.hpp"
#include "isotropica/scan.hpp"

namespace isotropica {

enum class SearchMethod { greedy, exhaustive, randomized };

std::string to_string(SearchMethod m);
SearchMethod parse_search_method(const std::string& text);

struct SearchOutcome {
  bool found = false;
  std::optional<SubspaceFp> witness;  // k_target-dimensional and isotropic when found
  std::size_t k_target = 0;
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t trials = 0;  // subspaces tested (exhaustive) or restarts (randomized)
  std::uint64_t seed = 0;
};

/// Allocation-free isotropy test of an RREF basis against a fixed tuple over F_p.
class IsotropyTest {
 public:
  explicit IsotropyTest(const FormTupleFp& phi);

  bool operator()(const MatrixFp& basis);
  bool operator()(const GrassmannianCells::Cursor& cur) { return (*this)(cur.basis()); }

 private:
  std::size_t n_;
  std::size_t t_;
  std::uint32_t p_;
  std::vector<std::uint32_t> forms_;  // t blocks of n x n
  std::vector<std::uint32_t> row_times_form_;
};

/// Builds an isotropic subspace by adjoining, while possible, a solution y of
/// {phi_l(u_j, y) = 0 for all l, j} outside the current span. Deterministic: the first kernel
/// basis vector (kernel_basis order) outside the span is taken. Output dimension is at least
/// ceil(n / (t + 1)), since each adjoined vector adds at most t constraints.
template <class Field>
Subspace<Field> greedy_isotropic(const FormTuple<Field>& phi) {
  const auto& f = phi.field();
  const std::size_t n = phi.n();
  Matrix<Field> chosen(f, 0, n);
  while (true) {
    Matrix<Field> constraints(f, 0, n);
    for (std::size_t j = 0; j < chosen.rows(); ++j)
      for (const auto& m : phi.matrices()) constraints.append_row(m.transpose().apply(chosen.row(j)));
    const auto kernel = kernel_basis(constraints);
    if (kernel.rows() <= chosen.rows()) break;  // the kernel always contains the current span
    const auto current = Subspace<Field>::span(chosen);
    bool extended = false;
    for (std::size_t r = 0; r < kernel.rows() && !extended; ++r) {
      if (!current.contains(kernel.row(r))) {
        chosen.append_row(kernel.row(r));
        extended = true;
      }
    }
    if (!extended) break;
  }
  return Subspace<Field>::span(std::move(chosen));
}

/// Greedy with random choices: each step adjoins a uniformly random kernel vector outside the span.
SubspaceFp greedy_isotropic(const FormTupleFp& phi, std::uint64_t seed);

/// Best of `restarts` seeded random greedy runs (restart r uses stream r of seed); ties go to the
/// lowest restart index.
SearchOutcome randomized_isotropic(const FormTupleFp& phi, std::uint64_t seed, std::uint64_t restarts);

/// Scans G(k,n)(F_q) in enumeration order; the witness is the first isotropic subspace.
/// A miss only says there is no F_q-rational witness. Throws BudgetExceeded when no witness
/// turns up among the first budget.max_tests subspaces and the scan is not complete.
SearchOutcome exhaustive_isotropic(const FormTupleFp& phi, std::size_t k, const Budget& budget = Budget::from_env(),
                                   Execution exec = Execution::parallel);

/// 2n >= t(k-1) + 2k and t >= 2.
bool check_main_lemma_threshold(std::size_t n, std::size_t t, std::size_t k);

/// Largest k satisfying 2n >= t(k-1) + 2k (0 if none).
std::size_t main_lemma_max_k(std::size_t n, std::size_t t);

/// 2n < t(k-1) + 2k.
bool lower_bound_inequality_holds(std::size_t n, std::size_t t, std::size_t k);

struct HuntResult {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;         // tuples with no isotropic k-subspace over F_q
  std::optional<std::uint64_t> first;  // trial index of the first success
  std::optional<FormTupleFp> tuple;    // the first success

  bool found() const { return tuple.has_value(); }
  double success_rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
};

/// Samples `trials` random tuples (trial i uses stream i of seed) and scans each for an
/// isotropic k-subspace. k <= 1 fails immediately: every line is isotropic.
HuntResult witness_hunt_no_isotropic(std::size_t n, std::size_t t, std::size_t k, std::uint32_t q,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const Budget& budget = Budget::from_env(),
                                     Execution exec = Execution::parallel);

}  // namespace isotropica
