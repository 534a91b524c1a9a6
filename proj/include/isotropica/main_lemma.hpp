#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isotropica/enumerate.hpp"
#include "isotropica/scan.hpp"

namespace isotropica {

/// Witness rate for one (n, t, k, q): how many of the sampled tuples have an isotropic
/// k-subspace defined over F_q.
struct MainLemmaRow {
  std::size_t n;
  std::size_t t;
  std::size_t k;
  std::uint32_t q;
  std::uint64_t tuples;
  std::uint64_t found;

  double rate() const { return tuples == 0 ? 0.0 : static_cast<double>(found) / static_cast<double>(tuples); }
};

struct MainLemmaReport {
  std::vector<MainLemmaRow> rows;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witness_failures = 0;         // found witnesses that are not isotropic k-subspaces
  std::uint64_t monotonicity_violations = 0;  // found at k but not at some k' < k
  std::uint64_t consistency_violations = 0;   // found at k disagrees with max_abelian >= k + t
  std::uint64_t uncertified = 0;              // tuples whose max_abelian fell back

  bool clean() const {
    return witness_failures == 0 && monotonicity_violations == 0 && consistency_violations == 0 && uncertified == 0;
  }
};

/// For every n in [1, n_max], t in t_values and k with 2n >= t(k-1) + 2k, samples
/// `tuples` random t-tuples per q and runs the exhaustive search at each k. Tuple i for
/// (n, t, q) is drawn from a stream determined by (seed, n, t, q, i). Each tuple is also fed to
/// max_abelian(g(phi)) to check found(k) <=> max_abelian >= k + t.
MainLemmaReport main_lemma_table(std::size_t n_max, const std::vector<std::size_t>& t_values,
                                 const std::vector<std::uint32_t>& qs, std::uint64_t tuples, std::uint64_t seed,
                                 const Budget& budget = Budget::from_env(), Execution exec = Execution::parallel);

}  // namespace isotropica
