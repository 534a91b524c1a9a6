#include "isotropica/main_lemma.hpp"

#include "isotropica/algebra.hpp"
#include "isotropica/search.hpp"

namespace isotropica {

namespace {

std::uint64_t tuple_stream(std::size_t n, std::size_t t, std::uint32_t q, std::uint64_t i) {
  return (((static_cast<std::uint64_t>(n) << 8 | t) << 8 | q) << 32) | i;
}

}  // namespace

MainLemmaReport main_lemma_table(std::size_t n_max, const std::vector<std::size_t>& t_values,
                                 const std::vector<std::uint32_t>& qs, std::uint64_t tuples, std::uint64_t seed,
                                 const Budget& budget, Execution exec) {
  MainLemmaReport report;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto t : t_values) {
      const std::size_t k_max = main_lemma_max_k(n, t);
      if (k_max == 0) continue;
      for (auto q : qs) {
        const PrimeField field(q);
        const auto first_row = report.rows.size();
        for (std::size_t k = 1; k <= k_max; ++k) report.rows.push_back({n, t, k, q, tuples, 0});
        for (std::uint64_t i = 0; i < tuples; ++i) {
          auto rng = stream_engine(seed, tuple_stream(n, t, q, i));
          const auto phi = random_form_tuple(n, t, field, rng);
          std::vector<bool> found(k_max + 1, true);
          for (std::size_t k = 1; k <= k_max; ++k) {
            const auto outcome = exhaustive_isotropic(phi, k, budget, exec);
            found[k] = outcome.found;
            if (!outcome.found) continue;
            ++report.rows[first_row + k - 1].found;
            ++report.witnesses_checked;
            if (outcome.witness->dim() != k || !is_isotropic(phi, *outcome.witness)) ++report.witness_failures;
          }
          for (std::size_t k = 2; k <= k_max; ++k)
            if (found[k] && !found[k - 1]) ++report.monotonicity_violations;

          const auto abelian = max_abelian(make_lie(phi), budget, SearchMethod::exhaustive, seed, exec);
          if (!abelian.exhaustive_certified) {
            ++report.uncertified;
            continue;
          }
          for (std::size_t k = 1; k <= k_max; ++k)
            if (found[k] != (abelian.max_abelian_dim >= k + t)) ++report.consistency_violations;
        }
      }
    }
  return report;
}

}  // namespace isotropica
