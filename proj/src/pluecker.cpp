#include "isotropica/pluecker.hpp"

#include <algorithm>

namespace isotropica {

std::size_t combination_rank(std::size_t n, std::span<const std::size_t> tuple) {
  const std::size_t k = tuple.size();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t skipped = next; skipped < tuple[i]; ++skipped) rank += binomial(n - 1 - skipped, k - 1 - i);
    next = tuple[i] + 1;
  }
  return rank;
}

SequenceTable::SequenceTable(std::size_t n, std::size_t k) : n_(n), k_(k) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;
  sign_.assign(total, 0);
  rank_.assign(total, 0);

  std::vector<std::size_t> seq(k);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t d = k; d-- > 0;) {
      seq[d] = rest % n;
      rest /= n;
    }
    // Insertion sort, counting transpositions for the sign.
    int sign = 1;
    bool repeated = false;
    for (std::size_t i = 1; i < k && !repeated; ++i) {
      for (std::size_t j = i; j > 0; --j) {
        if (seq[j - 1] == seq[j]) {
          repeated = true;
          break;
        }
        if (seq[j - 1] < seq[j]) break;
        std::swap(seq[j - 1], seq[j]);
        sign = -sign;
      }
    }
    if (repeated) continue;
    sign_[code] = sign;
    rank_[code] = combination_rank(n, seq);
  }
}

std::size_t SequenceTable::encode(std::span<const std::size_t> seq) const {
  std::size_t code = 0;
  for (auto s : seq) code = code * n_ + s;
  return code;
}

PlueckerSweep verify_pluecker_sweep(std::size_t n, std::size_t k, std::uint32_t q, const Budget& budget) {
  if (k < 1 || k > n) throw std::invalid_argument("verify_pluecker_sweep needs 1 <= k <= n");
  const GrassmannianCells cells(n, k, PrimeField(q));
  cells.require_within(budget, "verify_pluecker_sweep");
  PlueckerSweep out{n, k, q, cells.size(), 0, 0};
  for (auto cur = cells.cursor(); !cur.done(); cur.next()) {
    const auto u = cur.subspace();
    const auto p = pluecker_of(u);
    if (satisfies_grassmann_relations(p)) ++out.relations_ok;
    try {
      if (subspace_of_pluecker(p) == u) ++out.round_trips;
    } catch (const NotDecomposable&) {
    }
  }
  return out;
}

}  // namespace isotropica
