#pragma once

// Exhaustive scans over G(k,n)(F_q). Each kernel comes in a serial reference form and an
// OpenMP form that splits the global enumeration index into fixed chunks. Both forms visit
// the same subspaces and return identical results; tests compare them directly.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#include "isotropica/enumerate.hpp"

namespace isotropica {

enum class Execution { serial, parallel };

namespace scan_detail {
inline constexpr std::uint64_t kChunk = 1u << 14;
}

/// Predicates take the cursor and must be copyable; each worker uses its own copy so
/// predicates may keep scratch buffers.
template <class Pred>
std::uint64_t count_matching_serial(const GrassmannianCells& cells, Pred pred) {
  std::uint64_t count = 0;
  for (auto cur = cells.cursor(); !cur.done(); cur.next())
    if (pred(cur)) ++count;
  return count;
}

template <class Pred>
std::uint64_t count_matching_parallel(const GrassmannianCells& cells, const Pred& pred) {
  const std::uint64_t total = cells.size();
  const auto chunks = static_cast<std::int64_t>((total + scan_detail::kChunk - 1) / scan_detail::kChunk);
  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    Pred local = pred;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * scan_detail::kChunk;
      const std::uint64_t end = std::min(total, begin + scan_detail::kChunk);
      for (auto cur = cells.cursor(begin); cur.index() < end; cur.next())
        if (local(cur)) ++count;
    }
  }
  return count;
}

template <class Pred>
std::uint64_t count_matching(const GrassmannianCells& cells, const Pred& pred, Execution exec) {
  return exec == Execution::parallel ? count_matching_parallel(cells, pred) : count_matching_serial(cells, pred);
}

/// Lowest global index below `limit` satisfying pred, if any.
template <class Pred>
std::optional<std::uint64_t> first_matching_serial(const GrassmannianCells& cells, Pred pred,
                                                   std::uint64_t limit = UINT64_MAX) {
  for (auto cur = cells.cursor(); !cur.done() && cur.index() < limit; cur.next())
    if (pred(cur)) return cur.index();
  return std::nullopt;
}

/// Same result as the serial form: chunks past the best index found so far are skipped,
/// and the minimum over chunks is kept, so the answer does not depend on scheduling.
template <class Pred>
std::optional<std::uint64_t> first_matching_parallel(const GrassmannianCells& cells, const Pred& pred,
                                                     std::uint64_t limit = UINT64_MAX) {
  const std::uint64_t total = std::min(cells.size(), limit);
  const auto chunks = static_cast<std::int64_t>((total + scan_detail::kChunk - 1) / scan_detail::kChunk);
  std::atomic<std::uint64_t> best{UINT64_MAX};
#pragma omp parallel
  {
    Pred local = pred;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * scan_detail::kChunk;
      if (begin > best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(total, begin + scan_detail::kChunk);
      for (auto cur = cells.cursor(begin); cur.index() < end; cur.next()) {
        if (local(cur)) {
          auto seen = best.load(std::memory_order_relaxed);
          while (cur.index() < seen && !best.compare_exchange_weak(seen, cur.index())) {
          }
          break;
        }
      }
    }
  }
  const auto found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

template <class Pred>
std::optional<std::uint64_t> first_matching(const GrassmannianCells& cells, const Pred& pred, Execution exec,
                                            std::uint64_t limit = UINT64_MAX) {
  return exec == Execution::parallel ? first_matching_parallel(cells, pred, limit)
                                     : first_matching_serial(cells, pred, limit);
}

/// Folds every subspace into an accumulator. visit(acc, cursor) updates a worker-local
/// accumulator starting from Acc{}; merge(into, from) must be commutative and associative.
/// init is folded in exactly once.
template <class Acc, class Visit, class Merge>
Acc reduce_subspaces(const GrassmannianCells& cells, Acc init, const Visit& visit, const Merge& merge, Execution exec) {
  if (exec == Execution::serial) {
    Visit local = visit;
    for (auto cur = cells.cursor(); !cur.done(); cur.next()) local(init, cur);
    return init;
  }
  const std::uint64_t total = cells.size();
  const auto chunks = static_cast<std::int64_t>((total + scan_detail::kChunk - 1) / scan_detail::kChunk);
  Acc result = init;
#pragma omp parallel
  {
    Visit local = visit;
    Acc acc{};
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * scan_detail::kChunk;
      const std::uint64_t end = std::min(total, begin + scan_detail::kChunk);
      for (auto cur = cells.cursor(begin); cur.index() < end; cur.next()) local(acc, cur);
    }
#pragma omp critical(isotropica_reduce)
    merge(result, acc);
  }
  return result;
}

}  // namespace isotropica
