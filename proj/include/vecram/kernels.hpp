#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vecram {

// Least index in [0, n) satisfying pred, scanning in order with early exit.
template <class Pred>
std::optional<std::uint64_t> least_satisfying_serial(std::uint64_t n, Pred&& pred) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

// Sharded variant: blocks of the index range are scanned concurrently and the
// merge keeps the minimum hit, so the result equals the serial scan exactly.
// pred must be pure (it may be evaluated past the eventual winner).
template <class Pred>
std::optional<std::uint64_t> least_satisfying_parallel(std::uint64_t n, Pred&& pred,
                                                       std::uint64_t grain = 256) {
#ifndef _OPENMP
  return least_satisfying_serial(n, pred);
#else
  if (n == 0) return std::nullopt;
  if (grain == 0) grain = 1;
  const std::int64_t blocks = std::int64_t((n + grain - 1) / grain);
  std::uint64_t best = n;
#pragma omp parallel
  {
    std::uint64_t local = n;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t b = 0; b < blocks; ++b) {
      std::uint64_t lo = std::uint64_t(b) * grain;
      std::uint64_t seen;
#pragma omp atomic read
      seen = best;
      if (lo >= seen || lo >= local) continue;
      std::uint64_t hi = std::min(n, lo + grain);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (pred(i)) {
          local = i;
          break;
        }
      }
      if (local < n) {
#pragma omp critical(vecram_least_satisfying)
        best = std::min(best, local);
      }
    }
  }
  if (best == n) return std::nullopt;
  return best;
#endif
}

template <class Pred>
std::optional<std::uint64_t> least_satisfying(std::uint64_t n, Pred&& pred,
                                              bool parallel) {
  return parallel ? least_satisfying_parallel(n, pred)
                  : least_satisfying_serial(n, pred);
}

}  // namespace vecram
