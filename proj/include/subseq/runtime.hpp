#pragma once

// Worker pool sizing and enumeration budgets.
//
// SUBSEQ_WORKERS  overrides the worker count (default: hardware concurrency).
// SUBSEQ_BUDGET   overrides the default enumeration budget in elementary steps.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace subseq {

inline constexpr double kDefaultBudget = 1e9;

unsigned worker_count();

/// The active budget: SUBSEQ_BUDGET if set and parseable, else kDefaultBudget.
double budget_limit();

/// Per-call budget control. `limit <= 0` means "use budget_limit()";
/// `unlimited` disables the guard entirely.
struct Budget {
  double limit = 0;
  bool unlimited = false;

  double effective() const { return limit > 0 ? limit : budget_limit(); }
  void check(const std::string& what, double estimated) const;
};

/// Splits [0, total) into contiguous blocks, evaluates `body(begin, end)` on
/// each block on up to worker_count() threads and folds the block results
/// in block order. Results are independent of the worker count provided
/// `combine` is associative.
template <class T, class Body, class Combine>
T parallel_reduce(std::uint64_t total, T init, Body body, Combine combine) {
  if (total == 0) return init;
  const std::uint64_t workers =
      std::min<std::uint64_t>(worker_count(), total);
  // A few blocks per worker smooths out uneven block cost.
  const std::uint64_t blocks = std::min<std::uint64_t>(total, workers * 4);
  std::vector<T> partial(blocks, init);
  auto block_begin = [&](std::uint64_t b) { return total * b / blocks; };

  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b)
      partial[b] = body(block_begin(b), block_begin(b + 1));
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers)
          partial[b] = body(block_begin(b), block_begin(b + 1));
      });
    }
  }
  T acc = std::move(init);
  for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
  return acc;
}

}  // namespace subseq
