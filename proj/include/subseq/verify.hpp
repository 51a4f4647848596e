#pragma once

// Replays every acceptance criterion and reports measured values.

#include "subseq/bigcount.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace subseq {

enum class VerifyScale { small, full };

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock limit for the full grid; 0 when none applies.
  double time_limit = 0;
};

struct VerifyReport {
  VerifyScale scale = VerifyScale::small;
  std::vector<CriterionOutcome> outcomes;

  bool all_passed() const;
};

/// Substitutable primitives, so a tampered implementation can be fed
/// through the suite to confirm that it gets caught.
struct VerifyHooks {
  std::function<BigCount(std::size_t q, std::int64_t t)> fib;
};

VerifyHooks default_hooks();

VerifyReport verify_suite(VerifyScale scale, const VerifyHooks& hooks = default_hooks());

/// Only the criteria whose ids are listed (all when empty).
VerifyReport verify_suite(VerifyScale scale, const std::vector<int>& only,
                          const VerifyHooks& hooks = default_hooks());

}  // namespace subseq
