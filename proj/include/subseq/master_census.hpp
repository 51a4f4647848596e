#pragma once

// Counts over all master lineups of (M, x) pairs and (M, x^1..x^n) tuples,
// together with closed-form brackets.

#include "subseq/bigcount.hpp"
#include "subseq/runtime.hpp"
#include "subseq/sequences.hpp"

#include <cstddef>
#include <map>
#include <optional>

namespace subseq {

struct CensusParams {
  std::size_t q = 0;
  std::size_t t = 0;
  std::size_t n = 1;
};

struct CensusResult {
  CensusParams params;
  std::optional<BigCount> exact;
  BigCount upper;
  /// Keyed by the window parameter p in [2, q].
  std::map<std::size_t, BigCount> lowers;
  /// Extra named bounds (specialisations reported next to the general ones).
  std::map<std::string, BigCount> extra_lowers;

  /// lowers[p] <= exact <= upper for every p (true when exact is absent).
  bool bracketed() const;
};

/// Sum over M in Sigma^t of |[M]|.
BigCount count_pairs_exact(const Alphabet& alphabet, std::size_t t,
                           const Budget& budget = {});

/// Sum over M in Sigma^t of |[M]|^n.
BigCount count_tuples_exact(const Alphabet& alphabet, std::size_t t,
                            std::size_t n, const Budget& budget = {});

/// upper = q^t S_q(t), lowers[p] = (q+1-p)^t S_p(t). For q == 3 also
/// reports "q3_no_repeat" = 3 * 2^(t-1) * (F_2(t+2) - 1), and for every
/// q >= 2 "no_repeat" = q (q-1)^(t-1) (F_2(t+2) - 1) and, when q >= 3,
/// "no_repeat_gap2" = (q-2)^t S_3(t).
CensusResult pair_bounds(std::size_t q, std::size_t t);

/// upper = q^t S_q(t)^n, lowers[p] = (q+1-p)^t S_p(t)^n.
CensusResult tuple_bounds(std::size_t q, std::size_t t, std::size_t n);

/// Number of lineups in Sigma^t satisfying window_distinct(M, p), exact.
BigCount count_window_distinct_lineups(std::size_t q, std::size_t t,
                                       std::size_t p);

/// Floating growth constants: (q+1-p) * phi_p^n per time step.
double lower_growth_constant(std::size_t q, std::size_t p, std::size_t n = 1);
double upper_growth_constant(std::size_t q, std::size_t n = 1);

}  // namespace subseq
