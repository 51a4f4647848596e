#pragma once

// Capacity summaries in bits and the choice of window parameter p.

#include "subseq/bigcount.hpp"
#include "subseq/master_census.hpp"
#include "subseq/runtime.hpp"

#include <cstddef>
#include <map>
#include <optional>

namespace subseq {

/// argmax over p in [2, q] of (q+1-p) * phi_p^n; ties go to the smaller p.
std::size_t best_p(std::size_t q, std::size_t n);

/// log(q n), the heuristic location of best_p for moderate n. Diagnostic.
double best_p_heuristic(std::size_t q, std::size_t n);

struct GrowthDiagnostics {
  double phi_q = 0;
  std::map<std::size_t, double> phi_p;
  /// (q+1-p) * phi_p^n for every p.
  std::map<std::size_t, double> lower_base;
  /// q * phi_q^n
  double upper_base = 0;
  double best_p_heuristic = 0;
};

struct CapacityReport {
  CensusParams params;
  /// log2 of q^t S_q(t)^n (lineup remembered).
  double upper_bits = 0;
  /// log2 of (q+1-p)^t S_p(t)^n.
  std::map<std::size_t, double> lower_bits_by_p;
  std::size_t best_p = 2;
  std::optional<double> exact_bits;
  std::optional<BigCount> exact;
  /// Master-less (unordered set) brackets; present only for odd n.
  std::optional<double> set_upper_bits;
  std::map<std::size_t, double> set_lower_bits_by_p;
  CensusResult tuple_census;
  GrowthDiagnostics growth;
};

/// Throws std::invalid_argument when n == 0 or q < 2. In exact mode the
/// tuple census over all lineups is computed (subject to the budget).
CapacityReport capacity_report(std::size_t q, std::size_t t, std::size_t n,
                               bool exact, const Budget& budget = {});

}  // namespace subseq
