#pragma once

// Master-less counting: strands are kept, the lineup is forgotten and must
// be recoverable from the strands by the majority-vote greedy algorithm.

#include "subseq/bigcount.hpp"
#include "subseq/master_census.hpp"
#include "subseq/runtime.hpp"
#include "subseq/sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subseq {

/// t x n binary matrix. Rows are lineup steps, columns are strands.
class SelectionMatrix {
 public:
  SelectionMatrix(std::size_t rows, std::size_t cols);
  /// Bit (s * cols + j) of `bits` is entry (s, j). Requires rows*cols <= 64.
  static SelectionMatrix from_bits(std::size_t rows, std::size_t cols,
                                   std::uint64_t bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(std::size_t row, std::size_t col) const {
    return bits_[row * cols_ + col];
  }
  void set(std::size_t row, std::size_t col, bool value) {
    bits_[row * cols_ + col] = value;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> bits_;
};

/// Criterion (a): each row holds strictly more ones than zeros.
bool rows_majority(const SelectionMatrix& y);
/// Criterion (b): no column has p consecutive zeros.
bool columns_avoid_zero_run(const SelectionMatrix& y, std::size_t p);
/// Both criteria. Throws std::invalid_argument for even column counts.
bool matrix_valid(const SelectionMatrix& y, std::size_t p);

/// Strand j is M restricted to the 1-rows of column j.
std::vector<Strand> strands_from_matrix(const Strand& master,
                                        const SelectionMatrix& y);

/// Repeatedly appends the most common first letter among the strands that
/// are not yet depleted (ties go to the smaller letter index) and strips it
/// from the strands that start with it.
Strand greedy_scs(std::span<const Strand> strands, const Alphabet& alphabet);

/// Letters chosen by greedy_scs together with the vote each one received.
struct GreedyStep {
  Letter letter;
  std::size_t votes;
  std::size_t live;
};
std::vector<GreedyStep> greedy_trace(std::span<const Strand> strands,
                                     const Alphabet& alphabet);

inline constexpr double kScsStateBudget = 1e7;

/// Shortest common supersequence length by breadth-first search over the
/// product of per-strand positions.
std::size_t scs_length(std::span<const Strand> strands,
                       double state_budget = kScsStateBudget);

struct MatrixCensus {
  std::size_t t = 0, n = 0, p = 0;
  BigCount exact_valid;
  /// F_p(t+1)^n / 2^t
  Rational bound_lower;
  Rational ef, eg, efg;
  /// Column strings of length t with no p consecutive zeros, counted directly.
  BigCount column_count;
};

/// Enumerates all 2^(t n) matrices; n must be odd.
MatrixCensus count_valid_matrices(std::size_t t, std::size_t n, std::size_t p,
                                  const Budget& budget = {});

/// Every strand of length <= t, ordered by length then lexicographically.
std::vector<Strand> strands_up_to(std::size_t q, std::size_t t);

/// Ordered n-tuples (repeats allowed) of strands with scs_length <= t.
BigCount count_masterless_tuples(const Alphabet& alphabet, std::size_t t,
                                 std::size_t n, const Budget& budget = {});

enum class SetKind { distinct, multiset };

/// Unordered collections of n strands with scs_length <= t. The default
/// counts sets of distinct strands; SetKind::multiset allows repeats.
BigCount count_masterless_sets(const Alphabet& alphabet, std::size_t t,
                               std::size_t n, SetKind kind = SetKind::distinct,
                               const Budget& budget = {});

struct MasterlessBounds {
  CensusParams params;
  /// Theorem form (ordered tuples): (q+1-p)^t F_p(t+1)^n / 2^t.
  std::map<std::size_t, Rational> tuple_lowers;
  /// Divided by n! for unordered sets.
  std::map<std::size_t, Rational> set_lowers;
  /// floor(set_lowers[p])
  std::map<std::size_t, BigCount> set_lowers_floor;
  /// q^t * sum_{k<=n} C(S_q(t), k)
  BigCount set_upper;
};

/// n must be odd; q >= 2.
MasterlessBounds masterless_bounds(std::size_t q, std::size_t t,
                                   std::size_t n);

/// sum_{k=0}^{n} C(s, k)
BigCount binomial_at_most(const BigCount& s, std::size_t n);

}  // namespace subseq
