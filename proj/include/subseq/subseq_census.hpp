#pragma once

// Exact subsequence statistics of one master lineup.

#include "subseq/bigcount.hpp"
#include "subseq/runtime.hpp"
#include "subseq/sequences.hpp"

#include <cstddef>
#include <vector>

namespace subseq {

struct TauHistogram {
  /// counts[s] = number of distinct subsequences x with tau(x) = s.
  std::vector<BigCount> counts;
  Strand lineup;

  BigCount total() const;
};

struct LengthHistogram {
  /// counts[l] = number of distinct subsequences of length l.
  std::vector<BigCount> counts;

  BigCount total() const;
};

/// |[M]|, the empty strand included, by the last-occurrence recurrence
/// c_s = 2 c_{s-1} - c_{prev(s)-1}.
BigCount distinct_subsequences(const Strand& master);

/// |[M]| = 1 + sum over letters u occurring in M of |[M after first u]|.
/// Independent route used to cross-check distinct_subsequences.
BigCount distinct_subsequences_first_letter(const Strand& master);

/// counts[s] = sum_{u=1}^{u*} counts[s-u], u* the first offset with
/// M_{s-u} == M_s (u* = s when the letter has not occurred before).
TauHistogram tau_histogram(const Strand& master);

LengthHistogram length_histogram(const Strand& master);

inline constexpr std::size_t kDefaultEnumerationCap = 18;

/// Brute force: inserts all 2^|M| embeddings into a set.
/// Throws BudgetExceeded when |M| > cap.
std::vector<Strand> enumerate_subsequences(
    const Strand& master, std::size_t cap = kDefaultEnumerationCap);

struct MaximizerResult {
  BigCount max;
  /// Every lineup attaining the maximum, lexicographic order.
  std::vector<Strand> maximizers;
};

/// Exhaustive maximum of distinct_subsequences over all lineups of length t.
MaximizerResult maximizer_search(const Alphabet& alphabet, std::size_t t,
                                 const Budget& budget = {});

/// The lineup with the given rank in lexicographic order of Sigma^t.
Strand lineup_from_index(std::uint64_t index, std::size_t q, std::size_t t);

/// q^t, or throws BudgetExceeded if it does not fit in 64 bits.
std::uint64_t lineup_count(std::size_t q, std::size_t t);

}  // namespace subseq
