#include "subseq/errors.hpp"

namespace subseq {

BudgetExceeded::BudgetExceeded(const std::string& what, double estimated,
                               double limit)
    : std::runtime_error(what + ": estimated " + std::to_string(estimated) +
                         " steps exceeds budget " + std::to_string(limit)),
      estimated_(estimated),
      limit_(limit) {}

NotASubsequence::NotASubsequence(std::size_t strand_index)
    : std::invalid_argument("strand " + std::to_string(strand_index) +
                            " is not a subsequence of the lineup"),
      index_(strand_index) {}

}  // namespace subseq
