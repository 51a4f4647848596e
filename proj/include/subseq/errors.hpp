#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subseq {

/// Strands or alphabets that disagree on the alphabet they are drawn from.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration whose estimated cost exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimated, double limit);

  double estimated() const noexcept { return estimated_; }
  double limit() const noexcept { return limit_; }

 private:
  double estimated_;
  double limit_;
};

/// A strand handed to schedule() that does not embed into the lineup.
class NotASubsequence : public std::invalid_argument {
 public:
  NotASubsequence(std::size_t strand_index);

  std::size_t strand_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace subseq
