#include "subseq/master_census.hpp"

#include "subseq/qbonacci.hpp"
#include "subseq/subseq_census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subseq {

bool CensusResult::bracketed() const {
  if (!exact) return true;
  if (*exact > upper) return false;
  for (const auto& [p, lower] : lowers)
    if (lower > *exact) return false;
  for (const auto& [name, lower] : extra_lowers)
    if (lower > *exact) return false;
  return true;
}

namespace {

double lineup_space_cost(std::size_t q, std::size_t t) {
  return std::pow(static_cast<double>(q), static_cast<double>(t)) * static_cast<double>(std::max<std::size_t>(t, 1));
}

BigCount sum_over_lineups(std::size_t q, std::size_t t, std::size_t n) {
  const std::uint64_t total = lineup_count(q, t);
  auto body = [q, t, n](std::uint64_t begin, std::uint64_t end) {
    BigCount sum = 0;
    for (std::uint64_t i = begin; i < end; ++i)
      sum += pow_big(distinct_subsequences(lineup_from_index(i, q, t)), n);
    return sum;
  };
  return parallel_reduce(total, BigCount(0), body,
                         [](BigCount a, const BigCount& b) { return a += b; });
}

void require_q(std::size_t q) {
  if (q < 2) throw std::invalid_argument("bounds require an alphabet of size q >= 2");
}

}  // namespace

BigCount count_pairs_exact(const Alphabet& alphabet, std::size_t t, const Budget& budget) {
  budget.check("count_pairs_exact", lineup_space_cost(alphabet.size(), t));
  return sum_over_lineups(alphabet.size(), t, 1);
}

BigCount count_tuples_exact(const Alphabet& alphabet, std::size_t t, std::size_t n,
                            const Budget& budget) {
  budget.check("count_tuples_exact", lineup_space_cost(alphabet.size(), t));
  return sum_over_lineups(alphabet.size(), t, n);
}

CensusResult tuple_bounds(std::size_t q, std::size_t t, std::size_t n) {
  require_q(q);
  CensusResult r;
  r.params = {q, t, n};
  r.upper = pow_big(q, t) * pow_big(partial_sum_fib(q, static_cast<std::int64_t>(t)), n);
  for (std::size_t p = 2; p <= q; ++p)
    r.lowers[p] = pow_big(q + 1 - p, t) * pow_big(partial_sum_fib(p, static_cast<std::int64_t>(t)), n);
  return r;
}

CensusResult pair_bounds(std::size_t q, std::size_t t) {
  CensusResult r = tuple_bounds(q, t, 1);
  if (t >= 1) {
    const BigCount fib_tail = fib_q(2, static_cast<std::int64_t>(t) + 2) - 1;
    r.extra_lowers["no_repeat"] = q * pow_big(q - 1, t - 1) * fib_tail;
    if (q == 3) r.extra_lowers["q3_no_repeat"] = 3 * pow_big(2, t - 1) * fib_tail;
  }
  return r;
}

BigCount count_window_distinct_lineups(std::size_t q, std::size_t t, std::size_t p) {
  if (p == 0) throw std::invalid_argument("window size must be at least 1");
  BigCount count = 1;
  // Step i must avoid the previous min(i, p-1) letters, which are distinct.
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t blocked = std::min(i, p - 1);
    if (blocked >= q) return 0;
    count *= q - blocked;
  }
  return count;
}

double lower_growth_constant(std::size_t q, std::size_t p, std::size_t n) {
  return static_cast<double>(q + 1 - p) * std::pow(phi(p).value, static_cast<double>(n));
}

double upper_growth_constant(std::size_t q, std::size_t n) {
  return static_cast<double>(q) * std::pow(phi(q).value, static_cast<double>(n));
}

}  // namespace subseq
