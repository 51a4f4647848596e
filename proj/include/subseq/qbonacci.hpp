#pragma once

#include "subseq/bigcount.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace subseq {

/// q-bonacci number F_q(t): F_q(t<0) = 0, F_q(0) = 1 and each later term
/// is the sum of the previous q terms, so F_q(t) = 2^(t-1) for 1 <= t <= q.
/// Throws std::invalid_argument for q == 0.
BigCount fib_q(std::size_t q, std::int64_t t);

/// F_q(0..t) in one pass.
std::vector<BigCount> fib_q_table(std::size_t q, std::size_t t);

/// S_q(t) = F_q(0) + ... + F_q(t). Throws for q == 0 or t < 0.
BigCount partial_sum_fib(std::size_t q, std::int64_t t);

enum class RootMethod { bisection, continued_fraction };

struct RootResult {
  double value = 0;
  RootMethod method = RootMethod::bisection;
  /// |2 - value^(-q) - value|
  double residual = 0;
  std::size_t iterations = 0;
};

/// Residual of the growth-root equation z = 2 - z^(-q).
double growth_residual(std::size_t q, double z);

/// Dominant real root of z = 2 - z^(-q), by bisection on [2(1 - 2^-q), 2].
/// For q == 1 the equation degenerates to (z - 1)^2 = 0 and the result is 1.
RootResult phi(std::size_t q, double tolerance = 1e-13);

/// Fixed-point iteration x <- 2 - x^(-q) started from x = 2.
RootResult phi_cfrac(std::size_t q, std::size_t iterations);

/// Root of z^q + ... + z - 1 in (0, 1) by bisection; exactly 1 when q == 1.
double z_root(std::size_t q, double tolerance = 1e-13);

/// z^q + ... + z - 1
double z_polynomial(std::size_t q, double z);

/// a / b as a double without converting either huge integer directly:
/// floor(a * 10^15 / b) / 10^15. Requires b > 0 and a / b < 2^53 / 10^15.
double scaled_ratio(const BigCount& a, const BigCount& b);

}  // namespace subseq
