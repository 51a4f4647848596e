#include "subseq/qbonacci.hpp"

#include <cmath>
#include <stdexcept>

namespace subseq {

std::vector<BigCount> fib_q_table(std::size_t q, std::size_t t) {
  if (q == 0) throw std::invalid_argument("q-bonacci order must be at least 1");
  std::vector<BigCount> f(t + 1);
  f[0] = 1;
  BigCount window = 1;  // F(s-1) + ... + F(s-q)
  for (std::size_t s = 1; s <= t; ++s) {
    f[s] = window;
    window += f[s];
    if (s >= q) window -= f[s - q];
  }
  return f;
}

BigCount fib_q(std::size_t q, std::int64_t t) {
  if (q == 0) throw std::invalid_argument("q-bonacci order must be at least 1");
  if (t < 0) return 0;
  return fib_q_table(q, static_cast<std::size_t>(t)).back();
}

BigCount partial_sum_fib(std::size_t q, std::int64_t t) {
  if (q == 0) throw std::invalid_argument("q-bonacci order must be at least 1");
  if (t < 0) throw std::invalid_argument("partial sum requires t >= 0");
  BigCount sum = 0;
  for (const auto& f : fib_q_table(q, static_cast<std::size_t>(t))) sum += f;
  return sum;
}

double growth_residual(std::size_t q, double z) {
  return std::abs(2.0 - std::pow(z, -static_cast<double>(q)) - z);
}

RootResult phi(std::size_t q, double tolerance) {
  if (q == 0) throw std::invalid_argument("q must be at least 1");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const double qd = static_cast<double>(q);
  // 2 - z^-q - z is positive below the root and negative above it.
  auto h = [qd](double z) { return 2.0 - std::pow(z, -qd) - z; };
  double lo = 2.0 * (1.0 - std::exp2(-qd));
  double hi = 2.0;
  RootResult r;
  r.method = RootMethod::bisection;
  while (r.iterations < 2000) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    ++r.iterations;
    if (h(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tolerance && std::abs(h(lo)) <= tolerance) break;
  }
  r.value = lo;
  r.residual = growth_residual(q, r.value);
  return r;
}

RootResult phi_cfrac(std::size_t q, std::size_t iterations) {
  if (q == 0) throw std::invalid_argument("q must be at least 1");
  if (iterations == 0) throw std::invalid_argument("iterations must be at least 1");
  const double qd = static_cast<double>(q);
  double x = 2.0;
  for (std::size_t i = 0; i < iterations; ++i) x = 2.0 - std::pow(x, -qd);
  return RootResult{x, RootMethod::continued_fraction, growth_residual(q, x), iterations};
}

double z_polynomial(std::size_t q, double z) {
  double sum = 0;
  double power = 1;
  for (std::size_t k = 1; k <= q; ++k) {
    power *= z;
    sum += power;
  }
  return sum - 1.0;
}

double z_root(std::size_t q, double tolerance) {
  if (q == 0) throw std::invalid_argument("q must be at least 1");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (q == 1) return 1.0;
  // The polynomial is -1 at 0, q - 1 at 1 and increasing in between.
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 2000; ++i) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (z_polynomial(q, mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tolerance && std::abs(z_polynomial(q, lo)) <= tolerance) break;
  }
  return lo;
}

double scaled_ratio(const BigCount& a, const BigCount& b) {
  if (b <= 0) throw std::invalid_argument("scaled_ratio: denominator must be positive");
  static const BigCount kScale = pow_big(10, 15);
  const BigCount scaled = a * kScale / b;
  return scaled.convert_to<double>() / 1e15;
}

}  // namespace subseq
