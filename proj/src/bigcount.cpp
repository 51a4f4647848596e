#include "subseq/bigcount.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subseq {

std::string to_decimal(const BigCount& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigCount pow_big(const BigCount& base, std::uint64_t exponent) {
  BigCount result = 1;
  BigCount b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigCount factorial(std::uint64_t n) {
  BigCount result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigCount binomial(const BigCount& n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (BigCount(k) > n) return 0;
  BigCount result = 1;
  // Each prefix product divided by i! is itself a binomial, so the
  // division is exact at every step.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - (i - 1);
    result /= i;
  }
  return result;
}

BigCount floor_of(const Rational& value) {
  if (value < 0) throw std::invalid_argument("floor_of: negative rational");
  return boost::multiprecision::numerator(value) /
         boost::multiprecision::denominator(value);
}

double log2_big(const BigCount& value) {
  if (value < 0) throw std::invalid_argument("log2_big: negative value");
  if (value == 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(value);
  const std::size_t shift = top > 62 ? top - 62 : 0;
  const BigCount head = value >> shift;
  const auto mantissa = head.convert_to<std::uint64_t>();
  return std::log2(static_cast<double>(mantissa)) + static_cast<double>(shift);
}

double log2_rational(const Rational& value) {
  return log2_big(boost::multiprecision::numerator(value)) -
         log2_big(boost::multiprecision::denominator(value));
}

}  // namespace subseq
