#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace subseq {

/// Exact nonnegative integer used for every census and q-bonacci value.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational used for probabilities and fractional bounds.
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigCount& value);
std::string to_string(const Rational& value);

BigCount pow_big(const BigCount& base, std::uint64_t exponent);
BigCount factorial(std::uint64_t n);
BigCount binomial(const BigCount& n, std::uint64_t k);

/// Floor of a nonnegative rational.
BigCount floor_of(const Rational& value);

/// log2 of a positive integer, computed from the bit length and the top 63
/// bits so that arbitrarily large values keep full double precision.
/// Returns -infinity for zero.
double log2_big(const BigCount& value);
double log2_rational(const Rational& value);

}  // namespace subseq
