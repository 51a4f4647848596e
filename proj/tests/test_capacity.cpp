#include "subseq/capacity.hpp"
#include "subseq/qbonacci.hpp"
#include "subseq/report.hpp"

#include <doctest.h>

#include <cmath>

using namespace subseq;

namespace {

// Independent argmax using the continued-fraction root.
std::size_t argmax_by_cfrac(std::size_t q, std::size_t n) {
  std::size_t best = 2;
  double best_score = -1e300;
  for (std::size_t p = 2; p <= q; ++p) {
    const double score = std::log(double(q + 1 - p)) + double(n) * std::log(phi_cfrac(p, 400).value);
    if (score > best_score + 1e-12) {
      best_score = score;
      best = p;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("best_p") {
  for (std::size_t n : {1u, 5u, 100u, 100000u}) CHECK(best_p(2, n) == 2);
  for (std::size_t q = 3; q <= 5; ++q)
    for (std::size_t n = q << q; n <= (q << q) * 4; n += q) CHECK(best_p(q, n) == q);
  for (std::size_t q = 2; q <= 12; ++q)
    for (std::size_t n = 1; n <= 300; n += 7) {
      const std::size_t p = best_p(q, n);
      CHECK(p >= 2);
      CHECK(p <= q);
      CHECK(p == argmax_by_cfrac(q, n));
    }
  CHECK_THROWS_AS(best_p(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(best_p(4, 0), std::invalid_argument);
}

TEST_CASE("best_p tracks log2(qn) in the moderate regime") {
  // Diagnostic only. best_p sits roughly 1.5 below log2(qn) here; across
  // wider grids the gap reaches about 4, so nothing tighter is contractual.
  for (std::size_t q : {16u, 32u, 64u})
    for (std::size_t n : {3u, 9u, 27u}) {
      const double h = best_p_heuristic(q, n);
      const auto p = static_cast<double>(best_p(q, n));
      MESSAGE("q=" << q << " n=" << n << " best_p=" << p << " log2(qn)=" << h);
      CHECK(std::abs(p - h) <= 4.0);
    }
}

TEST_CASE("capacity_report") {
  const CapacityReport small = capacity_report(2, 2, 1, true);
  REQUIRE(small.exact_bits.has_value());
  CHECK(*small.exact_bits == doctest::Approx(std::log2(14.0)).epsilon(1e-12));
  CHECK(*small.exact == 14);
  CHECK(small.best_p == 2);

  const CapacityReport big = capacity_report(4, 12, 5, false);
  const double want = 12 * 2 + 5 * log2_big(partial_sum_fib(4, 12));
  CHECK(big.upper_bits == doctest::Approx(want).epsilon(1e-12));
  CHECK_FALSE(big.exact_bits.has_value());
  for (const auto& [p, bits] : big.lower_bits_by_p) CHECK(bits <= big.upper_bits);
  CHECK(big.best_p >= 2);
  CHECK(big.best_p <= 4);
  REQUIRE(big.set_upper_bits.has_value());
  CHECK(big.growth.phi_q == doctest::Approx(phi(4).value));

  CHECK_FALSE(capacity_report(3, 4, 2, false).set_upper_bits.has_value());
  CHECK_THROWS_AS(capacity_report(2, 2, 0, false), std::invalid_argument);
}

TEST_CASE("bits are log2 of exact counts") {
  for (std::size_t k : {0u, 1u, 52u, 53u, 64u, 1000u, 5000u}) CHECK(log2_big(BigCount(1) << k) == double(k));
  const BigCount three = BigCount(3) << 1000;
  CHECK(std::abs(log2_big(three) - (1000 + std::log2(3.0))) / 1001.6 < 1e-12);
  const BigCount f = fib_q(3, 3000);
  const double ref = 3000 * std::log2(phi(3).value);
  CHECK(std::abs(log2_big(f) - ref) < 5.0);
  CHECK(std::isinf(log2_big(0)));
  CHECK(log2_rational(Rational(1, 8)) == -3.0);
}

TEST_CASE("json documents round-trip byte for byte") {
  for (bool exact : {false, true}) {
    const CapacityReport r = capacity_report(3, 5, 3, exact);
    const report::Json doc = report::document("capacity", {{"q", 3}, {"t", 5}, {"n", 3}}, report::capacity(r),
                                              report::census_bounds(r.tuple_census));
    const std::string once = doc.dump(2);
    const std::string twice = report::Json::parse(once).dump(2);
    CHECK(once == twice);
  }
  const report::Json m = report::matrix_census(count_valid_matrices(3, 3, 2));
  CHECK(report::Json::parse(m.dump()).dump() == m.dump());
}

TEST_CASE("csv emits one row per quantity") {
  const report::Json doc = report::document("census pairs", {{"q", 2}, {"t", 2}, {"n", 1}},
                                            {{"exact", "14"}}, report::census_bounds(pair_bounds(2, 2)));
  const std::string csv = report::to_csv(doc);
  CHECK(csv.rfind("q,t,n,quantity,value\n", 0) == 0);
  CHECK(csv.find("2,2,1,result.exact,14\n") != std::string::npos);
  CHECK(csv.find("2,2,1,bounds.upper,16\n") != std::string::npos);
  CHECK(csv.find("2,2,1,bounds.lowers.2,") != std::string::npos);
  CHECK(report::parse_format("csv") == report::Format::csv);
  CHECK_THROWS_AS(report::parse_format("xml"), std::invalid_argument);
}

TEST_CASE("big integers serialise as decimal strings") {
  const BigCount huge = fib_q(2, 400);
  const report::Json j = report::big(huge);
  REQUIRE(j.is_string());
  CHECK(BigCount(j.get<std::string>()) == huge);
  CHECK(report::rational(Rational(6, 4)).get<std::string>() == "3/2");
}
