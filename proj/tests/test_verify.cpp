#include "subseq/qbonacci.hpp"
#include "subseq/verify.hpp"

#include <doctest.h>

using namespace subseq;

TEST_CASE("small verification suite passes") {
  const VerifyReport r = verify_suite(VerifyScale::small);
  CHECK(r.outcomes.size() == 13);
  for (const auto& o : r.outcomes) {
    INFO(o.id << " " << o.name << ": " << o.detail);
    CHECK(o.passed);
  }
  CHECK(r.all_passed());
}

TEST_CASE("a tampered q-bonacci base case is caught") {
  VerifyHooks tampered;
  tampered.fib = [](std::size_t q, std::int64_t t) -> BigCount { return t == 0 ? BigCount(2) : fib_q(q, t); };
  const VerifyReport r = verify_suite(VerifyScale::small, {1, 2, 3, 4, 9}, tampered);
  REQUIRE(r.outcomes.size() == 5);
  CHECK_FALSE(r.all_passed());
  for (const auto& o : r.outcomes) {
    INFO(o.id << " " << o.detail);
    if (o.id == 9) {
      CHECK(o.passed);  // never reads F(0)
    } else {
      CHECK_FALSE(o.passed);
      CHECK_FALSE(o.name.empty());
      CHECK_FALSE(o.detail.empty());
    }
  }
}

TEST_CASE("criterion filter") {
  const VerifyReport r = verify_suite(VerifyScale::small, {8, 13});
  REQUIRE(r.outcomes.size() == 2);
  CHECK(r.outcomes[0].id == 8);
  CHECK(r.outcomes[1].id == 13);
}
