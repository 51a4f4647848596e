#include "oracles.hpp"

#include "subseq/greedy_recovery.hpp"
#include "subseq/qbonacci.hpp"
#include "subseq/subseq_census.hpp"

#include <doctest.h>

#include <bit>
#include <set>

using namespace subseq;

namespace {

const Alphabet kAC = Alphabet::parse("AC");
Strand ac(const char* text) { return parse_strand(text, kAC); }

SelectionMatrix column(std::initializer_list<int> bits) {
  SelectionMatrix y(bits.size(), 1);
  std::size_t s = 0;
  for (int b : bits) y.set(s++, 0, b != 0);
  return y;
}

/// Master-less tuple oracle: a tuple qualifies iff some lineup in Sigma^t
/// contains every member.
template <class Visit>
void masterless_oracle(std::size_t q, std::size_t t, Visit visit) {
  std::vector<Strand> candidates;
  for (std::size_t len = 0; len <= t; ++len)
    for (const Strand& s : oracle::all_strings(q, len)) candidates.push_back(s);
  std::vector<std::vector<bool>> contains;  // per lineup, per candidate
  for (const Strand& m : oracle::all_strings(q, t)) {
    std::vector<bool> row(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) row[i] = oracle::embeds(candidates[i], m);
    contains.push_back(std::move(row));
  }
  visit(candidates, contains);
}

}  // namespace

TEST_CASE("greedy_scs examples") {
  const std::vector<Strand> three{ac("AC"), ac("AA"), ac("CA")};
  CHECK(greedy_scs(three, kAC) == ac("ACA"));
  CHECK(scs_length(three) == 3);
  CHECK(oracle::scs_by_search(three, 2) == 3);
  const std::vector<Strand> empty{ac("")};
  CHECK(greedy_scs(empty, kAC).empty());
  const std::vector<Strand> single{ac("A")};
  CHECK(greedy_scs(single, kAC) == ac("A"));
  const std::vector<Strand> mixed{ac("A"), parse_strand("G", Alphabet::parse("ACG"))};
  CHECK_THROWS_AS(greedy_scs(mixed, kAC), AlphabetMismatch);
}

TEST_CASE("greedy output is a common supersequence no shorter than the SCS") {
  std::mt19937_64 rng(3);
  const Alphabet abc = Alphabet::standard(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Strand> strands;
    const int n = 1 + trial % 4;
    for (int j = 0; j < n; ++j) strands.push_back(oracle::random_strand(rng, 3, 4));
    const Strand g = greedy_scs(strands, abc);
    for (const auto& x : strands) CHECK(is_subsequence(x, g));
    const std::size_t best = scs_length(strands);
    CHECK(g.size() >= best);
    if (trial < 120) CHECK(best == oracle::scs_by_search(strands, 3));
  }
}

TEST_CASE("scs_length") {
  const std::vector<Strand> two{ac("AC"), ac("CA")};
  CHECK(scs_length(two) == 3);
  const std::vector<Strand> one{ac("AC")};
  CHECK(scs_length(one) == 2);
  const std::vector<Strand> blanks{ac(""), ac("")};
  CHECK(scs_length(blanks) == 0);
  CHECK(scs_length(std::vector<Strand>{}) == 0);
  const std::vector<Strand> big(6, cyclic_lineup(2, 30));
  CHECK_THROWS_AS(scs_length(big), BudgetExceeded);
}

TEST_CASE("matrix criteria") {
  CHECK(matrix_valid(column({1}), 2));
  CHECK_FALSE(matrix_valid(column({0}), 2));
  CHECK_FALSE(matrix_valid(column({1, 0}), 2));
  CHECK_THROWS_AS(matrix_valid(SelectionMatrix(2, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(SelectionMatrix(0, 3), std::invalid_argument);

  SelectionMatrix y(4, 3);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t j = 0; j < 3; ++j) y.set(s, j, true);
  y.set(1, 0, false);
  y.set(2, 0, false);
  CHECK(rows_majority(y));
  CHECK_FALSE(columns_avoid_zero_run(y, 2));
  CHECK(columns_avoid_zero_run(y, 3));
  CHECK(matrix_valid(y, 3));
}

TEST_CASE("strands_from_matrix") {
  const auto x = strands_from_matrix(ac("ACA"), column({1, 0, 1}));
  REQUIRE(x.size() == 1);
  CHECK(x[0] == ac("AA"));
  SelectionMatrix ones(3, 2);
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t j = 0; j < 2; ++j) ones.set(s, j, true);
  CHECK(strands_from_matrix(ac("ACA"), ones) == std::vector<Strand>{ac("ACA"), ac("ACA")});
  CHECK(strands_from_matrix(ac("ACA"), SelectionMatrix(3, 1))[0].empty());
  CHECK_THROWS_AS(strands_from_matrix(ac("AC"), SelectionMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("count_valid_matrices") {
  const MatrixCensus c = count_valid_matrices(1, 1, 2);
  CHECK(c.exact_valid == 1);
  CHECK(c.bound_lower == 1);
  CHECK(fib_q(2, 2) == 2);

  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t n : {1u, 3u})
      for (std::size_t p : {2u, 3u}) {
        const MatrixCensus m = count_valid_matrices(t, n, p);
        CHECK(m.eg == Rational(1, pow_big(2, t)));
        CHECK(m.column_count == oracle::zero_run_free(t, p));
        CHECK(m.column_count == fib_q(p, static_cast<std::int64_t>(t) + 1));
        CHECK(m.efg * pow_big(2, t * n) == Rational(m.exact_valid));
        CHECK(m.efg >= m.ef * m.eg);
        CHECK(Rational(m.exact_valid) >= m.bound_lower);

        // Oracle: explicit matrices through matrix_valid.
        if (t * n <= 12) {
          std::uint64_t valid = 0;
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (t * n)); ++bits)
            valid += matrix_valid(SelectionMatrix::from_bits(t, n, bits), p);
          CHECK(m.exact_valid == valid);
        }
      }
  CHECK_THROWS_AS(count_valid_matrices(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_valid_matrices(10, 5, 2), BudgetExceeded);
}

TEST_CASE("greedy recovers window-distinct lineups from valid matrices") {
  const Alphabet abc = Alphabet::standard(3);
  for (std::size_t t = 1; t <= 4; ++t)
    for (const Strand& m : oracle::all_strings(3, t)) {
      if (!window_distinct(m, 2)) continue;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (3 * t)); ++bits) {
        const SelectionMatrix y = SelectionMatrix::from_bits(t, 3, bits);
        if (!matrix_valid(y, 2)) continue;
        const auto strands = strands_from_matrix(m, y);
        const auto trace = greedy_trace(strands, abc);
        REQUIRE(trace.size() == t);
        for (std::size_t s = 0; s < t; ++s) {
          // Live-strand vote equals the row sum of Y, a strict majority of n.
          std::size_t row = 0;
          for (std::size_t j = 0; j < 3; ++j) row += y.at(s, j);
          CHECK(trace[s].letter == m[s]);
          CHECK(trace[s].votes == row);
          CHECK(2 * trace[s].votes > 3);
        }
      }
    }
}

TEST_CASE("distinct valid columns give distinct strands") {
  for (std::size_t p = 2; p <= 3; ++p)
    for (std::size_t t = 1; t <= 5; ++t)
      for (const Strand& m : oracle::all_strings(3, t)) {
        if (!window_distinct(m, p)) continue;
        std::set<Strand> seen;
        std::size_t columns = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
          const SelectionMatrix y = SelectionMatrix::from_bits(t, 1, bits);
          if (!columns_avoid_zero_run(y, p)) continue;
          ++columns;
          seen.insert(strands_from_matrix(m, y)[0]);
        }
        CHECK(seen.size() == columns);
      }
}

TEST_CASE("count_masterless_tuples") {
  CHECK(count_masterless_tuples(kAC, 1, 2) == 7);
  for (std::size_t q = 1; q <= 3; ++q)
    for (std::size_t t = 0; t <= 4; ++t) {
      const BigCount all = q == 1 ? BigCount(t + 1) : (pow_big(q, t + 1) - 1) / (q - 1);
      CHECK(count_masterless_tuples(Alphabet::standard(q), t, 1) == all);
    }
  for (std::size_t t = 0; t <= 5; ++t)
    for (std::size_t n : {1u, 3u}) {
      const Rational lower(pow_big(fib_q(2, static_cast<std::int64_t>(t) + 1), n), pow_big(2, t));
      CHECK(Rational(count_masterless_tuples(kAC, t, n)) >= lower);
    }
}

TEST_CASE("master-less counts agree with the lineup-union oracle") {
  for (std::size_t q = 2; q <= 3; ++q)
    for (std::size_t t = 0; t <= (q == 2 ? 4u : 2u); ++t)
      masterless_oracle(q, t, [&](const std::vector<Strand>& cands, const std::vector<std::vector<bool>>& contains) {
        const std::size_t c = cands.size();
        auto qualifies = [&](std::initializer_list<std::size_t> idx) {
          for (const auto& row : contains)
            if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return row[i]; })) return true;
          return false;
        };
        std::uint64_t pairs = 0, sets2 = 0, multisets2 = 0, triples = 0, sets3 = 0;
        for (std::size_t i = 0; i < c; ++i)
          for (std::size_t j = 0; j < c; ++j) {
            const bool ok = qualifies({i, j});
            pairs += ok;
            if (i < j) sets2 += ok;
            if (i <= j) multisets2 += ok;
            for (std::size_t k = 0; k < c; ++k) {
              const bool ok3 = qualifies({i, j, k});
              triples += ok3;
              if (i < j && j < k) sets3 += ok3;
            }
          }
        const Alphabet a = Alphabet::standard(q);
        CHECK(count_masterless_tuples(a, t, 2) == pairs);
        CHECK(count_masterless_tuples(a, t, 3) == triples);
        CHECK(count_masterless_sets(a, t, 2) == sets2);
        CHECK(count_masterless_sets(a, t, 3) == sets3);
        CHECK(count_masterless_sets(a, t, 2, SetKind::multiset) == multisets2);
      });
}

TEST_CASE("count_masterless_sets") {
  CHECK(count_masterless_sets(kAC, 1, 2) == 2);
  for (std::size_t t = 0; t <= 4; ++t) {
    CHECK(count_masterless_sets(kAC, t, 1) == count_masterless_tuples(kAC, t, 1));
    for (std::size_t n : {1u, 3u}) {
      const MasterlessBounds b = masterless_bounds(2, t, n);
      CHECK(count_masterless_sets(kAC, t, n) <= b.set_upper);
    }
  }
}

TEST_CASE("masterless_bounds") {
  const MasterlessBounds b = masterless_bounds(2, 5, 3);
  CHECK(b.set_lowers.at(2) == Rational(2197, 192));
  CHECK(b.set_lowers_floor.at(2) == 11);
  CHECK(b.tuple_lowers.at(2) == Rational(2197, 32));
  for (std::size_t t = 0; t <= 6; ++t) {
    const MasterlessBounds one = masterless_bounds(3, t, 1);
    for (std::size_t p = 2; p <= 3; ++p) CHECK(one.set_lowers.at(p) == one.tuple_lowers.at(p));
  }
  // Past S_q(t) strands the binomial sum is the full power set.
  const BigCount s = partial_sum_fib(2, 2);
  const MasterlessBounds full = masterless_bounds(2, 2, 5);
  CHECK(full.set_upper == pow_big(2, 2) * pow_big(2, 4));
  CHECK(binomial_at_most(s, 4) == 16);
  CHECK(binomial_at_most(s, 9) == 16);
  CHECK_THROWS_AS(masterless_bounds(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(masterless_bounds(1, 3, 1), std::invalid_argument);
}

TEST_CASE("master-less enumeration is independent of the worker count") {
  setenv("SUBSEQ_WORKERS", "1", 1);
  const BigCount serial = count_masterless_sets(kAC, 4, 3);
  setenv("SUBSEQ_WORKERS", "3", 1);
  const BigCount parallel = count_masterless_sets(kAC, 4, 3);
  unsetenv("SUBSEQ_WORKERS");
  CHECK(serial == parallel);
}
