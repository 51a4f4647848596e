#include "subseq/verify.hpp"

#include "subseq/capacity.hpp"
#include "subseq/greedy_recovery.hpp"
#include "subseq/master_census.hpp"
#include "subseq/qbonacci.hpp"
#include "subseq/sequences.hpp"
#include "subseq/subseq_census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace subseq {

bool VerifyReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CriterionOutcome& o) { return o.passed; });
}

VerifyHooks default_hooks() {
  return VerifyHooks{[](std::size_t q, std::int64_t t) { return fib_q(q, t); }};
}

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  // Records the first few failures verbatim; later ones are only counted.
  template <class... Args>
  void fail(const Args&... args) {
    ok = false;
    if (failures++ < 3) {
      if (detail.tellp() > 0) detail << "; ";
      (detail << ... << args);
    }
  }
};

BigCount hooked_partial_sum(const VerifyHooks& hooks, std::size_t q, std::size_t t) {
  BigCount sum = 0;
  for (std::size_t s = 0; s <= t; ++s) sum += hooks.fib(q, static_cast<std::int64_t>(s));
  return sum;
}

using Body = void (*)(VerifyScale, const VerifyHooks&, Check&);

struct Criterion {
  int id;
  const char* name;
  double time_limit;
  Body body;
};

// 1
void cyclic_partial_sum(VerifyScale scale, const VerifyHooks& hooks, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 16 : 10;
  for (std::size_t q = 2; q <= 4; ++q)
    for (std::size_t t = 0; t <= t_max; ++t) {
      const BigCount got = distinct_subsequences(cyclic_lineup(q, t));
      const BigCount want = hooked_partial_sum(hooks, q, t);
      if (got != want) c.fail("q=", q, " t=", t, ": |[M]|=", got, " S_q(t)=", want);
    }
  if (c.ok) c.detail << "q in {2,3,4}, t <= " << t_max << ": |[cyclic]| == S_q(t)";
}

// 2
void cyclic_tau_histogram(VerifyScale scale, const VerifyHooks& hooks, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 16 : 10;
  for (std::size_t q = 2; q <= 4; ++q)
    for (std::size_t t = 0; t <= t_max; ++t) {
      const TauHistogram h = tau_histogram(cyclic_lineup(q, t));
      for (std::size_t s = 0; s <= t; ++s) {
        const BigCount want = hooks.fib(q, static_cast<std::int64_t>(s));
        if (h.counts[s] != want) c.fail("q=", q, " t=", t, " s=", s, ": hist=", h.counts[s], " F_q(s)=", want);
      }
    }
  if (c.ok) c.detail << "q in {2,3,4}, t <= " << t_max << ": tau histogram == F_q termwise";
}

// 3
void fibonacci_partial_sum_identity(VerifyScale scale, const VerifyHooks& hooks, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 1000 : 200;
  BigCount running = 0;
  for (std::size_t t = 0; t <= t_max; ++t) {
    running += hooks.fib(2, static_cast<std::int64_t>(t));
    const BigCount rhs = hooks.fib(2, static_cast<std::int64_t>(t) + 2) - 1;
    if (running != rhs) c.fail("t=", t, ": S_2(t) != F_2(t+2)-1");
  }
  if (partial_sum_fib(2, static_cast<std::int64_t>(t_max)) != running)
    c.fail("partial_sum_fib(2,", t_max, ") disagrees with the running sum");
  if (c.ok) c.detail << "t <= " << t_max << ": S_2(t) == F_2(t+2) - 1";
}

// 4
void maximizer_lemma(VerifyScale scale, const VerifyHooks& hooks, Check& c) {
  const bool full = scale == VerifyScale::full;
  const std::pair<std::size_t, std::size_t> grid[] = {{2, full ? 12u : 8u}, {3, full ? 8u : 5u}};
  std::size_t lineups = 0;
  for (const auto& [q, t_max] : grid) {
    const Alphabet alphabet = Alphabet::standard(q);
    for (std::size_t t = 0; t <= t_max; ++t) {
      const MaximizerResult r = maximizer_search(alphabet, t);
      lineups += static_cast<std::size_t>(std::pow(q, t));
      const BigCount want = hooked_partial_sum(hooks, q, t);
      if (r.max != want) c.fail("q=", q, " t=", t, ": max=", r.max, " S_q(t)=", want);
      const Strand cyc = cyclic_lineup(q, t);
      if (!std::binary_search(r.maximizers.begin(), r.maximizers.end(), cyc))
        c.fail("q=", q, " t=", t, ": cyclic lineup not among maximizers");
    }
  }
  if (c.ok) c.detail << lineups << " lineups searched; max == S_q(t), cyclic lineup in argmax";
}

// 5
void dp_versus_enumeration(VerifyScale scale, const VerifyHooks&, Check& c) {
  const std::size_t trials = scale == VerifyScale::full ? 1000 : 150;
  std::mt19937_64 rng(20240120);
  std::uniform_int_distribution<std::size_t> pick_q(1, 4);
  std::uniform_int_distribution<std::size_t> pick_len(0, 14);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t q = pick_q(rng);
    const std::size_t len = pick_len(rng);
    std::uniform_int_distribution<unsigned> pick_letter(0, static_cast<unsigned>(q - 1));
    std::vector<Letter> letters(len);
    for (auto& l : letters) l = static_cast<Letter>(pick_letter(rng));
    const Strand m(std::move(letters), q);

    const std::vector<Strand> all = enumerate_subsequences(m, 14);
    std::vector<BigCount> by_tau(len + 1), by_len(len + 1);
    const MasterLineup lineup = MasterLineup::finite(m);
    for (const Strand& x : all) {
      by_tau[*tau(x, lineup)] += 1;
      by_len[x.size()] += 1;
    }
    if (distinct_subsequences(m) != all.size()) c.fail("trial ", trial, ": distinct count mismatch");
    if (tau_histogram(m).counts != by_tau) c.fail("trial ", trial, ": tau histogram mismatch");
    if (length_histogram(m).counts != by_len) c.fail("trial ", trial, ": length histogram mismatch");
  }
  if (c.ok) c.detail << trials << " random lineups (|M| <= 14, q <= 4) match the enumeration oracle";
}

// 6
void pair_bracket(VerifyScale scale, const VerifyHooks&, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 8 : 6;
  for (std::size_t q = 2; q <= 3; ++q)
    for (std::size_t t = 0; t <= t_max; ++t) {
      CensusResult r = pair_bounds(q, t);
      r.exact = count_pairs_exact(Alphabet::standard(q), t);
      if (!r.bracketed()) c.fail("q=", q, " t=", t, ": exact ", *r.exact, " escapes its bounds");
    }
  const double lower3 = lower_growth_constant(3, 2);
  const double upper3 = upper_growth_constant(3);
  if (std::abs(lower3 - 3.24) > 0.01) c.fail("2*phi_2 = ", lower3, " is not within 0.01 of 3.24");
  if (std::abs(upper3 - 5.51) > 0.01) c.fail("3*phi_3 = ", upper3, " is not within 0.01 of 5.51");
  if (c.ok)
    c.detail << "q in {2,3}, t <= " << t_max << " bracketed; growth " << std::setprecision(6) << lower3 << " / "
             << upper3;
}

// 7
void tuple_bracket(VerifyScale scale, const VerifyHooks&, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 6 : 4;
  for (std::size_t q = 2; q <= 3; ++q)
    for (std::size_t t = 0; t <= t_max; ++t)
      for (std::size_t n = 1; n <= 3; ++n) {
        CensusResult r = tuple_bounds(q, t, n);
        r.exact = count_tuples_exact(Alphabet::standard(q), t, n);
        if (!r.bracketed()) c.fail("q=", q, " t=", t, " n=", n, ": exact ", *r.exact, " escapes its bounds");
      }
  if (c.ok) c.detail << "q in {2,3}, t <= " << t_max << ", n <= 3 bracketed";
}

// 8
void root_machinery(VerifyScale, const VerifyHooks&, Check& c) {
  const double phi3 = phi(3).value;
  if (std::abs(phi3 - 1.8393) > 0.0005) c.fail("phi(3) = ", phi3);
  for (std::size_t q = 1; q <= 32; ++q) {
    const double v = phi(q).value;
    const double lo = 2.0 * (1.0 - std::exp2(-static_cast<double>(q)));
    if (v < lo || v > 2.0) c.fail("phi(", q, ") = ", v, " outside its interval");
  }
  for (std::size_t q = 2; q <= 32; ++q) {
    const double diff = std::abs(phi_cfrac(q, 200).value - phi(q).value);
    if (diff > 1e-9) c.fail("cfrac(", q, ") off by ", diff);
  }
  for (std::size_t q = 2; q <= 16; ++q) {
    const double prod = z_root(q) * phi(q).value;
    if (std::abs(prod - 1.0) > 2e-9) c.fail("z_root(", q, ")*phi = ", prod);
  }
  for (std::size_t q : {2u, 3u, 4u, 8u}) {
    const double ratio = scaled_ratio(fib_q(q, 200), fib_q(q, 199));
    if (std::abs(ratio - phi(q).value) > 1e-9) c.fail("F_", q, "(200)/F_", q, "(199) = ", ratio);
  }
  if (c.ok) c.detail << "phi(3) = " << std::setprecision(10) << phi3 << "; intervals, cfrac, z_q, ratio checks hold";
}

// 9 and 10 share the matrix grid.
template <class Pred>
void matrix_grid(VerifyScale scale, Check& c, Pred pred) {
  const std::size_t t_max = scale == VerifyScale::full ? 5 : 4;
  for (std::size_t t = 1; t <= t_max; ++t)
    for (std::size_t n : {1u, 3u})
      for (std::size_t p : {2u, 3u}) pred(count_valid_matrices(t, n, p), c);
}

void matrix_theorem(VerifyScale scale, const VerifyHooks& hooks, Check& c) {
  matrix_grid(scale, c, [&](const MatrixCensus& m, Check& ck) {
    const Rational bound(pow_big(hooks.fib(m.p, static_cast<std::int64_t>(m.t) + 1), m.n), pow_big(2, m.t));
    if (Rational(m.exact_valid) < bound)
      ck.fail("t=", m.t, " n=", m.n, " p=", m.p, ": valid ", m.exact_valid, " < ", to_string(bound));
    if (m.eg != Rational(1, pow_big(2, m.t))) ck.fail("t=", m.t, " n=", m.n, ": E[g] = ", to_string(m.eg));
    if (m.column_count != hooks.fib(m.p, static_cast<std::int64_t>(m.t) + 1))
      ck.fail("t=", m.t, " p=", m.p, ": column count ", m.column_count, " != F_p(t+1)");
  });
  if (c.ok) c.detail << "valid matrices >= F_p(t+1)^n / 2^t and E[g] = 2^-t on the grid";
}

void fkg(VerifyScale scale, const VerifyHooks&, Check& c) {
  matrix_grid(scale, c, [](const MatrixCensus& m, Check& ck) {
    if (m.efg < m.ef * m.eg)
      ck.fail("t=", m.t, " n=", m.n, " p=", m.p, ": E[fg]=", to_string(m.efg), " < E[f]E[g]");
    if (m.efg * pow_big(2, m.t * m.n) != Rational(m.exact_valid)) ck.fail("t=", m.t, ": E[fg] inconsistent");
  });
  if (c.ok) c.detail << "E[fg] >= E[f]E[g] as exact rationals on the grid";
}

// 11
void greedy_recovery_check(VerifyScale scale, const VerifyHooks&, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 5 : 4;
  const Alphabet alphabet = Alphabet::standard(3);
  std::size_t pairs = 0;
  for (std::size_t t = 1; t <= t_max; ++t) {
    std::vector<SelectionMatrix> valid;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (3 * t)); ++bits) {
      SelectionMatrix y = SelectionMatrix::from_bits(t, 3, bits);
      if (matrix_valid(y, 2)) valid.push_back(std::move(y));
    }
    for (std::uint64_t i = 0; i < lineup_count(3, t); ++i) {
      const Strand m = lineup_from_index(i, 3, t);
      if (!window_distinct(m, 2)) continue;
      for (const auto& y : valid) {
        ++pairs;
        const auto strands = strands_from_matrix(m, y);
        if (greedy_scs(strands, alphabet) != m) c.fail("t=", t, ": greedy failed to recover ", format_strand(m, alphabet));
      }
    }
  }
  if (c.ok) c.detail << pairs << " (lineup, matrix) pairs recovered exactly";
}

// 12
void masterless_brackets(VerifyScale scale, const VerifyHooks&, Check& c) {
  const std::size_t t_max = scale == VerifyScale::full ? 5 : 3;
  const Alphabet alphabet = Alphabet::standard(2);
  for (std::size_t t = 0; t <= t_max; ++t)
    for (std::size_t n : {1u, 3u}) {
      const MasterlessBounds b = masterless_bounds(2, t, n);
      const BigCount tuples = count_masterless_tuples(alphabet, t, n);
      const BigCount sets = count_masterless_sets(alphabet, t, n);
      const Rational set_lower = b.set_lowers.at(2);
      const Rational tuple_lower = b.tuple_lowers.at(2);
      if (set_lower > Rational(tuples)) c.fail("t=", t, " n=", n, ": lower ", to_string(set_lower), " > tuples ", tuples);
      if (tuple_lower > Rational(tuples))
        c.fail("t=", t, " n=", n, ": tuple lower ", to_string(tuple_lower), " > tuples ", tuples);
      if (sets > b.set_upper) c.fail("t=", t, " n=", n, ": sets ", sets, " > upper ", b.set_upper);
    }
  if (c.ok) c.detail << "q=2, t <= " << t_max << ", n in {1,3}: lower <= tuples, sets <= upper";
}

// 13
void binomial_length_formula(VerifyScale, const VerifyHooks&, Check& c) {
  for (std::size_t t = 0; t <= 12; ++t) {
    const LengthHistogram h = length_histogram(cyclic_lineup(2, t));
    for (std::size_t r = 0; r <= t; ++r) {
      BigCount formula = 0;
      for (std::size_t i = 0; i <= r; ++i) formula += binomial(t - r, i);
      if (h.counts[t - r] != formula)
        c.fail("t=", t, " r=", r, ": histogram ", h.counts[t - r], " vs formula ", formula);
    }
  }
  if (c.ok) c.detail << "t <= 12: length t-r count == sum_{i<=r} C(t-r, i), n read as lineup length";
}

const Criterion kCriteria[] = {
    {1, "cyclic lineup subsequence count equals q-bonacci partial sum", 1, cyclic_partial_sum},
    {2, "tau histogram of cyclic lineups equals q-bonacci numbers", 1, cyclic_tau_histogram},
    {3, "S_2(t) = F_2(t+2) - 1", 1, fibonacci_partial_sum_identity},
    {4, "cyclic lineups maximize the subsequence count", 30, maximizer_lemma},
    {5, "dynamic programs match the enumeration oracle", 60, dp_versus_enumeration},
    {6, "pair census bracketed by its bounds", 60, pair_bracket},
    {7, "tuple census bracketed by its bounds", 60, tuple_bracket},
    {8, "growth root machinery", 0, root_machinery},
    {9, "valid matrix count meets the F_p(t+1)^n / 2^t bound", 60, matrix_theorem},
    {10, "FKG correlation on selection matrices", 0, fkg},
    {11, "greedy algorithm recovers the lineup", 120, greedy_recovery_check},
    {12, "master-less tuple and set brackets", 120, masterless_brackets},
    {13, "binomial length formula on binary cyclic lineups", 0, binomial_length_formula},
};

}  // namespace

VerifyReport verify_suite(VerifyScale scale, const VerifyHooks& hooks) { return verify_suite(scale, {}, hooks); }

VerifyReport verify_suite(VerifyScale scale, const std::vector<int>& only, const VerifyHooks& hooks) {
  VerifyReport report;
  report.scale = scale;
  for (const Criterion& cr : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(scale, hooks, check);
    } catch (const std::exception& e) {
      check.fail("exception: ", e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CriterionOutcome o;
    o.id = cr.id;
    o.name = cr.name;
    o.seconds = seconds;
    o.time_limit = cr.time_limit;
    o.passed = check.ok;
    if (check.failures > 3) check.detail << "; " << check.failures - 3 << " more failures";
    if (cr.time_limit > 0 && seconds > cr.time_limit) {
      o.passed = false;
      check.detail << (check.detail.tellp() > 0 ? "; " : "") << "exceeded time limit " << cr.time_limit << " s";
    }
    o.detail = check.detail.str();
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace subseq
