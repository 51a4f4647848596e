#include "subseq/greedy_recovery.hpp"

#include "subseq/qbonacci.hpp"
#include "subseq/subseq_census.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace subseq {

SelectionMatrix::SelectionMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, false) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("selection matrix dimensions must be positive");
}

SelectionMatrix SelectionMatrix::from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
  if (rows * cols > 64) throw std::invalid_argument("from_bits supports at most 64 entries");
  SelectionMatrix y(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) y.bits_[k] = ((bits >> k) & 1U) != 0;
  return y;
}

bool rows_majority(const SelectionMatrix& y) {
  for (std::size_t s = 0; s < y.rows(); ++s) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < y.cols(); ++j) ones += y.at(s, j) ? 1 : 0;
    if (2 * ones <= y.cols()) return false;
  }
  return true;
}

bool columns_avoid_zero_run(const SelectionMatrix& y, std::size_t p) {
  if (p == 0) throw std::invalid_argument("zero-run length must be at least 1");
  for (std::size_t j = 0; j < y.cols(); ++j) {
    std::size_t run = 0;
    for (std::size_t s = 0; s < y.rows(); ++s) {
      run = y.at(s, j) ? 0 : run + 1;
      if (run >= p) return false;
    }
  }
  return true;
}

bool matrix_valid(const SelectionMatrix& y, std::size_t p) {
  if (y.cols() % 2 == 0) throw std::invalid_argument("row-majority criterion requires an odd number of strands");
  return rows_majority(y) && columns_avoid_zero_run(y, p);
}

std::vector<Strand> strands_from_matrix(const Strand& master, const SelectionMatrix& y) {
  if (y.rows() != master.size())
    throw std::invalid_argument("selection matrix has " + std::to_string(y.rows()) +
                                " rows but the lineup has " + std::to_string(master.size()) + " letters");
  std::vector<Strand> out(y.cols(), Strand(std::vector<Letter>{}, master.q()));
  for (std::size_t s = 0; s < y.rows(); ++s)
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (y.at(s, j)) out[j].push_back(master[s]);
  return out;
}

std::vector<GreedyStep> greedy_trace(std::span<const Strand> strands, const Alphabet& alphabet) {
  const std::size_t q = alphabet.size();
  for (const auto& x : strands)
    if (x.q() != q) throw AlphabetMismatch("strand is not drawn from the given alphabet");
  std::vector<std::size_t> pos(strands.size(), 0);
  std::vector<std::size_t> votes(q);
  std::vector<GreedyStep> steps;
  while (true) {
    std::fill(votes.begin(), votes.end(), 0);
    std::size_t live = 0;
    for (std::size_t j = 0; j < strands.size(); ++j) {
      if (pos[j] < strands[j].size()) {
        ++votes[strands[j][pos[j]]];
        ++live;
      }
    }
    if (live == 0) break;
    Letter best = 0;
    for (Letter a = 1; a < q; ++a)
      if (votes[a] > votes[best]) best = a;
    steps.push_back({best, votes[best], live});
    for (std::size_t j = 0; j < strands.size(); ++j)
      if (pos[j] < strands[j].size() && strands[j][pos[j]] == best) ++pos[j];
  }
  return steps;
}

Strand greedy_scs(std::span<const Strand> strands, const Alphabet& alphabet) {
  Strand out(std::vector<Letter>{}, alphabet.size());
  for (const auto& step : greedy_trace(strands, alphabet)) out.push_back(step.letter);
  return out;
}

std::size_t scs_length(std::span<const Strand> strands, double state_budget) {
  if (strands.empty()) return 0;
  const std::size_t q = strands.front().q();
  double states_estimate = 1;
  for (const auto& x : strands) {
    require_same_alphabet(x, strands.front());
    states_estimate *= static_cast<double>(x.size() + 1);
  }
  if (states_estimate > state_budget) throw BudgetExceeded("scs_length", states_estimate, state_budget);

  const std::size_t k = strands.size();
  std::vector<std::size_t> stride(k);
  std::size_t states = 1;
  for (std::size_t j = 0; j < k; ++j) {
    stride[j] = states;
    states *= strands[j].size() + 1;
  }
  const std::size_t goal = states - 1;
  if (goal == 0) return 0;

  std::vector<std::uint32_t> dist(states, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::size_t> queue;
  queue.reserve(states);
  queue.push_back(0);
  dist[0] = 0;
  std::vector<std::size_t> pos(k);
  std::vector<bool> offered(q);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t state = queue[head];
    std::size_t rest = state;
    for (std::size_t j = 0; j < k; ++j) {
      pos[j] = rest % (strands[j].size() + 1);
      rest /= strands[j].size() + 1;
    }
    std::fill(offered.begin(), offered.end(), false);
    for (std::size_t j = 0; j < k; ++j) {
      if (pos[j] == strands[j].size()) continue;
      const Letter a = strands[j][pos[j]];
      if (offered[a]) continue;
      offered[a] = true;
      // Emitting a advances every strand whose next letter is a.
      std::size_t next = state;
      for (std::size_t i = 0; i < k; ++i)
        if (pos[i] < strands[i].size() && strands[i][pos[i]] == a) next += stride[i];
      if (dist[next] != std::numeric_limits<std::uint32_t>::max()) continue;
      dist[next] = dist[state] + 1;
      if (next == goal) return dist[next];
      queue.push_back(next);
    }
  }
  return dist[goal];
}

namespace {

struct MatrixTally {
  std::uint64_t f = 0, g = 0, fg = 0;
};

bool column_avoids_run(std::uint64_t column, std::size_t t, std::size_t p) {
  std::size_t run = 0;
  for (std::size_t s = 0; s < t; ++s) {
    run = ((column >> s) & 1U) ? 0 : run + 1;
    if (run >= p) return false;
  }
  return true;
}

}  // namespace

MatrixCensus count_valid_matrices(std::size_t t, std::size_t n, std::size_t p, const Budget& budget) {
  if (t == 0 || n == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (n % 2 == 0) throw std::invalid_argument("row-majority criterion requires odd n");
  if (p == 0) throw std::invalid_argument("zero-run length must be at least 1");
  const std::size_t cells = t * n;
  const double cost = std::exp2(static_cast<double>(cells)) * static_cast<double>(cells);
  if (cells > 40) throw BudgetExceeded("count_valid_matrices", cost, std::exp2(40.0) * 40);
  budget.check("count_valid_matrices", cost);

  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  auto body = [=](std::uint64_t begin, std::uint64_t end) {
    MatrixTally tally;
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      bool g = true;
      for (std::size_t s = 0; s < t && g; ++s)
        g = 2 * static_cast<std::size_t>(std::popcount((bits >> (s * n)) & row_mask)) > n;
      bool f = true;
      for (std::size_t j = 0; j < n && f; ++j) {
        std::uint64_t column = 0;
        for (std::size_t s = 0; s < t; ++s) column |= ((bits >> (s * n + j)) & 1U) << s;
        f = column_avoids_run(column, t, p);
      }
      tally.f += f;
      tally.g += g;
      tally.fg += f && g;
    }
    return tally;
  };
  auto combine = [](MatrixTally a, const MatrixTally& b) {
    a.f += b.f;
    a.g += b.g;
    a.fg += b.fg;
    return a;
  };
  const MatrixTally tally = parallel_reduce(std::uint64_t{1} << cells, MatrixTally{}, body, combine);

  MatrixCensus c;
  c.t = t;
  c.n = n;
  c.p = p;
  const BigCount space = pow_big(2, cells);
  c.exact_valid = tally.fg;
  c.ef = Rational(BigCount(tally.f), space);
  c.eg = Rational(BigCount(tally.g), space);
  c.efg = Rational(BigCount(tally.fg), space);
  c.bound_lower = Rational(pow_big(fib_q(p, static_cast<std::int64_t>(t) + 1), n), pow_big(2, t));
  std::uint64_t columns = 0;
  for (std::uint64_t col = 0; col < (std::uint64_t{1} << t); ++col) columns += column_avoids_run(col, t, p);
  c.column_count = columns;
  return c;
}

std::vector<Strand> strands_up_to(std::size_t q, std::size_t t) {
  std::vector<Strand> out;
  for (std::size_t len = 0; len <= t; ++len) {
    const std::uint64_t count = lineup_count(q, len);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(lineup_from_index(i, q, len));
  }
  return out;
}

namespace {

double candidate_count(std::size_t q, std::size_t t) {
  const double qd = static_cast<double>(q);
  if (q == 1) return static_cast<double>(t + 1);
  return (std::pow(qd, static_cast<double>(t + 1)) - 1) / (qd - 1);
}

bool fits_in_lineup(const std::vector<const Strand*>& tuple, std::size_t t, std::vector<Strand>& scratch) {
  scratch.clear();
  for (const Strand* x : tuple) {
    if (x->size() > t) return false;
    scratch.push_back(*x);
  }
  return scs_length(scratch) <= t;
}

}  // namespace

BigCount count_masterless_tuples(const Alphabet& alphabet, std::size_t t, std::size_t n, const Budget& budget) {
  if (n == 0) throw std::invalid_argument("tuple size must be at least 1");
  const std::size_t q = alphabet.size();
  const double c = candidate_count(q, t);
  budget.check("count_masterless_tuples",
               std::pow(c, static_cast<double>(n)) * std::pow(static_cast<double>(t + 1), static_cast<double>(n)));
  const std::vector<Strand> candidates = strands_up_to(q, t);
  const std::uint64_t size = candidates.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= size;

  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    std::vector<const Strand*> tuple(n);
    std::vector<Strand> scratch;
    for (std::uint64_t index = begin; index < end; ++index) {
      std::uint64_t rest = index;
      for (std::size_t j = 0; j < n; ++j) {
        tuple[j] = &candidates[rest % size];
        rest /= size;
      }
      hits += fits_in_lineup(tuple, t, scratch);
    }
    return hits;
  };
  return parallel_reduce(total, std::uint64_t{0}, body, [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

BigCount count_masterless_sets(const Alphabet& alphabet, std::size_t t, std::size_t n, SetKind kind,
                               const Budget& budget) {
  if (n == 0) throw std::invalid_argument("set size must be at least 1");
  const std::size_t q = alphabet.size();
  const double c = candidate_count(q, t);
  budget.check("count_masterless_sets", std::pow(c, static_cast<double>(n)) / std::tgamma(static_cast<double>(n) + 1) *
                                            std::pow(static_cast<double>(t + 1), static_cast<double>(n)));
  const std::vector<Strand> candidates = strands_up_to(q, t);
  const std::size_t size = candidates.size();
  const bool distinct = kind == SetKind::distinct;

  // Blocks partition the smallest index; deeper slots are non-decreasing
  // (multisets) or strictly increasing (sets).
  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    std::vector<const Strand*> tuple(n);
    std::vector<Strand> scratch;
    auto extend = [&](auto& self, std::size_t depth, std::size_t from) -> void {
      if (depth == n) {
        hits += fits_in_lineup(tuple, t, scratch);
        return;
      }
      for (std::size_t i = from; i < size; ++i) {
        tuple[depth] = &candidates[i];
        self(self, depth + 1, distinct ? i + 1 : i);
      }
    };
    for (std::uint64_t first = begin; first < end; ++first) {
      tuple[0] = &candidates[first];
      extend(extend, 1, static_cast<std::size_t>(distinct ? first + 1 : first));
    }
    return hits;
  };
  return parallel_reduce(size, std::uint64_t{0}, body, [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

BigCount binomial_at_most(const BigCount& s, std::size_t n) {
  BigCount sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (BigCount(k) > s) break;
    sum += binomial(s, k);
  }
  return sum;
}

MasterlessBounds masterless_bounds(std::size_t q, std::size_t t, std::size_t n) {
  if (q < 2) throw std::invalid_argument("bounds require an alphabet of size q >= 2");
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("master-less bounds require odd n");
  MasterlessBounds b;
  b.params = {q, t, n};
  const BigCount two_t = pow_big(2, t);
  const BigCount n_fact = factorial(n);
  for (std::size_t p = 2; p <= q; ++p) {
    const BigCount numerator =
        pow_big(q + 1 - p, t) * pow_big(fib_q(p, static_cast<std::int64_t>(t) + 1), n);
    b.tuple_lowers[p] = Rational(numerator, two_t);
    b.set_lowers[p] = Rational(numerator, two_t * n_fact);
    b.set_lowers_floor[p] = floor_of(b.set_lowers[p]);
  }
  b.set_upper = pow_big(q, t) * binomial_at_most(partial_sum_fib(q, static_cast<std::int64_t>(t)), n);
  return b;
}

}  // namespace subseq
