#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the dynamic programs they check.

#include "subseq/bigcount.hpp"
#include "subseq/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using subseq::Letter;
using subseq::Strand;

inline Strand make(std::vector<Letter> letters, std::size_t q) { return Strand(std::move(letters), q); }

/// Every string in Sigma^len, lexicographic.
inline std::vector<Strand> all_strings(std::size_t q, std::size_t len) {
  std::vector<Strand> out;
  std::vector<Letter> cur(len, 0);
  while (true) {
    out.emplace_back(cur, q);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++cur[i] < q) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (len == 0) return out;
  }
}

/// Subsequence test by recursion on the last letters.
inline bool embeds(const std::vector<Letter>& x, std::size_t xi, const std::vector<Letter>& m, std::size_t mi) {
  if (xi == 0) return true;
  if (mi == 0) return false;
  if (x[xi - 1] == m[mi - 1] && embeds(x, xi - 1, m, mi - 1)) return true;
  return embeds(x, xi, m, mi - 1);
}

inline bool embeds(const Strand& x, const Strand& m) {
  std::vector<Letter> xs(x.letters().begin(), x.letters().end());
  std::vector<Letter> ms(m.letters().begin(), m.letters().end());
  return embeds(xs, xs.size(), ms, ms.size());
}

/// Distinct subsequences by recursive include/exclude expansion.
inline std::set<std::vector<Letter>> subsequence_set(const Strand& m) {
  std::set<std::vector<Letter>> out;
  std::vector<Letter> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      out.insert(cur);
      return;
    }
    rec(i + 1);
    cur.push_back(m[i]);
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

/// Least s such that x embeds into the first s letters of m (m long enough).
inline std::size_t tau_by_prefixes(const Strand& x, const Strand& m) {
  for (std::size_t s = 0; s <= m.size(); ++s)
    if (embeds(x, m.prefix(s))) return s;
  return SIZE_MAX;
}

inline subseq::BigCount naive_fib(std::size_t q, long t) {
  if (t < 0) return 0;
  if (t == 0) return 1;
  subseq::BigCount sum = 0;
  for (std::size_t i = 1; i <= q; ++i) sum += naive_fib(q, t - static_cast<long>(i));
  return sum;
}

/// Shortest common supersequence length by trying every string of
/// increasing length.
inline std::size_t scs_by_search(const std::vector<Strand>& strands, std::size_t q) {
  for (std::size_t len = 0;; ++len)
    for (const Strand& m : all_strings(q, len))
      if (std::all_of(strands.begin(), strands.end(), [&](const Strand& x) { return embeds(x, m); })) return len;
}

/// Binary strings of length t avoiding p consecutive zeros.
inline std::uint64_t zero_run_free(std::size_t t, std::size_t p) {
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
    std::size_t run = 0;
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      run = ((bits >> s) & 1U) ? 0 : run + 1;
      ok = run < p;
    }
    count += ok;
  }
  return count;
}

inline Strand random_strand(std::mt19937_64& rng, std::size_t q, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<unsigned> letter(0, static_cast<unsigned>(q - 1));
  std::vector<Letter> v(len_dist(rng));
  for (auto& l : v) l = static_cast<Letter>(letter(rng));
  return Strand(std::move(v), q);
}

}  // namespace oracle
