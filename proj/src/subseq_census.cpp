#include "subseq/subseq_census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace subseq {

BigCount TauHistogram::total() const {
  BigCount sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

BigCount LengthHistogram::total() const {
  BigCount sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

BigCount distinct_subsequences(const Strand& master) {
  const std::size_t t = master.size();
  std::vector<BigCount> c(t + 1);
  c[0] = 1;
  // last[l] = 1-based position of the previous occurrence of l, 0 if none.
  std::vector<std::size_t> last(master.q(), 0);
  for (std::size_t s = 1; s <= t; ++s) {
    const Letter l = master[s - 1];
    c[s] = 2 * c[s - 1];
    if (last[l] != 0) c[s] -= c[last[l] - 1];
    last[l] = s;
  }
  return c[t];
}

BigCount distinct_subsequences_first_letter(const Strand& master) {
  const std::size_t t = master.size();
  const std::size_t q = master.q();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  // suffix[i] = |[M_{>i}]| for the 0-based tail starting at i.
  std::vector<BigCount> suffix(t + 1);
  suffix[t] = 1;
  std::vector<std::size_t> first(q, kNone);  // first occurrence at or after i
  for (std::size_t i = t; i-- > 0;) {
    first[master[i]] = i;
    BigCount total = 1;
    for (std::size_t u = 0; u < q; ++u)
      if (first[u] != kNone) total += suffix[first[u] + 1];
    suffix[i] = std::move(total);
  }
  return suffix[0];
}

TauHistogram tau_histogram(const Strand& master) {
  const std::size_t t = master.size();
  TauHistogram h;
  h.lineup = master;
  h.counts.resize(t + 1);
  h.counts[0] = 1;
  // prefix[k] = counts[0] + ... + counts[k]
  std::vector<BigCount> prefix(t + 1);
  prefix[0] = 1;
  std::vector<std::size_t> last(master.q(), 0);
  for (std::size_t s = 1; s <= t; ++s) {
    const Letter l = master[s - 1];
    const std::size_t r = last[l];  // deletion lands on steps r .. s-1
    h.counts[s] = prefix[s - 1];
    if (r != 0) h.counts[s] -= prefix[r - 1];
    prefix[s] = prefix[s - 1] + h.counts[s];
    last[l] = s;
  }
  return h;
}

LengthHistogram length_histogram(const Strand& master) {
  const std::size_t t = master.size();
  // rows[i][len] counts distinct subsequences of the first i letters.
  std::vector<std::vector<BigCount>> rows(t + 1, std::vector<BigCount>(t + 1));
  rows[0][0] = 1;
  std::vector<std::size_t> last(master.q(), 0);
  for (std::size_t i = 1; i <= t; ++i) {
    const Letter l = master[i - 1];
    const std::size_t r = last[l];
    rows[i][0] = 1;
    for (std::size_t len = 1; len <= i; ++len) {
      rows[i][len] = rows[i - 1][len] + rows[i - 1][len - 1];
      if (r != 0) rows[i][len] -= rows[r - 1][len - 1];
    }
    last[l] = i;
  }
  return LengthHistogram{std::move(rows[t])};
}

std::vector<Strand> enumerate_subsequences(const Strand& master, std::size_t cap) {
  if (master.size() > cap || master.size() >= 63)
    throw BudgetExceeded("enumerate_subsequences", std::exp2(static_cast<double>(master.size())),
                         std::exp2(static_cast<double>(cap)));
  const std::uint64_t total = std::uint64_t{1} << master.size();
  std::unordered_set<Strand, StrandHash> seen;
  seen.reserve(static_cast<std::size_t>(total));
  std::vector<Letter> buffer;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    buffer.clear();
    for (std::size_t s = 0; s < master.size(); ++s)
      if ((mask >> s) & 1U) buffer.push_back(master[s]);
    seen.emplace(buffer, master.q());
  }
  std::vector<Strand> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t lineup_count(std::size_t q, std::size_t t) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / q)
      throw BudgetExceeded("lineup enumeration", std::pow(static_cast<double>(q), static_cast<double>(t)),
                           static_cast<double>(std::numeric_limits<std::uint64_t>::max()));
    count *= q;
  }
  return count;
}

Strand lineup_from_index(std::uint64_t index, std::size_t q, std::size_t t) {
  std::vector<Letter> letters(t);
  for (std::size_t s = t; s-- > 0;) {
    letters[s] = static_cast<Letter>(index % q);
    index /= q;
  }
  return Strand(std::move(letters), q);
}

MaximizerResult maximizer_search(const Alphabet& alphabet, std::size_t t, const Budget& budget) {
  const std::size_t q = alphabet.size();
  budget.check("maximizer_search",
               std::pow(static_cast<double>(q), static_cast<double>(t)) * static_cast<double>(t + 1));
  const std::uint64_t total = lineup_count(q, t);
  auto body = [q, t](std::uint64_t begin, std::uint64_t end) {
    MaximizerResult r;
    r.max = -1;
    for (std::uint64_t i = begin; i < end; ++i) {
      Strand m = lineup_from_index(i, q, t);
      BigCount c = distinct_subsequences(m);
      if (c > r.max) {
        r.max = std::move(c);
        r.maximizers.clear();
        r.maximizers.push_back(std::move(m));
      } else if (c == r.max) {
        r.maximizers.push_back(std::move(m));
      }
    }
    return r;
  };
  // Blocks are folded in index order, so maximizers stay lexicographic.
  auto combine = [](MaximizerResult a, MaximizerResult b) {
    if (b.max > a.max) return b;
    if (b.max == a.max)
      a.maximizers.insert(a.maximizers.end(), std::make_move_iterator(b.maximizers.begin()),
                          std::make_move_iterator(b.maximizers.end()));
    return a;
  };
  MaximizerResult init;
  init.max = -1;
  return parallel_reduce(total, init, body, combine);
}

}  // namespace subseq
