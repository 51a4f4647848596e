#pragma once

// Alphabets, strands and the subsequence relation underlying array-based
// synthesis: a master lineup M is read one letter per time step, and every
// strand decides at each step whether to accept that letter.

#include "subseq/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subseq {

using Letter = std::uint16_t;

/// Ordered list of q distinct symbol tokens. Order defines the cyclic lineup
/// and every tie-break downstream.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  /// "ACGT" -> {A,C,G,T}; "AA,AC,GT" -> {AA,AC,GT}.
  static Alphabet parse(std::string_view text);

  /// Canonical alphabet of size q: prefixes of ACGT for q <= 4, then
  /// lowercase letters up to 26, then s0,s1,... tokens.
  static Alphabet standard(std::size_t q);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter letter) const { return symbols_.at(letter); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Letter> find(std::string_view token) const;
  bool single_char() const noexcept;

  /// Comma-joined symbols (or concatenated if all are single characters).
  std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

/// A finite sequence of letter indices over an alphabet of size q.
class Strand {
 public:
  Strand() = default;
  Strand(std::vector<Letter> letters, std::size_t q);
  Strand(std::initializer_list<Letter> letters, std::size_t q)
      : Strand(std::vector<Letter>(letters), q) {}

  std::size_t q() const noexcept { return q_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Strand prefix(std::size_t length) const;
  Strand suffix_from(std::size_t start) const;
  void push_back(Letter letter);
  void pop_back() { letters_.pop_back(); }

  friend bool operator==(const Strand& a, const Strand& b) {
    return a.q_ == b.q_ && a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Strand& a, const Strand& b) {
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

 private:
  std::vector<Letter> letters_;
  std::size_t q_ = 1;
};

struct StrandHash {
  std::size_t operator()(const Strand& s) const noexcept;
};

/// Tokens joined directly when every symbol is a single character,
/// otherwise comma-separated.
std::string format_strand(const Strand& s, const Alphabet& alphabet);
/// Accepts both forms produced by format_strand. Empty text is the empty strand.
Strand parse_strand(std::string_view text, const Alphabet& alphabet);

enum class LineupMode { finite, cyclic };

/// A strand used as the machine schedule; cyclic mode repeats it forever.
class MasterLineup {
 public:
  static MasterLineup finite(Strand base);
  static MasterLineup cyclic(Strand base);

  const Strand& base() const noexcept { return base_; }
  LineupMode mode() const noexcept { return mode_; }
  std::size_t q() const noexcept { return base_.q(); }
  /// Letter at 0-based position; cyclic lineups wrap around.
  Letter at(std::size_t position) const;
  /// Number of letters, or nullopt when unbounded.
  std::optional<std::size_t> length() const;

 private:
  MasterLineup(Strand base, LineupMode mode) : base_(std::move(base)), mode_(mode) {}
  Strand base_;
  LineupMode mode_;
};

/// t x n acceptance table: entry (s, j) is true iff strand j accepts the
/// letter scheduled at step s.
struct Schedule {
  std::size_t time_steps = 0;
  std::size_t strand_count = 0;
  std::vector<bool> acceptance;  // row-major
  Strand lineup;

  bool accepts(std::size_t step, std::size_t strand) const {
    return acceptance[step * strand_count + strand];
  }
  /// Reads the lineup letters at the accepted rows of column `strand`.
  Strand column_strand(std::size_t strand) const;
};

bool is_subsequence(const Strand& x, const Strand& master);
Strand cyclic_lineup(const Alphabet& alphabet, std::size_t t);
Strand cyclic_lineup(std::size_t q, std::size_t t);

/// Least s such that x embeds into the first s letters of `master`;
/// nullopt if x never embeds (finite lineups only). tau(empty) == 0.
std::optional<std::size_t> tau(const Strand& x, const MasterLineup& master);

/// True iff any p consecutive letters (and every shorter tail window) are
/// pairwise distinct. Requires p >= 1.
bool window_distinct(const Strand& master, std::size_t p);

/// Acceptance table built from the leftmost embedding of each strand.
/// Throws NotASubsequence naming the first offending strand.
Schedule schedule(const Strand& master, std::span<const Strand> strands);

void require_same_alphabet(const Strand& a, const Strand& b);

}  // namespace subseq
