#include "subseq/sequences.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace subseq {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      tokens.emplace_back(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  return tokens;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must hold at least one symbol");
  if (symbols_.size() > 0xFFFF) throw std::invalid_argument("alphabet too large");
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("alphabet symbols must be nonempty");
    if (s.find(',') != std::string::npos)
      throw std::invalid_argument("alphabet symbols may not contain ','");
    if (!seen.insert(s).second)
      throw std::invalid_argument("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::parse(std::string_view text) { return Alphabet(split_tokens(text)); }

Alphabet Alphabet::standard(std::size_t q) {
  if (q == 0) throw std::invalid_argument("alphabet size must be at least 1");
  std::vector<std::string> symbols;
  symbols.reserve(q);
  static constexpr std::string_view kNucleotides = "ACGT";
  if (q <= kNucleotides.size()) {
    for (std::size_t i = 0; i < q; ++i) symbols.emplace_back(1, kNucleotides[i]);
  } else if (q <= 26) {
    for (std::size_t i = 0; i < q; ++i) symbols.emplace_back(1, static_cast<char>('a' + i));
  } else {
    for (std::size_t i = 0; i < q; ++i) symbols.push_back("s" + std::to_string(i));
  }
  return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), token);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Letter>(it - symbols_.begin());
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

std::string Alphabet::to_string() const {
  std::string out;
  const bool joined = single_char();
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0 && !joined) out += ',';
    out += symbols_[i];
  }
  return out;
}

Strand::Strand(std::vector<Letter> letters, std::size_t q) : letters_(std::move(letters)), q_(q) {
  if (q_ == 0) throw std::invalid_argument("strand alphabet size must be at least 1");
  for (Letter l : letters_)
    if (l >= q_) throw std::out_of_range("strand letter outside alphabet");
}

Strand Strand::prefix(std::size_t length) const {
  Strand out;
  out.q_ = q_;
  out.letters_.assign(letters_.begin(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(std::min(length, size())));
  return out;
}

Strand Strand::suffix_from(std::size_t start) const {
  Strand out;
  out.q_ = q_;
  if (start < size())
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start), letters_.end());
  return out;
}

void Strand::push_back(Letter letter) {
  if (letter >= q_) throw std::out_of_range("strand letter outside alphabet");
  letters_.push_back(letter);
}

std::size_t StrandHash::operator()(const Strand& s) const noexcept {
  // FNV-1a over the letters.
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : s.letters()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return h ^ (s.size() << 1);
}

std::string format_strand(const Strand& s, const Alphabet& alphabet) {
  if (s.q() != alphabet.size()) throw AlphabetMismatch("strand and alphabet sizes differ");
  std::string out;
  const bool joined = alphabet.single_char();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && !joined) out += ',';
    out += alphabet.symbol(s[i]);
  }
  return out;
}

Strand parse_strand(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  if (!text.empty()) {
    for (const auto& token : split_tokens(text)) {
      const auto letter = alphabet.find(token);
      if (!letter) throw AlphabetMismatch("symbol '" + token + "' is not in the alphabet");
      letters.push_back(*letter);
    }
  }
  return Strand(std::move(letters), alphabet.size());
}

MasterLineup MasterLineup::finite(Strand base) {
  return MasterLineup(std::move(base), LineupMode::finite);
}

MasterLineup MasterLineup::cyclic(Strand base) {
  if (base.empty()) throw std::invalid_argument("cyclic lineup requires a nonempty base");
  return MasterLineup(std::move(base), LineupMode::cyclic);
}

Letter MasterLineup::at(std::size_t position) const {
  if (mode_ == LineupMode::cyclic) return base_[position % base_.size()];
  return base_[position];
}

std::optional<std::size_t> MasterLineup::length() const {
  if (mode_ == LineupMode::cyclic) return std::nullopt;
  return base_.size();
}

Strand Schedule::column_strand(std::size_t strand) const {
  Strand out(std::vector<Letter>{}, lineup.q());
  for (std::size_t s = 0; s < time_steps; ++s)
    if (accepts(s, strand)) out.push_back(lineup[s]);
  return out;
}

void require_same_alphabet(const Strand& a, const Strand& b) {
  if (a.q() != b.q())
    throw AlphabetMismatch("strands are drawn from alphabets of different sizes (" +
                           std::to_string(a.q()) + " vs " + std::to_string(b.q()) + ")");
}

bool is_subsequence(const Strand& x, const Strand& master) {
  require_same_alphabet(x, master);
  std::size_t i = 0;
  for (std::size_t s = 0; s < master.size() && i < x.size(); ++s)
    if (master[s] == x[i]) ++i;
  return i == x.size();
}

Strand cyclic_lineup(std::size_t q, std::size_t t) {
  if (q == 0) throw std::invalid_argument("alphabet size must be at least 1");
  std::vector<Letter> letters(t);
  for (std::size_t s = 0; s < t; ++s) letters[s] = static_cast<Letter>(s % q);
  return Strand(std::move(letters), q);
}

Strand cyclic_lineup(const Alphabet& alphabet, std::size_t t) {
  return cyclic_lineup(alphabet.size(), t);
}

std::optional<std::size_t> tau(const Strand& x, const MasterLineup& master) {
  require_same_alphabet(x, master.base());
  if (x.empty()) return 0;
  const auto length = master.length();
  if (length && *length == 0) return std::nullopt;
  std::size_t i = 0;
  std::size_t s = 0;
  // A cyclic lineup contains every letter once per period, so the scan
  // terminates provided each letter of x occurs in the base.
  if (!length) {
    std::vector<bool> present(master.q(), false);
    for (Letter l : master.base().letters()) present[l] = true;
    for (Letter l : x.letters())
      if (!present[l]) return std::nullopt;
  }
  while (true) {
    if (length && s >= *length) return std::nullopt;
    if (master.at(s) == x[i]) {
      ++i;
      if (i == x.size()) return s + 1;
    }
    ++s;
  }
}

bool window_distinct(const Strand& master, std::size_t p) {
  if (p == 0) throw std::invalid_argument("window size must be at least 1");
  const std::size_t n = master.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d < p && i + d < n; ++d)
      if (master[i] == master[i + d]) return false;
  return true;
}

Schedule schedule(const Strand& master, std::span<const Strand> strands) {
  Schedule out;
  out.time_steps = master.size();
  out.strand_count = strands.size();
  out.acceptance.assign(out.time_steps * out.strand_count, false);
  out.lineup = master;
  for (std::size_t j = 0; j < strands.size(); ++j) {
    const Strand& x = strands[j];
    require_same_alphabet(x, master);
    std::size_t i = 0;
    for (std::size_t s = 0; s < master.size() && i < x.size(); ++s) {
      if (master[s] == x[i]) {
        out.acceptance[s * out.strand_count + j] = true;
        ++i;
      }
    }
    if (i != x.size()) throw NotASubsequence(j);
  }
  return out;
}

}  // namespace subseq
