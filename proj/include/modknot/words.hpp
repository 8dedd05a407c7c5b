#pragma once

/**
 * @file words.hpp
 * @brief Lorenz words: finite aperiodic cyclic words over {L, R}.
 *
 * A LorenzWord is validated on construction, so every live value has length
 * at least 2 and minimal period equal to its length. Positions are 1-based
 * and wrap modulo the length, which realizes the doubly infinite periodic
 * sequence generated by the word without materializing it.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modknot/error.hpp"

namespace modknot {

enum class Letter : char { L = 'L', R = 'R' };

constexpr Letter swap_letter(Letter x) noexcept { return x == Letter::L ? Letter::R : Letter::L; }

namespace detail {

/// Smallest p such that s[i] == s[i + p] for all valid i (KMP failure function).
inline std::size_t minimal_period(std::string_view s) {
  const std::size_t m = s.size();
  if (m == 0) return 0;
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return m - fail[m - 1];
}

/// Start index of the lexicographically least rotation (two-pointer scan).
/// For aperiodic input the least rotation is unique.
inline std::size_t least_rotation(std::string_view s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    char x = s[(i + k) % n];
    char y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace detail

class LorenzWord {
 public:
  /// Validates `text`: letters in {L, R}, length >= 2, aperiodic.
  static LorenzWord parse(std::string_view text) {
    for (char ch : text) {
      if (ch != 'L' && ch != 'R')
        throw ParseError("invalid letter '" + std::string(1, ch) + "' in word '" + std::string(text) +
                         "' (expected only L and R)");
    }
    if (text.size() < 2) throw ParseError("word '" + std::string(text) + "' is shorter than 2 letters");
    std::size_t period = detail::minimal_period(text);
    if (text.size() % period == 0 && period < text.size())
      throw ParseError("word '" + std::string(text) + "' is periodic: a power of '" +
                       std::string(text.substr(0, period)) + "'");
    return LorenzWord(std::string(text));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& str() const noexcept { return letters_; }

  /// Letter at a 1-based position, wrapped modulo the length. Any integer works.
  Letter at(std::int64_t i) const noexcept {
    const auto m = static_cast<std::int64_t>(letters_.size());
    std::int64_t r = (i - 1) % m;
    if (r < 0) r += m;
    return static_cast<Letter>(letters_[static_cast<std::size_t>(r)]);
  }

  std::size_t count(Letter x) const noexcept {
    std::size_t n = 0;
    for (char ch : letters_) n += (ch == static_cast<char>(x));
    return n;
  }

  friend bool operator==(const LorenzWord&, const LorenzWord&) = default;
  friend auto operator<=>(const LorenzWord& a, const LorenzWord& b) { return a.letters_ <=> b.letters_; }

 private:
  explicit LorenzWord(std::string letters) : letters_(std::move(letters)) {}

  // Rotations and letter-swapped reversals of a valid word stay valid.
  friend LorenzWord rotate(const LorenzWord& w, std::size_t k);
  friend LorenzWord inverse_word(const LorenzWord& w);

  std::string letters_;
};

inline LorenzWord parse_word(std::string_view text) { return LorenzWord::parse(text); }

inline Letter letter_at(const LorenzWord& w, std::int64_t i) noexcept { return w.at(i); }

/// Rotation by k places to the left: rotate(w, 1) is the single shift.
inline LorenzWord rotate(const LorenzWord& w, std::size_t k) {
  const std::string& s = w.letters_;
  k %= s.size();
  return LorenzWord(s.substr(k) + s.substr(0, k));
}

/// Moves the first letter to the end.
inline LorenzWord single_shift(const LorenzWord& w) { return rotate(w, 1); }

/// Lexicographically least rotation, with L < R.
inline LorenzWord canonical(const LorenzWord& w) { return rotate(w, detail::least_rotation(w.str())); }

inline bool cyclically_equivalent(const LorenzWord& a, const LorenzWord& b) {
  return a.size() == b.size() && canonical(a) == canonical(b);
}

/// Reverse and swap L <-> R. Represents the conjugacy class of the inverse matrix.
inline LorenzWord inverse_word(const LorenzWord& w) {
  std::string out(w.letters_.rbegin(), w.letters_.rend());
  for (char& ch : out) ch = (ch == 'L') ? 'R' : 'L';
  return LorenzWord(std::move(out));
}

inline bool is_reciprocal(const LorenzWord& w) { return cyclically_equivalent(inverse_word(w), w); }

/// Number of single shifts taking `from` to `to`, or -1 when not equivalent.
inline std::int64_t shift_distance(const LorenzWord& from, const LorenzWord& to) {
  if (from.size() != to.size()) return -1;
  std::string doubled = from.str() + from.str();
  auto pos = doubled.find(to.str());
  return pos == std::string::npos ? -1 : static_cast<std::int64_t>(pos);
}

/// One representative (the least rotation) of every Lorenz word class with
/// length in [min_len, max_len], ordered by length, then lexicographically.
inline std::vector<LorenzWord> enumerate_canonical_words(std::size_t min_len, std::size_t max_len) {
  std::vector<LorenzWord> out;
  for (std::size_t m = std::max<std::size_t>(2, min_len); m <= max_len; ++m) {
    std::string s(m, 'L');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      for (std::size_t k = 0; k < m; ++k) s[k] = ((bits >> (m - 1 - k)) & 1U) ? 'R' : 'L';
      std::size_t period = detail::minimal_period(s);
      if (m % period == 0 && period < m) continue;
      if (detail::least_rotation(s) != 0) continue;
      out.push_back(LorenzWord::parse(s));
    }
  }
  return out;
}

}  // namespace modknot
