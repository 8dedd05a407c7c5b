#pragma once

// Alphabetization formula for the linking number of Lorenz knots:
//   link = (C(s1) + C(s2) - C(s3)) / 4
// where s1, s2 alphabetize the shift lists of each word, s3 alphabetizes
// their concatenation, and C is the crossing count sum |s(i) - i|.
// Words are ordered lexicographically with L < R and a proper prefix first.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "modknot/error.hpp"
#include "modknot/words.hpp"

namespace modknot {

using Rational = boost::rational<std::int64_t>;

/// images[i] is the 1-based alphabetical rank of the (i+1)-th listed word.
struct Permutation {
  std::vector<std::int64_t> images;

  std::size_t size() const noexcept { return images.size(); }
  friend bool operator==(const Permutation&, const Permutation&) = default;

  bool is_valid() const {
    std::vector<bool> hit(images.size() + 1, false);
    for (auto v : images) {
      if (v < 1 || v > static_cast<std::int64_t>(images.size()) || hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation out{std::vector<std::int64_t>(images.size())};
    for (std::size_t i = 0; i < images.size(); ++i)
      out.images[static_cast<std::size_t>(images[i] - 1)] = static_cast<std::int64_t>(i + 1);
    return out;
  }
};

/// w, s(w), s^2(w), ..., s^{m-1}(w)
inline std::vector<LorenzWord> shift_list(const LorenzWord& w) {
  std::vector<LorenzWord> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  return out;
}

inline Permutation alphabetize(const std::vector<LorenzWord>& words) {
  std::vector<std::size_t> order(words.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // 'L' < 'R' in ASCII and std::string puts a proper prefix first.
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return words[x].str() < words[y].str(); });
  Permutation out{std::vector<std::int64_t>(words.size())};
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && words[order[r]] == words[order[r - 1]])
      throw PreconditionError("duplicate word " + words[order[r]].str() + " in alphabetization list");
    out.images[order[r]] = static_cast<std::int64_t>(r + 1);
  }
  return out;
}

inline std::int64_t crossing_count(const Permutation& p) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < p.images.size(); ++i) total += std::llabs(p.images[i] - static_cast<std::int64_t>(i + 1));
  return total;
}

struct KennedyResult {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  Rational value;

  bool is_integer() const { return value.denominator() == 1; }
};

inline KennedyResult kennedy_evaluate(const LorenzWord& a, const LorenzWord& b) {
  if (cyclically_equivalent(a, b))
    throw PreconditionError("words " + a.str() + " and " + b.str() + " are cyclically equivalent; the joint shift list has duplicates");
  std::vector<LorenzWord> first = shift_list(a);
  std::vector<LorenzWord> second = shift_list(b);
  std::vector<LorenzWord> joint = first;
  joint.insert(joint.end(), second.begin(), second.end());
  KennedyResult out;
  out.c1 = crossing_count(alphabetize(first));
  out.c2 = crossing_count(alphabetize(second));
  out.c3 = crossing_count(alphabetize(joint));
  out.value = Rational(out.c1 + out.c2 - out.c3, 4);
  return out;
}

/// Exact value of (C(s1) + C(s2) - C(s3)) / 4; not always an integer.
inline Rational kennedy_link(const LorenzWord& a, const LorenzWord& b) { return kennedy_evaluate(a, b).value; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace modknot
