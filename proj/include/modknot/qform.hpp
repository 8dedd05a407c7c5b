#pragma once

/**
 * @file qform.hpp
 * @brief Indefinite binary quadratic forms and their rivers.
 *
 * A form [a, b, c] is q(x, y) = ax^2 + bxy + cy^2. Matrices act on the right
 * by substitution, (q . M)(v) = q(Mv), so q . (MN) = (q . M) . N.
 *
 * Two routes to the river word are provided:
 *  - river_word(): from the periodic continued fraction of the first root
 *    (-b + sqrt D) / 2a, using integer surd arithmetic only;
 *  - walk_river(): by stepping along river edges [a, b, c] with a > 0 > c,
 *    turning left ([a, b+2a, a+b+c]) when a+b+c < 0 and right
 *    ([a+b+c, b+2c, c]) when a+b+c > 0.
 * The two agree up to rotation; tests hold them against each other.
 */

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modknot/bigint.hpp"
#include "modknot/error.hpp"
#include "modknot/matrix.hpp"
#include "modknot/words.hpp"

namespace modknot {

struct QuadForm {
  BigInt a, b, c;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

  /// "a,b,c"
  std::string str() const { return to_string(a) + "," + to_string(b) + "," + to_string(c); }
  friend std::ostream& operator<<(std::ostream& os, const QuadForm& q) {
    return os << "[" << q.a << "," << q.b << "," << q.c << "]";
  }
};

inline BigInt discriminant(const QuadForm& q) { return q.b * q.b - 4 * q.a * q.c; }

inline bool is_primitive(const QuadForm& q) { return gcd(gcd(q.a, q.b), q.c) == 1; }

/// Parses "a,b,c" with optional whitespace around each entry.
inline QuadForm parse_form(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw ParseError("form '" + std::string(text) + "' must have the form a,b,c");
  return QuadForm{parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2])};
}

/// q(alpha x + beta y, gamma x + delta y) for M = [[alpha, beta], [gamma, delta]].
inline QuadForm apply_matrix(const QuadForm& q, const Psl2Matrix& m) {
  const BigInt &al = m.a(), &be = m.b(), &ga = m.c(), &de = m.d();
  return QuadForm{
      q.a * al * al + q.b * al * ga + q.c * ga * ga,
      2 * q.a * al * be + q.b * (al * de + be * ga) + 2 * q.c * ga * de,
      q.a * be * be + q.b * be * de + q.c * de * de,
  };
}

namespace detail {

inline void require_indefinite_nonsquare(const QuadForm& q) {
  BigInt D = discriminant(q);
  if (D <= 0) throw PreconditionError("form " + q.str() + " is not indefinite (discriminant " + to_string(D) + ")");
  if (is_perfect_square(D))
    throw PreconditionError("form " + q.str() + " has square discriminant " + to_string(D));
}

inline void require_primitive(const QuadForm& q) {
  if (!is_primitive(q)) throw PreconditionError("form " + q.str() + " is not primitive");
}

}  // namespace detail

/// Continued fraction of a quadratic surd, split into preperiod and period.
///
/// The term at absolute index t (t = 0 is the integer part) has index
/// preperiod.size() + k for period[k]. The period is the minimal one,
/// doubled when its minimal length is odd, so it always has even length.
struct CfExpansion {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;
  /// Parity of the absolute index of period[0].
  int period_start_parity = 0;

  friend bool operator==(const CfExpansion&, const CfExpansion&) = default;

  /// "[0; (2,2,1,1)]"
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < preperiod.size(); ++i) out += (i ? "," : "") + to_string(preperiod[i]);
    out += "; (";
    for (std::size_t i = 0; i < period.size(); ++i) out += (i ? "," : "") + to_string(period[i]);
    return out + ")]";
  }
};

/// Continued fraction of (-b + sqrt D) / 2a.
inline CfExpansion cf_expand(const QuadForm& q) {
  detail::require_indefinite_nonsquare(q);
  if (q.a == 0) throw PreconditionError("form " + q.str() + " has a = 0");
  const BigInt D = discriminant(q);
  const BigInt root = isqrt(D);

  // Complete quotient (P + sqrt D) / Q with Q | D - P^2; starts valid since D - b^2 = -4ac.
  BigInt P = -q.b;
  BigInt Q = 2 * q.a;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> terms;
  for (;;) {
    auto [it, fresh] = seen.emplace(std::pair{P, Q}, terms.size());
    if (!fresh) {
      const std::size_t start = it->second;
      CfExpansion cf;
      cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
      cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
      if (cf.period.size() % 2 == 1) {
        std::vector<BigInt> twice = cf.period;
        twice.insert(twice.end(), cf.period.begin(), cf.period.end());
        cf.period = std::move(twice);
      }
      cf.period_start_parity = static_cast<int>(start % 2);
      return cf;
    }
    BigInt term = floor_surd(P, Q, root);
    terms.push_back(term);
    P = term * Q - P;
    Q = (D - P * P) / Q;
  }
}

/// River word read off the continued fraction: period term k contributes
/// period[k] copies of L if its absolute index is even, R if odd.
inline LorenzWord river_word(const QuadForm& q) {
  detail::require_indefinite_nonsquare(q);
  detail::require_primitive(q);
  CfExpansion cf = cf_expand(q);
  std::string letters;
  for (std::size_t k = 0; k < cf.period.size(); ++k) {
    char ch = ((static_cast<std::size_t>(cf.period_start_parity) + k) % 2 == 0) ? 'L' : 'R';
    letters.append(static_cast<std::size_t>(cf.period[k]), ch);
  }
  try {
    return LorenzWord::parse(letters);
  } catch (const ParseError& e) {
    throw InternalError("river word of " + q.str() + " is not a Lorenz word: " + e.what());
  }
}

inline bool is_river_form(const QuadForm& q) { return q.a > 0 && q.c < 0; }

/// One step along the river from a positive river form. Returns the next
/// form and the letter taken.
inline std::pair<QuadForm, Letter> river_step(const QuadForm& q) {
  BigInt s = q.a + q.b + q.c;  // q(1, 1); nonzero for nonsquare D
  if (s < 0) return {QuadForm{q.a, q.b + 2 * q.a, s}, Letter::L};
  return {QuadForm{s, q.b + 2 * q.c, q.c}, Letter::R};
}

/// Walks the river from a positive river form until it returns to the same
/// form, and returns the letters taken. The step map is a bijection on the
/// finitely many river forms of a given discriminant, so the walk is closed.
inline LorenzWord walk_river(const QuadForm& q) {
  if (!is_river_form(q)) throw PreconditionError("form " + q.str() + " is not a positive river form (a > 0 > c)");
  detail::require_indefinite_nonsquare(q);
  std::string letters;
  QuadForm cur = q;
  do {
    auto [next, letter] = river_step(cur);
    letters.push_back(static_cast<char>(letter));
    cur = std::move(next);
  } while (!(cur == q));
  try {
    return LorenzWord::parse(letters);
  } catch (const ParseError& e) {
    throw InternalError("river walk of " + q.str() + " is not a Lorenz word: " + e.what());
  }
}

/// Moves q onto a positive river form by translations x -> x + ty and the
/// swap S = [[0,-1],[1,0]]; returns (q . M, M).
///
/// Each translation moves the larger root into (0, 1). If the smaller root
/// is then negative, a and c have opposite signs and we are done. Otherwise
/// both roots lie in (0, 1) and the swap r -> -1/r widens the gap between
/// them; the gap is sqrt(D)/|a|, so |a| strictly decreases and the loop ends.
inline std::pair<QuadForm, Psl2Matrix> reduce_to_river_form(const QuadForm& q) {
  detail::require_indefinite_nonsquare(q);
  const BigInt root = isqrt(discriminant(q));
  const Psl2Matrix swap(0, -1, 1, 0);
  QuadForm cur = q;
  Psl2Matrix acc = Psl2Matrix::identity();
  while (cur.a * cur.c >= 0) {
    // a == 0 or c == 0 would make D a square, so here a*c > 0.
    BigInt t = cur.a > 0 ? floor_surd(-cur.b, 2 * cur.a, root) : floor_surd(cur.b, -2 * cur.a, root);
    Psl2Matrix shift(1, t, 0, 1);
    cur = apply_matrix(cur, shift);
    acc = acc * shift;
    if (cur.a * cur.c < 0) break;
    cur = apply_matrix(cur, swap);
    acc = acc * swap;
  }
  if (cur.a < 0) {
    cur = apply_matrix(cur, swap);
    acc = acc * swap;
  }
  return {cur, acc};
}

/// mat(W) for the river word W traced from q; generates the stabilizer of q.
inline Psl2Matrix automorph(const QuadForm& q) {
  detail::require_primitive(q);
  LorenzWord w = walk_river(q);
  Psl2Matrix out;
  for (char ch : w.str()) out = out * (ch == 'L' ? Psl2Matrix::letter_l() : Psl2Matrix::letter_r());
  return out;
}

}  // namespace modknot
