#pragma once

/**
 * @file linking.hpp
 * @brief Linking numbers of Lorenz/modular knots.
 *
 * Two independent routes:
 *  - rs_triples()/linking_number(): count places where L W' R sits in the
 *    sequence of A while R W' L sits at the same offsets in the sequence of B.
 *    Equivalently, ways the river of B joins the river of A from the right,
 *    flows alongside it, and crosses.
 *  - oracle_link(): place every strand of both knots on the branch line of
 *    the template at its exact binary position (L = 0, R = 1) under the
 *    doubling map, and count L-strands of A that a returning R-strand of B
 *    passes beneath.
 * Linking numbers are negative under the sign convention used here.
 */

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "modknot/bigint.hpp"
#include "modknot/error.hpp"
#include "modknot/words.hpp"

namespace modknot {

/// a_i = L, b_j = R, a_{i+k} = b_{j+k} for 1 <= k <= x, a_{i+x+1} = R, b_{j+x+1} = L.
/// x is the length of the shared inner word W'.
struct RsTriple {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t x = 0;

  friend bool operator==(const RsTriple&, const RsTriple&) = default;
  friend auto operator<=>(const RsTriple&, const RsTriple&) = default;
};

namespace detail {

inline void require_inequivalent(const LorenzWord& a, const LorenzWord& b) {
  if (cyclically_equivalent(a, b))
    throw PreconditionError("words " + a.str() + " and " + b.str() +
                            " are cyclically equivalent (conjugate matrices); the linking number is undefined");
}

}  // namespace detail

/// Triples in lexicographic (i, j) order. For equivalent words (self mode),
/// pairs whose forward itineraries never diverge are skipped.
inline std::vector<RsTriple> rs_triples(const LorenzWord& a, const LorenzWord& b) {
  const auto m = static_cast<std::int64_t>(a.size());
  const auto n = static_cast<std::int64_t>(b.size());
  const std::int64_t horizon = std::lcm(m, n);
  std::vector<RsTriple> out;
  for (std::int64_t i = 1; i <= m; ++i) {
    if (a.at(i) != Letter::L) continue;
    for (std::int64_t j = 1; j <= n; ++j) {
      if (b.at(j) != Letter::R) continue;
      for (std::int64_t k = 1; k <= horizon; ++k) {
        Letter x = a.at(i + k), y = b.at(j + k);
        if (x == y) continue;
        if (x == Letter::R) out.push_back(RsTriple{i, j, k - 1});
        break;
      }
    }
  }
  return out;
}

inline std::int64_t linking_number(const LorenzWord& a, const LorenzWord& b) {
  detail::require_inequivalent(a, b);
  return -static_cast<std::int64_t>(rs_triples(a, b).size());
}

/// Transverse self-intersections on the right-same side; defined for any word.
inline std::int64_t rs_self(const LorenzWord& w) { return static_cast<std::int64_t>(rs_triples(w, w).size()); }

namespace detail {

/// Numerators N_p with position_p = N_p / (2^m - 1), where position_p is the
/// binary fraction 0.w_p w_{p+1} ... (L = 0, R = 1), for p = 1..m.
inline std::vector<BigInt> branch_numerators(const LorenzWord& w) {
  const auto m = static_cast<std::int64_t>(w.size());
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t p = 1; p <= m; ++p) {
    BigInt v = 0;
    for (std::int64_t k = 0; k < m; ++k) v = 2 * v + (w.at(p + k) == Letter::R ? 1 : 0);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Counts (i, j) with a_i = L, b_j = R and y_{j+1} < x_{i+1}, where x, y are
/// exact branch-line positions of the strands of A and B. Each such pair is a
/// crossing of sign -1 (the left branch comes in on top).
inline std::int64_t oracle_link(const LorenzWord& a, const LorenzWord& b) {
  detail::require_inequivalent(a, b);
  const auto m = static_cast<std::int64_t>(a.size());
  const auto n = static_cast<std::int64_t>(b.size());
  const std::vector<BigInt> xs = detail::branch_numerators(a);
  const std::vector<BigInt> ys = detail::branch_numerators(b);
  const BigInt den_a = (BigInt(1) << m) - 1;
  const BigInt den_b = (BigInt(1) << n) - 1;
  auto next = [](std::int64_t idx, std::int64_t len) { return static_cast<std::size_t>(idx % len); };
  std::int64_t crossings = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    if (a.at(i) != Letter::L) continue;
    const BigInt& x = xs[next(i, m)];
    for (std::int64_t j = 1; j <= n; ++j) {
      if (b.at(j) != Letter::R) continue;
      const BigInt& y = ys[next(j, n)];
      // y / den_b < x / den_a
      if (y * den_a < x * den_b) ++crossings;
    }
  }
  return -crossings;
}

/// link(A + A^-1, B + B^-1): the four linking numbers between the knots and
/// their inverses. Its negation is the unsigned geodesic intersection number.
inline std::int64_t symmetrized_link(const LorenzWord& a, const LorenzWord& b) {
  const LorenzWord ia = inverse_word(a);
  const LorenzWord ib = inverse_word(b);
  if (cyclically_equivalent(a, b) || cyclically_equivalent(a, ib))
    throw PreconditionError("words " + a.str() + " and " + b.str() +
                            " are conjugate or inverse-conjugate; the symmetrized linking number is undefined");
  return linking_number(a, b) + linking_number(a, ib) + linking_number(ia, b) + linking_number(ia, ib);
}

/// When either word is reciprocal, link(A, B) is a quarter of the symmetrized link.
inline bool check_reciprocal_identity(const LorenzWord& a, const LorenzWord& b) {
  if (!is_reciprocal(a) && !is_reciprocal(b))
    throw PreconditionError("neither " + a.str() + " nor " + b.str() + " is reciprocal");
  return 4 * linking_number(a, b) == symmetrized_link(a, b);
}

}  // namespace modknot
