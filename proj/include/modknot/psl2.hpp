#pragma once

#include <string>

#include "modknot/bigint.hpp"
#include "modknot/error.hpp"
#include "modknot/matrix.hpp"
#include "modknot/qform.hpp"
#include "modknot/words.hpp"

namespace modknot {

/// Product of L = [[1,1],[0,1]] and R = [[1,0],[1,1]] in word order.
inline Psl2Matrix mat_of_word(const LorenzWord& w) {
  Psl2Matrix out;
  for (char ch : w.str()) out = out * (ch == 'L' ? Psl2Matrix::letter_l() : Psl2Matrix::letter_r());
  return out;
}

/// q_A = [c, d-a, -b] / gcd(c, d-a, b). Its roots are the fixed points of A,
/// and q_A(Av) = q_A(v).
inline QuadForm form_of_matrix(const Psl2Matrix& m) {
  if (!is_hyperbolic(m)) throw PreconditionError("matrix " + m.str() + " is not hyperbolic");
  BigInt g = gcd(gcd(m.c(), m.d() - m.a()), m.b());
  return QuadForm{m.c() / g, (m.d() - m.a()) / g, -m.b() / g};
}

/// Conjugacy class of a hyperbolic matrix: A ~ mat(word)^power.
struct MatrixClass {
  LorenzWord word;  // canonical
  unsigned power = 1;

  bool primitive() const noexcept { return power == 1; }
  friend bool operator==(const MatrixClass&, const MatrixClass&) = default;
};

inline MatrixClass word_of_matrix(const Psl2Matrix& m) {
  if (!is_hyperbolic(m)) throw PreconditionError("matrix " + m.str() + " is not hyperbolic");
  LorenzWord w = canonical(river_word(form_of_matrix(m)));
  const Psl2Matrix base = mat_of_word(w);
  const BigInt target = abs(m.trace());
  Psl2Matrix acc = base;
  unsigned k = 1;
  while (acc.trace() < target) {
    acc = acc * base;
    ++k;
  }
  if (acc.trace() != target)
    throw InternalError("matrix " + m.str() + " has trace " + to_string(target) + ", which is not the trace of a power of mat(" +
                        w.str() + ")");
  return MatrixClass{std::move(w), k};
}

inline bool conjugate_in_psl(const Psl2Matrix& x, const Psl2Matrix& y) { return word_of_matrix(x) == word_of_matrix(y); }

}  // namespace modknot
