#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "modknot/bigint.hpp"
#include "modknot/error.hpp"

namespace modknot {

/// An element of PSL(2,Z): a determinant-one integer matrix up to sign.
///
/// The stored representative has positive trace, or, when the trace is zero,
/// a positive first nonzero entry among (a, b, c).
class Psl2Matrix {
 public:
  Psl2Matrix() : a_(1), b_(0), c_(0), d_(1) {}

  /// Throws PreconditionError unless ad - bc = 1.
  Psl2Matrix(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
      throw PreconditionError("matrix " + str() + " has determinant " + to_string(a_ * d_ - b_ * c_) +
                              ", expected 1");
    normalize();
  }

  static Psl2Matrix identity() { return Psl2Matrix(); }
  static Psl2Matrix letter_l() { return Psl2Matrix(1, 1, 0, 1); }
  static Psl2Matrix letter_r() { return Psl2Matrix(1, 0, 1, 1); }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  BigInt trace() const { return a_ + d_; }

  friend Psl2Matrix operator*(const Psl2Matrix& x, const Psl2Matrix& y) {
    return Psl2Matrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                      x.c_ * y.b_ + x.d_ * y.d_);
  }

  friend bool operator==(const Psl2Matrix&, const Psl2Matrix&) = default;

  /// "a,b;c,d"
  std::string str() const { return to_string(a_) + "," + to_string(b_) + ";" + to_string(c_) + "," + to_string(d_); }

  friend std::ostream& operator<<(std::ostream& os, const Psl2Matrix& m) { return os << "[[" << m.a_ << "," << m.b_ << "],[" << m.c_ << "," << m.d_ << "]]"; }

 private:
  void normalize() {
    BigInt t = a_ + d_;
    bool flip = false;
    if (t != 0) {
      flip = t < 0;
    } else {
      const BigInt& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
      flip = lead < 0;
    }
    if (flip) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
  }

  BigInt a_, b_, c_, d_;
};

/// Parses "a,b;c,d" with optional whitespace around each entry.
inline Psl2Matrix parse_matrix(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("matrix '" + std::string(text) + "' must have the form a,b;c,d");
  auto split_row = [&](std::string_view row) {
    auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("matrix '" + std::string(text) + "' must have the form a,b;c,d");
    return std::pair{parse_bigint(row.substr(0, comma)), parse_bigint(row.substr(comma + 1))};
  };
  auto [a, b] = split_row(text.substr(0, semi));
  auto [c, d] = split_row(text.substr(semi + 1));
  return Psl2Matrix(a, b, c, d);
}

/// Adjugate [[d,-b],[-c,a]], which is the inverse for determinant one.
inline Psl2Matrix matrix_inverse(const Psl2Matrix& m) { return Psl2Matrix(m.d(), -m.b(), -m.c(), m.a()); }

inline bool is_hyperbolic(const Psl2Matrix& m) { return abs(m.trace()) > 2; }

inline Psl2Matrix power(const Psl2Matrix& m, unsigned k) {
  Psl2Matrix out;
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace modknot
