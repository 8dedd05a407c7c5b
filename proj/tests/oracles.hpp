#pragma once

// Brute-force reference computations used only by tests. Each one follows a
// definition literally and shares no code path with the library routine it
// checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline char at(const std::string& w, std::int64_t i) {
  auto m = static_cast<std::int64_t>(w.size());
  return w[static_cast<std::size_t>(((i - 1) % m + m) % m)];
}

inline bool is_lorenz(const std::string& w) {
  if (w.size() < 2) return false;
  if (w.find_first_not_of("LR") != std::string::npos) return false;
  for (std::size_t p = 1; p < w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < w.size() && repeats; ++i) repeats = w[i] == w[i - p];
    if (repeats) return false;
  }
  return true;
}

inline std::string min_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, w.substr(k) + w.substr(0, k));
  return best;
}

/// Every Lorenz word (not just class representatives) of length 2..max_len.
inline std::vector<std::string> all_lorenz_words(std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t m = 2; m <= max_len; ++m) {
    for (std::uint32_t bits = 0; bits < (1U << m); ++bits) {
      std::string w;
      for (std::size_t k = 0; k < m; ++k) w += ((bits >> k) & 1U) ? 'R' : 'L';
      if (is_lorenz(w)) out.push_back(w);
    }
  }
  return out;
}

inline std::vector<std::string> class_representatives(std::size_t max_len) {
  std::vector<std::string> out;
  for (const auto& w : all_lorenz_words(max_len))
    if (min_rotation(w) == w) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Number of triples (i, j, x): a_i = L, b_j = R, a_{i+k} = b_{j+k} for
/// 1 <= k <= x, a_{i+x+1} = R, b_{j+x+1} = L, with x < lcm(m, n).
inline std::int64_t rs_count(const std::string& a, const std::string& b) {
  auto m = static_cast<std::int64_t>(a.size());
  auto n = static_cast<std::int64_t>(b.size());
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = 1; j <= n; ++j)
      for (std::int64_t x = 0; x < std::lcm(m, n); ++x) {
        if (at(a, i) != 'L' || at(b, j) != 'R') continue;
        bool inner = true;
        for (std::int64_t k = 1; k <= x && inner; ++k) inner = at(a, i + k) == at(b, j + k);
        if (inner && at(a, i + x + 1) == 'R' && at(b, j + x + 1) == 'L') ++count;
      }
  return count;
}

inline std::string reverse_swap(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = c == 'L' ? 'R' : 'L';
  return out;
}

using Mat = std::array<std::int64_t, 4>;

inline Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline Mat word_product(const std::string& w) {
  Mat out{1, 0, 0, 1};
  for (char c : w) out = mul(out, c == 'L' ? Mat{1, 1, 0, 1} : Mat{1, 0, 1, 1});
  return out;
}

/// Value of q at (x, y).
inline std::int64_t eval(const std::array<std::int64_t, 3>& q, std::int64_t x, std::int64_t y) {
  return q[0] * x * x + q[1] * x * y + q[2] * y * y;
}

/// Does substituting M fix q? Checked on enough points to pin a binary quadratic form.
inline bool fixes(const Mat& mat, const std::array<std::int64_t, 3>& q) {
  const std::int64_t pts[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (auto& p : pts) {
    std::int64_t x = mat[0] * p[0] + mat[1] * p[1], y = mat[2] * p[0] + mat[3] * p[1];
    if (eval(q, x, y) != eval(q, p[0], p[1])) return false;
  }
  return true;
}

/// Leading continued-fraction terms of a real number, in long double.
inline std::vector<std::int64_t> float_cf(long double x, std::size_t terms) {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < terms; ++k) {
    long double f = std::floor(x);
    out.push_back(static_cast<std::int64_t>(f));
    x = 1.0L / (x - f);
  }
  return out;
}

/// Rank of each word among the list: 1 + number of strictly smaller words.
inline std::vector<std::int64_t> ranks(const std::vector<std::string>& ws) {
  std::vector<std::int64_t> out;
  for (const auto& w : ws) out.push_back(1 + std::count_if(ws.begin(), ws.end(), [&](const auto& v) { return v < w; }));
  return out;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::string w(len(rng), 'L');
    for (char& c : w) c = coin(rng) ? 'R' : 'L';
    if (is_lorenz(w)) return w;
  }
}

}  // namespace oracle
