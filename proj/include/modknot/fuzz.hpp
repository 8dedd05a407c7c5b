#pragma once

// Exhaustive method comparison over all Lorenz word classes up to a length.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "modknot/kennedy.hpp"
#include "modknot/linking.hpp"
#include "modknot/words.hpp"

namespace modknot {

struct FuzzOptions {
  std::size_t max_len = 6;
  bool kennedy = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct PairOutcome {
  LorenzWord a;
  LorenzWord b;
  std::int64_t rs = 0;
  std::int64_t oracle = 0;
  std::int64_t rs_swapped = 0;
  std::optional<Rational> kennedy;
};

struct FuzzFailure {
  std::string a, b, reason;
};

struct KennedyDisagreement {
  std::string a, b;
  std::int64_t rs = 0;
  Rational kennedy;
};

struct FuzzSummary {
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::vector<FuzzFailure> failures;  // rs/oracle equality, symmetry, nonvanishing
  std::size_t kennedy_agree = 0;
  std::size_t kennedy_non_integer = 0;
  std::vector<KennedyDisagreement> kennedy_disagreements;

  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

inline PairOutcome evaluate_pair(const LorenzWord& a, const LorenzWord& b, bool with_kennedy) {
  PairOutcome o{a, b, 0, 0, 0, std::nullopt};
  o.rs = linking_number(a, b);
  o.oracle = oracle_link(a, b);
  o.rs_swapped = linking_number(b, a);
  if (with_kennedy) o.kennedy = kennedy_link(a, b);
  return o;
}

}  // namespace detail

/// Runs every ordered pair of distinct canonical words of length 2..max_len.
/// Pairs are split across threads; the summary lists results in pair order.
inline FuzzSummary run_fuzz(const FuzzOptions& opts) {
  const std::vector<LorenzWord> words = enumerate_canonical_words(2, opts.max_len);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < words.size(); ++x)
    for (std::size_t y = 0; y < words.size(); ++y)
      if (x != y) pairs.emplace_back(x, y);

  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(pairs.size(), 1)));
  std::vector<std::optional<PairOutcome>> outcomes(pairs.size());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t p = t; p < pairs.size(); p += threads)
        outcomes[p] = detail::evaluate_pair(words[pairs[p].first], words[pairs[p].second], opts.kennedy);
    }));
  }
  for (auto& j : jobs) j.get();

  FuzzSummary s;
  s.words = words.size();
  s.pairs = pairs.size();
  for (const auto& slot : outcomes) {
    const PairOutcome& o = *slot;
    auto fail = [&](std::string why) { s.failures.push_back({o.a.str(), o.b.str(), std::move(why)}); };
    if (o.rs != o.oracle) fail("rs " + std::to_string(o.rs) + " != oracle " + std::to_string(o.oracle));
    if (o.rs != o.rs_swapped) fail("asymmetric: " + std::to_string(o.rs) + " vs " + std::to_string(o.rs_swapped));
    if (o.rs > -1) fail("nonnegative linking number " + std::to_string(o.rs));
    if (o.kennedy) {
      if (o.kennedy->denominator() != 1) ++s.kennedy_non_integer;
      if (*o.kennedy == Rational(o.rs))
        ++s.kennedy_agree;
      else
        s.kennedy_disagreements.push_back({o.a.str(), o.b.str(), o.rs, *o.kennedy});
    }
  }
  return s;
}

}  // namespace modknot
