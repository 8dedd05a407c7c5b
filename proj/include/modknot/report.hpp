#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modknot/error.hpp"
#include "modknot/kennedy.hpp"
#include "modknot/linking.hpp"
#include "modknot/words.hpp"

namespace modknot {

struct MethodSet {
  bool rs = true;
  bool oracle = true;
  bool kennedy = true;

  static MethodSet all() { return {}; }
  static MethodSet only_rs() { return {true, false, false}; }
  static MethodSet only_oracle() { return {false, true, false}; }
  static MethodSet only_kennedy() { return {false, false, true}; }
};

/// Everything computed about one pair of words. Methods that were not run
/// leave their fields empty.
struct LinkReport {
  LorenzWord word_a;
  LorenzWord word_b;
  std::vector<RsTriple> triples;
  std::optional<std::int64_t> rs_link;
  std::optional<std::int64_t> oracle_link;
  std::optional<KennedyResult> kennedy;
  std::optional<std::int64_t> symmetrized;  // empty when A ~ B^-1

  std::optional<bool> rs_oracle_agree() const {
    if (!rs_link || !oracle_link) return std::nullopt;
    return *rs_link == *oracle_link;
  }

  /// Kennedy against whichever of rs/oracle is present.
  std::optional<bool> kennedy_agree() const {
    if (!kennedy) return std::nullopt;
    std::optional<std::int64_t> ref = rs_link ? rs_link : oracle_link;
    if (!ref) return std::nullopt;
    return kennedy->value == Rational(*ref);
  }
};

inline LinkReport build_report(const LorenzWord& a, const LorenzWord& b, MethodSet methods) {
  detail::require_inequivalent(a, b);
  LinkReport r{a, b, {}, {}, {}, {}, {}};
  if (methods.rs) {
    r.triples = rs_triples(a, b);
    r.rs_link = -static_cast<std::int64_t>(r.triples.size());
    if (!cyclically_equivalent(a, inverse_word(b))) r.symmetrized = symmetrized_link(a, b);
  }
  if (methods.oracle) r.oracle_link = oracle_link(a, b);
  if (methods.kennedy) r.kennedy = kennedy_evaluate(a, b);
  return r;
}

/// All three methods. Disagreement between rs and oracle is a bug and
/// throws; Kennedy disagreement is only recorded.
inline LinkReport compare_methods(const LorenzWord& a, const LorenzWord& b) {
  LinkReport r = build_report(a, b, MethodSet::all());
  if (!*r.rs_oracle_agree())
    throw InternalError("rs count " + std::to_string(*r.rs_link) + " and branch-line oracle " +
                        std::to_string(*r.oracle_link) + " disagree on (" + a.str() + ", " + b.str() + ")");
  return r;
}

using Json = nlohmann::ordered_json;

inline Json to_json(const KennedyResult& k) {
  Json j;
  j["c1"] = k.c1;
  j["c2"] = k.c2;
  j["c3"] = k.c3;
  j["value_num"] = k.value.numerator();
  j["value_den"] = k.value.denominator();
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const LinkReport& r) {
  Json j;
  j["word_a"] = r.word_a.str();
  j["word_b"] = r.word_b.str();
  j["canonical_a"] = canonical(r.word_a).str();
  j["canonical_b"] = canonical(r.word_b).str();
  if (r.rs_link) {
    Json triples = Json::array();
    for (const auto& t : r.triples) triples.push_back(Json{{"i", t.i}, {"j", t.j}, {"x", t.x}});
    j["triples"] = std::move(triples);
  } else {
    j["triples"] = nullptr;
  }
  j["rs_link"] = optional_json(r.rs_link);
  j["oracle_link"] = optional_json(r.oracle_link);
  j["kennedy"] = r.kennedy ? to_json(*r.kennedy) : Json(nullptr);
  j["symmetrized"] = optional_json(r.symmetrized);
  j["agreement"] = Json{{"rs_oracle", optional_json(r.rs_oracle_agree())}, {"kennedy", optional_json(r.kennedy_agree())}};
  return j;
}

}  // namespace modknot
