#pragma once

// Linking-number comparison for four non-reciprocal knots, against the
// published magnitudes.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modknot/linking.hpp"
#include "modknot/psl2.hpp"
#include "modknot/words.hpp"

namespace modknot {

struct NamedKnot {
  const char* name;
  const char* word;
  const char* matrix;  // "a,b;c,d"
};

inline constexpr std::array<NamedKnot, 4> kTable3Knots{{
    {"A", "LLR", "3,2;1,1"},
    {"B", "LLLLRLR", "14,9;3,2"},
    {"C", "LLRRLRR", "19,7;8,3"},
    {"D", "LLLLLLLLLRRR", "28,9;3,1"},
}};

struct Table3Row {
  std::string x, y;
  std::int64_t link = 0;             // link(X, Y)
  std::int64_t link_inverse = 0;     // link(X, Y^-1)
  std::int64_t symmetrized = 0;      // link(X + X^-1, Y + Y^-1)
  std::array<std::int64_t, 3> expected_magnitudes{};

  bool matches() const {
    return -link == expected_magnitudes[0] && -link_inverse == expected_magnitudes[1] &&
           -symmetrized == expected_magnitudes[2];
  }
  bool all_negative() const { return link < 0 && link_inverse < 0 && symmetrized < 0; }
};

inline std::vector<Table3Row> compute_table3() {
  struct Expected {
    int x, y;
    std::array<std::int64_t, 3> mags;
  };
  static constexpr std::array<Expected, 6> kRows{{
      {0, 1, {4, 2, 12}},
      {0, 2, {3, 4, 14}},
      {0, 3, {3, 3, 12}},
      {1, 2, {6, 8, 28}},
      {1, 3, {7, 5, 24}},
      {2, 3, {7, 7, 28}},
  }};
  std::vector<Table3Row> out;
  for (const auto& e : kRows) {
    const auto& kx = kTable3Knots[static_cast<std::size_t>(e.x)];
    const auto& ky = kTable3Knots[static_cast<std::size_t>(e.y)];
    LorenzWord wx = parse_word(kx.word), wy = parse_word(ky.word);
    out.push_back(Table3Row{kx.name, ky.name, linking_number(wx, wy), linking_number(wx, inverse_word(wy)),
                            symmetrized_link(wx, wy), e.mags});
  }
  return out;
}

}  // namespace modknot
