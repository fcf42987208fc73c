#pragma once

// Swap actions (r normalised to r0 = 0) and exponent triples for which the
// generator finds smooth models; found by exhausting all (r, s) for
// n = 2, 4, 6, 8. Every other triple for these r has an empty eigenspace or
// only singular or degenerate quartics.

#include <array>
#include <vector>

#include "fano212/action.hpp"

namespace fano212::testing {

struct SwapCase {
  int n;
  std::array<int, 4> r;
  std::array<int, 3> s;

  SwapActionSpec spec() const { return SwapActionSpec{n, r, true, {}}; }
};

inline const std::vector<SwapCase>& smooth_swap_cases() {
  static const std::vector<SwapCase> cases{
      {2, {0, 0, 0, 0}, {0, 0, 0}}, {2, {0, 0, 0, 0}, {0, 0, 1}},
      {4, {0, 0, 2, 2}, {0, 1, 2}}, {4, {0, 0, 2, 2}, {0, 1, 3}},
      {4, {0, 0, 2, 2}, {0, 2, 3}}, {4, {0, 0, 2, 2}, {1, 2, 3}},
      {6, {0, 0, 2, 4}, {0, 2, 3}}, {6, {0, 0, 2, 4}, {0, 2, 4}},
      {6, {0, 0, 2, 4}, {0, 3, 4}}, {6, {0, 2, 2, 4}, {0, 2, 4}},
      {6, {0, 2, 2, 4}, {0, 2, 5}}, {6, {0, 2, 2, 4}, {2, 4, 5}},
      {6, {0, 2, 4, 4}, {0, 1, 4}}, {6, {0, 2, 4, 4}, {0, 2, 4}},
      {6, {0, 2, 4, 4}, {1, 2, 4}}, {8, {0, 2, 4, 6}, {0, 1, 4}},
      {8, {0, 2, 4, 6}, {0, 3, 4}}, {8, {0, 2, 4, 6}, {0, 4, 5}},
      {8, {0, 2, 4, 6}, {0, 4, 7}}, {8, {0, 2, 4, 6}, {1, 2, 6}},
      {8, {0, 2, 4, 6}, {2, 3, 6}}, {8, {0, 2, 4, 6}, {2, 5, 6}},
      {8, {0, 2, 4, 6}, {2, 6, 7}},
  };
  return cases;
}

// Diagonal actions (no swap) with exponent triples for which the generator
// finds smooth models.
struct DiagonalCase {
  SwapActionSpec spec;
  std::array<int, 3> s;
};

inline const std::vector<DiagonalCase>& diagonal_cases() {
  static const std::vector<DiagonalCase> cases{
      {{1, {0, 0, 0, 0}, false, {0, 0, 0, 0}}, {0, 0, 0}},
      {{2, {0, 1, 0, 1}, false, {0, 0, 1, 1}}, {0, 0, 1}},
      {{2, {0, 0, 1, 1}, false, {0, 0, 1, 1}}, {0, 1, 1}},
      {{3, {0, 1, 2, 0}, false, {0, 1, 2, 0}}, {0, 0, 2}},
      {{3, {0, 1, 1, 2}, false, {0, 1, 1, 2}}, {0, 1, 2}},
      {{3, {0, 0, 1, 2}, false, {0, 1, 2, 2}}, {0, 2, 2}},
      {{4, {0, 1, 2, 3}, false, {0, 1, 2, 3}}, {0, 1, 3}},
      {{4, {0, 1, 2, 3}, false, {0, 3, 2, 1}}, {1, 2, 3}},
  };
  return cases;
}

}  // namespace fano212::testing
