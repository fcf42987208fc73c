#pragma once

// Instance files: `key = value` lines followed by [matrix.1]..[matrix.3]
// sections of four rows of comma-separated cyclotomic literals in z = zeta_N.
//
//   conductor = 4
//   order = 4
//   swap = true
//   weights = 0, 2, 0, 0
//   exponents = 0, 1, 2
//
//   [matrix.1]
//   1, 0, z, 0
//   ...
//
// `#` starts a comment. second_weights is required exactly when swap is
// false; exponents is optional.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fano212/action.hpp"

namespace fano212 {

struct Instance {
  ModelTriple model;
  SwapActionSpec spec;
  std::optional<std::array<int, 3>> exponents;
};

// Throws Error with kSyntax, kSemantic, kWrongShape or the action-validation
// codes; messages start with "line L" (and ", column C" for syntax errors).
Instance parse_instance(std::string_view text);

// Canonical form; parse_instance(serialize_instance(x)) serializes identically.
std::string serialize_instance(const Instance& instance);

}  // namespace fano212
