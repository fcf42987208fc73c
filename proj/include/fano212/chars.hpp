#pragma once

// Characters of <sigma> on Lie(J_C) and Lie(IJ_X): the closed formulas, two
// oracles that recompute them from the geometry, and the linearisability
// verdict.

#include <array>
#include <optional>
#include <string>

#include "fano212/action.hpp"

namespace fano212 {

// Three exponents k mod n, chi_k: sigma -> w^k, w = zeta_n. Kept sorted.
class CharacterMultiset {
 public:
  CharacterMultiset(int order, std::array<long, 3> exponents);

  int order() const { return order_; }
  const std::array<int, 3>& exponents() const { return exponents_; }
  // Every exponent shifted by k.
  CharacterMultiset shifted(long k) const;
  std::string to_string() const;

  friend bool operator==(const CharacterMultiset&, const CharacterMultiset&) = default;

 private:
  int order_;
  std::array<int, 3> exponents_{};
};

// { s_j + sum s - sum r }.
CharacterMultiset jac_curve_characters(const std::array<int, 3>& s, const std::array<int, 4>& r, int n);
// Same with sum r replaced by determinant_weight(spec), covering diagonal
// actions.
CharacterMultiset jac_curve_characters(const std::array<int, 3>& s, const SwapActionSpec& spec);

// jac_curve_characters tensored with the sign character w^{n/2}; n must be even.
CharacterMultiset ij_characters(const std::array<int, 3>& s, const std::array<int, 4>& r, int n);

// Throws kCharacterOrderMismatch for different orders.
bool characters_differ(const CharacterMultiset& a, const CharacterMultiset& b);

struct CurveOracle {
  CharacterMultiset characters;
  // Q(w^s1 x, w^s2 y, w^s3 z) = w^quartic_exponent Q
  int quartic_exponent = 0;
};

// Eigenvalues of sigma on du^dv/q, u du^dv/q, v du^dv/q, where q = Q(1, u, v),
// u = y/x, v = z/x, obtained by substituting into Q.
CurveOracle curve_action_oracle(const InvariantPencil& pencil, const SwapActionSpec& spec);
CurveOracle curve_action_oracle(const InvariantPencil& pencil, const std::array<int, 4>& r, int n);

// Eigenvalues on H^3(X, L_j) = H^6(O(-4,-4)) twisted by w^{sum s} and w^{s_j},
// with the top eigenvalue from the cup-product model.
CharacterMultiset ij_oracle(const InvariantPencil& pencil, const SwapActionSpec& spec);
// Without swap, r is used for both factors.
CharacterMultiset ij_oracle(const InvariantPencil& pencil, const std::array<int, 4>& r, int n, bool swap);

enum class Verdict { kLinearisable, kNotLinearisable };

const char* verdict_name(Verdict v);

Verdict verdict(const SwapActionSpec& spec);

struct VerdictReport {
  Verdict verdict = Verdict::kLinearisable;
  std::string explanation;
  // present for swap actions
  std::optional<CharacterMultiset> jac;
  std::optional<CharacterMultiset> ij;
  bool characters_differ = false;
};

VerdictReport verdict_report(const SwapActionSpec& spec, const std::array<int, 3>& s);

}  // namespace fano212
