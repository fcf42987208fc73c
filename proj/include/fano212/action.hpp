#pragma once

// Cyclic actions on X in normal form, their action on the net of (1,1)-forms
// containing X, the G-Fano test and the Picard lattice ZH + ZE.

#include <array>
#include <cstdint>
#include <vector>

#include "fano212/model.hpp"

namespace fano212 {

// sigma of projective order n. With swap set, sigma(x, y) = (y, D x) for
// D = diag(w^r0, .., w^r3), w = zeta_n. Without swap, sigma(x, y) =
// (D x, D' y) with D' built from second_weights.
struct SwapActionSpec {
  int order = 2;
  std::array<int, 4> weights{};
  bool swap = true;
  std::array<int, 4> second_weights{};

  friend bool operator==(const SwapActionSpec&, const SwapActionSpec&) = default;
};

CMatrix weight_matrix(int order, const std::array<int, 4>& weights);

// Smallest m >= 1 with sigma^m = id on P^3 x P^3.
int projective_order(const SwapActionSpec& spec);

// Throws kInvalidOrder, kParityViolation or kOrderMismatch.
void validate_action(const SwapActionSpec& spec);

// sigma^* of the form x^T M y, as a matrix: D M^T (swap) or D M D' (no swap).
CMatrix act_on_form(const CMatrix& m, const SwapActionSpec& spec);

// The 16 x 16 matrix of act_on_form on row-major flattened matrices.
CMatrix form_action_matrix(const SwapActionSpec& spec);

// Exponent of w by which sigma scales det(x M_1 + y M_2 + z M_3) under the
// pencil action: sum r_i, or sum r_i + sum r'_i without swap.
int determinant_weight(const SwapActionSpec& spec);

// The 3 x 3 matrix S with act_on_form(M_i) = sum_k S(k, i) M_k; throws
// kPencilNotInvariant when the span is not preserved.
CMatrix action_on_forms(const ModelTriple& m, const SwapActionSpec& spec);

struct InvariantPencil {
  std::array<CMatrix, 3> matrices;
  // sigma acts on the j-th form by w^exponents[j]
  std::array<int, 3> exponents{};
};

// Diagonalises S; eigenvalues are found by testing every n-th root of unity
// against the characteristic polynomial.
InvariantPencil invariant_pencil(const ModelTriple& m, const SwapActionSpec& spec);

// Characteristic polynomial det(S - t I) in one variable.
MultiPoly characteristic_polynomial(const CMatrix& s);

// sigma^2 of a swap action, as a diagonal action of order n / 2.
SwapActionSpec square_action(const SwapActionSpec& spec);

// X is G-Fano for G = <sigma> exactly when sigma swaps H and H'.
bool is_gfano(const SwapActionSpec& spec);

struct DivisorClass {
  long a = 0;  // coefficient of H
  long b = 0;  // coefficient of E

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend DivisorClass operator+(DivisorClass x, DivisorClass y) { return {x.a + y.a, x.b + y.b}; }
  friend DivisorClass operator-(DivisorClass x, DivisorClass y) { return {x.a - y.a, x.b - y.b}; }
  friend DivisorClass operator*(long k, DivisorClass x) { return {k * x.a, k * x.b}; }
};

inline constexpr DivisorClass kHyperplane{1, 0};
inline constexpr DivisorClass kExceptional{0, 1};
inline constexpr DivisorClass kCanonical{-4, 1};

std::string to_string(const DivisorClass& c);

// Exchange of the two blowdown structures: H -> 3H - E, E -> 8H - 3E.
DivisorClass picard_involution(const DivisorClass& c);

// Generators of Pic^G(X): {4H - E} with swap, {H, E} without.
std::vector<DivisorClass> invariant_sublattice(bool swap);

struct GeneratorOptions {
  int max_attempts = 50;
  // Constrain the draw so that a small integer point of the quartic exists.
  bool plant_point = false;
};

// Basis of the w^exponent eigenspace of form_action_matrix.
std::vector<std::vector<Cyclotomic>> form_eigenspace(const SwapActionSpec& spec, int exponent);

// Draws M_j from the w^{s_j}-eigenspaces, deterministically in the seed,
// until the forms are independent and the quartic is smooth.
ModelTriple random_equivariant_model(const SwapActionSpec& spec, const std::array<int, 3>& s,
                                     std::uint64_t seed, const GeneratorOptions& options = {});

// Swap normal form of order n with weights r.
ModelTriple random_equivariant_model(int n, const std::array<int, 4>& r, const std::array<int, 3>& s,
                                     std::uint64_t seed, const GeneratorOptions& options = {});

}  // namespace fano212
