#pragma once

// A smooth complete intersection X of three (1,1)-divisors x^T M_i y = 0 in
// P^3 x P^3, its two blowdown structures and the determinantal plane quartic
// det(x M_1 + y M_2 + z M_3) = 0 identified with both blowdown centres.

#include <array>
#include <span>
#include <vector>

#include "fano212/exactnum.hpp"
#include "fano212/matrix.hpp"
#include "fano212/polyalg.hpp"

namespace fano212 {

using CMatrix = Matrix<Cyclotomic>;
using Point = std::vector<Cyclotomic>;

struct ModelTriple {
  int conductor = 1;
  std::array<CMatrix, 3> matrices;
};

// kSecond views X through the other projection: every M_i becomes M_i^T.
enum class Side { kFirst, kSecond };

ModelTriple transposed(const ModelTriple& m);

// Rejects wrong shapes (kWrongShape), dependent forms (kDependentForms),
// an identically vanishing quartic (kDegenerateQuartic) and a coefficient
// matrix of generic rank < 3 on either side (kRankDrop).
void validate_model(const ModelTriple& m);

// 16 x 3 matrix whose columns are the flattened M_i.
CMatrix stacked_forms(const std::array<CMatrix, 3>& matrices);

// F_i = x^T M_i y in variables x0..x3 (0..3), y0..y3 (4..7).
std::array<MultiPoly, 3> bilinear_forms(const ModelTriple& m, Side side = Side::kFirst);

// 3 x 4 matrix of linear forms in x0..x3 whose row i is x^T M_i.
PolyMatrix coeff_matrix(const ModelTriple& m, Side side);

// The coefficient matrix evaluated at a point of P^3.
CMatrix coeff_matrix_at(const ModelTriple& m, Side side, std::span<const Cyclotomic> x);

// The four maximal minors f0..f3 of coeff_matrix, cutting out the blowdown
// centre of the chosen side.
Ideal minor_cubics(const ModelTriple& m, Side side);

// [f0 : -f1 : f2 : -f3] at a point off the centre: the unique y over x.
Point fiber_section(const ModelTriple& m, Side side, std::span<const Cyclotomic> x);

// Q = det(x M_1 + y M_2 + z M_3); throws kDegenerateQuartic when Q == 0.
MultiPoly determinantal_quartic(const ModelTriple& m);

// sum_j p_j M_j.
CMatrix pencil_at(const std::array<CMatrix, 3>& matrices, std::span<const Cyclotomic> p);

// Jacobian criterion for a plane quartic.
bool quartic_smooth(const MultiPoly& q);

// True iff coeff_matrix has rank >= 2 at every point of P^3.
bool rank_locus_check(const ModelTriple& m, Side side);

enum class Smoothness { kSmooth, kSingular, kInconclusive };

const char* smoothness_name(Smoothness s);

struct FullSmoothness {
  Smoothness verdict = Smoothness::kInconclusive;
  // chart index 4 * i + j is the chart x_i = 1, y_j = 1
  std::array<Smoothness, 16> charts{};
};

// Chart-wise unit-ideal test of F_1, F_2, F_3 and the 3 x 3 minors of their
// Jacobian on each of the 16 affine charts of P^3 x P^3.
FullSmoothness full_smoothness(const ModelTriple& m, const GroebnerOptions& options = {});

// [x:y:z] on Q  ->  the point of the side's centre: the kernel of
// x M_1 + y M_2 + z M_3 acting on the side's coordinates.
Point quartic_point_to_curve_point(const ModelTriple& m, std::span<const Cyclotomic> p,
                                   Side side = Side::kFirst);

// Inverse of the above: the unique [x:y:z] annihilating coeff_matrix at c.
Point curve_point_to_quartic_point(const ModelTriple& m, std::span<const Cyclotomic> c,
                                   Side side = Side::kFirst);

// Scales so the first nonzero coordinate is 1.
Point normalize_projective(Point p);
bool projectively_equal(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);

// Integer points of Q with coordinates in [-height, height], normalized.
std::vector<Point> find_quartic_points(const MultiPoly& q, int height);

}  // namespace fano212
