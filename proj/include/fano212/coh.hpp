#pragma once

// Dimensions of line-bundle cohomology on P^3, on P^3 x P^3 and on X (via the
// Koszul resolution of X and truncation of exact complexes), the Euler-sequence chase
// for the restricted cotangent bundle, and the eigenvalue of sigma on the
// one-dimensional H^6(O(-4,-4)) computed in a graded cup-product model.

#include <string>
#include <vector>

#include "fano212/action.hpp"
#include "fano212/exactnum.hpp"

namespace fano212 {

struct CohTable {
  // dims[i] = h^i
  std::vector<long> dims;

  bool is_zero() const;
  long euler_characteristic() const;
  std::string to_string() const;

  friend bool operator==(const CohTable&, const CohTable&) = default;
  friend CohTable operator+(const CohTable& a, const CohTable& b);
  friend CohTable operator*(long k, const CohTable& a);
};

// Terms F^{-n}, .., F^0 of an exact complex 0 -> F^{-n} -> .. -> F^0 -> F^1 -> 0,
// in that order; F^1 is the term whose cohomology is sought. All tables have
// the same length.
struct ComplexShape {
  std::vector<CohTable> terms;

  // n, the length of the resolution.
  int length() const { return static_cast<int>(terms.size()) - 1; }
  // Table of F^{-r}.
  const CohTable& term(int r) const { return terms[terms.size() - 1 - static_cast<std::size_t>(r)]; }
};

CohTable bott_p3(long a);

// O(a, b) on P^3 x P^3.
CohTable kunneth(long a, long b);

// H^i(F^1) = H^{i+s}(F^{-s}) when every other F^{-r} is acyclic; otherwise
// throws kHypothesisViolated naming the first offending r.
CohTable truncation_shift(const ComplexShape& shape, int s);

// The twisted Koszul complex of X in P^3 x P^3:
// O(a-3,b-3) -> O(a-2,b-2)^3 -> O(a-1,b-1)^3 -> O(a,b).
ComplexShape koszul_shape(long a, long b);

// H^i(X, O_X(a, b)); kInconclusive when more than one Koszul term has
// cohomology.
CohTable koszul_cohomology_on_X(long a, long b);

struct EulerChase {
  CohTable middle;  // O_X(-1,0)^4 + O_X(0,-1)^4
  CohTable right;   // O_X^2
  bool h2_vanishes = false;
  bool h3_vanishes = false;
};

// 0 -> Omega^1|_X -> O_X(-1,0)^4 + O_X(0,-1)^4 -> O_X^2 -> 0, chased using
// only H^{i-1}(right) = 0 = H^i(middle)  =>  H^i(kernel) = 0.
EulerChase euler_chase();

// --- graded cup-product model ------------------------------------------------

// pi_f^* of a fixed class of the given degree on the f-th factor.
struct CupFactor {
  int factor = 0;
  int degree = 0;
};

// coeff * (a_1 cup a_2 cup ...), in the written order.
struct CupMonomial {
  Cyclotomic coeff{1L};
  std::vector<CupFactor> factors;
};

// Sorts the factors by factor index with the Koszul sign (-1)^{deg a deg b}
// for every transposition of neighbours. Factor indices must be distinct.
CupMonomial cup_normal_form(CupMonomial m);

// sigma^* on pi^*(eta_x) (factor 0) and pi'^*(eta_y) (factor 1), where
// eta = (x0 x1 x2 x3)^{-1} spans H^3(P^3, O(-4)).
CupMonomial cup_pullback(const CupMonomial& m, const SwapActionSpec& spec);

// Eigenvalue of sigma^* on H^6(O(-4,-4)) = <eta_x cup eta_y>.
Cyclotomic equivariant_top_eigenvalue(const SwapActionSpec& spec);

}  // namespace fano212
