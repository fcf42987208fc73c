#pragma once

// Sparse multivariate polynomials over Q(zeta_N), determinants of polynomial
// matrices, Buchberger Groebner bases in grevlex, projective emptiness and
// Hilbert polynomials.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fano212/exactnum.hpp"

namespace fano212 {

inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  int degree = 0;

  static Monomial from_exponents(std::span<const int> e);
  static Monomial variable(int index);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  bool is_pure_power(int var) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Graded reverse lexicographic comparison: -1, 0 or 1.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, Cyclotomic>;

  explicit MultiPoly(int nvars = 1);

  static MultiPoly constant(int nvars, const Cyclotomic& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly term(int nvars, const Monomial& m, const Cyclotomic& c);
  // Takes unsorted terms; combines duplicates and drops zeros.
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Terms sorted by decreasing grevlex order.
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Cyclotomic& leading_coefficient() const { return terms_.front().second; }
  // -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  Cyclotomic coefficient(const Monomial& m) const;

  Cyclotomic evaluate(std::span<const Cyclotomic> point) const;
  // images[i] replaces variable i; all images share one variable count,
  // which becomes the result's.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  MultiPoly derivative(int var) const;
  // Sets each chart variable to 1; the variable count is unchanged.
  MultiPoly dehomogenize(std::span<const int> chart) const;
  MultiPoly monic() const;
  // Everything but the leading term.
  MultiPoly tail() const;
  MultiPoly pow(int e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Cyclotomic& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // a - c * m * b, the reduction step; exploits that multiplying by a
  // monomial preserves the term order.
  static MultiPoly sub_mul(const MultiPoly& a, const Cyclotomic& c, const Monomial& m,
                           const MultiPoly& b);

  // Variable names default to x0, x1, ...
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  int nvars_;
  std::vector<Term> terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

struct Ideal {
  int nvars = 1;
  std::vector<MultiPoly> generators;
};

// Cofactor expansion along the first row.
MultiPoly poly_det(const PolyMatrix& m);

// (f0, f1, f2, f3): f_i is the minor with column i deleted.
std::array<MultiPoly, 4> maximal_minors(const PolyMatrix& m);

// All k x k minors of m.
std::vector<MultiPoly> all_minors(const PolyMatrix& m, int k);

struct GroebnerOptions {
  // S-pairs whose lcm exceeds this total degree abort with kDegreeCapExceeded.
  int degree_cap = 30;
  // Return {1} as soon as a nonzero constant shows up.
  bool stop_on_unit = false;
};

// Reduced grevlex Groebner basis: monic, inter-reduced, sorted by
// decreasing leading monomial. The zero ideal gives an empty basis.
Ideal groebner(const Ideal& ideal, const GroebnerOptions& options = {});

// Fully reduced remainder of p modulo the given polynomials.
MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> divisors);

bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& options = {});

// True iff the homogeneous ideal has no zero in the projective space on the
// listed variables (all variables when `block` is empty).
bool projective_empty(const Ideal& ideal, std::span<const int> block = {});

// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n of S / (monomials).
RationalPoly hilbert_numerator(int nvars, std::vector<Monomial> generators);

// Hilbert polynomial of S / I for a homogeneous ideal, as a polynomial in t.
RationalPoly hilbert_polynomial(const Ideal& ideal);

// Hilbert polynomial of S / (monomials) in nvars variables.
RationalPoly hilbert_polynomial_of_monomials(int nvars, std::vector<Monomial> generators);

// Leading monomials of a Groebner basis.
std::vector<Monomial> leading_monomials(const Ideal& basis);

}  // namespace fano212
