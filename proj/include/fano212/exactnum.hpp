#pragma once

// Exact rational and cyclotomic arithmetic.
//
// A Cyclotomic value lives in Q(zeta_N) for its conductor N and is stored in
// the power basis 1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic
// polynomial. Binary operations on values of different conductors lift both
// operands to the lcm of the conductors through zeta_N = zeta_M^(M/N).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fano212 {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense univariate polynomial with rational coefficients; coeffs[i] is the
// coefficient of x^i. Trailing zeros are trimmed so degree() is exact.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division; throws on a zero divisor.
  static void divmod(const RationalPoly& a, const RationalPoly& b,
                     RationalPoly& quotient, RationalPoly& remainder);

  // Returns g = gcd(a, b) (monic unless zero) and u, v with u*a + v*b = g.
  static RationalPoly gcdext(const RationalPoly& a, const RationalPoly& b,
                             RationalPoly& u, RationalPoly& v);

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

// Euler's totient.
int euler_phi(int n);

// Phi_N, monic with integer coefficients, of degree phi(N).
RationalPoly cyclotomic_polynomial(int n);

// Immutable per-conductor data, created once and shared by all values.
class CyclotomicField {
 public:
  // Thread-safe; returned reference stays valid for the program lifetime.
  static const CyclotomicField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  const RationalPoly& modulus() const { return modulus_; }
  // Reduced power-basis vector of zeta^k, k taken mod N.
  const std::vector<Rational>& power(std::int64_t k) const;

  explicit CyclotomicField(int conductor);

 private:
  int conductor_;
  int degree_;
  RationalPoly modulus_;
  std::vector<std::vector<Rational>> powers_;
};

class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  // Builds sum c_i z^i in Q(zeta_N); coefficient vectors of any length are
  // reduced modulo Phi_N.
  static Cyclotomic from_coeffs(int conductor, const std::vector<Rational>& c);

  int conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True when the value is rational, whatever the conductor.
  bool is_rational() const;
  // Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  // Re-expresses the value in Q(zeta_M); requires conductor() | M.
  Cyclotomic lift(int conductor) const;
  // The same value expressed in Q(zeta_M), if it lies in that field.
  std::optional<Cyclotomic> descend(int conductor) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t exponent) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  // Literal in the symbol z for this value's own conductor.
  std::string to_string() const;

 private:
  Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs);
  bool is_constant_only() const;

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// zeta_N^(k mod N).
Cyclotomic root_of_unity(int n, std::int64_t k);

// k in [0, N) with a == zeta_N^k, if any.
std::optional<int> as_power_of_root(const Cyclotomic& a, int n);

// Parses a literal such as "1/2*z^3 - 2" as an element of Q(zeta_N). Throws
// Error(kSyntax) with a column (1-based) in the message on malformed input.
Cyclotomic parse_cyclotomic(std::string_view text, int conductor);

// Canonical literal of `a` in Q(zeta_N): reduced power basis, descending
// powers. Throws kArityMismatch when a does not lie in Q(zeta_N).
std::string format_cyclotomic(const Cyclotomic& a, int conductor);

// Non-negative residue.
inline int mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace fano212
