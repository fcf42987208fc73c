// Hilbert series numerators of monomial ideals by pivot recursion, and
// Hilbert polynomials read off from them.

#include <algorithm>

#include "fano212/error.hpp"
#include "fano212/polyalg.hpp"

namespace fano212 {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

// 1 - t^d
RationalPoly one_minus_power(int d) {
  return RationalPoly::constant(1) - RationalPoly::monomial(1, d);
}

RationalPoly numerator(const std::vector<Monomial>& raw) {
  const std::vector<Monomial> gens = minimalize(raw);
  if (gens.empty()) return RationalPoly::constant(1);
  if (gens.front().degree == 0) return {};

  // pick the variable shared by the most generators
  std::array<int, kMaxVars> count{};
  for (const auto& m : gens)
    for (int v = 0; v < kMaxVars; ++v)
      if (m.exp[v] != 0) ++count[v];
  const int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[pivot] <= 1) {
    // pairwise coprime: a regular sequence
    RationalPoly prod = RationalPoly::constant(1);
    for (const auto& m : gens) prod = prod * one_minus_power(m.degree);
    return prod;
  }

  // N(I) = N(I + (x)) + t * N(I : x)
  const Monomial x = Monomial::variable(pivot);
  std::vector<Monomial> sum{x};
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    if (m.exp[pivot] == 0) {
      sum.push_back(m);
      colon.push_back(m);
    } else {
      Monomial q = m;
      q.exp[pivot] -= 1;
      q.degree -= 1;
      colon.push_back(q);
    }
  }
  return numerator(sum) + RationalPoly::monomial(1, 1) * numerator(colon);
}

// binom(t + a, m) as a polynomial in t
RationalPoly binomial_poly(int a, int m) {
  RationalPoly p = RationalPoly::constant(1);
  Rational fact = 1;
  for (int j = 0; j < m; ++j) {
    p = p * RationalPoly(std::vector<Rational>{Rational(a - j), Rational(1)});
    fact *= j + 1;
  }
  return Rational(1) / fact * p;
}

}  // namespace

RationalPoly hilbert_numerator(int nvars, std::vector<Monomial> generators) {
  for (const auto& m : generators)
    for (int v = nvars; v < kMaxVars; ++v)
      if (m.exp[v] != 0) throw Error(ErrorCode::kArityMismatch, "monomial uses a variable beyond nvars");
  return numerator(generators);
}

RationalPoly hilbert_polynomial_of_monomials(int nvars, std::vector<Monomial> generators) {
  RationalPoly num = hilbert_numerator(nvars, std::move(generators));
  if (num.is_zero()) return {};
  const RationalPoly one_minus_t = one_minus_power(1);
  int dim = nvars;
  while (dim > 0 && sgn(num.evaluate(1)) == 0) {
    RationalPoly q, r;
    RationalPoly::divmod(num, one_minus_t, q, r);
    num = std::move(q);
    --dim;
  }
  if (dim == 0) return {};
  // sum_i h_i * binom(t - i + dim - 1, dim - 1)
  RationalPoly hp;
  for (int i = 0; i <= num.degree(); ++i) {
    if (sgn(num.coeff(i)) == 0) continue;
    hp = hp + num.coeff(i) * binomial_poly(dim - 1 - i, dim - 1);
  }
  return hp;
}

RationalPoly hilbert_polynomial(const Ideal& ideal) {
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous()) throw Error(ErrorCode::kNotHomogeneous, "hilbert_polynomial needs a homogeneous ideal");
  const Ideal gb = groebner(ideal);
  return hilbert_polynomial_of_monomials(ideal.nvars, leading_monomials(gb));
}

}  // namespace fano212
