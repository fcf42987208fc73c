#include "fano212/chars.hpp"

#include <algorithm>

#include "fano212/coh.hpp"
#include "fano212/error.hpp"

namespace fano212 {

CharacterMultiset::CharacterMultiset(int order, std::array<long, 3> exponents) : order_(order) {
  if (order < 1) throw Error(ErrorCode::kInvalidOrder, "character order must be positive");
  for (std::size_t i = 0; i < 3; ++i) exponents_[i] = mod_floor(exponents[i], order);
  std::sort(exponents_.begin(), exponents_.end());
}

CharacterMultiset CharacterMultiset::shifted(long k) const {
  return CharacterMultiset(order_, {exponents_[0] + k, exponents_[1] + k, exponents_[2] + k});
}

std::string CharacterMultiset::to_string() const {
  return "{" + std::to_string(exponents_[0]) + "," + std::to_string(exponents_[1]) + "," +
         std::to_string(exponents_[2]) + "}";
}

namespace {

CharacterMultiset from_weight(const std::array<int, 3>& s, long weight, int n) {
  const long sum = static_cast<long>(s[0]) + s[1] + s[2];
  return CharacterMultiset(n, {s[0] + sum - weight, s[1] + sum - weight, s[2] + sum - weight});
}

}  // namespace

CharacterMultiset jac_curve_characters(const std::array<int, 3>& s, const std::array<int, 4>& r, int n) {
  long sum = 0;
  for (int w : r) sum += w;
  return from_weight(s, sum, n);
}

CharacterMultiset jac_curve_characters(const std::array<int, 3>& s, const SwapActionSpec& spec) {
  return from_weight(s, determinant_weight(spec), spec.order);
}

CharacterMultiset ij_characters(const std::array<int, 3>& s, const std::array<int, 4>& r, int n) {
  if (n % 2 != 0)
    throw Error(ErrorCode::kInvalidOrder, "the sign character needs an even order, got " + std::to_string(n));
  return jac_curve_characters(s, r, n).shifted(n / 2);
}

bool characters_differ(const CharacterMultiset& a, const CharacterMultiset& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::kCharacterOrderMismatch, "comparing characters of orders " +
                                                        std::to_string(a.order()) + " and " +
                                                        std::to_string(b.order()));
  return a.exponents() != b.exponents();
}

namespace {

int exponent_of(const Cyclotomic& value, int n, const char* what) {
  const auto k = as_power_of_root(value, n);
  if (!k)
    throw Error(ErrorCode::kNotRootOfUnity,
                std::string(what) + " " + format_cyclotomic(value, n) + " is not a power of zeta_" + std::to_string(n));
  return *k;
}

// lambda with f(images) = lambda * f, or kNotEigenvector.
Cyclotomic substitution_eigenvalue(const MultiPoly& f, std::span<const MultiPoly> images, const char* what) {
  const MultiPoly g = f.substitute(images);
  const Cyclotomic lambda = g.leading_coefficient() / f.leading_coefficient();
  if (g != lambda * f)
    throw Error(ErrorCode::kNotEigenvector,
                std::string(what) + " is not an eigenvector of the diagonal substitution");
  return lambda;
}

}  // namespace

CurveOracle curve_action_oracle(const InvariantPencil& pencil, const SwapActionSpec& spec) {
  const int n = spec.order;
  ModelTriple model;
  model.conductor = n;
  model.matrices = pencil.matrices;
  const MultiPoly q = determinantal_quartic(model);
  if (q.is_zero()) throw Error(ErrorCode::kDegenerateQuartic, "the pencil has identically zero determinant");

  // x must not divide Q, so that the chart x = 1 meets C
  const MultiPoly on_line = q.substitute(std::array<MultiPoly, 3>{
      MultiPoly(3), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)});
  if (on_line.is_zero()) throw Error(ErrorCode::kHypothesisViolated, "x divides the quartic");

  std::array<Cyclotomic, 3> w;
  for (std::size_t j = 0; j < 3; ++j) w[j] = root_of_unity(n, pencil.exponents[j]);

  const std::array<MultiPoly, 3> scaled{w[0] * MultiPoly::variable(3, 0), w[1] * MultiPoly::variable(3, 1),
                                        w[2] * MultiPoly::variable(3, 2)};
  const Cyclotomic lambda_q = substitution_eigenvalue(q, scaled, "Q");
  const int q_exp = exponent_of(lambda_q, n, "the eigenvalue of Q");
  if (q_exp != determinant_weight(spec))
    throw Error(ErrorCode::kNotEigenvector, "sigma scales Q by w^" + std::to_string(q_exp) + " but the weights give w^" +
                                                std::to_string(determinant_weight(spec)));

  // affine chart x = 1: u -> a u, v -> b v
  const Cyclotomic a = w[1] / w[0];
  const Cyclotomic b = w[2] / w[0];
  const std::array<int, 1> chart{0};
  const MultiPoly q_affine = q.dehomogenize(chart);
  const std::array<MultiPoly, 3> chart_images{MultiPoly::variable(3, 0), a * MultiPoly::variable(3, 1),
                                              b * MultiPoly::variable(3, 2)};
  const Cyclotomic mu = substitution_eigenvalue(q_affine, chart_images, "q");
  const Cyclotomic volume = a * b;  // du ^ dv

  const std::array<MultiPoly, 3> numerators{MultiPoly::constant(3, Cyclotomic(1L)), MultiPoly::variable(3, 1),
                                            MultiPoly::variable(3, 2)};
  std::array<long, 3> exps{};
  for (std::size_t k = 0; k < 3; ++k) {
    const Cyclotomic g = substitution_eigenvalue(numerators[k], chart_images, "numerator");
    exps[k] = exponent_of(g * volume / mu, n, "the eigenvalue of a 2-form");
  }
  return {CharacterMultiset(n, exps), q_exp};
}

CurveOracle curve_action_oracle(const InvariantPencil& pencil, const std::array<int, 4>& r, int n) {
  return curve_action_oracle(pencil, SwapActionSpec{n, r, true, {}});
}

CharacterMultiset ij_oracle(const InvariantPencil& pencil, const SwapActionSpec& spec) {
  const int n = spec.order;
  const Cyclotomic top = equivariant_top_eigenvalue(spec);
  // the Koszul generator F1 ^ F2 ^ F3
  const long sum = static_cast<long>(pencil.exponents[0]) + pencil.exponents[1] + pencil.exponents[2];
  const Cyclotomic koszul = root_of_unity(n, sum);
  std::array<long, 3> exps{};
  for (std::size_t j = 0; j < 3; ++j)
    exps[j] = exponent_of(top * koszul * root_of_unity(n, pencil.exponents[j]), n, "the eigenvalue on H^3(L_j)");
  return CharacterMultiset(n, exps);
}

CharacterMultiset ij_oracle(const InvariantPencil& pencil, const std::array<int, 4>& r, int n, bool swap) {
  return ij_oracle(pencil, SwapActionSpec{n, r, swap, swap ? std::array<int, 4>{} : r});
}

const char* verdict_name(Verdict v) {
  return v == Verdict::kLinearisable ? "Linearisable" : "NotLinearisable";
}

Verdict verdict(const SwapActionSpec& spec) {
  return is_gfano(spec) ? Verdict::kNotLinearisable : Verdict::kLinearisable;
}

VerdictReport verdict_report(const SwapActionSpec& spec, const std::array<int, 3>& s) {
  VerdictReport rep;
  rep.verdict = verdict(spec);
  if (rep.verdict == Verdict::kLinearisable) {
    rep.explanation =
        "sigma preserves H, so the blow-down X -> P^3 of E is equivariant and conjugates the action to a "
        "linear action on P^3";
    return rep;
  }
  rep.jac = jac_curve_characters(s, spec.weights, spec.order);
  rep.ij = ij_characters(s, spec.weights, spec.order);
  rep.characters_differ = characters_differ(*rep.jac, *rep.ij);
  rep.explanation =
      "sigma swaps H and H', so X is G-Fano; Lie(IJ_X) and Lie(J_C) carry characters differing by the sign "
      "w^{n/2}, so IJ_X and J_C are not equivariantly isomorphic";
  return rep;
}

}  // namespace fano212
