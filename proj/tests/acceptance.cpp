// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fano212/chars.hpp"
#include "fano212/coh.hpp"
#include "fano212/error.hpp"
#include "fano212/model.hpp"
#include "fano212/polyalg.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace fano212;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records the first failure only; later checks still run.
  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Criterion = std::function<void(Outcome&)>;

std::string case_name(const testing::SwapCase& c) {
  std::ostringstream os;
  os << "n=" << c.n << " r=(" << c.r[0] << "," << c.r[1] << "," << c.r[2] << "," << c.r[3] << ") s=(" << c.s[0]
     << "," << c.s[1] << "," << c.s[2] << ")";
  return os.str();
}

std::vector<ModelTriple> swap_models(const GeneratorOptions& options = {}) {
  std::vector<ModelTriple> out;
  for (const auto& c : testing::smooth_swap_cases()) out.push_back(random_equivariant_model(c.spec(), c.s, 1, options));
  return out;
}

void character_agreement(Outcome& o) {
  const auto& cases = testing::smooth_swap_cases();
  std::vector<int> orders;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& c = cases[k];
    const ModelTriple m = random_equivariant_model(c.spec(), c.s, 1);
    o.check(quartic_smooth(determinantal_quartic(m)), case_name(c) + " quartic smooth");
    const InvariantPencil p = invariant_pencil(m, c.spec());
    const CurveOracle curve = curve_action_oracle(p, c.spec());
    o.check(curve.characters == jac_curve_characters(p.exponents, c.r, c.n), case_name(c) + " jac");
    o.check(curve.quartic_exponent == determinant_weight(c.spec()), case_name(c) + " quartic eigenvalue");
    o.check(ij_oracle(p, c.spec()) == ij_characters(p.exponents, c.r, c.n), case_name(c) + " ij");
    orders.push_back(c.n);
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  o.check(cases.size() >= 20, "at least 20 instances");
  o.check(orders == std::vector<int>{2, 4, 6, 8}, "orders 2, 4, 6, 8 covered");
  o.detail << cases.size() << " instances, orders 2/4/6/8, formula = oracle for jac and ij";
}

void sign_discrepancy(Outcome& o) {
  for (const auto& c : testing::smooth_swap_cases()) {
    const ModelTriple m = random_equivariant_model(c.spec(), c.s, 1);
    const InvariantPencil p = invariant_pencil(m, c.spec());
    o.check(characters_differ(curve_action_oracle(p, c.spec()).characters, ij_oracle(p, c.spec())), case_name(c));
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 16));
    std::array<int, 3> s{};
    std::array<int, 4> r{};
    for (auto& v : s) v = static_cast<int>(rng() % static_cast<unsigned>(n));
    for (auto& v : r) v = static_cast<int>(rng() % static_cast<unsigned>(n));
    o.check(characters_differ(jac_curve_characters(s, r, n), ij_characters(s, r, n)), "fuzzed tuple");
  }
  o.detail << testing::smooth_swap_cases().size() << " instances + 1000 fuzzed tuples differ";
}

void non_swap_remark(Outcome& o) {
  for (const auto& c : testing::diagonal_cases()) {
    const ModelTriple m = random_equivariant_model(c.spec, c.s, 1);
    const InvariantPencil p = invariant_pencil(m, c.spec);
    const CurveOracle curve = curve_action_oracle(p, c.spec);
    o.check(curve.characters == jac_curve_characters(p.exponents, c.spec), "diagonal jac");
    o.check(ij_oracle(p, c.spec) == curve.characters, "diagonal ij = jac, n=" + std::to_string(c.spec.order));
  }
  o.check(testing::diagonal_cases().size() >= 5, "at least 5 diagonal actions");
  o.detail << testing::diagonal_cases().size() << " diagonal actions, ij oracle = curve characters";
}

void hilbert_polynomials(Outcome& o) {
  const RationalPoly expected(std::vector<Rational>{-2, 6});
  std::vector<ModelTriple> models;
  const auto& cases = testing::smooth_swap_cases();
  for (std::size_t k = 0; k < cases.size(); k += 4)
    models.push_back(random_equivariant_model(cases[k].spec(), cases[k].s, 1));
  for (std::size_t k = 0; k < testing::diagonal_cases().size(); k += 3) {
    const auto& c = testing::diagonal_cases()[k];
    models.push_back(random_equivariant_model(c.spec, c.s, 1));
  }
  for (const auto& m : models)
    for (Side side : {Side::kFirst, Side::kSecond})
      o.check(hilbert_polynomial(minor_cubics(m, side)) == expected, "6t - 2");
  o.detail << models.size() << " instances, both sides, h_C(t) = 6t - 2";
}

void cohomology_tables(Outcome& o) {
  o.check(koszul_cohomology_on_X(0, 0) == CohTable{{1, 0, 0, 0}}, "O_X");
  o.check(koszul_cohomology_on_X(-1, 0).is_zero(), "O_X(-1,0)");
  o.check(koszul_cohomology_on_X(0, -1).is_zero(), "O_X(0,-1)");
  o.check(koszul_cohomology_on_X(-1, -1) == CohTable{{0, 0, 0, 1}}, "O_X(-1,-1)");
  o.check(kunneth(-4, -4) == CohTable{{0, 0, 0, 0, 0, 0, 1}}, "O(-4,-4)");
  const EulerChase e = euler_chase();
  o.check(e.h2_vanishes && e.h3_vanishes, "Euler sequence chase");
  o.detail << "h(O_X)=(1,0,0,0), h(O_X(-1,0))=h(O_X(0,-1))=0, h(O_X(-1,-1))=(0,0,0,1), h^6(O(-4,-4))=1, "
              "H^2=H^3=0 for the restricted cotangent bundle";
}

void truncation_oracle(Outcome& o) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 6);
    const std::size_t len = 4 + rng() % 4;
    const int s = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    ComplexShape shape;
    for (int k = 0; k <= n; ++k) shape.terms.push_back(CohTable{std::vector<long>(len, 0)});
    // F^{-s} sits at position n - s
    for (auto& d : shape.terms[static_cast<std::size_t>(n - s)].dims) d = static_cast<long>(rng() % 4);
    const auto chased = oracle::ses_chase(shape);
    o.check(chased.has_value() && truncation_shift(shape, s) == *chased, "random shape");
  }
  o.detail << "200 admissible shapes, truncation = short exact sequence chase";
}

void picard_lattice(Outcome& o) {
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      o.check(picard_involution(picard_involution({a, b})) == DivisorClass{a, b}, "involution");
  o.check(picard_involution({4, -1}) == DivisorClass{4, -1}, "4H - E fixed");
  o.check(invariant_sublattice(true).size() == 1 && invariant_sublattice(false).size() == 2, "ranks");
  const DivisorClass h_prime = picard_involution(kHyperplane);
  o.check(h_prime == DivisorClass{3, -1}, "H' = 3H - E");
  o.check(DivisorClass{} - kHyperplane - h_prime == kCanonical, "-4H + E = -H - H'");
  o.detail << "iota^2 = id, iota(4H - E) = 4H - E, rank 1 with swap and 2 without, K = -H - H'";
}

void geometry_roundtrips(Outcome& o) {
  GeneratorOptions planted;
  planted.plant_point = true;
  int points = 0, instances = 0, sections = 0;
  std::mt19937_64 rng(5);
  for (const auto& m : swap_models(planted)) {
    const MultiPoly q = determinantal_quartic(m);
    const auto found = find_quartic_points(q, 2);
    if (!found.empty()) ++instances;
    for (const auto& p : found)
      for (Side side : {Side::kFirst, Side::kSecond}) {
        const Point c = quartic_point_to_curve_point(m, p, side);
        bool on_curve = true;
        for (const auto& f : minor_cubics(m, side).generators) on_curve = on_curve && f.evaluate(c).is_zero();
        o.check(on_curve, "point on the minor cubics");
        const Point back = curve_point_to_quartic_point(m, c, side);
        o.check(q.evaluate(back).is_zero() && projectively_equal(back, p), "quartic point round trip");
        ++points;
      }
    for (int trial = 0; trial < 3; ++trial) {
      Point x;
      for (int i = 0; i < 4; ++i) x.emplace_back(static_cast<long>(rng() % 9) - 4);
      try {
        const Point y = fiber_section(m, Side::kFirst, x);
        Point xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        bool zero = true;
        for (const auto& f : bilinear_forms(m)) zero = zero && f.evaluate(xy).is_zero();
        o.check(zero, "fiber section solves F1 = F2 = F3 = 0");
        ++sections;
      } catch (const Error& e) {
        o.check(e.code() == ErrorCode::kPointOnCentre, "fiber section failure kind");
      }
    }
  }
  o.check(points > 0 && sections > 0, "something was checked");
  o.detail << points << " point round trips on " << instances << " instances, " << sections << " fiber sections";
}

void verdict_contract(Outcome& o) {
  int count = 0;
  for (const auto& c : testing::smooth_swap_cases()) {
    o.check(verdict(c.spec()) == Verdict::kNotLinearisable, case_name(c));
    o.check(verdict(square_action(c.spec())) == Verdict::kLinearisable, "square of " + case_name(c));
    count += 2;
  }
  for (const auto& c : testing::diagonal_cases()) {
    o.check(verdict(c.spec) == Verdict::kLinearisable, "diagonal");
    ++count;
  }
  o.detail << count << " actions, NotLinearisable exactly for swaps";
}

void kernel_suites(Outcome& o) {
  std::mt19937_64 rng(1);
  for (int n : {1, 3, 5, 8, 12}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> ca, cb, cc;
      for (int i = 0; i < n; ++i) {
        ca.emplace_back(static_cast<long>(rng() % 9) - 4);
        cb.emplace_back(static_cast<long>(rng() % 9) - 4);
        cc.emplace_back(static_cast<long>(rng() % 9) - 4);
      }
      const Cyclotomic a = Cyclotomic::from_coeffs(n, ca), b = Cyclotomic::from_coeffs(n, cb),
                       c = Cyclotomic::from_coeffs(n, cc);
      o.check((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a, "field axioms");
      if (!a.is_zero()) o.check(a * a.inverse() == Cyclotomic(1L), "inverse");
    }
  }
  for (int n = 1; n <= 24; ++n) o.check(cyclotomic_polynomial(n) == oracle::cyclotomic_by_mobius(n), "Phi_N");
  for (int trial = 0; trial < 3; ++trial) {
    Ideal ideal{3, {}};
    for (int k = 0; k < 3; ++k) {
      std::vector<MultiPoly::Term> terms;
      for (int t = 0; t < 4; ++t) {
        std::vector<int> e(3, 0);
        for (int d = 0; d < 2 + k % 2; ++d) ++e[rng() % 3];
        terms.emplace_back(Monomial::from_exponents(e), Cyclotomic(static_cast<long>(rng() % 7) - 3));
      }
      ideal.generators.push_back(MultiPoly::from_terms(3, std::move(terms)));
    }
    const Ideal base = groebner(ideal);
    Ideal shuffled = ideal;
    std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
    o.check(groebner(shuffled).generators == base.generators, "Groebner determinism");
  }
  for (long a = -10; a <= 10; ++a) {
    const CohTable x = bott_p3(a), y = bott_p3(-4 - a);
    for (std::size_t i = 0; i < 4; ++i) o.check(x.dims[i] == y.dims[3 - i], "Serre duality");
    for (long b = -10; b <= 10; ++b) o.check(kunneth(a, b) == kunneth(b, a), "Kunneth symmetry");
  }
  o.detail << "field axioms, Phi_N (N <= 24), Groebner determinism, Serre duality, Kunneth symmetry";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"character agreement", character_agreement},
      {"sign discrepancy", sign_discrepancy},
      {"non-swap actions carry no sign", non_swap_remark},
      {"Hilbert polynomial 6t - 2", hilbert_polynomials},
      {"cohomology tables", cohomology_tables},
      {"truncation oracle equivalence", truncation_oracle},
      {"Picard lattice", picard_lattice},
      {"geometry round trips", geometry_roundtrips},
      {"verdict contract", verdict_contract},
      {"kernel suites", kernel_suites},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first << ": " << o.detail.str()
              << " (" << ms << " ms)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
