#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fano212/error.hpp"
#include "fano212/polyalg.hpp"
#include "oracles.hpp"

namespace fano212 {
namespace {

MultiPoly var(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly cst(int n, long c) { return MultiPoly::constant(n, Cyclotomic(c)); }

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_degree, int terms, int conductor = 1) {
  std::vector<MultiPoly::Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    int left = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    for (auto& x : e) {
      x = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      left -= x;
    }
    Cyclotomic c(static_cast<long>(rng() % 9) - 4);
    if (conductor > 1) c += Cyclotomic(static_cast<long>(rng() % 3) - 1) * root_of_unity(conductor, 1);
    out.emplace_back(Monomial::from_exponents(e), c);
  }
  return MultiPoly::from_terms(nvars, std::move(out));
}

MultiPoly random_homogeneous(std::mt19937_64& rng, int nvars, int degree, int terms) {
  std::vector<MultiPoly::Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (int k = 0; k < degree; ++k) ++e[rng() % static_cast<unsigned>(nvars)];
    out.emplace_back(Monomial::from_exponents(e), Cyclotomic(static_cast<long>(rng() % 7) - 3));
  }
  return MultiPoly::from_terms(nvars, std::move(out));
}

Point random_point(std::mt19937_64& rng, int n) {
  Point p;
  for (int i = 0; i < n; ++i) p.emplace_back(static_cast<long>(rng() % 7) - 3);
  return p;
}

// Leibniz formula over all permutations.
MultiPoly leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly acc(m[0][0].nvars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    MultiPoly term = cst(m[0][0].nvars(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

TEST(MultiPoly, ArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 4, 6, 4), q = random_poly(rng, 3, 3, 5, 4);
    Point pt = random_point(rng, 3);
    pt[1] += root_of_unity(4, 1);
    EXPECT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
    EXPECT_EQ((p + q).evaluate(pt), p.evaluate(pt) + q.evaluate(pt));
    EXPECT_EQ((p - p), MultiPoly(3));
  }
}

TEST(MultiPoly, BinomialExpansion) {
  const MultiPoly x = var(2, 0), y = var(2, 1);
  EXPECT_EQ((x + y).pow(2), x * x + cst(2, 2) * x * y + y * y);
  EXPECT_EQ((x + y).pow(2).to_string({}), "x0^2 + 2*x0*x1 + x1^2");
  EXPECT_EQ((x - y).to_string({}), "x0 - x1");
}

TEST(MultiPoly, SubstituteComposes) {
  std::mt19937_64 rng(5);
  const MultiPoly p = random_poly(rng, 2, 4, 6);
  const std::array<MultiPoly, 2> images{var(3, 0) + var(3, 2), var(3, 1) * var(3, 1) - cst(3, 1)};
  const MultiPoly s = p.substitute(images);
  const Point pt = random_point(rng, 3);
  const Point inner{images[0].evaluate(pt), images[1].evaluate(pt)};
  EXPECT_EQ(s.evaluate(pt), p.evaluate(inner));
}

TEST(MultiPoly, DehomogenizeSetsChartToOne) {
  const MultiPoly f = var(3, 0) * var(3, 0) * var(3, 1) + cst(3, 3) * var(3, 2).pow(3);
  const std::array<int, 1> chart{0};
  const MultiPoly g = f.dehomogenize(chart);
  EXPECT_EQ(g, var(3, 1) + cst(3, 3) * var(3, 2).pow(3));
  EXPECT_EQ(g.nvars(), 3);
}

TEST(MultiPoly, GrevlexOrder) {
  // x0 > x1 > x2, x1^2 > x0*x2, and degree comes first
  const auto mono = [](std::vector<int> e) { return Monomial::from_exponents(e); };
  EXPECT_GT(grevlex_compare(mono({1, 0, 0}), mono({0, 1, 0})), 0);
  EXPECT_GT(grevlex_compare(mono({0, 2, 0}), mono({1, 0, 1})), 0);
  EXPECT_GT(grevlex_compare(mono({0, 0, 3}), mono({2, 0, 0})), 0);
}

TEST(PolyDet, MatchesLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix m(4, std::vector<MultiPoly>(4, MultiPoly(3)));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 3, 1, 3, 8);
    const MultiPoly d = poly_det(m);
    EXPECT_EQ(d, leibniz_det(m));
    std::swap(m[0], m[2]);
    EXPECT_EQ(poly_det(m), -d);
    PolyMatrix t(4, std::vector<MultiPoly>(4, MultiPoly(3)));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) t[i][j] = m[j][i];
    EXPECT_EQ(poly_det(t), -d);
  }
}

TEST(PolyDet, MaximalMinorsAnnihilateRows) {
  // sum_j (-1)^j f_j a_ij = det of the matrix with row i repeated = 0
  std::mt19937_64 rng(23);
  PolyMatrix m(3, std::vector<MultiPoly>(4, MultiPoly(4)));
  for (auto& row : m)
    for (auto& e : row) e = random_poly(rng, 4, 1, 3);
  const auto f = maximal_minors(m);
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly acc(4);
    for (std::size_t j = 0; j < 4; ++j) acc += (j % 2 ? -f[j] : f[j]) * m[i][j];
    EXPECT_TRUE(acc.is_zero()) << "row " << i;
  }
}

TEST(PolyDet, NonSquareThrows) {
  PolyMatrix m(2, std::vector<MultiPoly>(3, MultiPoly(2)));
  EXPECT_THROW((void)poly_det(m), Error);
}

// Buchberger's criterion checked directly: every S-polynomial reduces to 0.
void expect_groebner(const Ideal& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    const MultiPoly& f = gb.generators[i];
    EXPECT_EQ(f.leading_coefficient(), Cyclotomic(1L));
    for (std::size_t j = 0; j < gb.generators.size(); ++j) {
      if (i == j) continue;
      const MultiPoly& g = gb.generators[j];
      // reduced: no term of f divisible by lt(g)
      for (const auto& [m, c] : f.terms()) EXPECT_FALSE(g.leading_monomial().divides(m));
      if (j < i) continue;
      const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
      const MultiPoly s = MultiPoly::term(f.nvars(), f.leading_monomial().quotient_of(l), Cyclotomic(1L)) * f -
                          MultiPoly::term(g.nvars(), g.leading_monomial().quotient_of(l), Cyclotomic(1L)) * g;
      EXPECT_TRUE(normal_form(s, gb.generators).is_zero());
    }
  }
}

Ideal twisted_cubic() {
  const int n = 4;
  const MultiPoly x0 = var(n, 0), x1 = var(n, 1), x2 = var(n, 2), x3 = var(n, 3);
  return {n, {x0 * x2 - x1 * x1, x0 * x3 - x1 * x2, x1 * x3 - x2 * x2}};
}

TEST(Groebner, TwistedCubicIsAlreadyAGroebnerBasis) {
  const Ideal gb = groebner(twisted_cubic());
  EXPECT_EQ(gb.generators.size(), 3u);
  expect_groebner(gb);
}

TEST(Groebner, ReducedBasisIsDeterministicUnderShuffling) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 4; ++trial) {
    Ideal ideal{3, {}};
    for (int k = 0; k < 3; ++k) ideal.generators.push_back(random_homogeneous(rng, 3, 2 + k % 2, 4));
    const Ideal base = groebner(ideal);
    expect_groebner(base);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      Ideal other = ideal;
      std::shuffle(other.generators.begin(), other.generators.end(), rng);
      // scaling and adding a combination changes the generators, not the ideal
      other.generators[0] = cst(3, 5) * other.generators[0] + other.generators[1];
      const Ideal again = groebner(other);
      ASSERT_EQ(again.generators.size(), base.generators.size());
      for (std::size_t i = 0; i < base.generators.size(); ++i)
        EXPECT_EQ(again.generators[i], base.generators[i]);
    }
  }
}

TEST(Groebner, IdealMembersReduceToZero) {
  std::mt19937_64 rng(31);
  const Ideal gb = groebner(twisted_cubic());
  const Ideal in = twisted_cubic();
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly g(4);
    for (const auto& f : in.generators) g += random_poly(rng, 4, 2, 3) * f;
    EXPECT_TRUE(normal_form(g, gb.generators).is_zero());
  }
  EXPECT_FALSE(normal_form(var(4, 0), gb.generators).is_zero());
}

TEST(Groebner, UnitIdealAndDegreeCap) {
  const MultiPoly x = var(2, 0), y = var(2, 1);
  EXPECT_TRUE(is_unit_ideal({2, {x * y - cst(2, 1), x}}));
  EXPECT_FALSE(is_unit_ideal({2, {x * y - cst(2, 1)}}));
  const Ideal gb = groebner({2, {x * y - cst(2, 1), x}});
  ASSERT_EQ(gb.generators.size(), 1u);
  EXPECT_EQ(gb.generators[0], cst(2, 1));
  GroebnerOptions tiny;
  tiny.degree_cap = 2;
  try {
    // lcm of the leading monomials x^2 y and x y^2 has degree 4
    (void)groebner({2, {x * x * y - cst(2, 1), x * y * y - x}}, tiny);
    FAIL() << "expected the degree cap to trigger";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeCapExceeded);
  }
}

TEST(Groebner, CyclotomicCoefficients) {
  // (x - z y, y^2 - z^2 x y) over Q(zeta_8)
  const Cyclotomic z = root_of_unity(8, 1);
  const MultiPoly x = var(2, 0), y = var(2, 1);
  const Ideal gb = groebner({2, {x - z * y, y * y - (z * z) * x * y}});
  expect_groebner(gb);
  // on x = z y the second generator is y^2 (1 - z^3)
  EXPECT_TRUE(normal_form(y * y, gb.generators).is_zero());
}

TEST(ProjectiveEmpty, Basics) {
  const MultiPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  EXPECT_TRUE(projective_empty({3, {x, y, z}}));
  EXPECT_TRUE(projective_empty({3, {x * x, y * y * y, z * z - x * y}}));
  // (x^2, y^3, zy) still vanishes at [0:0:1]
  EXPECT_FALSE(projective_empty({3, {x * x, y * y * y, z * y - x * x}}));
  EXPECT_FALSE(projective_empty({3, {x * y}}));
  EXPECT_FALSE(projective_empty({3, {x - y, y - z}}));
  // Fermat quartic is smooth: its partials vanish only at 0
  const MultiPoly fermat = x.pow(4) + y.pow(4) + z.pow(4);
  EXPECT_TRUE(projective_empty({3, {fermat.derivative(0), fermat.derivative(1), fermat.derivative(2)}}));
  EXPECT_THROW((void)projective_empty({3, {x * x - y}}), Error);
}

TEST(Hilbert, TwistedCubicIs3tPlus1) {
  const RationalPoly hp = hilbert_polynomial(twisted_cubic());
  EXPECT_EQ(hp, RationalPoly(std::vector<Rational>{1, 3}));
  const auto lm = leading_monomials(groebner(twisted_cubic()));
  for (int d = 2; d <= 8; ++d) EXPECT_EQ(oracle::standard_monomials(4, lm, d), 3 * d + 1) << d;
}

TEST(Hilbert, MonomialIdealsMatchCounts) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    std::vector<Monomial> gens;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int g = 0; g < k; ++g) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      const int deg = 1 + static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d) ++e[rng() % static_cast<unsigned>(n)];
      gens.push_back(Monomial::from_exponents(e));
    }
    const RationalPoly hp = hilbert_polynomial_of_monomials(n, gens);
    for (int d = 5; d <= 10; ++d)
      EXPECT_EQ(hp.evaluate(d), oracle::standard_monomials(n, gens, d)) << "trial " << trial << " d " << d;
  }
}

TEST(Hilbert, NumeratorOfPrincipalIdeal) {
  const std::vector<Monomial> gens{Monomial::from_exponents(std::vector<int>{2, 0, 0})};
  EXPECT_EQ(hilbert_numerator(3, gens), RationalPoly(std::vector<Rational>{1, 0, -1}));
  // plane conic in P^2: 2t + 1
  EXPECT_EQ(hilbert_polynomial_of_monomials(3, gens), RationalPoly(std::vector<Rational>{1, 2}));
}

}  // namespace
}  // namespace fano212
