#include "fano212/coh.hpp"

#include <algorithm>

#include "fano212/error.hpp"

namespace fano212 {

bool CohTable::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](long d) { return d == 0; });
}

long CohTable::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * dims[i];
  return chi;
}

std::string CohTable::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

CohTable operator+(const CohTable& a, const CohTable& b) {
  if (a.dims.size() != b.dims.size()) throw Error(ErrorCode::kWrongShape, "cohomology tables of different length");
  CohTable out = a;
  for (std::size_t i = 0; i < b.dims.size(); ++i) out.dims[i] += b.dims[i];
  return out;
}

CohTable operator*(long k, const CohTable& a) {
  CohTable out = a;
  for (auto& d : out.dims) d *= k;
  return out;
}

namespace {

long choose3(long m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

}  // namespace

CohTable bott_p3(long a) {
  CohTable t{{0, 0, 0, 0}};
  if (a >= 0) t.dims[0] = choose3(a + 3);
  if (a <= -4) t.dims[3] = choose3(-a - 1);
  return t;
}

CohTable kunneth(long a, long b) {
  const CohTable x = bott_p3(a), y = bott_p3(b);
  CohTable t{std::vector<long>(7, 0)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t.dims[i + j] += x.dims[i] * y.dims[j];
  return t;
}

CohTable truncation_shift(const ComplexShape& shape, int s) {
  if (shape.terms.empty()) throw Error(ErrorCode::kWrongShape, "empty complex");
  const std::size_t len = shape.terms.front().dims.size();
  for (const auto& t : shape.terms)
    if (t.dims.size() != len) throw Error(ErrorCode::kWrongShape, "complex terms have tables of different length");
  const int n = shape.length();
  if (s < 0 || s > n)
    throw Error(ErrorCode::kHypothesisViolated,
                "shift " + std::to_string(s) + " outside 0.." + std::to_string(n));
  for (int r = 0; r <= n; ++r) {
    if (r == s) continue;
    if (!shape.term(r).is_zero())
      throw Error(ErrorCode::kHypothesisViolated,
                  "term F^" + std::to_string(-r) + " is not acyclic: " + shape.term(r).to_string());
  }
  CohTable out{std::vector<long>(len, 0)};
  const CohTable& src = shape.term(s);
  for (std::size_t i = 0; i + s < len; ++i) out.dims[i] = src.dims[i + s];
  return out;
}

ComplexShape koszul_shape(long a, long b) {
  ComplexShape shape;
  const long mult[4] = {1, 3, 3, 1};
  for (int r = 3; r >= 0; --r) shape.terms.push_back(mult[r] * kunneth(a - r, b - r));
  return shape;
}

CohTable koszul_cohomology_on_X(long a, long b) {
  const ComplexShape shape = koszul_shape(a, b);
  int s = 0;
  int nonzero = 0;
  for (int r = 0; r <= shape.length(); ++r)
    if (!shape.term(r).is_zero()) {
      s = r;
      ++nonzero;
    }
  if (nonzero > 1)
    throw Error(ErrorCode::kInconclusive, "O_X(" + std::to_string(a) + "," + std::to_string(b) +
                                              "): " + std::to_string(nonzero) +
                                              " Koszul terms have cohomology; truncation does not apply");
  const CohTable ambient = truncation_shift(shape, s);
  for (std::size_t i = 4; i < ambient.dims.size(); ++i)
    if (ambient.dims[i] != 0)
      throw Error(ErrorCode::kInconclusive, "cohomology above the dimension of X");
  return CohTable{{ambient.dims.begin(), ambient.dims.begin() + 4}};
}

EulerChase euler_chase() {
  EulerChase e;
  e.middle = 4 * koszul_cohomology_on_X(-1, 0) + 4 * koszul_cohomology_on_X(0, -1);
  e.right = 2 * koszul_cohomology_on_X(0, 0);
  auto forced = [&](std::size_t i) { return e.right.dims[i - 1] == 0 && e.middle.dims[i] == 0; };
  e.h2_vanishes = forced(2);
  e.h3_vanishes = forced(3);
  return e;
}

CupMonomial cup_normal_form(CupMonomial m) {
  auto& f = m.factors;
  for (std::size_t pass = 0; pass < f.size(); ++pass)
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i].factor == f[i + 1].factor)
        throw Error(ErrorCode::kSemantic, "cup monomial repeats a factor");
      if (f[i].factor < f[i + 1].factor) continue;
      if ((f[i].degree * f[i + 1].degree) % 2 != 0) m.coeff = -m.coeff;
      std::swap(f[i], f[i + 1]);
    }
  return m;
}

CupMonomial cup_pullback(const CupMonomial& m, const SwapActionSpec& spec) {
  // (x0 x1 x2 x3)^{-1} composed with diag(w^r) is w^{-sum r} times itself
  auto eta_twist = [&](const std::array<int, 4>& r) {
    long sum = 0;
    for (int w : r) sum += w;
    return root_of_unity(spec.order, -sum);
  };
  CupMonomial out;
  out.coeff = m.coeff;
  for (const auto& f : m.factors) {
    if (f.factor != 0 && f.factor != 1) throw Error(ErrorCode::kSemantic, "the model has two factors");
    if (spec.swap) {
      // sigma(x, y) = (y, D x): functions of x become functions of y, and
      // functions of y are composed with D on x
      if (f.factor == 0) {
        out.factors.push_back({1, f.degree});
      } else {
        out.factors.push_back({0, f.degree});
        out.coeff *= eta_twist(spec.weights);
      }
    } else {
      out.factors.push_back(f);
      out.coeff *= eta_twist(f.factor == 0 ? spec.weights : spec.second_weights);
    }
  }
  return out;
}

Cyclotomic equivariant_top_eigenvalue(const SwapActionSpec& spec) {
  const CupMonomial top{Cyclotomic(1L), {{0, 3}, {1, 3}}};
  const CupMonomial image = cup_normal_form(cup_pullback(top, spec));
  return image.coeff;
}

}  // namespace fano212
