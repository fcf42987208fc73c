#include "fano212/model.hpp"

#include <future>
#include <numeric>

#include "fano212/error.hpp"

namespace fano212 {

namespace {

const CMatrix& side_matrix(const ModelTriple& m, std::size_t i, Side side, CMatrix& scratch) {
  if (side == Side::kFirst) return m.matrices[i];
  scratch = m.matrices[i].transpose();
  return scratch;
}

}  // namespace

ModelTriple transposed(const ModelTriple& m) {
  ModelTriple t = m;
  for (auto& mat : t.matrices) mat = mat.transpose();
  return t;
}

CMatrix stacked_forms(const std::array<CMatrix, 3>& matrices) {
  CMatrix s(16, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 16; ++k) s(k, i) = matrices[i].data()[k];
  return s;
}

void validate_model(const ModelTriple& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (m.matrices[i].rows() != 4 || m.matrices[i].cols() != 4)
      throw Error(ErrorCode::kWrongShape, "matrix " + std::to_string(i + 1) + " is not 4x4");
  }
  if (rank(stacked_forms(m.matrices)) != 3)
    throw Error(ErrorCode::kDependentForms, "the three bilinear forms are linearly dependent");
  if (determinantal_quartic(m).is_zero())
    throw Error(ErrorCode::kDegenerateQuartic, "det(x M1 + y M2 + z M3) vanishes identically");
  for (Side side : {Side::kFirst, Side::kSecond}) {
    const Ideal cubics = minor_cubics(m, side);
    bool all_zero = true;
    for (const auto& f : cubics.generators) all_zero = all_zero && f.is_zero();
    if (all_zero)
      throw Error(ErrorCode::kRankDrop, std::string("coefficient matrix has generic rank < 3 on the ") +
                                            (side == Side::kFirst ? "first" : "second") + " side");
  }
}

std::array<MultiPoly, 3> bilinear_forms(const ModelTriple& m, Side side) {
  std::array<MultiPoly, 3> out{MultiPoly(8), MultiPoly(8), MultiPoly(8)};
  CMatrix scratch;
  for (std::size_t i = 0; i < 3; ++i) {
    const CMatrix& mat = side_matrix(m, i, side, scratch);
    std::vector<MultiPoly::Term> terms;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        if (mat(a, b).is_zero()) continue;
        terms.emplace_back(Monomial::variable(static_cast<int>(a)) * Monomial::variable(static_cast<int>(4 + b)),
                           mat(a, b));
      }
    out[i] = MultiPoly::from_terms(8, std::move(terms));
  }
  return out;
}

PolyMatrix coeff_matrix(const ModelTriple& m, Side side) {
  PolyMatrix out;
  CMatrix scratch;
  for (std::size_t i = 0; i < 3; ++i) {
    const CMatrix& mat = side_matrix(m, i, side, scratch);
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<MultiPoly::Term> terms;
      for (std::size_t a = 0; a < 4; ++a)
        if (!mat(a, j).is_zero()) terms.emplace_back(Monomial::variable(static_cast<int>(a)), mat(a, j));
      row.push_back(MultiPoly::from_terms(4, std::move(terms)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

CMatrix coeff_matrix_at(const ModelTriple& m, Side side, std::span<const Cyclotomic> x) {
  if (x.size() != 4) throw Error(ErrorCode::kArityMismatch, "points of P^3 have four coordinates");
  CMatrix out(3, 4);
  CMatrix scratch;
  for (std::size_t i = 0; i < 3; ++i) {
    const CMatrix& mat = side_matrix(m, i, side, scratch);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t a = 0; a < 4; ++a)
        if (!x[a].is_zero()) out(i, j) += x[a] * mat(a, j);
  }
  return out;
}

Ideal minor_cubics(const ModelTriple& m, Side side) {
  auto f = maximal_minors(coeff_matrix(m, side));
  return {4, {f[0], f[1], f[2], f[3]}};
}

Point fiber_section(const ModelTriple& m, Side side, std::span<const Cyclotomic> x) {
  const Ideal cubics = minor_cubics(m, side);
  Point y;
  bool all_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    Cyclotomic v = cubics.generators[i].evaluate(x);
    if (i % 2 == 1) v = -v;
    all_zero = all_zero && v.is_zero();
    y.push_back(std::move(v));
  }
  if (all_zero) throw Error(ErrorCode::kPointOnCentre, "point lies on the blowdown centre; the fibre is a line");
  return y;
}

MultiPoly determinantal_quartic(const ModelTriple& m) {
  PolyMatrix pencil(4, std::vector<MultiPoly>(4, MultiPoly(3)));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      std::vector<MultiPoly::Term> terms;
      for (std::size_t i = 0; i < 3; ++i)
        if (!m.matrices[i](a, b).is_zero())
          terms.emplace_back(Monomial::variable(static_cast<int>(i)), m.matrices[i](a, b));
      pencil[a][b] = MultiPoly::from_terms(3, std::move(terms));
    }
  return poly_det(pencil);
}

CMatrix pencil_at(const std::array<CMatrix, 3>& matrices, std::span<const Cyclotomic> p) {
  if (p.size() != 3) throw Error(ErrorCode::kArityMismatch, "points of P^2 have three coordinates");
  CMatrix out(4, 4);
  for (std::size_t i = 0; i < 3; ++i)
    if (!p[i].is_zero()) out = out + p[i] * matrices[i];
  return out;
}

bool quartic_smooth(const MultiPoly& q) {
  if (q.nvars() != 3 || q.total_degree() != 4 || !q.is_homogeneous())
    throw Error(ErrorCode::kWrongShape, "quartic_smooth expects a ternary quartic form");
  return projective_empty({3, {q.derivative(0), q.derivative(1), q.derivative(2)}});
}

bool rank_locus_check(const ModelTriple& m, Side side) {
  return projective_empty({4, all_minors(coeff_matrix(m, side), 2)});
}

const char* smoothness_name(Smoothness s) {
  switch (s) {
    case Smoothness::kSmooth: return "smooth";
    case Smoothness::kSingular: return "singular";
    case Smoothness::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

Smoothness chart_smoothness(const std::array<MultiPoly, 3>& forms, int xi, int yj,
                            const GroebnerOptions& options) {
  const std::array<int, 2> chart{xi, 4 + yj};
  std::vector<int> free_vars;
  for (int v = 0; v < 8; ++v)
    if (v != chart[0] && v != chart[1]) free_vars.push_back(v);
  Ideal ideal{8, {}};
  PolyMatrix jac;
  for (const auto& f : forms) {
    const MultiPoly g = f.dehomogenize(chart);
    ideal.generators.push_back(g);
    std::vector<MultiPoly> row;
    for (int v : free_vars) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  for (auto& minor : all_minors(jac, 3))
    if (!minor.is_zero()) ideal.generators.push_back(std::move(minor));
  try {
    return is_unit_ideal(ideal, options) ? Smoothness::kSmooth : Smoothness::kSingular;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDegreeCapExceeded) return Smoothness::kInconclusive;
    throw;
  }
}

}  // namespace

FullSmoothness full_smoothness(const ModelTriple& m, const GroebnerOptions& options) {
  const auto forms = bilinear_forms(m, Side::kFirst);
  std::vector<std::future<Smoothness>> tasks;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      tasks.push_back(std::async(std::launch::async, chart_smoothness, std::cref(forms), i, j,
                                 std::cref(options)));
  FullSmoothness result;
  bool inconclusive = false, singular = false;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    result.charts[k] = tasks[k].get();
    singular = singular || result.charts[k] == Smoothness::kSingular;
    inconclusive = inconclusive || result.charts[k] == Smoothness::kInconclusive;
  }
  result.verdict = singular ? Smoothness::kSingular
                            : (inconclusive ? Smoothness::kInconclusive : Smoothness::kSmooth);
  return result;
}

Point normalize_projective(Point p) {
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    const Cyclotomic inv = c.inverse();
    for (auto& x : p) x *= inv;
    return p;
  }
  return p;
}

bool projectively_equal(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  if (a.size() != b.size()) return false;
  // all 2x2 minors of the 2 x n matrix (a; b) vanish, and neither is zero
  bool a_zero = true, b_zero = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a_zero = a_zero && a[i].is_zero();
    b_zero = b_zero && b[i].is_zero();
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  }
  return !a_zero && !b_zero;
}

Point quartic_point_to_curve_point(const ModelTriple& m, std::span<const Cyclotomic> p, Side side) {
  if (!determinantal_quartic(m).evaluate(p).is_zero())
    throw Error(ErrorCode::kPointNotOnCurve, "point is not on the determinantal quartic");
  const ModelTriple t = side == Side::kFirst ? m : transposed(m);
  // x^T A(p) = 0, i.e. the right kernel of A(p)^T
  const auto kernel = nullspace(pencil_at(t.matrices, p).transpose());
  if (kernel.size() != 1)
    throw Error(ErrorCode::kKernelDimension,
                "kernel of the pencil matrix has dimension " + std::to_string(kernel.size()));
  return normalize_projective(kernel.front());
}

Point curve_point_to_quartic_point(const ModelTriple& m, std::span<const Cyclotomic> c, Side side) {
  const CMatrix l = coeff_matrix_at(m, side, c);
  const std::size_t r = rank(l);
  if (r == 3) throw Error(ErrorCode::kPointNotOnCurve, "point is not on the blowdown centre");
  if (r != 2)
    throw Error(ErrorCode::kRankDrop, "coefficient matrix has rank " + std::to_string(r) + " at the point");
  const auto kernel = nullspace(l.transpose());
  return normalize_projective(kernel.front());
}

std::vector<Point> find_quartic_points(const MultiPoly& q, int height) {
  std::vector<Point> out;
  for (int a = -height; a <= height; ++a)
    for (int b = -height; b <= height; ++b)
      for (int c = -height; c <= height; ++c) {
        // one representative per line through the origin
        const int first = a != 0 ? a : (b != 0 ? b : c);
        if (first <= 0) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const Point p{Cyclotomic(static_cast<long>(a)), Cyclotomic(static_cast<long>(b)),
                      Cyclotomic(static_cast<long>(c))};
        if (q.evaluate(p).is_zero()) out.push_back(normalize_projective(p));
      }
  return out;
}

}  // namespace fano212
