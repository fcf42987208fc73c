#include "fano212/polyalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fano212/error.hpp"

namespace fano212 {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(std::span<const int> e) {
  if (e.size() > kMaxVars) throw Error(ErrorCode::kArityMismatch, "too many variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw Error(ErrorCode::kArityMismatch, "negative exponent");
    m.exp[i] = static_cast<std::uint16_t>(e[i]);
    m.degree += e[i];
  }
  return m;
}

Monomial Monomial::variable(int index) {
  Monomial m;
  m.exp[static_cast<std::size_t>(index)] = 1;
  m.degree = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(exp[i], other.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
  m.degree = other.degree - degree;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  m.degree = degree + other.degree;
  return m;
}

bool Monomial::is_pure_power(int var) const {
  return degree > 0 && exp[static_cast<std::size_t>(var)] == degree;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw Error(ErrorCode::kArityMismatch, "variable count must be in 1.." + std::to_string(kMaxVars));
}

MultiPoly MultiPoly::constant(int nvars, const Cyclotomic& c) {
  return term(nvars, Monomial{}, c);
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorCode::kArityMismatch, "variable index out of range");
  return term(nvars, Monomial::variable(index), Cyclotomic(1L));
}

MultiPoly MultiPoly::term(int nvars, const Monomial& m, const Cyclotomic& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.first, b.first) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree == 0);
}

int MultiPoly::total_degree() const {
  // grevlex is degree-compatible
  return terms_.empty() ? -1 : terms_.front().first.degree;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.degree != terms_.front().first.degree) return false;
  return true;
}

Cyclotomic MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return Cyclotomic(0L);
}

Cyclotomic MultiPoly::evaluate(std::span<const Cyclotomic> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(ErrorCode::kArityMismatch, "evaluation point has wrong length");
  Cyclotomic acc(0L);
  for (const auto& [m, c] : terms_) {
    Cyclotomic v = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.exp[i] != 0) v *= point[i].pow(m.exp[i]);
    acc += v;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(ErrorCode::kArityMismatch, "substitution needs one image per variable");
  const int out_vars = images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != out_vars) throw Error(ErrorCode::kArityMismatch, "substitution images disagree on arity");
  // cache powers of each image
  std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(nvars_));
  MultiPoly result(out_vars);
  for (const auto& [m, c] : terms_) {
    MultiPoly v = constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      const int e = m.exp[i];
      if (e == 0) continue;
      auto& cache = powers[static_cast<std::size_t>(i)];
      if (cache.empty()) cache.push_back(constant(out_vars, Cyclotomic(1L)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      v = v * cache[static_cast<std::size_t>(e)];
    }
    result += v;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exp[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial d = m;
    d.exp[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e - 1);
    d.degree -= 1;
    out.emplace_back(d, Cyclotomic(static_cast<long>(e)) * c);
  }
  return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::dehomogenize(std::span<const int> chart) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    for (int v : chart) {
      if (v < 0 || v >= nvars_) throw Error(ErrorCode::kArityMismatch, "chart variable out of range");
      d.degree -= d.exp[static_cast<std::size_t>(v)];
      d.exp[static_cast<std::size_t>(v)] = 0;
    }
    out.emplace_back(d, c);
  }
  return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  const Cyclotomic inv = leading_coefficient().inverse();
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second *= inv;
  return p;
}

MultiPoly MultiPoly::tail() const {
  MultiPoly p(nvars_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly acc = constant(nvars_, Cyclotomic(1L));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

void check_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::kArityMismatch, "polynomials over different variable counts");
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  check_arity(*this, b);
  if (b.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == b.terms_.size()) cmp = 1;
    else cmp = grevlex_compare(terms_[i].first, b.terms_[j].first);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Cyclotomic s = terms_[i].second + b.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) { return *this += -b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_arity(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
  std::vector<MultiPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  return MultiPoly::from_terms(a.nvars(), std::move(out));
}

MultiPoly operator*(const Cyclotomic& c, const MultiPoly& a) {
  if (c.is_zero()) return MultiPoly(a.nvars());
  MultiPoly p = a;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

MultiPoly MultiPoly::sub_mul(const MultiPoly& a, const Cyclotomic& c, const Monomial& m,
                             const MultiPoly& b) {
  check_arity(a, b);
  MultiPoly r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      r.terms_.push_back(a.terms_[i++]);
      continue;
    }
    const Monomial mb = m * b.terms_[j].first;
    const int cmp = i == a.terms_.size() ? -1 : grevlex_compare(a.terms_[i].first, mb);
    if (cmp > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.emplace_back(mb, -(c * b.terms_[j].second));
      ++j;
    } else {
      Cyclotomic s = a.terms_[i].second - c * b.terms_[j].second;
      if (!s.is_zero()) r.terms_.emplace_back(mb, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    const bool compound = coeff.find_first_of("+-", 1) != std::string::npos ||
                          coeff.find('z') != std::string::npos;
    // a plain negative rational is written as a subtraction
    if (!first && !compound && coeff.front() == '-') {
      os << " - ";
      coeff.erase(0, 1);
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (m.degree == 0) {
      os << (compound ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff == "-1") os << "-";
    else if (coeff != "1") os << (compound ? "(" + coeff + ")" : coeff) << "*";
    bool first_var = true;
    for (int v = 0; v < nvars_; ++v) {
      if (m.exp[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      if (static_cast<std::size_t>(v) < names.size()) os << names[v];
      else os << "x" << v;
      if (m.exp[v] > 1) os << "^" << m.exp[v];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Determinants and minors

MultiPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::kNotSquare, "determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  const int nvars = m[0][0].nvars();
  MultiPoly det(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * poly_det(sub);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

std::array<MultiPoly, 4> maximal_minors(const PolyMatrix& m) {
  if (m.size() != 3)
    throw Error(ErrorCode::kWrongShape, "maximal_minors expects a 3x4 matrix");
  for (const auto& row : m)
    if (row.size() != 4) throw Error(ErrorCode::kWrongShape, "maximal_minors expects a 3x4 matrix");
  std::array<MultiPoly, 4> out{MultiPoly(m[0][0].nvars()), MultiPoly(m[0][0].nvars()),
                               MultiPoly(m[0][0].nvars()), MultiPoly(m[0][0].nvars())};
  for (std::size_t del = 0; del < 4; ++del) {
    PolyMatrix sub;
    for (const auto& row : m) {
      std::vector<MultiPoly> r;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != del) r.push_back(row[k]);
      sub.push_back(std::move(r));
    }
    out[del] = poly_det(sub);
  }
  return out;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiPoly> all_minors(const PolyMatrix& m, int k) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<std::size_t>> rsets, csets;
  std::vector<std::size_t> cur;
  combinations(rows, static_cast<std::size_t>(k), 0, cur, rsets);
  combinations(cols, static_cast<std::size_t>(k), 0, cur, csets);
  std::vector<MultiPoly> out;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      PolyMatrix sub;
      for (auto r : rs) {
        std::vector<MultiPoly> row;
        for (auto c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      out.push_back(poly_det(sub));
    }
  return out;
}

}  // namespace fano212
