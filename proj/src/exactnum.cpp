#include "fano212/exactnum.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fano212/error.hpp"

namespace fano212 {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kArityMismatch: return "arity-mismatch";
    case ErrorCode::kNotSquare: return "not-square";
    case ErrorCode::kWrongShape: return "wrong-shape";
    case ErrorCode::kNotHomogeneous: return "not-homogeneous";
    case ErrorCode::kDegreeCapExceeded: return "degree-cap-exceeded";
    case ErrorCode::kDependentForms: return "dependent-forms";
    case ErrorCode::kDegenerateQuartic: return "degenerate-quartic";
    case ErrorCode::kRankDrop: return "rank-drop";
    case ErrorCode::kPointOnCentre: return "point-on-centre";
    case ErrorCode::kPointNotOnCurve: return "point-not-on-curve";
    case ErrorCode::kKernelDimension: return "kernel-dimension";
    case ErrorCode::kPencilNotInvariant: return "pencil-not-invariant";
    case ErrorCode::kNotDiagonalisable: return "not-diagonalisable";
    case ErrorCode::kInvalidOrder: return "invalid-order";
    case ErrorCode::kParityViolation: return "parity-violation";
    case ErrorCode::kOrderMismatch: return "order-mismatch";
    case ErrorCode::kEmptyEigenspace: return "empty-eigenspace";
    case ErrorCode::kGeneratorExhausted: return "generator-exhausted";
    case ErrorCode::kHypothesisViolated: return "hypothesis-violated";
    case ErrorCode::kNotEigenvector: return "not-eigenvector";
    case ErrorCode::kNotRootOfUnity: return "not-root-of-unity";
    case ErrorCode::kCharacterOrderMismatch: return "character-order-mismatch";
    case ErrorCode::kInconclusive: return "inconclusive";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kSemantic: return "semantic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return RationalPoly(std::move(v));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  return a + (-b);
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return RationalPoly(std::move(v));
}

void RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b,
                          RationalPoly& quotient, RationalPoly& remainder) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? a.degree() - db + 1 : 0);
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[k] / b.leading();
    if (sgn(c) == 0) continue;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b.coeffs_[i];
  }
  quotient = RationalPoly(std::move(q));
  remainder = RationalPoly(std::move(r));
}

RationalPoly RationalPoly::gcdext(const RationalPoly& a, const RationalPoly& b,
                                  RationalPoly& u, RationalPoly& v) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0 = constant(1), s1;
  RationalPoly t0, t1 = constant(1);
  while (!r1.is_zero()) {
    RationalPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly s2 = s0 - q * s1;
    RationalPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    u = {};
    v = {};
    return r0;
  }
  Rational lc_inv = 1 / r0.leading();
  u = lc_inv * s0;
  v = lc_inv * t0;
  return lc_inv * r0;
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
  return os << p.to_string();
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and fields

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

RationalPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "cyclotomic polynomial needs N >= 1");
  // x^N - 1 = prod_{d | N} Phi_d
  RationalPoly p = RationalPoly::monomial(1, n) - RationalPoly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RationalPoly q, r;
    RationalPoly::divmod(p, cyclotomic_polynomial(d), q, r);
    p = std::move(q);
  }
  return p;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor),
      degree_(euler_phi(conductor)),
      modulus_(cyclotomic_polynomial(conductor)) {
  const auto d = static_cast<std::size_t>(degree_);
  std::vector<Rational> cur(d);
  cur[0] = 1;
  powers_.reserve(static_cast<std::size_t>(conductor_));
  for (int k = 0; k < conductor_; ++k) {
    powers_.push_back(cur);
    // multiply by z and fold the overflow through the monic modulus
    Rational top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * modulus_.coeffs()[i];
  }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) throw Error(ErrorCode::kInvalidOrder, "conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(conductor);
  if (it == registry.end())
    it = registry.emplace(conductor, std::make_unique<CyclotomicField>(conductor)).first;
  return *it->second;
}

const std::vector<Rational>& CyclotomicField::power(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(mod_floor(k, conductor_))];
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value)
    : field_(&CyclotomicField::get(1)), coeffs_{value} {}

Cyclotomic::Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_coeffs(int conductor, const std::vector<Rational>& c) {
  const CyclotomicField& f = CyclotomicField::get(conductor);
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<Rational> out(d);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    if (k < d) {
      out[k] += c[k];
    } else {
      const auto& p = f.power(static_cast<std::int64_t>(k));
      for (std::size_t i = 0; i < d; ++i)
        if (sgn(p[i]) != 0) out[i] += c[k] * p[i];
    }
  }
  return Cyclotomic(&f, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_constant_only() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const { return is_constant_only(); }

Cyclotomic Cyclotomic::lift(int target) const {
  const int n = conductor();
  if (target == n) return *this;
  if (target % n != 0)
    throw Error(ErrorCode::kArityMismatch, "cannot lift conductor " + std::to_string(n) +
                                               " to " + std::to_string(target));
  const CyclotomicField& f = CyclotomicField::get(target);
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<Rational> out(d);
  const std::int64_t step = target / n;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& p = f.power(static_cast<std::int64_t>(k) * step);
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(p[i]) != 0) out[i] += coeffs_[k] * p[i];
  }
  return Cyclotomic(&f, std::move(out));
}

std::optional<Cyclotomic> Cyclotomic::descend(int target) const {
  if (target < 1) throw Error(ErrorCode::kArityMismatch, "conductor must be positive");
  if (target % conductor() == 0) return lift(target);
  const int l = std::lcm(conductor(), target);
  const std::vector<Rational> value = lift(l).coeffs_;
  const CyclotomicField& big = CyclotomicField::get(l);
  const auto rows = static_cast<std::size_t>(big.degree());
  const auto cols = static_cast<std::size_t>(euler_phi(target));
  // columns: zeta_target^j written in Q(zeta_l); last column: the value
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& p = big.power(static_cast<std::int64_t>(j) * (l / target));
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = p[i];
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][cols] = value[i];
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col <= cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    if (col == cols) return std::nullopt;  // inconsistent
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<Rational> out(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = a[i][cols];
  return from_coeffs(target, out);
}

namespace {

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Cyclotomic(field_, std::move(v));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (field_ == b.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  if (b.is_constant_only()) {
    coeffs_[0] += b.coeffs_[0];
    return *this;
  }
  if (is_constant_only()) {
    Rational c = coeffs_[0];
    *this = b;
    coeffs_[0] += c;
    return *this;
  }
  const int m = lcm_int(conductor(), b.conductor());
  *this = lift(m);
  return *this += b.lift(m);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this += -b; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  if (b.is_constant_only()) {
    for (auto& c : coeffs_) c *= b.coeffs_[0];
    return *this;
  }
  if (is_constant_only()) {
    Rational c = coeffs_[0];
    *this = b;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (field_ != b.field_) {
    const int m = lcm_int(conductor(), b.conductor());
    *this = lift(m);
    return *this *= b.lift(m);
  }
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(b.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& p = field_->power(static_cast<std::int64_t>(k));
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(p[i]) != 0) out[i] += prod[k] * p[i];
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in Q(zeta_N)");
  if (is_constant_only()) {
    std::vector<Rational> v(coeffs_.size());
    v[0] = 1 / coeffs_[0];
    return Cyclotomic(field_, std::move(v));
  }
  RationalPoly u, v;
  RationalPoly g = RationalPoly::gcdext(RationalPoly(coeffs_), field_->modulus(), u, v);
  // Phi_N is irreducible, so g is the constant 1 here
  (void)g;
  return from_coeffs(conductor(), u.coeffs());
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) { return *this *= b.inverse(); }

Cyclotomic Cyclotomic::pow(std::int64_t exponent) const {
  Cyclotomic base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  std::vector<Rational> one(coeffs_.size());
  one[0] = 1;
  Cyclotomic acc(field_, std::move(one));
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  const bool ca = a.is_constant_only();
  const bool cb = b.is_constant_only();
  if (ca || cb) return ca && cb && a.coeffs_[0] == b.coeffs_[0];
  const int m = std::lcm(a.conductor(), b.conductor());
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string Cyclotomic::to_string() const { return format_cyclotomic(*this, conductor()); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

Cyclotomic root_of_unity(int n, std::int64_t k) {
  const CyclotomicField& f = CyclotomicField::get(n);
  return Cyclotomic::from_coeffs(n, f.power(k));
}

std::optional<int> as_power_of_root(const Cyclotomic& a, int n) {
  if (n < 1 || a.is_zero()) return std::nullopt;
  const int m = std::lcm(a.conductor(), n);
  const Cyclotomic lifted = a.lift(m);
  const CyclotomicField& f = CyclotomicField::get(m);
  const std::int64_t step = m / n;
  for (int k = 0; k < n; ++k)
    if (lifted.coeffs() == f.power(k * step)) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, int conductor)
      : text_(text), conductor_(conductor) {}

  Cyclotomic parse() {
    std::vector<Rational> acc;
    skip_ws();
    if (at_end()) fail("empty literal");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, power] = term();
      if (acc.size() <= power) acc.resize(power + 1);
      acc[power] += sign * coeff;
    }
    return Cyclotomic::from_coeffs(conductor_, acc);
  }

 private:
  std::pair<Rational, std::size_t> term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip_ws();
      if (at_end() || peek() != '*') return {coeff, 0};
      ++pos_;
      skip_ws();
    }
    if (at_end() || peek() != 'z') fail(have_coeff ? "expected 'z' after '*'" : "expected a number or 'z'");
    ++pos_;
    skip_ws();
    std::size_t power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      power = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        power = power * 10 + static_cast<std::size_t>(peek() - '0');
        if (power > 1000000) fail("exponent too large");
        ++pos_;
      }
    }
    return {coeff, power};
  }

  Rational number() {
    std::string num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      std::string den = digits();
      if (Integer(den) == 0) fail("zero denominator");
      Rational q{Integer(num), Integer(den)};
      q.canonicalize();
      return q;
    }
    return Rational(Integer(num));
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(text_[pos_++]);
    return s;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kSyntax, "column " + std::to_string(pos_ + 1) + ": " + msg,
                static_cast<int>(pos_ + 1));
  }

  std::string_view text_;
  int conductor_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text, int conductor) {
  return LiteralParser(text, conductor).parse();
}

std::string format_cyclotomic(const Cyclotomic& a, int conductor) {
  const auto d = a.descend(conductor);
  if (!d)
    throw Error(ErrorCode::kArityMismatch, a.to_string() + " does not lie in Q(zeta_" + std::to_string(conductor) + ")");
  const Cyclotomic& v = *d;
  const auto& c = v.coeffs();
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (sgn(c[k]) == 0) continue;
    const Rational mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << "-";
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return first ? "0" : os.str();
}

}  // namespace fano212
