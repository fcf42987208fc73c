#include "fano212/action.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fano212/error.hpp"

namespace fano212 {

CMatrix weight_matrix(int order, const std::array<int, 4>& weights) {
  CMatrix d(4, 4);
  for (std::size_t i = 0; i < 4; ++i) d(i, i) = root_of_unity(order, weights[i]);
  return d;
}

namespace {

// Smallest k >= 1 with D^k scalar, i.e. k (r_i - r_0) = 0 mod n for all i.
int scalar_power(int n, const std::array<int, 4>& r) {
  for (int k = 1; k <= n; ++k) {
    bool scalar = true;
    for (int i = 1; i < 4; ++i)
      scalar = scalar && mod_floor(static_cast<std::int64_t>(k) * (r[i] - r[0]), n) == 0;
    if (scalar) return k;
  }
  return n;
}

}  // namespace

int projective_order(const SwapActionSpec& spec) {
  if (spec.order < 1) throw Error(ErrorCode::kInvalidOrder, "order must be positive");
  const int n = spec.order;
  if (spec.swap) {
    // sigma^(2k) = (D^k, D^k); odd powers still exchange the factors
    return 2 * scalar_power(n, spec.weights);
  }
  const int a = scalar_power(n, spec.weights);
  const int b = scalar_power(n, spec.second_weights);
  return std::lcm(a, b);
}

void validate_action(const SwapActionSpec& spec) {
  if (spec.order < 1) throw Error(ErrorCode::kInvalidOrder, "order must be positive");
  if (spec.swap) {
    if (spec.order % 2 != 0)
      throw Error(ErrorCode::kInvalidOrder,
                  "a factor-swapping action has even order; order " + std::to_string(spec.order) + " given");
    for (int i = 1; i < 4; ++i)
      if ((spec.weights[i] - spec.weights[0]) % 2 != 0)
        throw Error(ErrorCode::kParityViolation,
                    "weights must be congruent mod 2; the projective order of this action is " +
                        std::to_string(projective_order(spec)) + ", not " + std::to_string(spec.order));
  }
  const int actual = projective_order(spec);
  if (actual != spec.order)
    throw Error(ErrorCode::kOrderMismatch, "declared order " + std::to_string(spec.order) +
                                               " but the projective order is " + std::to_string(actual));
}

CMatrix act_on_form(const CMatrix& m, const SwapActionSpec& spec) {
  const CMatrix d = weight_matrix(spec.order, spec.weights);
  if (spec.swap) return d * m.transpose();
  return d * m * weight_matrix(spec.order, spec.second_weights);
}

CMatrix form_action_matrix(const SwapActionSpec& spec) {
  CMatrix t(16, 16);
  for (std::size_t k = 0; k < 16; ++k) {
    CMatrix e(4, 4);
    e(k / 4, k % 4) = Cyclotomic(1L);
    const CMatrix img = act_on_form(e, spec);
    for (std::size_t l = 0; l < 16; ++l) t(l, k) = img.data()[l];
  }
  return t;
}

int determinant_weight(const SwapActionSpec& spec) {
  long sum = 0;
  for (int w : spec.weights) sum += w;
  if (!spec.swap)
    for (int w : spec.second_weights) sum += w;
  return mod_floor(sum, spec.order);
}

CMatrix action_on_forms(const ModelTriple& m, const SwapActionSpec& spec) {
  const CMatrix basis = stacked_forms(m.matrices);
  CMatrix s(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const CMatrix img = act_on_form(m.matrices[i], spec);
    const auto coords = solve(basis, std::span<const Cyclotomic>(img.data()));
    if (!coords)
      throw Error(ErrorCode::kPencilNotInvariant,
                  "the action does not preserve X: sigma^*F" + std::to_string(i + 1) +
                      " leaves the span of the defining forms");
    for (std::size_t k = 0; k < 3; ++k) s(k, i) = (*coords)[k];
  }
  return s;
}

MultiPoly characteristic_polynomial(const CMatrix& s) {
  const std::size_t n = s.rows();
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = MultiPoly::constant(1, s(i, j));
      if (i == j) m[i][j] -= MultiPoly::variable(1, 0);
    }
  return poly_det(m);
}

InvariantPencil invariant_pencil(const ModelTriple& m, const SwapActionSpec& spec) {
  const CMatrix s = action_on_forms(m, spec);
  const MultiPoly chi = characteristic_polynomial(s);
  InvariantPencil out;
  std::size_t found = 0;
  for (int k = 0; k < spec.order && found < 3; ++k) {
    const Cyclotomic lambda = root_of_unity(spec.order, k);
    const std::array<Cyclotomic, 1> at{lambda};
    if (!chi.evaluate(at).is_zero()) continue;
    const auto vecs = nullspace(s - lambda * CMatrix::identity(3));
    for (const auto& v : vecs) {
      if (found == 3) break;
      CMatrix mat(4, 4);
      for (std::size_t i = 0; i < 3; ++i)
        if (!v[i].is_zero()) mat = mat + v[i] * m.matrices[i];
      out.matrices[found] = std::move(mat);
      out.exponents[found] = k;
      ++found;
    }
  }
  if (found != 3)
    throw Error(ErrorCode::kNotDiagonalisable,
                "the action on the pencil is not diagonalisable with eigenvalues in mu_" +
                    std::to_string(spec.order));
  return out;
}

SwapActionSpec square_action(const SwapActionSpec& spec) {
  if (!spec.swap) throw Error(ErrorCode::kSemantic, "square_action expects a swap action");
  SwapActionSpec sq;
  sq.swap = false;
  sq.order = spec.order / 2;
  // D^1 on both factors, rescaled by w^-r0 so that every exponent is even
  for (std::size_t i = 0; i < 4; ++i) {
    sq.weights[i] = mod_floor((spec.weights[i] - spec.weights[0]) / 2, sq.order);
    sq.second_weights[i] = sq.weights[i];
  }
  return sq;
}

bool is_gfano(const SwapActionSpec& spec) { return spec.swap; }

std::string to_string(const DivisorClass& c) {
  auto term = [](long k, const char* sym) {
    if (k == 1) return std::string(sym);
    if (k == -1) return "-" + std::string(sym);
    return std::to_string(k) + sym;
  };
  if (c.a == 0 && c.b == 0) return "0";
  if (c.b == 0) return term(c.a, "H");
  if (c.a == 0) return term(c.b, "E");
  std::string s = term(c.a, "H");
  s += c.b < 0 ? " - " : " + ";
  s += term(c.b < 0 ? -c.b : c.b, "E");
  return s;
}

DivisorClass picard_involution(const DivisorClass& c) {
  const DivisorClass h_image{3, -1};
  const DivisorClass e_image{8, -3};
  return c.a * h_image + c.b * e_image;
}

std::vector<DivisorClass> invariant_sublattice(bool swap) {
  if (swap) return {-1L * kCanonical};
  return {kHyperplane, kExceptional};
}

// ---------------------------------------------------------------------------
// Instance generator

std::vector<std::vector<Cyclotomic>> form_eigenspace(const SwapActionSpec& spec, int exponent) {
  const CMatrix t = form_action_matrix(spec);
  return nullspace(t - root_of_unity(spec.order, exponent) * CMatrix::identity(16));
}

namespace {

class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : rng_(seed) {}
  // uniform in [lo, hi]; modulo bias is irrelevant here and keeps the stream
  // identical across standard libraries
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
};

CMatrix combine(const std::vector<std::vector<Cyclotomic>>& basis, std::span<const Cyclotomic> c) {
  std::vector<Cyclotomic> flat(16, Cyclotomic(0L));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c[k].is_zero()) continue;
    for (std::size_t l = 0; l < 16; ++l)
      if (!basis[k][l].is_zero()) flat[l] += c[k] * basis[k][l];
  }
  return CMatrix(4, 4, std::move(flat));
}

// x^T B for a 4x4 B, as 4 entries
std::vector<Cyclotomic> row_times(std::span<const long> x, std::span<const Cyclotomic> flat) {
  std::vector<Cyclotomic> out(4, Cyclotomic(0L));
  for (std::size_t a = 0; a < 4; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < 4; ++b) out[b] += Cyclotomic(x[a]) * flat[4 * a + b];
  }
  return out;
}

}  // namespace

ModelTriple random_equivariant_model(const SwapActionSpec& spec, const std::array<int, 3>& s,
                                     std::uint64_t seed, const GeneratorOptions& options) {
  std::array<std::vector<std::vector<Cyclotomic>>, 3> bases;
  for (std::size_t j = 0; j < 3; ++j) {
    bases[j] = form_eigenspace(spec, s[j]);
    if (bases[j].empty())
      throw Error(ErrorCode::kEmptyEigenspace,
                  "no (1,1)-form has eigenvalue w^" + std::to_string(s[j]) + " for this action");
  }
  const std::size_t total = bases[0].size() + bases[1].size() + bases[2].size();
  SeedStream rng(seed);
  std::string last_failure = "none";
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Cyclotomic> coeffs;
    if (options.plant_point) {
      std::array<long, 4> x{};
      std::array<long, 3> p{};
      do {
        for (auto& v : x) v = rng.uniform(-2, 2);
      } while (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }));
      do {
        for (auto& v : p) v = rng.uniform(-2, 2);
      } while (std::all_of(p.begin(), p.end(), [](long v) { return v == 0; }));
      // x^T (sum_j p_j M_j) = 0 is linear in the combination coefficients
      CMatrix constraint(4, total);
      std::size_t col = 0;
      for (std::size_t j = 0; j < 3; ++j)
        for (const auto& b : bases[j]) {
          const auto r = row_times(x, b);
          for (std::size_t k = 0; k < 4; ++k) constraint(k, col) = Cyclotomic(p[j]) * r[k];
          ++col;
        }
      const auto sols = nullspace(constraint);
      coeffs.assign(total, Cyclotomic(0L));
      for (const auto& v : sols) {
        const Cyclotomic w(rng.uniform(-3, 3));
        if (w.is_zero()) continue;
        for (std::size_t k = 0; k < total; ++k) coeffs[k] += w * v[k];
      }
    } else {
      for (std::size_t k = 0; k < total; ++k) coeffs.emplace_back(rng.uniform(-3, 3));
    }

    ModelTriple model;
    model.conductor = spec.order;
    std::size_t offset = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      model.matrices[j] =
          combine(bases[j], std::span<const Cyclotomic>(coeffs).subspan(offset, bases[j].size()));
      offset += bases[j].size();
    }
    if (rank(stacked_forms(model.matrices)) != 3) {
      last_failure = "dependent forms";
      continue;
    }
    const MultiPoly q = determinantal_quartic(model);
    if (q.is_zero()) {
      last_failure = "identically zero quartic";
      continue;
    }
    if (!quartic_smooth(q)) {
      last_failure = "singular quartic";
      continue;
    }
    return model;
  }
  throw Error(ErrorCode::kGeneratorExhausted,
              "no admissible model after " + std::to_string(options.max_attempts) +
                  " draws; last failure: " + last_failure);
}

ModelTriple random_equivariant_model(int n, const std::array<int, 4>& r, const std::array<int, 3>& s,
                                     std::uint64_t seed, const GeneratorOptions& options) {
  SwapActionSpec spec;
  spec.order = n;
  spec.weights = r;
  spec.swap = true;
  for (int i = 1; i < 4; ++i)
    if ((r[i] - r[0]) % 2 != 0)
      throw Error(ErrorCode::kParityViolation, "generator weights must be congruent mod 2");
  return random_equivariant_model(spec, s, seed, options);
}

}  // namespace fano212
