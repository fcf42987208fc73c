// Buchberger's algorithm with the product and chain criteria, normal
// selection strategy, and a final inter-reduction to the reduced basis.

#include <algorithm>
#include <set>
#include <tuple>

#include "fano212/error.hpp"
#include "fano212/polyalg.hpp"

namespace fano212 {

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> divisors) {
  std::vector<MultiPoly::Term> remainder;
  MultiPoly cur = p;
  while (!cur.is_zero()) {
    const Monomial lm = cur.leading_monomial();
    const MultiPoly* div = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        div = &g;
        break;
      }
    }
    if (div != nullptr) {
      const Cyclotomic c = div->leading_coefficient().is_rational() &&
                                   div->leading_coefficient().rational_part() == 1
                               ? cur.leading_coefficient()
                               : cur.leading_coefficient() / div->leading_coefficient();
      cur = MultiPoly::sub_mul(cur, c, div->leading_monomial().quotient_of(lm), *div);
    } else {
      remainder.emplace_back(lm, cur.leading_coefficient());
      cur = cur.tail();
    }
  }
  return MultiPoly::from_terms(p.nvars(), std::move(remainder));
}

namespace {

struct PairKey {
  Monomial lcm;
  std::size_t i;
  std::size_t j;

  bool operator<(const PairKey& o) const {
    const int c = grevlex_compare(lcm, o.lcm);
    if (c != 0) return c < 0;
    return std::tie(i, j) < std::tie(o.i, o.j);
  }
};

class Buchberger {
 public:
  Buchberger(int nvars, const GroebnerOptions& options) : nvars_(nvars), options_(options) {}

  // Returns false when the unit ideal was detected early.
  bool add(MultiPoly h) {
    h = h.monic();
    if (h.is_constant()) {
      unit_ = true;
      if (options_.stop_on_unit) return false;
    }
    const std::size_t t = basis_.size();
    for (std::size_t i = 0; i < t; ++i) {
      queue_.insert({basis_[i].leading_monomial().lcm(h.leading_monomial()), i, t});
      pending_.insert({i, t});
    }
    basis_.push_back(std::move(h));
    return true;
  }

  void run() {
    while (!queue_.empty()) {
      const PairKey key = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({key.i, key.j});
      const Monomial& li = basis_[key.i].leading_monomial();
      const Monomial& lj = basis_[key.j].leading_monomial();
      if (li.coprime(lj)) continue;
      if (chain_criterion(key)) continue;
      if (key.lcm.degree > options_.degree_cap)
        throw Error(ErrorCode::kDegreeCapExceeded,
                    "S-pair degree " + std::to_string(key.lcm.degree) + " exceeds cap " +
                        std::to_string(options_.degree_cap));
      MultiPoly s = MultiPoly::sub_mul(MultiPoly(nvars_), Cyclotomic(-1L), li.quotient_of(key.lcm),
                                       basis_[key.i]);
      s = MultiPoly::sub_mul(s, Cyclotomic(1L), lj.quotient_of(key.lcm), basis_[key.j]);
      MultiPoly h = normal_form(s, basis_);
      if (!h.is_zero() && !add(std::move(h))) return;
    }
  }

  bool unit() const { return unit_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }

 private:
  bool chain_criterion(const PairKey& key) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == key.i || k == key.j) continue;
      if (!basis_[k].leading_monomial().divides(key.lcm)) continue;
      if (pending_.count({std::min(key.i, k), std::max(key.i, k)}) != 0) continue;
      if (pending_.count({std::min(key.j, k), std::max(key.j, k)}) != 0) continue;
      return true;
    }
    return false;
  }

  int nvars_;
  GroebnerOptions options_;
  std::vector<MultiPoly> basis_;
  std::set<PairKey> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  bool unit_ = false;
};

}  // namespace

Ideal groebner(const Ideal& ideal, const GroebnerOptions& options) {
  for (const auto& g : ideal.generators)
    if (g.nvars() != ideal.nvars) throw Error(ErrorCode::kArityMismatch, "generator arity differs from ideal");

  const MultiPoly one = MultiPoly::constant(ideal.nvars, Cyclotomic(1L));
  Buchberger bb(ideal.nvars, options);
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    MultiPoly h = normal_form(g, bb.basis());
    if (h.is_zero()) continue;
    if (!bb.add(std::move(h))) return {ideal.nvars, {one}};
  }
  bb.run();
  if (bb.unit()) return {ideal.nvars, {one}};

  const auto& g = bb.basis();
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = g[j].leading_monomial();
      const Monomial& li = g[i].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return {ideal.nvars, std::move(reduced)};
}

bool is_unit_ideal(const Ideal& ideal, const GroebnerOptions& options) {
  GroebnerOptions opts = options;
  opts.stop_on_unit = true;
  const Ideal gb = groebner(ideal, opts);
  return gb.generators.size() == 1 && gb.generators.front().is_constant();
}

std::vector<Monomial> leading_monomials(const Ideal& basis) {
  std::vector<Monomial> out;
  out.reserve(basis.generators.size());
  for (const auto& g : basis.generators) out.push_back(g.leading_monomial());
  return out;
}

bool projective_empty(const Ideal& ideal, std::span<const int> block) {
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous()) throw Error(ErrorCode::kNotHomogeneous, "projective_empty needs homogeneous generators");
  std::vector<int> vars(block.begin(), block.end());
  if (vars.empty())
    for (int v = 0; v < ideal.nvars; ++v) vars.push_back(v);
  const Ideal gb = groebner(ideal);
  const auto lms = leading_monomials(gb);
  for (int v : vars) {
    const bool found = std::any_of(lms.begin(), lms.end(), [v](const Monomial& m) {
      return m.degree == 0 || m.is_pure_power(v);
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace fano212
