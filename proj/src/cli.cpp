#include "fano212/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fano212/chars.hpp"
#include "fano212/coh.hpp"
#include "fano212/error.hpp"
#include "fano212/instance.hpp"

namespace fano212 {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string input;
  std::string format = "plain";
  bool full = false;
  bool oracle = false;
  long a = 0;
  long b = 0;
  int order = 2;
  std::vector<int> weights;
  std::vector<int> exponents;
  std::uint64_t seed = 1;
  std::string out_path;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
    case ErrorCode::kSemantic:
    case ErrorCode::kWrongShape:
    case ErrorCode::kArityMismatch:
    case ErrorCode::kInvalidOrder:
    case ErrorCode::kParityViolation:
    case ErrorCode::kOrderMismatch:
    case ErrorCode::kDependentForms:
    case ErrorCode::kDegenerateQuartic:
    case ErrorCode::kRankDrop:
    case ErrorCode::kPencilNotInvariant:
    case ErrorCode::kEmptyEigenspace:
      return kExitInvalidInput;
    case ErrorCode::kInconclusive:
    case ErrorCode::kDegreeCapExceeded:
      return kExitInconclusive;
    default:
      return kExitMathFailure;
  }
}

Instance load(const Options& opt) {
  if (opt.input.empty()) throw Error(ErrorCode::kSemantic, "this subcommand needs --input FILE");
  std::ifstream in(opt.input);
  if (!in) throw Error(ErrorCode::kSemantic, "cannot read " + opt.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

Json tuple_json(const auto& values) {
  Json a = Json::array();
  for (int v : values) a.push_back(v);
  return a;
}

Json chars_json(const CharacterMultiset& c) { return tuple_json(c.exponents()); }

Json echo(const Instance& inst) {
  Json j;
  j["conductor"] = inst.model.conductor;
  j["order"] = inst.spec.order;
  j["swap"] = inst.spec.swap;
  j["weights"] = tuple_json(inst.spec.weights);
  if (!inst.spec.swap) j["second_weights"] = tuple_json(inst.spec.second_weights);
  if (inst.exponents) j["declared_exponents"] = tuple_json(*inst.exponents);
  j["convention"] = "w = zeta_" + std::to_string(inst.spec.order) + ", chi_k(sigma) = w^k";
  return j;
}

std::array<int, 3> sorted(std::array<int, 3> s, int n) {
  for (auto& v : s) v = mod_floor(v, n);
  std::sort(s.begin(), s.end());
  return s;
}

// Recovers s from the model and compares it with the declared exponents.
InvariantPencil pencil_with_check(const Instance& inst, Json& report, bool& ok) {
  validate_model(inst.model);
  const InvariantPencil pencil = invariant_pencil(inst.model, inst.spec);
  report["exponents"] = tuple_json(pencil.exponents);
  if (inst.exponents) {
    const bool match = sorted(*inst.exponents, inst.spec.order) == sorted(pencil.exponents, inst.spec.order);
    report["declared_exponents_match"] = match;
    ok = ok && match;
  }
  return pencil;
}

int cmd_validate(const Options& opt, Json& report) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  Json checks;
  validate_model(inst.model);
  checks["model"] = "ok";
  checks["projective_order"] = projective_order(inst.spec);
  const CMatrix s = action_on_forms(inst.model, inst.spec);
  (void)s;
  checks["pencil_invariant"] = true;
  const bool smooth = quartic_smooth(determinantal_quartic(inst.model));
  checks["quartic_smooth"] = smooth;
  report["checks"] = checks;
  return smooth ? kExitOk : kExitMathFailure;
}

int cmd_smooth(const Options& opt, Json& report) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  validate_model(inst.model);
  const bool quartic = quartic_smooth(determinantal_quartic(inst.model));
  const bool first = rank_locus_check(inst.model, Side::kFirst);
  const bool second = rank_locus_check(inst.model, Side::kSecond);
  report["quartic_smooth"] = quartic;
  report["rank_at_least_2_first"] = first;
  report["rank_at_least_2_second"] = second;
  int code = quartic && first && second ? kExitOk : kExitMathFailure;
  if (opt.full) {
    const FullSmoothness fs = full_smoothness(inst.model);
    Json charts = Json::array();
    for (std::size_t k = 0; k < fs.charts.size(); ++k) {
      Json c;
      c["chart"] = "x" + std::to_string(k / 4) + "=1,y" + std::to_string(k % 4) + "=1";
      c["result"] = smoothness_name(fs.charts[k]);
      charts.push_back(c);
    }
    report["full"] = {{"verdict", smoothness_name(fs.verdict)}, {"charts", charts}};
    if (fs.verdict == Smoothness::kSingular) code = kExitMathFailure;
    else if (fs.verdict == Smoothness::kInconclusive && code == kExitOk) code = kExitInconclusive;
  }
  return code;
}

Json lattice_json(const std::vector<DivisorClass>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(to_string(g));
  return a;
}

int cmd_gfano(const Options& opt, Json& report) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  const bool g = is_gfano(inst.spec);
  report["gfano"] = g;
  report["invariant_picard"] = lattice_json(invariant_sublattice(inst.spec.swap));
  report["explanation"] = g ? "sigma swaps H and H' = 3H - E; Pic^G(X) = Z[-K_X] = Z[H + H']"
                            : "sigma preserves H and H'; Pic^G(X) = Z[H] + Z[H'] has rank 2";
  return kExitOk;
}

struct CharacterData {
  CharacterMultiset jac;
  CharacterMultiset ij;
};

CharacterData formula_characters(const SwapActionSpec& spec, const std::array<int, 3>& s) {
  const CharacterMultiset jac = jac_curve_characters(s, spec);
  return {jac, spec.swap ? ij_characters(s, spec.weights, spec.order) : jac};
}

int cmd_chars(const Options& opt, Json& report, bool verify) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  bool ok = true;
  const InvariantPencil pencil = pencil_with_check(inst, report, ok);
  const CharacterData formula = formula_characters(inst.spec, pencil.exponents);
  report["jac_curve"] = chars_json(formula.jac);
  report["ij"] = chars_json(formula.ij);
  if (opt.oracle || verify) {
    const CurveOracle curve = curve_action_oracle(pencil, inst.spec);
    const CharacterMultiset ij = ij_oracle(pencil, inst.spec);
    Json o;
    o["quartic_eigenvalue_exponent"] = curve.quartic_exponent;
    o["jac_curve"] = chars_json(curve.characters);
    o["ij"] = chars_json(ij);
    o["jac_agrees"] = curve.characters == formula.jac;
    o["ij_agrees"] = ij == formula.ij;
    report["oracle"] = o;
    ok = ok && curve.characters == formula.jac && ij == formula.ij;
  }
  if (verify) {
    const bool differ = characters_differ(formula.jac, formula.ij);
    report["characters_differ"] = differ;
    // a swap forces the sign; without one the two Lie algebras agree
    ok = ok && differ == inst.spec.swap;
    report["agreement"] = ok;
  }
  return ok ? kExitOk : kExitMathFailure;
}

int cmd_cohomology(const Options& opt, Json& report) {
  if (!opt.input.empty()) report["instance"] = echo(load(opt));
  report["twist"] = tuple_json(std::array<int, 2>{static_cast<int>(opt.a), static_cast<int>(opt.b)});
  const ComplexShape shape = koszul_shape(opt.a, opt.b);
  Json terms = Json::array();
  for (int r = shape.length(); r >= 0; --r) {
    Json t;
    t["term"] = "O(" + std::to_string(opt.a - r) + "," + std::to_string(opt.b - r) + ")^" +
                std::to_string(r == 0 || r == 3 ? 1 : 3);
    t["h"] = shape.term(r).dims;
    terms.push_back(t);
  }
  report["koszul_terms"] = terms;
  report["h_X"] = koszul_cohomology_on_X(opt.a, opt.b).dims;
  return kExitOk;
}

int cmd_hilbert(const Options& opt, Json& report) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  validate_model(inst.model);
  const RationalPoly expected(std::vector<Rational>{Rational(-2), Rational(6)});
  bool ok = true;
  for (Side side : {Side::kFirst, Side::kSecond}) {
    const RationalPoly hp = hilbert_polynomial(minor_cubics(inst.model, side));
    report[side == Side::kFirst ? "first" : "second"] = hp.to_string("t");
    ok = ok && hp == expected;
  }
  report["expected"] = expected.to_string("t");
  return ok ? kExitOk : kExitMathFailure;
}

int cmd_picard(const Options& opt, Json& report) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  const DivisorClass ih = picard_involution(kHyperplane);
  const DivisorClass ie = picard_involution(kExceptional);
  report["iota_H"] = to_string(ih);
  report["iota_E"] = to_string(ie);
  const bool involution =
      picard_involution(ih) == kHyperplane && picard_involution(ie) == kExceptional;
  report["iota_squared_identity"] = involution;
  report["minus_K"] = to_string(-1L * kCanonical);
  report["minus_K_equals_H_plus_Hprime"] = -1L * kCanonical == kHyperplane + ih;
  const auto gens = invariant_sublattice(inst.spec.swap);
  report["invariant_sublattice"] = lattice_json(gens);
  report["rank"] = gens.size();
  return involution ? kExitOk : kExitMathFailure;
}

int cmd_verdict(const Options& opt, Json& report) {
  const Instance inst = load(opt);
  report["instance"] = echo(inst);
  bool ok = true;
  const InvariantPencil pencil = pencil_with_check(inst, report, ok);
  const VerdictReport v = verdict_report(inst.spec, pencil.exponents);
  report["verdict"] = verdict_name(v.verdict);
  report["explanation"] = v.explanation;
  if (v.jac) {
    report["jac_curve"] = chars_json(*v.jac);
    report["ij"] = chars_json(*v.ij);
    report["characters_differ"] = v.characters_differ;
  }
  return ok ? kExitOk : kExitMathFailure;
}

int cmd_random(const Options& opt, Json& report, std::ostream& out, bool& printed) {
  if (opt.weights.size() != 4 || opt.exponents.size() != 3)
    throw Error(ErrorCode::kSemantic, "random needs --weights r0,r1,r2,r3 and --exponents s1,s2,s3");
  Instance inst;
  inst.spec.order = opt.order;
  inst.spec.swap = true;
  std::copy(opt.weights.begin(), opt.weights.end(), inst.spec.weights.begin());
  std::array<int, 3> s{};
  std::copy(opt.exponents.begin(), opt.exponents.end(), s.begin());
  validate_action(inst.spec);
  inst.model = random_equivariant_model(inst.spec, s, opt.seed);
  inst.exponents = s;
  const std::string text = serialize_instance(inst);
  if (opt.out_path.empty()) {
    out << text;
    printed = true;
    return kExitOk;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw Error(ErrorCode::kSemantic, "cannot write " + opt.out_path);
  f << text;
  report["instance"] = echo(inst);
  report["seed"] = opt.seed;
  report["written"] = opt.out_path;
  return kExitOk;
}

void render_plain(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_plain(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << it.key() << ":\n";
      for (const auto& item : v) {
        std::string line;
        for (auto f = item.begin(); f != item.end(); ++f) {
          if (!line.empty()) line += "  ";
          line += f.value().is_string() ? f.value().get<std::string>() : f.value().dump();
        }
        out << pad << "  " << line << "\n";
      }
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Fano threefolds X of type 2-12 in P^3 x P^3: validation, characters and linearisability"};
  app.name("fano212");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", opt.input, "instance file");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"plain", "tree"}));

  auto* validate = app.add_subcommand("validate", "check the model and the action");
  auto* smooth = app.add_subcommand("smooth", "smoothness of Q and of the rank loci");
  smooth->add_flag("--full", opt.full, "also run the 16-chart Jacobian test on X");
  auto* gfano = app.add_subcommand("gfano", "G-Fano test and invariant Picard lattice");
  auto* chars = app.add_subcommand("chars", "character multisets of Lie(J_C) and Lie(IJ_X)");
  chars->add_flag("--oracle", opt.oracle, "recompute both multisets from the geometry");
  auto* verify = app.add_subcommand("verify", "formulas against oracles for both Jacobians");
  auto* cohomology = app.add_subcommand("cohomology", "H^i(X, O_X(a, b)) via the Koszul resolution");
  cohomology->add_option("--a", opt.a)->required();
  cohomology->add_option("--b", opt.b)->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of both blowdown centres");
  auto* picard = app.add_subcommand("picard", "Picard lattice and the swap involution");
  auto* verdict_cmd = app.add_subcommand("verdict", "linearisability of the action");
  auto* random = app.add_subcommand("random", "generate an equivariant swap instance");
  random->add_option("--order", opt.order)->required();
  random->add_option("--weights", opt.weights)->delimiter(',')->required();
  random->add_option("--exponents", opt.exponents)->delimiter(',')->required();
  random->add_option("--seed", opt.seed);
  random->add_option("--out", opt.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error (usage): " << e.what() << "\n";
    return kExitInvalidInput;
  }
  const CLI::App* sub = app.get_subcommands().front();
  opt.command = sub->get_name();

  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = opt.command;
  int code = kExitOk;
  bool printed = false;
  try {
    if (sub == validate) code = cmd_validate(opt, report);
    else if (sub == smooth) code = cmd_smooth(opt, report);
    else if (sub == gfano) code = cmd_gfano(opt, report);
    else if (sub == chars) code = cmd_chars(opt, report, false);
    else if (sub == verify) code = cmd_chars(opt, report, true);
    else if (sub == cohomology) code = cmd_cohomology(opt, report);
    else if (sub == hilbert) code = cmd_hilbert(opt, report);
    else if (sub == picard) code = cmd_picard(opt, report);
    else if (sub == verdict_cmd) code = cmd_verdict(opt, report);
    else if (sub == random) code = cmd_random(opt, report, out, printed);
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
  }
  if (printed) return code;
  report["exit_code"] = code;
  if (opt.format == "tree") {
    out << report.dump(2) << "\n";
  } else {
    render_plain(report, out, 0);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << "elapsed_ms: " << static_cast<long>(ms) << "\n";
  }
  return code;
}

}  // namespace fano212
