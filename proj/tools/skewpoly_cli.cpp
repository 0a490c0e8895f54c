// skewpoly: command-line front end for arithmetic in K[T, φ], K = k((u)).
//
// Exit status: 0 success (or "yes" for irreducible/similar), 1 "no",
// 2 parse error, 3 domain, precision or cap error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewpoly/error.hpp"
#include "skewpoly/factor.hpp"
#include "skewpoly/newton.hpp"
#include "skewpoly/similarity.hpp"
#include "skewpoly/text.hpp"

namespace {

using namespace skewpoly;
using nlohmann::json;

constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct Config {
  int p = 2;
  int m = 1;
  std::string modulus;
  std::optional<int> sigma_power;
  int b = 2;
  std::string prec = "20";
  std::uint64_t cap = kDefaultCap;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

FieldPtr make_field(const Config& cfg) {
  const int s = cfg.sigma_power.value_or(cfg.m == 1 ? 0 : 1);
  if (cfg.modulus.empty()) return FieldCtx::create(cfg.p, cfg.m, s, cfg.b);
  std::vector<int> coeffs;
  std::stringstream ss(cfg.modulus);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      coeffs.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad modulus coefficient '" + item + "'");
    }
  }
  if (static_cast<int>(coeffs.size()) != cfg.m + 1) {
    throw DomainError("modulus must have m + 1 = " + std::to_string(cfg.m + 1) + " coefficients");
  }
  return FieldCtx::create(cfg.p, coeffs, s, cfg.b);
}

std::string str(const Valuation& v) { return to_string(v); }

std::string digits_text(const std::vector<int>& digits) {
  std::string out;
  for (int d : digits) out += std::to_string(d);
  return out;
}

json slope_json(const SlopeDatum& s) { return {{"mu", to_string(s.mu)}, {"mult", s.multiplicity}, {"ell", s.ell}}; }

json canonical_json(const FieldCtx& k, const CanonicalIrreducible& c) {
  return {{"mu", to_string(c.mu)},
          {"ell", c.slope_class.ell},
          {"digits", digits_text(c.slope_class.digits)},
          {"representative", to_string(c.slope_class.representative)},
          {"witness", format(c.witness)},
          {"norm", format(k, c.base_invariant)}};
}

void print_canonical(std::ostream& os, const FieldCtx& k, const std::string& tag, const CanonicalIrreducible& c) {
  os << tag << "mu " << to_string(c.mu) << '\n';
  os << tag << "ell " << c.slope_class.ell << '\n';
  os << tag << "digits " << (c.slope_class.digits.empty() ? "-" : digits_text(c.slope_class.digits)) << '\n';
  os << tag << "witness " << format(c.witness) << '\n';
  os << tag << "norm " << format(k, c.base_invariant) << '\n';
}

// The irreducible factors' canonical pairs, or a marker for unit·T.
std::optional<CanonicalIrreducible> canonical_or_T(const SkewPoly& a, std::uint64_t cap) {
  if (!is_etale(a)) return std::nullopt;
  return canonical_pair(a, cap);
}

class Runner {
 public:
  explicit Runner(const Config& cfg) : cfg_(cfg) {}

  int run(const std::string& cmd, const std::vector<std::string>& args, const std::optional<std::string>& mu_text,
          bool plot, int degree) {
    k_ = make_field(cfg_);
    prec_ = parse_rational(cfg_.prec);
    if (cmd == "mul") return mul(args);
    if (cmd == "divrem") return divrem(args);
    if (cmd == "np") return np(args, plot);
    if (cmd == "reduce") return reduce(args, mu_text);
    if (cmd == "irreducible") return irreducible(args);
    if (cmd == "factor") return factor_cmd(args);
    if (cmd == "lift") return lift(args, mu_text);
    if (cmd == "similar") return similar_cmd(args);
    if (cmd == "canonical") return canonical(args);
    if (cmd == "random") return random(degree);
    throw ParseError("unknown subcommand " + cmd);
  }

 private:
  SkewPoly poly(const std::string& text) const { return parse_skew(k_, text); }

  void emit(const json& j) const { std::cout << j.dump(2) << '\n'; }

  int mul(const std::vector<std::string>& args) {
    const auto r = poly(args.at(0)) * poly(args.at(1));
    if (cfg_.json) {
      emit({{"product", format(r)}});
    } else {
      std::cout << format(r) << '\n';
    }
    return 0;
  }

  int divrem(const std::vector<std::string>& args) {
    const auto r = divrem_right(poly(args.at(0)), poly(args.at(1)), prec_);
    if (cfg_.json) {
      emit({{"quotient", format(r.quotient)}, {"remainder", format(r.remainder)}, {"exact", r.exact},
            {"precision", str(r.precision)}});
      return 0;
    }
    std::cout << "quotient " << format(r.quotient) << '\n';
    std::cout << "remainder " << format(r.remainder) << '\n';
    if (!r.exact) std::cout << "precision " << str(r.precision) << '\n';
    return 0;
  }

  int np(const std::vector<std::string>& args, bool plot) {
    const auto a = poly(args.at(0));
    const auto poly_np = newton_polygon(a);
    if (cfg_.json) {
      json vertices = json::array();
      for (const auto& v : poly_np.vertices) vertices.push_back({{"index", v.index}, {"valuation", to_string(v.valuation)}});
      json slopes = json::array();
      for (const auto& s : poly_np.slopes) slopes.push_back(slope_json(s));
      emit({{"vertices", vertices}, {"slopes", slopes}});
      return 0;
    }
    std::cout << to_records(poly_np);
    if (plot) std::cout << render_ascii(poly_np, a);
    return 0;
  }

  int reduce(const std::vector<std::string>& args, const std::optional<std::string>& mu_text) {
    const auto a = poly(args.at(0));
    std::vector<Rational> slopes;
    if (mu_text) {
      slopes.push_back(parse_rational(*mu_text));
    } else {
      for (const auto& s : newton_polygon(a).slopes) slopes.push_back(s.mu);
    }
    json out = json::array();
    for (const auto& mu : slopes) {
      const auto r = mu_reduction(a, mu);
      if (cfg_.json) {
        out.push_back({{"mu", to_string(mu)}, {"nu", to_string(r.nu)}, {"i0", r.i0}, {"ell", r.reduction.ell()},
                       {"reduction", format(r.reduction)}});
      } else {
        std::cout << "slope " << to_string(mu) << " nu " << to_string(r.nu) << " i0 " << r.i0 << " ell "
                  << r.reduction.ell() << " reduction " << format(r.reduction) << '\n';
      }
    }
    if (cfg_.json) emit(out);
    return 0;
  }

  int irreducible(const std::vector<std::string>& args) {
    const bool yes = is_irreducible(poly(args.at(0)), cfg_.cap);
    if (cfg_.json) {
      emit({{"irreducible", yes}});
    } else {
      std::cout << (yes ? "irreducible" : "reducible") << '\n';
    }
    return yes ? 0 : kExitNo;
  }

  int factor_cmd(const std::vector<std::string>& args) {
    const auto f = factor(poly(args.at(0)), prec_, cfg_.cap);
    const auto bound = f.residual ? to_string(*f.residual) : to_string(prec_);
    if (cfg_.json) {
      json factors = json::array();
      for (const auto& g : f.factors) factors.push_back(format(g));
      emit({{"factors", factors}, {"residual_valuation", str(f.residual)}, {"prec", to_string(prec_)}});
      return 0;
    }
    for (const auto& g : f.factors) std::cout << format(g) << '\n';
    std::cout << "# residual-valuation ≥ " << bound << (f.residual ? "" : " (exact)") << '\n';
    return 0;
  }

  int lift(const std::vector<std::string>& args, const std::optional<std::string>& mu_text) {
    const auto a = poly(args.at(0));
    const auto mu = mu_text ? parse_rational(*mu_text) : newton_polygon(a).slopes.at(0).mu;
    const auto p = parse_base(k_, reduction_ell(mu, k_->b()), args.at(1));
    const auto r = hensel_lift_right_factor(a, p, mu, prec_);
    if (cfg_.json) {
      json history = json::array();
      for (const auto& h : r.residual_history) history.push_back(to_string(h));
      emit({{"F", format(r.F)}, {"G", format(r.G)}, {"residual_valuation", str(r.achieved_prec)},
            {"history", history}});
      return 0;
    }
    std::cout << "F " << format(r.F) << '\n';
    std::cout << "G " << format(r.G) << '\n';
    std::cout << "residual-valuation " << str(r.achieved_prec) << '\n';
    std::cout << "iterations " << r.residual_history.size() << '\n';
    return 0;
  }

  int similar_cmd(const std::vector<std::string>& args) {
    const auto a = poly(args.at(0));
    const auto b = poly(args.at(1));
    const auto verdict = similar(a, b, cfg_.cap);
    const auto ca = canonical_or_T(a, cfg_.cap);
    const auto cb = canonical_or_T(b, cfg_.cap);
    if (cfg_.json) {
      json out{{"similar", verdict.similar}};
      out["A"] = ca ? canonical_json(*k_, *ca) : json("T");
      out["B"] = cb ? canonical_json(*k_, *cb) : json("T");
      if (verdict.twist) out["twist"] = *verdict.twist;
      emit(out);
    } else {
      for (const auto& [tag, c] : {std::pair{"A ", ca}, std::pair{"B ", cb}}) {
        if (c) {
          print_canonical(std::cout, *k_, tag, *c);
        } else {
          std::cout << tag << "T\n";
        }
      }
      if (verdict.twist) std::cout << "twist " << *verdict.twist << (verdict.reversed ? " reversed" : "") << '\n';
      std::cout << (verdict.similar ? "similar" : "not similar") << '\n';
    }
    return verdict.similar ? 0 : kExitNo;
  }

  int canonical(const std::vector<std::string>& args) {
    const auto c = canonical_pair(poly(args.at(0)), cfg_.cap);
    if (cfg_.json) {
      emit(canonical_json(*k_, c));
    } else {
      print_canonical(std::cout, *k_, "", c);
    }
    return 0;
  }

  int random(int degree) {
    const auto seed = cfg_.seed.value_or(std::random_device{}());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> elem(1, k_->order() - 1);
    std::uniform_int_distribution<int> expo(-2, 4);
    std::uniform_int_distribution<int> count(0, 2);
    std::vector<LaurentSeries> coeffs;
    for (int i = 0; i < degree; ++i) {
      std::vector<LaurentSeries::Term> terms;
      for (int t = count(rng); t > 0; --t) terms.push_back({expo(rng), k_->element(elem(rng))});
      coeffs.push_back(LaurentSeries::from_terms(k_, 1, std::move(terms)));
    }
    coeffs.push_back(LaurentSeries::from_int(k_, 1));
    const SkewPoly a(k_, std::move(coeffs));
    if (cfg_.json) {
      emit({{"seed", seed}, {"poly", format(a)}});
    } else {
      std::cout << "# seed " << seed << '\n' << format(a) << '\n';
    }
    return 0;
  }

  Config cfg_;
  FieldPtr k_;
  Rational prec_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic, factorization and similarity in skew polynomial rings K[T, phi]"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--p", cfg.p, "characteristic of k")->capture_default_str();
  app.add_option("--m", cfg.m, "degree of k over F_p")->capture_default_str();
  app.add_option("--modulus", cfg.modulus, "modulus of k, comma-separated coefficients from the constant term up");
  app.add_option("--sigma-power", cfg.sigma_power, "s with sigma(x) = x^(p^s); defaults to the Frobenius");
  app.add_option("--b", cfg.b, "phi(u) = u^b")->capture_default_str();
  app.add_option("--prec", cfg.prec, "working precision (a rational)")->capture_default_str();
  app.add_option("--cap", cfg.cap, "enumeration cap for the residue ring")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the random subcommand");
  app.add_flag("--json", cfg.json, "structured output");

  std::vector<std::string> args;
  std::optional<std::string> mu;
  bool plot = false;
  int degree = 2;
  const auto add = [&](const char* name, const char* help, int operands) {
    auto* sub = app.add_subcommand(name, help);
    if (operands > 0) sub->add_option("operands", args, "polynomials")->expected(operands)->required();
    return sub;
  };
  add("mul", "product A*B", 2);
  add("divrem", "right division A = Q*B + R", 2);
  add("np", "Newton polygon", 1)->add_flag("--plot", plot, "also draw the polygon");
  add("reduce", "mu-reductions", 1)->add_option("--mu", mu, "slope (default: every slope)");
  add("irreducible", "irreducibility test; exit 0 if irreducible, 1 if not", 1);
  add("factor", "factorization into irreducibles", 1);
  add("lift", "lift a right factor P of the reduction: lift A P", 2)->add_option("--mu", mu, "slope (default: smallest)");
  add("similar", "similarity of irreducibles; exit 0 if similar, 1 if not", 2);
  add("canonical", "canonical pair of an irreducible", 1);
  add("random", "random monic polynomial", 0)->add_option("--degree", degree, "degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    return Runner(cfg).run(app.get_subcommands().front()->get_name(), args, mu, plot, degree);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
