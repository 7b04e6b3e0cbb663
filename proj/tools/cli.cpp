#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "descartes/document.hpp"
#include "descartes/errors.hpp"
#include "descartes/euclid_flower.hpp"
#include "descartes/m_variables.hpp"
#include "descartes/polynomial.hpp"
#include "descartes/solver.hpp"
#include "descartes/spinor_chain.hpp"

namespace descartes::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  double tol = 1e-9;
  bool json = false;
};

std::vector<double> parse_petals(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    if (token.empty()) throw DomainError("empty entry in petal list '" + text + "'");
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw DomainError("not a number: '" + token + "'");
    }
    values.push_back(v);
    start = comma + 1;
  }
  return values;
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string g12(double v) { return fmt::format("{:.12g}", v); }

int cmd_solve(const Options& opt, const std::string& petal_text, std::ostream& out) {
  std::vector<double> petals = parse_petals(petal_text);
  FlowerSpec{petals, std::nullopt}.validate();
  CentralCurvature c = solve_central_curvature(petals, opt.tol);

  std::optional<double> classic;
  if (petals.size() == 3) {
    classic = classic_descartes_residual(c.kappa, petals[0], petals[1], petals[2]);
  } else if (petals.size() == 4) {
    classic = four_flower_poly_residual(c.kappa, petals[0], petals[1], petals[2], petals[3]);
  }

  if (opt.json) {
    Json j;
    j["n"] = petals.size();
    j["kappa_inf"] = c.kappa;
    j["theorem_root"] = c.polished;
    j["residual"] = c.residual;
    j["relative_residual"] = c.relative_residual;
    j["agreement"] = c.agreement;
    if (classic) j[petals.size() == 3 ? "descartes_residual" : "quartic_residual"] = *classic;
    out << j.dump(2) << '\n';
    return kPass;
  }
  out << "kappa_inf          " << g12(c.kappa) << '\n';
  out << "theorem residual   " << g12(c.residual) << " (relative " << g12(c.relative_residual)
      << ")\n";
  out << "theorem root       " << g12(c.polished) << '\n';
  out << "agreement          " << g12(c.agreement) << '\n';
  if (classic) {
    out << (petals.size() == 3 ? "descartes residual " : "quartic residual   ") << g12(*classic)
        << '\n';
  }
  return kPass;
}

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass() const { return value <= limit; }
};

int cmd_verify(const Options& opt, const std::string& path, std::istream& in,
               std::ostream& out) {
  FlowerDocument doc = FlowerDocument::parse(read_source(path, in));
  FlowerSpec spec{doc.petal_curvatures, doc.central_curvature};
  spec.validate();
  const auto& k = doc.petal_curvatures;
  const double kc = doc.central_curvature;

  std::vector<Check> checks;
  if (doc.circles) {
    FlowerLayout layout = doc.layout();
    checks.push_back({"tangency", validate_flower(layout).max_residual(), doc.tolerance});
    double curv = std::abs(layout.central.curvature() - kc) / kc;
    for (std::size_t j = 0; j < k.size(); ++j) {
      curv = std::max(curv, std::abs(layout.petals[j].curvature() - k[j]) / k[j]);
    }
    checks.push_back({"curvatures", curv, doc.tolerance});
  }
  checks.push_back({"theorem", theorem_relative_residual(k, kc), opt.tol});
  if (k.size() == 3) {
    double r = classic_descartes_residual(kc, k[0], k[1], k[2]);
    double s = classic_descartes_scale(kc, k[0], k[1], k[2]);
    checks.push_back({"descartes", std::abs(r) / s, opt.tol});
  } else if (k.size() == 4) {
    double r = four_flower_poly_residual(kc, k[0], k[1], k[2], k[3]);
    double s = four_flower_poly_scale(kc, k[0], k[1], k[2], k[3]);
    checks.push_back({"quartic", std::abs(r) / s, opt.tol});
  }

  bool all = true;
  for (const Check& c : checks) all = all && c.pass();

  if (opt.json) {
    Json j;
    j["passed"] = all;
    j["checks"] = Json::array();
    for (const Check& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass()}, {"value", c.value},
                             {"limit", c.limit}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const Check& c : checks) {
      out << fmt::format("{} {:<11} {} (limit {})\n", c.pass() ? "PASS" : "FAIL", c.name,
                         g12(c.value), g12(c.limit));
    }
  }
  return all ? kPass : kVerificationFailed;
}

int cmd_layout(const Options& opt, const std::string& petal_text, std::ostream& out) {
  std::vector<double> petals = parse_petals(petal_text);
  FlowerSpec{petals, std::nullopt}.validate();
  std::vector<double> radii;
  for (double k : petals) radii.push_back(1.0 / k);
  FlowerLayout layout = layout_flower(radii, opt.tol);
  out << FlowerDocument::from_layout(layout).to_json();
  return kPass;
}

int cmd_render(const std::string& path, const std::string& target, std::istream& in,
               std::ostream& out) {
  FlowerDocument doc = FlowerDocument::parse(read_source(path, in));
  std::string svg = render_svg(doc);
  if (target == "-") {
    out << svg;
    return kPass;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + target + "'");
  file << svg;
  return kPass;
}

int cmd_spinors(const Options& opt, const std::string& petal_text,
                std::optional<double> central, bool flat, std::ostream& out) {
  std::vector<double> petals = parse_petals(petal_text);
  FlowerSpec spec{petals, central};
  if (central) {
    if (petals.size() < 3) throw DomainError("a flower needs at least 3 petals");
    if (!(*central > 0.0)) throw DomainError("central curvature must be positive");
    for (double k : petals) {
      if (!(k >= 0.0)) throw DomainError("petal curvatures must be non-negative");
    }
  } else {
    spec.validate();
    spec.central_curvature = solve_central_curvature(petals, opt.tol).polished;
  }
  if (petals.size() > PolynomialZZ::kMaxVariables) {
    throw CapacityError("spinor tables are limited to 24 petals");
  }
  std::vector<double> normalized;
  for (double k : petals) normalized.push_back(k / *spec.central_curvature);
  MVector m = m_from_normalized(normalized);
  SpinorChain chain = spinor_recursion(m);
  if (flat) chain = flatten_chain(chain);
  ClosureResiduals closure = closure_residuals(chain);

  if (opt.json) {
    Json j;
    j["kappa_inf"] = *spec.central_curvature;
    j["flattened"] = flat;
    j["spinors"] = Json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      double eta = chain[i].eta();
      j["spinors"].push_back({{"j", i}, {"xi", chain[i].xi()}, {"eta", eta}, {"m", m[i]},
                              {"kappa_bar", 2.0 * eta * eta}});
    }
    j["closure_bracket"] = closure.bracket;
    j["closure_eta_sum"] = closure.eta_sum;
    out << j.dump(2) << '\n';
    return kPass;
  }
  out << fmt::format("{:>3} {:>20} {:>20} {:>20} {:>20}\n", "j", "xi", "eta", "m", "kappa_bar");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    double eta = chain[i].eta();
    out << fmt::format("{:>3} {:>20} {:>20} {:>20} {:>20}\n", i, g12(chain[i].xi()), g12(eta),
                       g12(m[i]), g12(2.0 * eta * eta));
  }
  out << "closure bracket residual " << g12(closure.bracket) << '\n';
  return kPass;
}

int cmd_polynomial(const Options& opt, long long n, std::ostream& out) {
  if (n < 3 || n > static_cast<long long>(PolynomialZZ::kMaxVariables)) {
    throw DomainError("polynomial degree n must lie in 3..24");
  }
  PolynomialZZ p = expand_theorem_polynomial(static_cast<std::size_t>(n));
  if (opt.json) {
    Json j;
    j["n"] = n;
    j["terms"] = Json::array();
    for (const auto& t : p.terms()) {
      std::vector<int> e(t.exponents.begin(), t.exponents.begin() + n);
      j["terms"].push_back({{"coefficient", t.coefficient.str()}, {"exponents", e}});
    }
    out << j.dump(2) << '\n';
    return kPass;
  }
  p.write(out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Central curvatures, layouts and spinor chains of circle flowers", "descartes"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
  app.add_flag("--json", opt.json, "machine-readable output");

  std::string petals;
  std::string path;
  std::string target;
  long long n = 0;
  std::optional<double> central;
  bool flat = false;

  auto* solve = app.add_subcommand("solve", "central curvature of a flower");
  solve->add_option("petals", petals, "comma-separated petal curvatures")->required();
  auto* verify = app.add_subcommand("verify", "check a flower document");
  verify->add_option("file", path, "document path, - for stdin")->required();
  auto* layout = app.add_subcommand("layout", "lay out a flower as a JSON document");
  layout->add_option("petals", petals, "comma-separated petal curvatures")->required();
  auto* render = app.add_subcommand("render", "draw a flower document as SVG");
  render->add_option("file", path, "document path, - for stdin")->required();
  render->add_option("out", target, "SVG output path, - for stdout")->required();
  auto* spinors = app.add_subcommand("spinors", "spinor chain of a flower");
  spinors->add_option("petals", petals, "comma-separated petal curvatures")->required();
  spinors->add_option("--central", central, "central curvature (skips solving)");
  spinors->add_flag("--flat", flat, "rotate the chain into flat-flower position");
  auto* polynomial = app.add_subcommand("polynomial", "theorem polynomial in m-variables");
  polynomial->add_option("n", n, "number of petals")->required();

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (*solve) return cmd_solve(opt, petals, out);
    if (*verify) return cmd_verify(opt, path, in, out);
    if (*layout) return cmd_layout(opt, petals, out);
    if (*render) return cmd_render(path, target, in, out);
    if (*spinors) return cmd_spinors(opt, petals, central, flat, out);
    if (*polynomial) return cmd_polynomial(opt, n, out);
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace descartes::cli
