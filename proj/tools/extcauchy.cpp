// Command-line front end: verify, sweep, example, special.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "extcauchy/errors.hpp"
#include "extcauchy/special_functions.hpp"
#include "extcauchy/verify.hpp"

using namespace extcauchy;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParamError = 2;

// "re" or "re,im"
cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return re;
    }
    const std::string re_text = text.substr(0, comma), im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse complex number \"" + text + "\" (expected RE or RE,IM)");
  }
}

int exit_code(const VerificationRecord& r) {
  if (r.error && (r.error->starts_with("DomainError") || r.error->starts_with("DegenerateParameters")))
    return kExitParamError;
  return r.pass ? kExitPass : kExitFail;
}

json special_value(const std::string& fn, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw DomainError(fn + " expects arguments: " + usage);
  };
  cplx value;
  if (fn == "loggamma") {
    need(1, "Z");
    value = log_gamma(parse_complex(args[0]));
  } else if (fn == "digamma") {
    need(1, "Z");
    value = digamma(parse_complex(args[0]));
  } else if (fn == "hurwitz") {
    need(2, "S A   (S a non-positive integer, or d0 for the s-derivative at 0)");
    const cplx a = parse_complex(args[1]);
    if (args[0] == "d0") {
      value = hurwitz_zeta_sderiv0(a);
    } else {
      const cplx s = parse_complex(args[0]);
      if (s.imag() != 0.0 || s.real() > 0.0 || s.real() != std::round(s.real()))
        throw DomainError("hurwitz: only non-positive integer s (or d0) is supported");
      value = hurwitz_zeta_neg_int(static_cast<int>(-s.real()), a);
    }
  } else if (fn == "lerch") {
    need(3, "Z S A");
    const cplx z = parse_complex(args[0]);
    const cplx s = parse_complex(args[1]);
    const cplx a = parse_complex(args[2]);
    LerchOrder order = General{s};
    if (s == cplx(1.0)) order = PosOne{};
    else if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real()))
      order = NegInt{static_cast<int>(-s.real())};
    value = lerch_phi({z, order, a});
  } else {
    throw DomainError("unknown function " + fn);
  }
  json j{{"fn", fn}, {"args", args}, {"value", complex_to_json(value)}};
  return j;
}

void print_summary(const SweepSummary& s) {
  std::printf("total %d  passed %d  failed %d  errored %d\n", s.total, s.passed, s.failed, s.errored);
  for (auto [a, b] : s.degenerate_pairs)
    std::printf("skipped degenerate pair (%d, %d): DegenerateParameters\n", a, b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed forms and quadrature checks for int_0^inf x^(m-1) log^k(ax) / ((1+x^alpha)(1+x^beta)) dx"};
  app.require_subcommand(1);

  int alpha = 2, beta = 4;
  std::string m_text = "1", k_text = "0";
  double a = 1.0, tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "Compare the closed form with quadrature for one parameter set");
  verify->add_option("--alpha", alpha, "Even integer exponent")->required();
  verify->add_option("--beta", beta, "Even integer exponent")->required();
  verify->add_option("--m", m_text, "RE or RE,IM")->required();
  verify->add_option("--k", k_text, "Integer, dlog or kneg1")->required();
  verify->add_option("--a", a, "Positive real scale")->required();
  verify->add_option("--tol", tol, "Tolerance")->capture_default_str();

  std::string config_path, out_path;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid from a JSON config");
  sweep->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out_path, "JSON Lines output (overrides output_path)");

  std::string id_text, ex_a = "1", ex_m;
  std::optional<int> ex_k, ex_alpha, ex_beta;
  std::optional<double> ex_u, ex_v;
  double ex_tol = 1e-8;
  auto* example = app.add_subcommand("example", "Evaluate an example identity both ways");
  example->add_option("--id", id_text, "e1 .. e14")->required();
  example->add_option("--a", ex_a, "RE or RE,IM");
  example->add_option("--m", ex_m, "RE or RE,IM");
  example->add_option("--k", ex_k, "Integer order");
  example->add_option("--alpha", ex_alpha);
  example->add_option("--beta", ex_beta);
  example->add_option("--u", ex_u);
  example->add_option("--v", ex_v);
  example->add_option("--tol", ex_tol)->capture_default_str();

  std::string fn;
  std::vector<std::string> fn_args;
  auto* special = app.add_subcommand("special", "Evaluate one special function");
  special->add_option("--fn", fn, "loggamma | digamma | hurwitz | lerch")
      ->required()
      ->check(CLI::IsMember({"loggamma", "digamma", "hurwitz", "lerch"}));
  special->add_option("--args", fn_args, "Arguments; complex values as RE,IM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParamError;
  }

  try {
    if (*verify) {
      IntegralSpec spec{a, parse_complex(m_text), parse_korder(k_text), alpha, beta};
      validate(spec);
      const VerificationRecord r = verify_one(spec, tol);
      std::cout << to_json(r).dump(2) << '\n';
      return exit_code(r);
    }
    if (*sweep) {
      SweepConfig config = load_sweep_config(config_path);
      if (!out_path.empty()) config.output_path = out_path;
      if (config.output_path.empty()) throw DomainError("no output path: set output_path or --out");
      const SweepReport report = run_sweep(config);
      print_summary(report.summary);
      std::printf("records written to %s\n", config.output_path.c_str());
      return report.summary.failed + report.summary.errored == 0 ? kExitPass : kExitFail;
    }
    if (*example) {
      ExampleParams p;
      p.a = parse_complex(ex_a);
      if (!ex_m.empty()) p.m = parse_complex(ex_m);
      if (ex_k) p.k = *ex_k;
      p.alpha = ex_alpha;
      p.beta = ex_beta;
      if (ex_u) p.u = *ex_u;
      if (ex_v) p.v = *ex_v;
      const ExampleId id = parse_example_id(id_text);
      resolve(id, p);
      const VerificationRecord r = verify_example(id, p, ex_tol);
      std::cout << to_json(r).dump(2) << '\n';
      return exit_code(r);
    }
    std::cout << special_value(fn, fn_args).dump(2) << '\n';
    return kExitPass;
  } catch (const OutputIOError& e) {
    std::cerr << e.tag() << ": " << e.what() << '\n';
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << e.tag() << ": " << e.what() << '\n';
    return kExitParamError;
  }
}
