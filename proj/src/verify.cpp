#include "extcauchy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "extcauchy/errors.hpp"

namespace extcauchy {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class ClosedForm, class Oracle>
void evaluate_into(VerificationRecord& r, ClosedForm&& closed_form, Oracle&& oracle) {
  const auto start = Clock::now();
  try {
    const EvaluationResult rhs = closed_form();
    r.closed_form = rhs.value;
    r.method = rhs.method;
    r.min_denominator = rhs.min_denominator;
    const QuadratureResult q = oracle();
    r.oracle = q.value;
    r.oracle_error_estimate = q.abs_error_estimate;
    r.oracle_nodes = q.nodes;
    r.abs_diff = std::abs(r.closed_form - r.oracle);
    const double scale = std::abs(r.closed_form);
    r.rel_diff = scale > 0.0 ? r.abs_diff / scale
                             : (r.abs_diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    if (!is_finite(r.closed_form) || !is_finite(r.oracle))
      throw SingularEvaluation("non-finite value produced");
    r.pass = passes(r.closed_form, r.abs_diff, r.rel_diff, r.tolerance);
  } catch (const Error& e) {
    r.pass = false;
    r.error = std::string(e.tag()) + ": " + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = std::string("InternalError: ") + e.what();
  }
  r.wall_time_ms = elapsed_ms(start);
}

VerificationRecord degenerate_record(int alpha, int beta, double tolerance) {
  VerificationRecord r;
  r.id = "theorem";
  r.spec = IntegralSpec{1.0, 1.0, 0, alpha, beta};
  r.tolerance = tolerance;
  r.error = "DegenerateParameters: pair (" + std::to_string(alpha) + ", " + std::to_string(beta) +
            ") has a vanishing denominator";
  return r;
}

void tally(SweepSummary& s, const VerificationRecord& r) {
  ++s.total;
  if (r.error) ++s.errored;
  else if (r.pass) ++s.passed;
  else ++s.failed;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json korder_to_json(const KOrder& k) {
  if (const int* n = std::get_if<int>(&k)) return *n;
  return to_string(k);
}

}  // namespace

bool passes(cplx closed_form, double abs_diff, double rel_diff, double tolerance) {
  if (rel_diff <= tolerance) return true;
  return std::abs(closed_form) < 1.0 && abs_diff <= tolerance;
}

double oracle_tolerance(double tolerance) { return std::max(kMinRelTol, tolerance * 1e-3); }

VerificationRecord verify_one(const IntegralSpec& spec, double tolerance) {
  VerificationRecord r;
  r.id = std::holds_alternative<int>(spec.k) ? "theorem" : to_string(spec.k);
  r.spec = spec;
  r.tolerance = tolerance;
  evaluate_into(
      r,
      [&] {
        return std::holds_alternative<int>(spec.k) ? theorem_rhs(spec) : family_rhs(spec);
      },
      [&] { return integrate_halfline(build_lhs(spec), oracle_tolerance(tolerance)); });
  return r;
}

VerificationRecord verify_example(ExampleId id, const ExampleParams& params, double tolerance) {
  VerificationRecord r;
  r.id = std::string(to_string(id));
  r.tolerance = tolerance;
  try {
    r.example = resolve(id, params);
  } catch (const Error&) {
    r.example = params;
  }
  evaluate_into(
      r, [&] { return example_rhs(id, params); },
      [&] { return integrate_halfline(build_example_lhs(id, params), oracle_tolerance(tolerance)); });
  return r;
}

void validate(const SweepConfig& config) {
  if (config.a_values.empty() || config.m_values.empty() || config.k_values.empty() ||
      config.pairs.empty())
    throw DomainError("sweep config: a_values, m_values, k_values and pairs must be non-empty");
  if (!(config.tolerance >= 1e-12)) throw DomainError("sweep config: tolerance must be >= 1e-12");
  for (double a : config.a_values)
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("sweep config: a_values must be positive");
  for (auto [alpha, beta] : config.pairs) validate_pair(alpha, beta);
}

std::vector<IntegralSpec> sweep_cells(const SweepConfig& config) {
  std::vector<IntegralSpec> cells;
  for (auto [alpha, beta] : config.pairs) {
    if (check_degenerate(alpha, beta) < kDegeneracyTolerance) continue;
    for (double a : config.a_values)
      for (cplx m : config.m_values)
        for (const KOrder& k : config.k_values) cells.push_back({a, m, k, alpha, beta});
  }
  return cells;
}

SweepReport run_sweep(const SweepConfig& config, Execution execution, std::ostream* out) {
  validate(config);
  SweepReport report;
  for (auto [alpha, beta] : config.pairs) {
    if (check_degenerate(alpha, beta) >= kDegeneracyTolerance) continue;
    report.summary.degenerate_pairs.emplace_back(alpha, beta);
    if (out) *out << to_json(degenerate_record(alpha, beta, config.tolerance)).dump() << '\n';
  }

  const std::vector<IntegralSpec> cells = sweep_cells(config);
  const long n = static_cast<long>(cells.size());
  report.records.resize(cells.size());
  auto emit = [&](long i) {
    if (out) *out << to_json(report.records[i]).dump() << '\n';
  };

  if (execution == Execution::Serial) {
    for (long i = 0; i < n; ++i) {
      report.records[i] = verify_one(cells[i], config.tolerance);
      emit(i);
    }
  } else {
#pragma omp parallel for ordered schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      report.records[i] = verify_one(cells[i], config.tolerance);
#pragma omp ordered
      emit(i);
    }
  }
  if (out) {
    out->flush();
    if (!*out) throw OutputIOError("failed writing sweep records");
  }
  for (const auto& r : report.records) tally(report.summary, r);
  return report;
}

SweepReport run_sweep(const SweepConfig& config, Execution execution) {
  validate(config);
  if (config.output_path.empty()) return run_sweep(config, execution, nullptr);
  std::ofstream out(config.output_path);
  if (!out) throw OutputIOError("cannot open " + config.output_path);
  SweepReport report = run_sweep(config, execution, &out);
  out << json{{"summary", to_json(report.summary)}}.dump() << '\n';
  out.close();
  if (!out) throw OutputIOError("failed writing " + config.output_path);

  if (!config.csv_path.empty()) {
    std::ofstream csv(config.csv_path);
    if (!csv) throw OutputIOError("cannot open " + config.csv_path);
    csv << csv_header() << '\n';
    for (const auto& r : report.records) csv << to_csv_row(r) << '\n';
    csv.close();
    if (!csv) throw OutputIOError("failed writing " + config.csv_path);
  }
  return report;
}

// JSON ----------------------------------------------------------------------

json complex_to_json(cplx z) { return json::array({finite_or_null(z.real()), finite_or_null(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw DomainError("expected a number or [re, im], got " + j.dump());
}

KOrder parse_korder(const std::string& text) {
  if (text == "dlog") return DLogDeriv{};
  if (text == "kneg1") return KNegOne{};
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw DomainError("k must be an integer, \"dlog\" or \"kneg1\", got \"" + text + "\"");
  return k;
}

KOrder korder_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) return parse_korder(j.get<std::string>());
  throw DomainError("k must be an integer, \"dlog\" or \"kneg1\", got " + j.dump());
}

json to_json(const VerificationRecord& r) {
  json j;
  j["id"] = r.id;
  if (r.spec) {
    j["spec"] = {{"a", r.spec->a},
                 {"m", complex_to_json(r.spec->m)},
                 {"k", korder_to_json(r.spec->k)},
                 {"alpha", r.spec->alpha},
                 {"beta", r.spec->beta}};
  }
  if (r.example) {
    const ExampleParams& p = *r.example;
    j["params"] = {{"a", complex_to_json(p.a)}, {"m", complex_to_json(p.m)}, {"k", p.k},
                   {"u", p.u}, {"v", p.v}};
    if (p.alpha) j["params"]["alpha"] = *p.alpha;
    if (p.beta) j["params"]["beta"] = *p.beta;
  }
  j["closed_form"] = complex_to_json(r.closed_form);
  j["oracle"] = complex_to_json(r.oracle);
  j["abs_diff"] = finite_or_null(r.abs_diff);
  j["rel_diff"] = finite_or_null(r.rel_diff);
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["oracle_error_estimate"] = finite_or_null(r.oracle_error_estimate);
  j["oracle_nodes"] = r.oracle_nodes;
  j["method"] = r.method;
  j["min_denominator"] = r.min_denominator;
  j["wall_time_ms"] = r.wall_time_ms;
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  return j;
}

json to_json(const SweepSummary& s) {
  json pairs = json::array();
  for (auto [a, b] : s.degenerate_pairs) pairs.push_back({a, b});
  return {{"total", s.total},
          {"passed", s.passed},
          {"failed", s.failed},
          {"errored", s.errored},
          {"degenerate_pairs", pairs}};
}

SweepConfig sweep_config_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("sweep config must be a JSON object");
  SweepConfig c;
  try {
    for (const auto& a : j.at("a_values")) c.a_values.push_back(a.get<double>());
    for (const auto& m : j.at("m_values")) c.m_values.push_back(complex_from_json(m));
    for (const auto& k : j.at("k_values")) c.k_values.push_back(korder_from_json(k));
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw DomainError("each pair must be [alpha, beta]");
      c.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    if (j.contains("csv_path") && !j.at("csv_path").is_null())
      c.csv_path = j.at("csv_path").get<std::string>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("sweep config: ") + e.what());
  }
  validate(c);
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("config " + path + " is not valid JSON: " + e.what());
  }
  return sweep_config_from_json(j);
}

std::string csv_header() {
  return "id,alpha,beta,a,m_re,m_im,k,closed_re,closed_im,oracle_re,oracle_im,abs_diff,rel_diff,"
         "pass,error";
}

std::string to_csv_row(const VerificationRecord& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.id << ',';
  if (r.spec)
    os << r.spec->alpha << ',' << r.spec->beta << ',' << r.spec->a << ',' << r.spec->m.real() << ','
       << r.spec->m.imag() << ',' << to_string(r.spec->k) << ',';
  else
    os << ",,,,,,";
  os << r.closed_form.real() << ',' << r.closed_form.imag() << ',' << r.oracle.real() << ','
     << r.oracle.imag() << ',' << r.abs_diff << ',' << r.rel_diff << ',' << (r.pass ? "true" : "false")
     << ',';
  if (r.error) {
    std::string e = *r.error;
    std::replace(e.begin(), e.end(), ',', ';');
    os << e;
  }
  return os.str();
}

}  // namespace extcauchy
