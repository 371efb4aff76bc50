#pragma once

// Verification harness: pairs each closed form with the quadrature oracle and
// sweeps parameter grids, streaming JSON Lines records.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "extcauchy/closed_forms.hpp"
#include "extcauchy/quadrature.hpp"

namespace extcauchy {

struct VerificationRecord {
  std::string id;  // "theorem", "dlog", "kneg1" or an example id
  std::optional<IntegralSpec> spec;
  std::optional<ExampleParams> example;
  cplx closed_form;
  cplx oracle;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double oracle_error_estimate = 0.0;
  long oracle_nodes = 0;
  double wall_time_ms = 0.0;
  std::string method;
  double min_denominator = 0.0;
  /// "<ErrorKind>: detail" when either side failed; pass is then false.
  std::optional<std::string> error;
};

/// pass <=> rel_diff <= tol, or abs_diff <= tol when |closed_form| < 1.
bool passes(cplx closed_form, double abs_diff, double rel_diff, double tolerance);

/// Relative tolerance handed to the oracle for a given verification tolerance.
double oracle_tolerance(double tolerance);

/// Closed form (theorem or matching family identity) against quadrature.
/// Library errors become an error-tagged, failing record.
VerificationRecord verify_one(const IntegralSpec& spec, double tolerance);

/// Same for an example identity.
VerificationRecord verify_example(ExampleId id, const ExampleParams& params, double tolerance);

struct SweepConfig {
  std::vector<double> a_values;
  std::vector<cplx> m_values;
  std::vector<KOrder> k_values;
  std::vector<std::pair<int, int>> pairs;
  double tolerance = 1e-8;
  std::string output_path;
  std::string csv_path;  // optional CSV projection
};

/// Throws DomainError on empty lists, non-positive a, tolerance < 1e-12 or
/// malformed pairs.
void validate(const SweepConfig& config);

struct SweepSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int errored = 0;
  /// Pairs removed from the grid because a denominator vanishes.
  std::vector<std::pair<int, int>> degenerate_pairs;
};

struct SweepReport {
  std::vector<VerificationRecord> records;
  SweepSummary summary;
};

enum class Execution { Serial, Parallel };

/// Grid cells in deterministic order: pairs (outer), then a, m, k (inner).
/// Degenerate pairs are left out.
std::vector<IntegralSpec> sweep_cells(const SweepConfig& config);

/// Evaluates every cell. When `out` is given, records are written as JSON
/// Lines in grid order as soon as each prefix of the grid completes; one
/// error-tagged line per degenerate pair is written first.
SweepReport run_sweep(const SweepConfig& config, Execution execution, std::ostream* out);

/// Opens config.output_path (and csv_path when set) and runs the sweep.
/// Throws OutputIOError when a file cannot be written.
SweepReport run_sweep(const SweepConfig& config, Execution execution = Execution::Parallel);

// JSON ----------------------------------------------------------------------

nlohmann::json to_json(const VerificationRecord& record);
nlohmann::json to_json(const SweepSummary& summary);
nlohmann::json complex_to_json(cplx z);
/// Accepts a number or a two-element [re, im] array.
cplx complex_from_json(const nlohmann::json& j);
/// Accepts an integer or one of "dlog", "kneg1".
KOrder korder_from_json(const nlohmann::json& j);
/// Parses "3", "dlog", "kneg1".
KOrder parse_korder(const std::string& text);
/// Field names mirror SweepConfig. Throws DomainError on malformed input.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::string& path);

std::string csv_header();
std::string to_csv_row(const VerificationRecord& record);

}  // namespace extcauchy
