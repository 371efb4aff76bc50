#pragma once

// Closed-form right-hand sides for
//
//   I(a, m, k; alpha, beta) = int_0^inf x^{m-1} log^k(a x) / ((1 + x^alpha)(1 + x^beta)) dx
//
// as finite sums over Lerch transcendents, the classical finite cosine sum for
// k = 0, and fourteen derived identities (log log, 1/log, digamma and constant
// forms). All multivalued functions take their principal branch.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "extcauchy/numeric.hpp"

namespace extcauchy {

/// Denominators 1 + cos(.) below this magnitude are treated as exact zeros.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// d/dk at k = 0: the log(log(a x)) integrand.
struct DLogDeriv {};
/// k -> -1: the 1 / log(a x) integrand.
struct KNegOne {};

using KOrder = std::variant<int, DLogDeriv, KNegOne>;

std::string to_string(const KOrder& k);

struct IntegralSpec {
  double a = 1.0;
  cplx m = 1.0;
  KOrder k = 0;
  int alpha = 2;
  int beta = 4;
};

/// Throws DomainError unless a > 0, 0 < Re(m) < alpha + beta, and alpha, beta
/// are distinct even integers >= 2.
void validate(const IntegralSpec& spec);
void validate_pair(int alpha, int beta);

struct EvaluationResult {
  cplx value;
  std::string method;
  double min_denominator = 0.0;
  int terms = 0;
};

/// Smallest |1 + cos((1+2j) pi alpha/beta)| (j < beta) and
/// |1 + cos((1+2j) pi beta/alpha)| (j < alpha). Exact zero for degenerate pairs.
double check_degenerate(int alpha, int beta);

/// The double Lerch sum for integer 0 <= k <= 32. Throws DegenerateParameters
/// when check_degenerate falls below kDegeneracyTolerance.
EvaluationResult theorem_rhs(const IntegralSpec& spec);

/// Finite cosine sum for int_0^inf x^{p-1} / ((1 + x^a)(1 + x^b)) dx.
cplx eq1_rhs(cplx p, int a, int b);

// ---------------------------------------------------------------------------
// Example identities

enum class ExampleId { e1 = 1, e2, e3, e4, e5, e6, e7, e8, e9, e10, e11, e12, e13, e14 };

inline constexpr int kExampleCount = 14;

std::string_view to_string(ExampleId id);
/// Parses "e1" .. "e14"; throws DomainError otherwise.
ExampleId parse_example_id(std::string_view text);

/// Free parameters of the examples. Fields an example does not use are
/// ignored; alpha/beta, when set, must match examples with a fixed pair.
struct ExampleParams {
  cplx a = 1.0;
  cplx m = 0.5;
  int k = 1;
  std::optional<int> alpha;
  std::optional<int> beta;
  double u = 0.5;
  double v = 0.25;
};

/// Parameters actually used by an example after applying defaults and fixed
/// values; throws DomainError when the supplied ones conflict.
ExampleParams resolve(ExampleId id, const ExampleParams& params);

/// Evaluates the closed-form right-hand side of the identity.
EvaluationResult example_rhs(ExampleId id, const ExampleParams& params);

/// Right-hand side for the non-integer k families of a general spec, using the
/// matching example identity (m = 1, 1/4, or 1/2 with a = 1 for log log;
/// m = 1/2 with a > 1 for 1/log). Throws DomainError when none applies.
EvaluationResult family_rhs(const IntegralSpec& spec);

}  // namespace extcauchy
