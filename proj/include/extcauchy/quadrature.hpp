#pragma once

// Numerical oracle for the half-line integrals. Integration runs in the
// logarithmic variable t = log x, where both ends decay exponentially, with
// double-exponential panels split at t = 0 and at every declared singularity.

#include <functional>
#include <optional>
#include <vector>

#include "extcauchy/closed_forms.hpp"
#include "extcauchy/numeric.hpp"

namespace extcauchy {

/// A simple pole of the form numerator(x) / log(x / location). The integral
/// is the boundary value obtained when the pole is approached from above,
/// i.e. 1 / (log x - log location + i0): principal value minus
/// i pi location * numerator(location).
struct LogPole {
  double location;
  std::function<cplx(double)> numerator;
};

struct Integrand {
  /// f(x) for x > 0.
  std::function<cplx(double)> evaluator;
  /// x f(x) at x = exp(t). Optional; evaluated in place of the x-space form
  /// where given, since it avoids overflow of x^alpha for large t.
  std::function<cplx(double)> log_space;
  /// Integrable singularities (or removable points) in x.
  std::vector<double> singular_points;
  /// x f(x) ~ x^{-decay_exponent} as x -> inf.
  double decay_exponent = 1.0;
  /// x f(x) ~ x^{origin_exponent} as x -> 0.
  double origin_exponent = 1.0;
  std::optional<LogPole> pole;
};

struct QuadratureResult {
  cplx value;
  double abs_error_estimate = 0.0;
  long nodes = 0;
  bool converged = false;
};

inline constexpr double kMinRelTol = 1e-12;

/// int_0^inf f(x) dx. Throws NonConvergence when the refinement cap is hit,
/// SingularEvaluation when the evaluator is non-finite at a node, DomainError
/// on bad options.
QuadratureResult integrate_halfline(const Integrand& f, double rel_tol);

/// Left-hand side integrand of the requested family: integer k, the
/// log log family, or the 1/log family.
Integrand build_lhs(const IntegralSpec& spec);

/// Left-hand side integrand of an example identity.
Integrand build_example_lhs(ExampleId id, const ExampleParams& params);

}  // namespace extcauchy
