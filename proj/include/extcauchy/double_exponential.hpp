#pragma once

// Double-exponential quadrature panels over the real line.
//
// Finite panels use the tanh-sinh map, semi-infinite panels the exp-exp map
// x = exp(u - exp(-u)), which suits integrands with exponential decay at the
// open end and integrable (e.g. logarithmic) singularities at the closed end.
// All panels are refined in lockstep by halving the step; nodes of coarser
// levels are reused.

#include <functional>
#include <span>
#include <variant>

#include "extcauchy/numeric.hpp"

namespace extcauchy::de {

struct Finite {
  double lo, hi;
};
/// [start, inf); the integrand is expected to decay like exp(-rate * t).
struct RightInfinite {
  double start, rate;
};
/// (-inf, start]; the integrand is expected to decay like exp(rate * t).
struct LeftInfinite {
  double start, rate;
};

using Panel = std::variant<Finite, RightInfinite, LeftInfinite>;

struct Options {
  double rel_tol = 1e-10;
  int max_level = 12;
  int min_level = 3;
};

struct Outcome {
  cplx value;
  double abs_error_estimate = 0.0;
  long nodes = 0;
  int level = 0;
  bool converged = false;
};

using Function = std::function<cplx(double)>;

/// Integrates f over the union of the panels. Nodes whose abscissa rounds onto
/// a closed panel end are skipped. Throws SingularEvaluation when f returns a
/// non-finite value at a node.
Outcome integrate(const Function& f, std::span<const Panel> panels, const Options& options);

}  // namespace extcauchy::de
