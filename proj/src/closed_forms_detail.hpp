#pragma once

#include "extcauchy/numeric.hpp"

namespace extcauchy::detail {

/// Validates the pair and returns check_degenerate, throwing
/// DegenerateParameters below tolerance.
double require_nondegenerate(int alpha, int beta);

/// (2i)^n for integer n.
cplx two_i_power(int n);

/// Shifts the imaginary part into (-pi, pi]: the principal logarithm of
/// exp(w).
cplx principal(cplx w);

}  // namespace extcauchy::detail
