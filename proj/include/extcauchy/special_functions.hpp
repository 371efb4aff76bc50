#pragma once

// Complex special-function kernels: log-Gamma, digamma, Bernoulli and
// Apostol-Bernoulli polynomials, Hurwitz zeta at non-positive integers and the
// Lerch transcendent Phi(z, s, a).
//
// Everything here is a pure function of its arguments.

#include <variant>
#include <vector>

#include "extcauchy/numeric.hpp"

namespace extcauchy {

/// Distance below which an argument counts as sitting on a pole of Gamma.
inline constexpr double kPoleTolerance = 1e-12;
/// Highest polynomial degree supported by the Bernoulli tables.
inline constexpr int kMaxBernoulliDegree = 64;

/// Polynomial with complex coefficients in ascending powers.
struct PolyCoeffs {
  std::vector<cplx> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  cplx operator()(cplx x) const;
};

/// Principal branch of log Gamma(z): the analytic continuation from the
/// positive axis, cut along (-inf, 0]. On the cut the value is the limit
/// from above. Throws PoleError at non-positive integers.
cplx log_gamma(cplx z);

/// psi(z) = Gamma'(z)/Gamma(z). Throws PoleError at non-positive integers.
cplx digamma(cplx z);

/// Bernoulli number B_n (B_1 = -1/2). Throws DegreeTooLarge for n > 64.
double bernoulli_number(int n);

/// Classical Bernoulli polynomial B_n(x).
cplx bernoulli_poly(int n, cplx x);

/// Coefficients of B_n(x) in ascending powers of x.
PolyCoeffs bernoulli_poly_coeffs(int n);

/// Apostol-Bernoulli polynomial B_n(x; lambda), defined by
///   t e^{xt} / (lambda e^t - 1) = sum_n B_n(x; lambda) t^n / n!.
/// Throws DegenerateBase when |lambda - 1| < 1e-12.
cplx apostol_bernoulli(int n, cplx x, cplx lambda);

/// Apostol-Bernoulli numbers B_0(lambda) .. B_n(lambda) (x = 0).
std::vector<cplx> apostol_bernoulli_numbers(int n, cplx lambda);

/// zeta(-k, a) = -B_{k+1}(a) / (k + 1). Throws DegreeTooLarge for k > 63.
cplx hurwitz_zeta_neg_int(int k, cplx a);

/// d/ds zeta(s, a) at s = 0, i.e. log Gamma(a) - log(2 pi) / 2.
cplx hurwitz_zeta_sderiv0(cplx a);

// ---------------------------------------------------------------------------
// Lerch transcendent

/// Order s = -k with k a non-negative integer.
struct NegInt {
  int k;
};
/// Order s = 1.
struct PosOne {};
/// Any other order; only Re(s) > 0 is supported.
struct General {
  cplx s;
};

using LerchOrder = std::variant<NegInt, PosOne, General>;

struct LerchArgs {
  cplx z;
  LerchOrder s;
  cplx a;
};

/// Radius below which Phi(z, 1, a) is summed directly rather than integrated.
inline constexpr double kLerchSeriesRadius = 0.5;

/// Phi(z, s, a) = sum_{n >= 0} z^n / (n + a)^s, continued analytically.
///
/// NegInt orders use the exact Apostol-Bernoulli closed form (Hurwitz zeta
/// when z == 1). Positive orders use the direct series for small |z| and the
/// integral representation
///   Phi(z, s, a) = 1/Gamma(s) int_0^inf t^{s-1} e^{-a t} / (1 - z e^{-t}) dt
/// elsewhere, which continues Phi to the plane cut along [1, inf).
///
/// Throws DomainError when Re(a) <= 0, BranchCutError for z on [1, inf) with
/// a non-NegInt order.
cplx lerch_phi(const LerchArgs& args);

}  // namespace extcauchy
