#include "extcauchy/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "extcauchy/double_exponential.hpp"
#include "extcauchy/errors.hpp"

namespace extcauchy {

namespace {

// Even-index Bernoulli numbers B_0, B_2, ..., B_64.
constexpr std::array<double, 33> kEvenBernoulli = {
    1.0,  // B_0
    1.66666666666666666667e-1,  // B_2
    -3.33333333333333333333e-2,  // B_4
    2.38095238095238095238e-2,  // B_6
    -3.33333333333333333333e-2,  // B_8
    7.57575757575757575758e-2,  // B_10
    -2.53113553113553113553e-1,  // B_12
    1.16666666666666666667,  // B_14
    -7.09215686274509803922,  // B_16
    5.49711779448621553885e+1,  // B_18
    -5.29124242424242424242e+2,  // B_20
    6.19212318840579710145e+3,  // B_22
    -8.65802531135531135531e+4,  // B_24
    1.42551716666666666667e+6,  // B_26
    -2.7298231067816091954e+7,  // B_28
    6.01580873900642368384e+8,  // B_30
    -1.51163157670921568627e+10,  // B_32
    4.29614643061166666667e+11,  // B_34
    -1.37116552050883327722e+13,  // B_36
    4.88332318973593166667e+14,  // B_38
    -1.92965793419400681486e+16,  // B_40
    8.41693047573682615001e+17,  // B_42
    -4.03380718540594554131e+19,  // B_44
    2.11507486380819916056e+21,  // B_46
    -1.20866265222965259346e+23,  // B_48
    7.50086674607696436686e+24,  // B_50
    -5.03877810148106891414e+26,  // B_52
    3.65287764848181233351e+28,  // B_54
    -2.84987693024508822263e+30,  // B_56
    2.38654274996836276446e+32,  // B_58
    -2.13999492572253336658e+34,  // B_60
    2.05009757234780975699e+36,  // B_62
    -2.09380059113463784091e+38,  // B_64
};

// Below this real part the recurrence shift would need too many terms.
constexpr double kMostNegativeRealPart = -1e6;
// Stirling / asymptotic series are used once Re(z) reaches this value.
constexpr double kAsymptoticThreshold = 15.0;

void check_pole(cplx z, const char* who) {
  if (std::fabs(z.imag()) < kPoleTolerance && z.real() < 0.5) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::fabs(z.real() - nearest) < kPoleTolerance)
      throw PoleError(std::string(who) + ": argument " + std::to_string(z.real()) +
                      " is a non-positive integer");
  }
  if (z.real() < kMostNegativeRealPart)
    throw DomainError(std::string(who) + ": real part below supported range");
}

int shift_count(cplx z) {
  if (z.real() >= kAsymptoticThreshold) return 0;
  return static_cast<int>(std::ceil(kAsymptoticThreshold - z.real()));
}

cplx log_gamma_stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (int k = 1; k <= 12; ++k) {
    series += kEvenBernoulli[k] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

cplx digamma_asymptotic(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv2;
  for (int k = 1; k <= 12; ++k) {
    series += kEvenBernoulli[k] / (2.0 * k) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

void check_degree(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": negative degree");
  if (n > kMaxBernoulliDegree)
    throw DegreeTooLarge(std::string(who) + ": degree " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxBernoulliDegree));
}

bool on_branch_cut(cplx z) {
  return std::fabs(z.imag()) <= kPoleTolerance * std::max(1.0, std::abs(z)) &&
         z.real() >= 1.0 - kPoleTolerance;
}

cplx lerch_series(cplx z, cplx s, cplx a, bool order_one) {
  const double r = std::abs(z);
  CompensatedSum sum;
  cplx zn = 1.0;
  for (int n = 0; n < 10000; ++n) {
    const cplx denom = order_one ? (static_cast<double>(n) + a)
                                 : std::exp(s * std::log(static_cast<double>(n) + a));
    const cplx term = zn / denom;
    sum.add(term);
    // remaining terms are bounded by a geometric series in |z|
    if (std::abs(term) * r / (1.0 - r) <= 1e-17 * std::abs(sum.value()) || zn == 0.0) break;
    zn *= z;
  }
  return sum.value();
}

cplx lerch_integral(cplx z, cplx s, cplx a, bool order_one) {
  const cplx sm1 = s - 1.0;
  auto f = [&](double t) -> cplx {
    const cplx kernel = std::exp(-a * t) / (1.0 - z * std::exp(-t));
    if (order_one) return kernel;
    return std::exp(sm1 * std::log(t)) * kernel;
  };
  const de::Panel panel = de::RightInfinite{0.0, a.real()};
  de::Options opts;
  opts.rel_tol = 1e-13;
  const de::Outcome r = de::integrate(f, std::span<const de::Panel>(&panel, 1), opts);
  if (!r.converged)
    throw NonConvergence("lerch_phi: integral representation did not converge");
  if (order_one) return r.value;
  return r.value * std::exp(-log_gamma(s));
}

}  // namespace

cplx PolyCoeffs::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx log_gamma(cplx z) {
  check_pole(z, "log_gamma");
  const int shift = shift_count(z);
  if (shift == 0) return log_gamma_stirling(z);
  // log Gamma(z) = log Gamma(z + N) - sum_{k<N} log(z + k); every term is
  // analytic off the negative axis, so the sum is the principal branch.
  CompensatedSum logs;
  for (int k = 0; k < shift; ++k) logs.add(std::log(z + static_cast<double>(k)));
  cplx value = log_gamma_stirling(z + static_cast<double>(shift)) - logs.value();
  if (z.imag() == 0.0 && z.real() > 0.0) value.imag(0.0);
  return value;
}

cplx digamma(cplx z) {
  check_pole(z, "digamma");
  const int shift = shift_count(z);
  if (shift == 0) return digamma_asymptotic(z);
  CompensatedSum recip;
  for (int k = 0; k < shift; ++k) recip.add(1.0 / (z + static_cast<double>(k)));
  return digamma_asymptotic(z + static_cast<double>(shift)) - recip.value();
}

double bernoulli_number(int n) {
  check_degree(n, "bernoulli_number");
  if (n == 1) return -0.5;
  if (n % 2 == 1) return 0.0;
  return kEvenBernoulli[n / 2];
}

PolyCoeffs bernoulli_poly_coeffs(int n) {
  check_degree(n, "bernoulli_poly");
  PolyCoeffs p;
  p.coefficients.resize(n + 1);
  for (int j = 0; j <= n; ++j) p.coefficients[j] = binomial(n, j) * bernoulli_number(n - j);
  return p;
}

cplx bernoulli_poly(int n, cplx x) { return bernoulli_poly_coeffs(n)(x); }

std::vector<cplx> apostol_bernoulli_numbers(int n, cplx lambda) {
  check_degree(n, "apostol_bernoulli");
  if (std::abs(lambda - 1.0) < kPoleTolerance)
    throw DegenerateBase("apostol_bernoulli: lambda = 1 reduces to classical Bernoulli");
  // From lambda e^t G(t) - G(t) = t with G(t) = sum B_j(lambda) t^j / j!:
  //   (lambda - 1) B_j + lambda sum_{k<j} C(j,k) B_k = [j == 1].
  std::vector<cplx> b(n + 1, 0.0);
  const cplx inv = 1.0 / (lambda - 1.0);
  for (int j = 1; j <= n; ++j) {
    CompensatedSum acc;
    for (int k = 1; k < j; ++k) acc.add(binomial(j, k) * b[k]);
    b[j] = ((j == 1 ? 1.0 : 0.0) - lambda * acc.value()) * inv;
  }
  return b;
}

cplx apostol_bernoulli(int n, cplx x, cplx lambda) {
  const std::vector<cplx> b = apostol_bernoulli_numbers(n, lambda);
  cplx acc = 0.0;
  for (int j = n; j >= 0; --j) acc = acc * x + binomial(n, j) * b[n - j];
  return acc;
}

cplx hurwitz_zeta_neg_int(int k, cplx a) {
  if (k < 0) throw DomainError("hurwitz_zeta_neg_int: k must be non-negative");
  if (k + 1 > kMaxBernoulliDegree)
    throw DegreeTooLarge("hurwitz_zeta_neg_int: k = " + std::to_string(k) + " exceeds 63");
  return -bernoulli_poly(k + 1, a) / static_cast<double>(k + 1);
}

cplx hurwitz_zeta_sderiv0(cplx a) { return log_gamma(a) - 0.5 * std::log(2.0 * kPi); }

cplx lerch_phi(const LerchArgs& args) {
  const cplx z = args.z;
  const cplx a = args.a;
  if (!(a.real() > 0.0)) throw DomainError("lerch_phi: requires Re(a) > 0");

  if (const auto* neg = std::get_if<NegInt>(&args.s)) {
    if (neg->k < 0) throw DomainError("lerch_phi: NegInt order needs k >= 0");
    if (neg->k + 1 > kMaxBernoulliDegree)
      throw DegreeTooLarge("lerch_phi: k = " + std::to_string(neg->k) + " exceeds 63");
    if (std::abs(z - 1.0) < kPoleTolerance) return hurwitz_zeta_neg_int(neg->k, a);
    return -apostol_bernoulli(neg->k + 1, a, z) / static_cast<double>(neg->k + 1);
  }

  if (on_branch_cut(z)) throw BranchCutError("lerch_phi: z lies on the cut [1, inf)");

  bool order_one = std::holds_alternative<PosOne>(args.s);
  cplx s = 1.0;
  if (const auto* gen = std::get_if<General>(&args.s)) {
    s = gen->s;
    if (!(s.real() > 0.0)) throw DomainError("lerch_phi: general order needs Re(s) > 0");
    order_one = (s == cplx(1.0, 0.0));
  }

  if (std::abs(z) < kLerchSeriesRadius) return lerch_series(z, s, a, order_one);
  return lerch_integral(z, s, a, order_one);
}

}  // namespace extcauchy
