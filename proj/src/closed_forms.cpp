#include "extcauchy/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extcauchy/errors.hpp"
#include "extcauchy/special_functions.hpp"
#include "closed_forms_detail.hpp"

namespace extcauchy {

std::string to_string(const KOrder& k) {
  if (const int* n = std::get_if<int>(&k)) return std::to_string(*n);
  if (std::holds_alternative<DLogDeriv>(k)) return "dlog";
  return "kneg1";
}

void validate_pair(int alpha, int beta) {
  if (alpha < 2 || beta < 2 || alpha % 2 != 0 || beta % 2 != 0)
    throw DomainError("alpha and beta must be even integers >= 2");
  if (alpha == beta) throw DomainError("alpha and beta must differ");
}

void validate(const IntegralSpec& spec) {
  validate_pair(spec.alpha, spec.beta);
  if (!(spec.a > 0.0) || !std::isfinite(spec.a)) throw DomainError("a must be a positive real");
  if (!is_finite(spec.m) || !(spec.m.real() > 0.0) ||
      !(spec.m.real() < static_cast<double>(spec.alpha + spec.beta)))
    throw DomainError("need 0 < Re(m) < alpha + beta for convergence");
  if (const int* k = std::get_if<int>(&spec.k); k && *k < 0)
    throw DomainError("integer k must be non-negative");
}

double check_degenerate(int alpha, int beta) {
  double smallest = std::numeric_limits<double>::infinity();
  for (int j = 0; j < beta; ++j)
    smallest = std::min(smallest, std::fabs(one_plus_cos_pi_ratio((1L + 2L * j) * alpha, beta)));
  for (int j = 0; j < alpha; ++j)
    smallest = std::min(smallest, std::fabs(one_plus_cos_pi_ratio((1L + 2L * j) * beta, alpha)));
  return smallest;
}

namespace detail {

double require_nondegenerate(int alpha, int beta) {
  validate_pair(alpha, beta);
  const double d = check_degenerate(alpha, beta);
  if (d < kDegeneracyTolerance)
    throw DegenerateParameters("(alpha, beta) = (" + std::to_string(alpha) + ", " +
                               std::to_string(beta) +
                               ") makes a denominator 1 + cos(.) vanish");
  return d;
}

cplx two_i_power(int n) {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return std::ldexp(1.0, n) * kPowers[((n % 4) + 4) % 4];
}

cplx principal(cplx w) {
  double im = w.imag();
  if (im > kPi || im <= -kPi) im -= 2.0 * kPi * std::ceil((im - kPi) / (2.0 * kPi));
  return {w.real(), im};
}

}  // namespace detail

namespace {

using detail::two_i_power;

// One of the two symmetric j-sums. `count` is the summation length (beta for
// the first sum), `other` the remaining exponent.
cplx theorem_sum(int count, int other, cplx m, int k, double log_a) {
  const double n = count;
  const double o = other;
  const cplx z = cis_pi(2.0 * m);
  const double shift = log_a / (2.0 * kPi);
  const cplx scale = two_i_power(k - 1) * std::pow(kPi, k + 1);
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const double den = one_plus_cos_pi_ratio(static_cast<long>(c) * other, count);
    const cplx phase = cis_pi(-(m * (2.0 + 4.0 * j - 3.0 * n) + o * (n - c)) / n);
    const cplx pair = cis_pi(m * (c - n) / n) + cis_pi((m - o) * (c - n) / n);
    const cplx inner_phase = cis_pi((2.0 * m - o) * (c - n) / n);
    const cplx w1{c / (2.0 * n), -shift};
    const cplx w2{1.0 - c / (2.0 * n), -shift};
    const cplx phi1 = lerch_phi({z, NegInt{k}, w1});
    const cplx phi2 = lerch_phi({z, NegInt{k}, w2});
    sum.add(scale / (n * den) * phase * pair * (inner_phase * phi1 + phi2));
  }
  return sum.value();
}

}  // namespace

EvaluationResult theorem_rhs(const IntegralSpec& spec) {
  validate(spec);
  const int* k = std::get_if<int>(&spec.k);
  if (!k) throw DomainError("theorem_rhs requires an integer k");
  if (*k > 32) throw DomainError("theorem_rhs supports 0 <= k <= 32");
  EvaluationResult r;
  r.min_denominator = detail::require_nondegenerate(spec.alpha, spec.beta);
  const double log_a = std::log(spec.a);
  CompensatedSum total;
  total.add(theorem_sum(spec.beta, spec.alpha, spec.m, *k, log_a));
  total.add(theorem_sum(spec.alpha, spec.beta, spec.m, *k, log_a));
  r.value = total.value();
  r.method = "theorem";
  r.terms = 2 * (spec.alpha + spec.beta);
  return r;
}

cplx eq1_rhs(cplx p, int a, int b) {
  validate_pair(a, b);
  if (!(p.real() > 0.0) || !(p.real() < static_cast<double>(a + b)))
    throw DomainError("eq1_rhs: need 0 < Re(p) < a + b");
  if (std::fabs(p.imag()) < kDegeneracyTolerance &&
      std::fabs(p.real() - std::round(p.real())) < kDegeneracyTolerance)
    throw DegenerateParameters("eq1_rhs: csc(p pi) has a pole at integer p");
  detail::require_nondegenerate(a, b);

  auto half = [p](int n, int other) {
    CompensatedSum sum;
    for (int j = 0; j < n; ++j) {
      const double c = 2.0 * j - n + 1.0;
      const cplx num = std::cos(c * p * kPi / static_cast<double>(n)) +
                       std::cos(c * (p - static_cast<double>(other)) * kPi / static_cast<double>(n));
      sum.add(num / one_plus_cos_pi_ratio((2L * j + 1L) * other, n));
    }
    return kPi / (2.0 * n * std::sin(p * kPi)) * sum.value();
  };
  return half(a, b) + half(b, a);
}

EvaluationResult family_rhs(const IntegralSpec& spec) {
  validate(spec);
  auto near = [](cplx m, double target) { return std::abs(m - target) < 1e-14; };
  ExampleParams p;
  p.alpha = spec.alpha;
  p.beta = spec.beta;
  if (std::holds_alternative<DLogDeriv>(spec.k)) {
    p.a = spec.a;
    if (near(spec.m, 1.0)) return example_rhs(ExampleId::e5, p);
    if (near(spec.m, 0.25)) return example_rhs(ExampleId::e3, p);
    if (near(spec.m, 0.5) && spec.a == 1.0) return example_rhs(ExampleId::e2, p);
    throw DomainError("no closed form for the log log family at this (a, m)");
  }
  if (std::holds_alternative<KNegOne>(spec.k)) {
    if (!near(spec.m, 0.5)) throw DomainError("no closed form for the 1/log family at this m");
    // the 1/log identity is written for 1/(c pi + log x), i.e. a = exp(c pi)
    p.a = std::log(spec.a) / kPi;
    return example_rhs(ExampleId::e9, p);
  }
  return theorem_rhs(spec);
}

}  // namespace extcauchy
