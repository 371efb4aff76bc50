// Right-hand sides of the example identities, transcribed term by term.

#include <array>
#include <cmath>
#include <functional>

#include "closed_forms_detail.hpp"
#include "extcauchy/closed_forms.hpp"
#include "extcauchy/errors.hpp"
#include "extcauchy/special_functions.hpp"

namespace extcauchy {

using detail::principal;

namespace {

constexpr std::array<std::string_view, kExampleCount> kNames = {
    "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "e10", "e11", "e12", "e13", "e14"};

struct FixedPair {
  int alpha, beta;
};

std::optional<FixedPair> fixed_pair(ExampleId id) {
  switch (id) {
    case ExampleId::e6: return FixedPair{2, 4};
    case ExampleId::e7: return FixedPair{2, 8};
    case ExampleId::e11: return FixedPair{4, 6};
    case ExampleId::e13: return FixedPair{2, 4};
    case ExampleId::e14: return FixedPair{2, 4};
    default: return std::nullopt;
  }
}

cplx log_real(double x) { return std::log(cplx(x, 0.0)); }

// Principal log of Gamma(x) for real non-integer x.
cplx log_of_gamma(double x) { return log_real(std::tgamma(x)); }

// Principal log of Gamma(p) / (2 Gamma(q)).
cplx log_gamma_ratio_half(cplx p, cplx q) {
  return principal(log_gamma(p) - log_gamma(q) - std::log(2.0));
}

using HalfSum = std::function<cplx(int count, int other)>;

// Applies a j-sum in both orientations: (count, other) = (beta, alpha) and (alpha, beta).
EvaluationResult both_sums(std::string_view name, int alpha, int beta, const HalfSum& half) {
  EvaluationResult r;
  r.min_denominator = detail::require_nondegenerate(alpha, beta);
  CompensatedSum total;
  total.add(half(beta, alpha));
  total.add(half(alpha, beta));
  r.value = total.value();
  r.method = std::string(name);
  r.terms = alpha + beta;
  return r;
}

double denominator(int j, int count, int other) {
  return one_plus_cos_pi_ratio((1L + 2L * j) * other, count);
}

// m = 1/2, a = 1, log log integrand.
cplx e2_sum(int count, int other) {
  const double n = count, o = other;
  const cplx base = kI * kPi + std::log(16.0) + 2.0 * std::log(kPi);
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx pre = kPi / (8.0 * n * denominator(j, count, other)) *
                     (cis_pi((c - n) / (2.0 * n)) + cis_pi((0.5 - o) * (c - n) / n));
    const cplx t1 = base - 4.0 * log_real(-1.0 + c / (4.0 * n)) +
                    4.0 * log_real((c - 2.0 * n) / (4.0 * n)) -
                    4.0 * log_gamma(-1.0 + c / (4.0 * n)) + 4.0 * log_gamma((c - 2.0 * n) / (4.0 * n));
    const cplx t2 = base + 4.0 * log_real(-c / n) - 4.0 * log_real(-(c + 2.0 * n) / n) +
                    4.0 * log_gamma(-c / (4.0 * n)) - 4.0 * log_gamma(-(c + 2.0 * n) / (4.0 * n));
    sum.add(pre * (t1 + cis_pi((o - 1.0) * (c - n) / n) * t2));
  }
  return sum.value();
}

// m = 1/4, log log integrand.
cplx e3_sum(int count, int other, double log_a) {
  const double n = count, o = other;
  const cplx head = kPi - 2.0 * kI * std::log(2.0 * kPi);
  const cplx two_two_i{2.0, 2.0};
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx w{c / (2.0 * n), -log_a / (2.0 * kPi)};
    const cplx wp{(c - 2.0 * n) / (2.0 * n), log_a / (2.0 * kPi)};
    const cplx pre =
        kPi / (n * denominator(j, count, other)) * cplx(0.125, 0.125) *
        cis_pi((-2.0 + j * (-4.0 + 8.0 * o) - 4.0 * o * (n - 1.0) + 3.0 * n) / (4.0 * n)) *
        (cis_pi((c - n) / (4.0 * n)) + cis_pi((0.25 - o) * (c - n) / n));
    const cplx inner =
        head + two_two_i * (log_gamma_ratio_half(w / 4.0, (2.0 + w) / 4.0) +
                            kI * log_gamma_ratio_half((1.0 + w) / 4.0, (3.0 + w) / 4.0));
    const cplx outer =
        two_two_i * (log_gamma_ratio_half(-wp / 4.0, (2.0 - wp) / 4.0) +
                     kI * log_gamma_ratio_half((1.0 - wp) / 4.0, (3.0 - wp) / 4.0));
    sum.add(pre * (head + cis_pi((0.5 - o) * (c - n) / n) * inner + outer));
  }
  return sum.value();
}

// m = 1, Hurwitz zeta form.
cplx e4_sum(int count, int other, double log_a, int k) {
  const double n = count, o = other;
  const cplx scale = detail::two_i_power(k - 1) * std::pow(kPi, k + 1);
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx pre = scale / (n * denominator(j, count, other)) *
                     cis_pi((1.0 - 2.0 * j * (o - 1.0) + o * (n - 1.0)) / n) *
                     (1.0 + cis_pi(o * (c - n) / n));
    const cplx w1{c / (2.0 * n), -log_a / (2.0 * kPi)};
    const cplx w2{1.0 - c / (2.0 * n), -log_a / (2.0 * kPi)};
    sum.add(pre * (hurwitz_zeta_neg_int(k, w1) +
                   cis_pi((o - 2.0) * (c - n) / n) * hurwitz_zeta_neg_int(k, w2)));
  }
  return sum.value();
}

// m = 1, log log integrand.
cplx e5_sum(int count, int other, double log_a) {
  const double n = count, o = other;
  const cplx k_const = kPi - 2.0 * kI * (std::log(2.0) + std::log(kPi));
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx w{c / (2.0 * n), -log_a / (2.0 * kPi)};
    const cplx wp{(c - 2.0 * n) / (2.0 * n), log_a / (2.0 * kPi)};
    const cplx pre = 1.0 / (8.0 * n * n * denominator(j, count, other)) *
                     cis_pi((1.0 - 2.0 * j * (o - 1.0) + o * (n - 1.0)) / n) *
                     (1.0 + cis_pi(o * (c - n) / n));
    const cplx e = cis_pi((o - 2.0) * (c - n) / n);
    const cplx body = e * cplx(kPi * (c - n), n * log_a) * k_const +
                      cplx(kPi * (n - c), n * log_a) * k_const +
                      4.0 * kI * kPi * n * (-half_log_2pi + std::log(-1.0 + w) + log_gamma(-1.0 + w)) +
                      4.0 * kI * e * kPi * n *
                          (-half_log_2pi + std::log(-1.0 - wp) + log_gamma(-1.0 - wp));
    sum.add(pre * body);
  }
  return sum.value();
}

cplx e6_value() {
  const double r2 = std::sqrt(2.0);
  const cplx log_product = std::log(cplx(1.0, 1.0) / 3.0) + kI / r2 * std::log(1.0 + r2) +
                           0.5 * std::log(kPi) +
                           log_real(std::tgamma(-0.25) / std::tgamma(-0.75));
  return 0.5 * kPi * principal(log_product);
}

cplx e7_value() {
  const double r2 = std::sqrt(2.0);
  const cplx q3 = cis_pi(3.0 / 8.0);
  const cplx q5 = cis_pi(5.0 / 8.0);
  const cplx q7 = cis_pi(7.0 / 8.0);
  const cplx log_product = q3 * std::log(4.0) + q7 * kPi + 2.0 * q3 * std::log(kPi) +
                           (cplx(-1.0, 1.0) - r2) * std::log(1.0 / std::tan(3.0 * kPi / 16.0)) -
                           4.0 * q3 * std::log(3.0 * std::tgamma(-0.75) / std::tgamma(-0.25)) +
                           (cplx(1.0, 1.0) - kI * r2) * std::log(std::tan(kPi / 16.0));
  return -0.125 * q5 * kPi * principal(log_product);
}

cplx e8_sum(double u, double v, int count, int other, bool first) {
  const double n = count, o = other;
  const cplx z1 = std::exp(2.0 * kI * kPi * cplx(u, v));
  const cplx z2 = std::exp(2.0 * kPi * cplx(v, u));
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx a1{c / (2.0 * n), 0.0};
    const cplx a2{1.0 - c / (2.0 * n), 0.0};
    const cplx p11 = lerch_phi({z1, PosOne{}, a1});
    const cplx p12 = lerch_phi({z1, PosOne{}, a2});
    const cplx p21 = lerch_phi({z2, PosOne{}, a1});
    const cplx p22 = lerch_phi({z2, PosOne{}, a2});
    const cplx mix = std::exp(kI * kPi * o) + std::exp(kI * c * kPi * o / n);
    cplx pre, body;
    if (first) {
      pre = kI / (4.0 * n * denominator(j, count, other)) *
            std::exp(-0.5 * kPi * (kI + 4.0 * v + 2.0 * kI * o + 2.0 * kI * c * (u - kI * v + o) / n)) *
            mix;
      body = std::exp(kI * kPi * ((2.0 + 4.0 * j) * u + (-2.0 * kI * v + o) * n) / n) * p11 +
             std::exp(2.0 * kI * kPi * u + c * kPi * (2.0 * v + kI * o) / n) * p12 -
             std::exp(kPi * (2.0 * v + kI * o + 2.0 * c * (kI * u + v) / n)) * p21 -
             std::exp(kI * kPi * (o + 2.0 * j * o + 2.0 * u * n - 4.0 * kI * v * n) / n) * p22;
    } else {
      const cplx one_plus = 1.0 + std::exp(kI * c * kPi * o / n);
      pre = kI / (2.0 * one_plus * one_plus * n) *
            std::exp(-kPi * (2.0 * kI * c * u + v * (2.0 + 4.0 * j + 4.0 * n) - kI * n * (-1.0 - 2.0 * o)) /
                     (2.0 * n)) *
            mix;
      body = std::exp(kI * kPi * ((2.0 + 4.0 * j) * u + n * (-2.0 * kI * v + o)) / n) * p11 +
             std::exp(kPi * ((2.0 + 4.0 * j) * v + kI * (2.0 * u * n + o + 2.0 * j * o)) / n) * p12 -
             std::exp(kPi * (2.0 * kI * c * u + 2.0 * v * (c + n) + kI * n * o) / n) * p21 -
             std::exp(kI * kPi * (2.0 * u * n - 4.0 * kI * v * n + o + 2.0 * j * o) / n) * p22;
    }
    sum.add(pre * body);
  }
  return sum.value();
}

cplx e9_sum(int count, int other, cplx a) {
  const double n = count, o = other;
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx pre = kI / (8.0 * n * denominator(j, count, other)) *
                     (cis_pi((c - n) / (2.0 * n)) + cis_pi((0.5 - o) * (c - n) / n));
    const cplx ian = kI * a * n;
    const cplx body = digamma((c - ian) / (4.0 * n)) - digamma((c + 2.0 * n - ian) / (4.0 * n)) +
                      cis_pi((o - 1.0) * (c - n) / n) *
                          (-digamma(-(c - 4.0 * n + ian) / (4.0 * n)) +
                           digamma(-(c - 2.0 * n + ian) / (4.0 * n)));
    sum.add(pre * body);
  }
  return sum.value();
}

cplx e10_sum(int count, int other, cplx a) {
  const double n = count, o = other;
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx pre = kI / (8.0 * n * denominator(j, count, other)) *
                     (cis_pi((c - n) / (2.0 * n)) + cis_pi((0.5 - o) * (c - n) / n));
    const cplx e = cis_pi((o - 1.0) * (c - n) / n);
    const cplx ian = kI * a * n;
    const double q = 4.0 * n;
    const cplx body = digamma((c - ian) / q) + e * digamma(-(c - 4.0 * n - ian) / q) -
                      e * digamma(-(c - 2.0 * n - ian) / q) - digamma((c + 2.0 * n - ian) / q) -
                      digamma((c + ian) / q) - e * digamma(-(c - 4.0 * n + ian) / q) +
                      e * digamma(-(c - 2.0 * n + ian) / q) + digamma((c + 2.0 * n + ian) / q);
    sum.add(pre * body);
  }
  return sum.value();
}

cplx e11_value() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const cplx s6 = std::sqrt(cplx(6.0, 12.0 * std::sqrt(6.0)));
  const double g = (-1.0 + 3.0 * r2) * kPi / 12.0;
  const cplx log_product =
      (-2.0 + 3.0 * r2) * kPi / 12.0 * std::log(3.0) - (2.0 + s6) * kPi / 12.0 * std::log(5.0) -
      (-2.0 + s6) * kPi / 12.0 * std::log(7.0) + kI * (-1.0 + 3.0 * r2) * kPi * kPi / 24.0 +
      g * std::log(2.0 * kPi) +
      cplx(kPi, r3 * kPi) / 6.0 *
          std::log(11.0 * std::tgamma(-11.0 / 12.0) / std::tgamma(-5.0 / 12.0)) +
      kPi / 6.0 * std::log(std::tgamma(-0.25) / std::tgamma(-0.75)) +
      kPi / (2.0 * r2) *
          std::log(std::tgamma(-3.0 / 8.0) * std::tgamma(-1.0 / 8.0) /
                   (std::tgamma(-7.0 / 8.0) * std::tgamma(-5.0 / 8.0))) +
      cplx(kPi, -r3 * kPi) / 6.0 * std::log(std::tgamma(-7.0 / 12.0) / std::tgamma(-1.0 / 12.0));
  return principal(log_product);
}

cplx e12_sum(int count, int other) {
  const double n = count, o = other;
  CompensatedSum sum;
  for (int j = 0; j < count; ++j) {
    const double c = 1.0 + 2.0 * j;
    const cplx mix = (-1.0 + cis_pi(c / n)) * (cis_pi(o) + cis_pi(c * o / n));
    const cplx lead = cis_pi((1.0 + j * (2.0 - 4.0 * o) - 2.0 * o + 3.0 * n) / (2.0 * n));
    const cplx body =
        lead * mix * digamma(c / (4.0 * n)) +
        cis_pi((n - c) / (2.0 * n)) *
            (1.0 + cis_pi((o - 1.0) * (c - n) / n) + cis_pi(o * (c - n) / n) + cis_pi((n - c) / n)) *
            digamma(-(c - 4.0 * n) / (4.0 * n)) +
        cis_pi(-(3.0 + 6.0 * j + (-3.0 + 2.0 * o) * n) / (2.0 * n)) * mix *
            digamma(-(c - 2.0 * n) / (4.0 * n)) -
        lead * mix * digamma((c + 2.0 * n) / (4.0 * n));
    // sec^2(theta / 2) = 2 / (1 + cos theta)
    const double sec2 = 2.0 / denominator(j, count, other);
    sum.add(kI / (16.0 * n) * body * sec2);
  }
  return sum.value();
}

cplx e14_value() {
  const double r2 = std::sqrt(2.0);
  const cplx q = cis_pi(1.0 / 8.0);
  const cplx q4 = cis_pi(1.0 / 4.0);
  const cplx q34 = cis_pi(3.0 / 4.0);
  const cplx lg = std::log(49.0) + 6.0 * q4 * std::log(3.0) + cplx(-2.0, 2.0) * std::log(5.0) -
                  2.0 * kI * std::log(143.0);
  const cplx a = -1.0 + q4;
  const cplx b = kI + q34;
  const cplx gammas = (cplx(-1.0, -1.0) + r2) * std::log(kPi) - a * log_of_gamma(-15.0 / 16.0) +
                      2.0 * q * log_of_gamma(-7.0 / 8.0) + b * log_of_gamma(-13.0 / 16.0) +
                      b * log_of_gamma(-11.0 / 16.0) - 2.0 * q * log_of_gamma(-5.0 / 8.0) -
                      a * log_of_gamma(-9.0 / 16.0) + a * log_of_gamma(-7.0 / 16.0) -
                      2.0 * q * log_of_gamma(-3.0 / 8.0) - b * log_of_gamma(-5.0 / 16.0) -
                      b * log_of_gamma(-3.0 / 16.0) + 2.0 * q * log_of_gamma(-1.0 / 8.0) +
                      a * log_of_gamma(-1.0 / 16.0);
  const cplx inner = -kI * (cplx(-1.0, -1.0) + r2) * kPi -
                     2.0 * q * (2.0 + q) * std::log(7.0 / 5.0) + cplx(4.0, 4.0) * std::log(2.0) -
                     cplx(6.0, -2.0) * std::log(3.0) - 2.0 * q34 * std::log(143.0 / 15.0) -
                     r2 * std::log(16.0) + q * std::log(81.0) + principal(lg) - 2.0 * gammas;
  return cplx(0.125, 0.125) * q * kPi * inner;
}

double require_positive_real(cplx a, const char* who) {
  if (a.imag() != 0.0 || !(a.real() > 0.0))
    throw DomainError(std::string(who) + ": a must be a positive real");
  return a.real();
}

}  // namespace

std::string_view to_string(ExampleId id) { return kNames[static_cast<int>(id) - 1]; }

ExampleId parse_example_id(std::string_view text) {
  for (int i = 0; i < kExampleCount; ++i)
    if (kNames[i] == text) return static_cast<ExampleId>(i + 1);
  throw DomainError("unknown example id '" + std::string(text) + "' (expected e1..e14)");
}

ExampleParams resolve(ExampleId id, const ExampleParams& params) {
  ExampleParams p = params;
  if (auto fixed = fixed_pair(id)) {
    if ((p.alpha && *p.alpha != fixed->alpha) || (p.beta && *p.beta != fixed->beta))
      throw DomainError(std::string(to_string(id)) + " is fixed at (alpha, beta) = (" +
                        std::to_string(fixed->alpha) + ", " + std::to_string(fixed->beta) + ")");
    p.alpha = fixed->alpha;
    p.beta = fixed->beta;
  } else {
    p.alpha = p.alpha.value_or(2);
    p.beta = p.beta.value_or(4);
  }
  validate_pair(*p.alpha, *p.beta);
  switch (id) {
    case ExampleId::e1: p.a = 1.0; break;
    case ExampleId::e2: p.a = 1.0; p.m = 0.5; break;
    case ExampleId::e3: p.m = 0.25; break;
    case ExampleId::e4: p.m = 1.0; break;
    case ExampleId::e5: p.m = 1.0; break;
    case ExampleId::e6:
    case ExampleId::e7:
    case ExampleId::e11: p.a = 1.0; p.m = 1.0; break;
    case ExampleId::e9:
    case ExampleId::e10: p.m = 0.5; break;
    case ExampleId::e12:
    case ExampleId::e13:
    case ExampleId::e14: p.a = 1.0; p.m = 0.5; break;
    case ExampleId::e8: p.m = cplx(p.u, p.v); break;
  }
  return p;
}

EvaluationResult example_rhs(ExampleId id, const ExampleParams& params) {
  const ExampleParams p = resolve(id, params);
  const int alpha = *p.alpha;
  const int beta = *p.beta;
  const std::string_view name = to_string(id);

  switch (id) {
    case ExampleId::e1: {
      EvaluationResult r = theorem_rhs({1.0, p.m, p.k, alpha, beta});
      r.method = std::string(name);
      return r;
    }
    case ExampleId::e2:
      return both_sums(name, alpha, beta, e2_sum);
    case ExampleId::e3: {
      const double log_a = std::log(require_positive_real(p.a, "e3"));
      return both_sums(name, alpha, beta, [&](int n, int o) { return e3_sum(n, o, log_a); });
    }
    case ExampleId::e4: {
      const double log_a = std::log(require_positive_real(p.a, "e4"));
      if (p.k < 0 || p.k > 32) throw DomainError("e4: need 0 <= k <= 32");
      return both_sums(name, alpha, beta, [&](int n, int o) { return e4_sum(n, o, log_a, p.k); });
    }
    case ExampleId::e5: {
      const double log_a = std::log(require_positive_real(p.a, "e5"));
      return both_sums(name, alpha, beta, [&](int n, int o) { return e5_sum(n, o, log_a); });
    }
    case ExampleId::e8: {
      if (p.u == 0.0) throw DomainError("e8: requires Re(u) != 0");
      if (!(p.u > 0.0) || !(p.u < alpha + beta))
        throw DomainError("e8: need 0 < u < alpha + beta for convergence");
      EvaluationResult r;
      r.min_denominator = detail::require_nondegenerate(alpha, beta);
      r.value = e8_sum(p.u, p.v, beta, alpha, true) + e8_sum(p.u, p.v, alpha, beta, false);
      r.method = std::string(name);
      r.terms = alpha + beta;
      return r;
    }
    case ExampleId::e9: {
      const double a = require_positive_real(p.a, "e9");
      return both_sums(name, alpha, beta, [a](int n, int o) { return e9_sum(n, o, a); });
    }
    case ExampleId::e10: {
      if (!(p.a.real() > 0.0) || !(p.a.imag() > 0.0))
        throw DomainError("e10: requires Re(a) > 0 and Im(a) > 0");
      return both_sums(name, alpha, beta, [&](int n, int o) { return e10_sum(n, o, p.a); });
    }
    case ExampleId::e12:
      return both_sums(name, alpha, beta, e12_sum);
    default:
      break;
  }

  EvaluationResult r;
  r.min_denominator = detail::require_nondegenerate(alpha, beta);
  r.method = std::string(name);
  r.terms = 1;
  switch (id) {
    case ExampleId::e6: r.value = e6_value(); break;
    case ExampleId::e7: r.value = e7_value(); break;
    case ExampleId::e11: r.value = e11_value(); break;
    case ExampleId::e13: r.value = std::log(1.0 / std::tan(kPi / 8.0)); break;
    case ExampleId::e14: r.value = e14_value(); break;
    default: break;
  }
  return r;
}

}  // namespace extcauchy
