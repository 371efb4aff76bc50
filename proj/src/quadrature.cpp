#include "extcauchy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "extcauchy/double_exponential.hpp"
#include "extcauchy/errors.hpp"

namespace extcauchy {

namespace {

// Half-width of the window around a pole in which the subtraction is applied.
constexpr double kPoleWindow = 1.0;

double softplus(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

// exp(m t) / ((1 + e^{alpha t})(1 + e^{beta t})) without overflow.
cplx rational_weight(double t, cplx m, int alpha, int beta) {
  return std::exp(m * t - softplus(alpha * t) - softplus(beta * t));
}

std::vector<double> breakpoints_for(const Integrand& f) {
  std::vector<double> pts{0.0};
  for (double s : f.singular_points) {
    if (!(s > 0.0)) throw DomainError("singular points must be positive");
    pts.push_back(std::log(s));
  }
  if (f.pole) {
    const double t0 = std::log(f.pole->location);
    pts.insert(pts.end(), {t0, t0 - kPoleWindow, t0 + kPoleWindow});
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double x, double y) { return std::fabs(x - y) < 1e-12; }),
            pts.end());
  return pts;
}

// Wraps an x-space evaluator as the log-space integrand x f(x).
std::function<cplx(double)> from_x_space(std::function<cplx(double)> g) {
  return [g = std::move(g)](double t) {
    const double x = std::exp(t);
    return x * g(x);
  };
}

// x-space view of a log-space integrand.
std::function<cplx(double)> to_x_space(std::function<cplx(double)> h) {
  return [h = std::move(h)](double x) { return h(std::log(x)) / x; };
}

cplx principal_log(double x) { return std::log(cplx(x, 0.0)); }

Integrand power_family(double a, cplx m, int k, int alpha, int beta) {
  const double log_a = std::log(a);
  Integrand f;
  f.log_space = [=](double t) { return rational_weight(t, m, alpha, beta) * std::pow(log_a + t, k); };
  f.evaluator = to_x_space(f.log_space);
  f.decay_exponent = alpha + beta - m.real();
  f.origin_exponent = m.real();
  return f;
}

Integrand log_log_family(double a, cplx m, int alpha, int beta) {
  const double log_a = std::log(a);
  Integrand f;
  f.log_space = [=](double t) -> cplx {
    const double inner = log_a + t;
    if (inner == 0.0) return 0.0;  // the singular point itself carries no weight
    return rational_weight(t, m, alpha, beta) * principal_log(inner);
  };
  f.evaluator = [=](double x) {
    return std::pow(x, m - 1.0) / ((1.0 + std::pow(x, alpha)) * (1.0 + std::pow(x, beta))) *
           principal_log(std::log(a * x));
  };
  f.singular_points = {1.0 / a};
  f.decay_exponent = alpha + beta - m.real();
  f.origin_exponent = m.real();
  return f;
}

// numerator(x) / log(x / location) with numerator = x^{m-1} / ((1 + x^alpha)(1 + x^beta)).
Integrand reciprocal_log_family(double location, cplx m, int alpha, int beta) {
  const double t0 = std::log(location);
  Integrand f;
  auto numerator = [=](double x) { return rational_weight(std::log(x), m, alpha, beta) / x; };
  f.pole = LogPole{location, numerator};
  f.log_space = [=](double t) { return rational_weight(t, m, alpha, beta) / (t - t0); };
  f.evaluator = to_x_space(f.log_space);
  f.singular_points = {location};
  f.decay_exponent = alpha + beta - m.real();
  f.origin_exponent = m.real();
  return f;
}

// (x - 1) / log x, with the series about x = 1 where the quotient cancels.
double x_minus_one_over_log(double x) {
  const double y = x - 1.0;
  if (std::fabs(y) < 1e-4) return 1.0 + y * (0.5 + y * (-1.0 / 12.0 + y / 24.0));
  return y / std::log(x);
}

double expm1_over_t(double t) { return t == 0.0 ? 1.0 : std::expm1(t) / t; }

}  // namespace

QuadratureResult integrate_halfline(const Integrand& f, double rel_tol) {
  if (!(rel_tol >= kMinRelTol)) throw DomainError("rel_tol must be >= 1e-12");
  if (!(f.decay_exponent > 0.0) || !(f.origin_exponent > 0.0))
    throw DomainError("integrand must decay at both ends (positive exponents)");

  const std::vector<double> pts = breakpoints_for(f);
  std::vector<de::Panel> panels;
  panels.push_back(de::LeftInfinite{pts.front(), f.origin_exponent});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) panels.push_back(de::Finite{pts[i], pts[i + 1]});
  panels.push_back(de::RightInfinite{pts.back(), f.decay_exponent});

  de::Function g;
  cplx pole_term = 0.0;
  if (f.pole) {
    const double t0 = std::log(f.pole->location);
    auto numerator = from_x_space(f.pole->numerator);
    const cplx at_pole = numerator(t0);
    pole_term = -kI * kPi * at_pole;
    g = [=](double t) {
      const double d = t - t0;
      const cplx n = numerator(t);
      return (std::fabs(d) < kPoleWindow ? n - at_pole : n) / d;
    };
  } else if (f.log_space) {
    g = f.log_space;
  } else {
    g = from_x_space(f.evaluator);
  }

  de::Options opts;
  opts.rel_tol = rel_tol;
  const de::Outcome out = de::integrate(g, panels, opts);
  if (!out.converged)
    throw NonConvergence("quadrature did not converge by level " + std::to_string(out.level) +
                         " (error estimate " + std::to_string(out.abs_error_estimate) + ")");
  QuadratureResult r;
  r.value = out.value + pole_term;
  r.abs_error_estimate = out.abs_error_estimate;
  r.nodes = out.nodes;
  r.converged = true;
  return r;
}

Integrand build_lhs(const IntegralSpec& spec) {
  validate(spec);
  if (const int* k = std::get_if<int>(&spec.k))
    return power_family(spec.a, spec.m, *k, spec.alpha, spec.beta);
  if (std::holds_alternative<DLogDeriv>(spec.k))
    return log_log_family(spec.a, spec.m, spec.alpha, spec.beta);
  return reciprocal_log_family(1.0 / spec.a, spec.m, spec.alpha, spec.beta);
}

Integrand build_example_lhs(ExampleId id, const ExampleParams& params) {
  const ExampleParams p = resolve(id, params);
  const int alpha = *p.alpha;
  const int beta = *p.beta;
  auto real_a = [&](const char* who) {
    if (p.a.imag() != 0.0 || !(p.a.real() > 0.0))
      throw DomainError(std::string(who) + ": a must be a positive real");
    return p.a.real();
  };

  switch (id) {
    case ExampleId::e1:
      return build_lhs({1.0, p.m, p.k, alpha, beta});
    case ExampleId::e4:
      return build_lhs({real_a("e4"), 1.0, p.k, alpha, beta});
    case ExampleId::e2:
    case ExampleId::e6:
    case ExampleId::e7:
    case ExampleId::e11:
      return build_lhs({1.0, p.m, DLogDeriv{}, alpha, beta});
    case ExampleId::e3:
    case ExampleId::e5:
      return build_lhs({real_a(to_string(id).data()), p.m, DLogDeriv{}, alpha, beta});
    case ExampleId::e8: {
      const double u = p.u, v = p.v;
      if (!(u > 0.0) || !(u < alpha + beta)) throw DomainError("e8: need 0 < u < alpha + beta");
      Integrand f;
      f.log_space = [=](double t) {
        const cplx w = rational_weight(t, cplx(u, -v), alpha, beta);
        if (t == 0.0) return w * cplx(0.0, -2.0 * v);
        // (1 - e^{i theta}) / t without cancellation
        const double theta = 2.0 * v * t;
        const double s = std::sin(0.5 * theta);
        return w * cplx(2.0 * s * s, -std::sin(theta)) / t;
      };
      f.evaluator = to_x_space(f.log_space);
      f.singular_points = {1.0};
      f.decay_exponent = alpha + beta - u;
      f.origin_exponent = u;
      return f;
    }
    case ExampleId::e9: {
      const double a = real_a("e9");
      return reciprocal_log_family(std::exp(-a * kPi), 0.5, alpha, beta);
    }
    case ExampleId::e10: {
      const cplx a = p.a;
      if (!(a.real() > 0.0) || !(a.imag() > 0.0))
        throw DomainError("e10: requires Re(a) > 0 and Im(a) > 0");
      Integrand f;
      f.log_space = [=](double t) {
        return rational_weight(t, 0.5, alpha, beta) * 2.0 * a * kPi / (a * a * kPi * kPi - t * t);
      };
      f.evaluator = to_x_space(f.log_space);
      f.decay_exponent = alpha + beta - 0.5;
      f.origin_exponent = 0.5;
      return f;
    }
    case ExampleId::e12:
    case ExampleId::e13: {
      Integrand f;
      f.log_space = [=](double t) { return rational_weight(t, 0.5, alpha, beta) * expm1_over_t(t); };
      f.evaluator = [=](double x) {
        return x_minus_one_over_log(x) /
               (std::sqrt(x) * (1.0 + std::pow(x, alpha)) * (1.0 + std::pow(x, beta)));
      };
      f.singular_points = {1.0};
      f.decay_exponent = alpha + beta - 1.5;
      f.origin_exponent = 0.5;
      return f;
    }
    case ExampleId::e14: {
      Integrand f;
      f.log_space = [=](double t) {
        return rational_weight(t, 0.5, alpha, beta) * std::expm1(t) * principal_log(t);
      };
      f.evaluator = to_x_space(f.log_space);
      f.singular_points = {1.0};
      f.decay_exponent = alpha + beta - 1.5;
      f.origin_exponent = 0.5;
      return f;
    }
  }
  throw DomainError("unknown example");
}

}  // namespace extcauchy
