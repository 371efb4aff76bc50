#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "extcauchy/errors.hpp"
#include "extcauchy/quadrature.hpp"

using namespace extcauchy;

namespace {

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

Integrand rational(int alpha, int beta, double m) {
  Integrand f;
  f.evaluator = [=](double x) -> cplx {
    return std::pow(x, m - 1.0) / ((1.0 + std::pow(x, alpha)) * (1.0 + std::pow(x, beta)));
  };
  f.decay_exponent = alpha + beta - m;
  f.origin_exponent = m;
  return f;
}

double g_weight(double t, int alpha, int beta) {
  return std::exp(0.5 * t) / ((1.0 + std::exp(alpha * t)) * (1.0 + std::exp(beta * t)));
}

}  // namespace

TEST_CASE("elementary integrals") {
  Integrand f;
  f.evaluator = [](double x) -> cplx { return 1.0 / (1.0 + x * x); };
  f.decay_exponent = 1.0;
  f.origin_exponent = 1.0;
  const QuadratureResult r = integrate_halfline(f, 1e-12);
  CHECK(r.converged);
  CHECK(rel_err(r.value, kPi / 2.0) < 1e-13);
  CHECK(r.nodes > 0);

  CHECK(rel_err(integrate_halfline(rational(2, 4, 1.0), 1e-12).value, kPi / 4.0) < 1e-13);
}

TEST_CASE("log singularity at an interior point") {
  // int_R log|t| exp(-t^2) dt = -(gamma + 2 log 2) sqrt(pi) / 2, with t = log x
  Integrand f;
  f.log_space = [](double t) -> cplx { return std::log(std::fabs(t)) * std::exp(-t * t); };
  f.evaluator = [&](double x) { return f.log_space(std::log(x)) / x; };
  f.singular_points = {1.0};
  const double euler = 0.57721566490153286061;
  const double want = -(euler + 2.0 * std::log(2.0)) * std::sqrt(kPi) / 2.0;
  CHECK(rel_err(integrate_halfline(f, 1e-12).value, want) < 1e-12);
}

TEST_CASE("linearity in a complex scale") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const Integrand base = build_lhs({2.0, {0.8, 0.2}, 2, 2, 4});
  const cplx plain = integrate_halfline(base, 1e-12).value;
  for (int i = 0; i < 20; ++i) {
    const cplx c(u(rng), u(rng));
    Integrand scaled = base;
    scaled.log_space = [c, g = base.log_space](double t) { return c * g(t); };
    CHECK(rel_err(integrate_halfline(scaled, 1e-12).value, c * plain) < 1e-12);
  }
}

TEST_CASE("halving rel_tol stays within the previous error estimate") {
  for (auto [alpha, beta] : {std::pair{2, 4}, {2, 8}, {4, 6}, {4, 8}, {6, 8}})
    for (double a : {0.5, 1.0, 2.0})
      for (double m : {0.25, 0.5, 1.0, 1.5})
        for (int k = 0; k <= 3; ++k) {
          const Integrand f = build_lhs({a, m, k, alpha, beta});
          const QuadratureResult coarse = integrate_halfline(f, 1e-8);
          const QuadratureResult fine = integrate_halfline(f, 5e-9);
          CHECK(std::abs(fine.value - coarse.value) <= coarse.abs_error_estimate + 1e-15 * std::abs(fine.value));
        }
}

TEST_CASE("tail beyond T decays like exp(-decay_exponent T)") {
  const Integrand f = build_lhs({1.0, 1.0, 0, 2, 4});
  Integrand cut = f;
  double T = 0.0;
  cut.log_space = [&T, g = f.log_space](double t) { return t > T ? cplx(0.0) : g(t); };
  cut.singular_points = {};
  const cplx full = integrate_halfline(f, 1e-12).value;
  for (double t_cut : {2.0, 4.0, 6.0}) {
    T = t_cut;
    cut.singular_points = {std::exp(T)};
    const double tail = std::abs(full - integrate_halfline(cut, 1e-12).value);
    const double bound = std::exp(-f.decay_exponent * T) / f.decay_exponent;
    CHECK(tail <= bound);
    CHECK(tail >= 0.5 * bound);
  }
}

TEST_CASE("build_lhs point values") {
  CHECK(rel_err(build_lhs({1.0, 1.0, 0, 2, 4}).evaluator(1.0), 0.25) < 1e-15);
  CHECK(rel_err(build_lhs({1.0, 1.0, 2, 2, 4}).evaluator(std::exp(1.0)),
                1.0 / ((1.0 + std::exp(2.0)) * (1.0 + std::exp(4.0)))) < 1e-14);

  const Integrand loglog = build_lhs({1.0, 1.0, DLogDeriv{}, 2, 4});
  const cplx at_half = loglog.evaluator(0.5);
  const double w = 1.0 / ((1.0 + 0.25) * (1.0 + 0.0625));
  CHECK(rel_err(at_half, w * cplx(std::log(std::log(2.0)), kPi)) < 1e-14);
  REQUIRE(loglog.singular_points.size() == 1);
  CHECK(loglog.singular_points[0] == 1.0);
  CHECK(build_lhs({4.0, 1.0, DLogDeriv{}, 2, 4}).singular_points[0] == 0.25);

  const Integrand e12 = build_example_lhs(ExampleId::e12, {});
  CHECK(rel_err(e12.evaluator(1.0), 0.25) < 1e-15);
  CHECK(rel_err(e12.evaluator(1.0 + 1e-6), e12.log_space(std::log1p(1e-6)) / (1.0 + 1e-6)) < 1e-12);
}

TEST_CASE("logarithmic pole is the boundary value from above") {
  ExampleParams p;
  p.a = 1.0;
  const QuadratureResult r = integrate_halfline(build_example_lhs(ExampleId::e9, p), 1e-11);
  // imaginary part is -pi times the weight at the pole, in log variable
  CHECK(r.value.imag() == doctest::Approx(-kPi * g_weight(-kPi, 2, 4)).epsilon(1e-10));
}

TEST_CASE("option and integrand validation") {
  Integrand f = rational(2, 4, 1.0);
  CHECK_THROWS_AS(integrate_halfline(f, 1e-13), DomainError);
  f.decay_exponent = 0.0;
  CHECK_THROWS_AS(integrate_halfline(f, 1e-10), DomainError);

  Integrand bad = rational(2, 4, 1.0);
  bad.evaluator = [](double x) -> cplx { return 1.0 / (x - 2.0); };
  bad.singular_points = {};
  CHECK_THROWS_AS(integrate_halfline(bad, 1e-10), Error);

  Integrand slow = rational(2, 4, 1.0);
  slow.evaluator = [](double x) -> cplx { return std::sin(1e4 * x) / (1.0 + x * x); };
  CHECK_THROWS_AS(integrate_halfline(slow, 1e-12), NonConvergence);
}
