#include "extcauchy/double_exponential.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "extcauchy/errors.hpp"

namespace extcauchy::de {

namespace {

constexpr double kBaseStep = 0.5;
constexpr double kFiniteHalfRange = 3.5;
constexpr double kInfiniteLow = -5.0;
constexpr double kInfiniteHigh = 5.0;

struct Node {
  double t;
  double weight;  // includes the Jacobian, excludes the step
  bool valid;
};

Node finite_node(const Finite& p, double u) {
  const double half = 0.5 * (p.hi - p.lo);
  const double s = 0.5 * kPi * std::sinh(u);
  const double cs = std::cosh(s);
  const double weight = half * 0.5 * kPi * std::cosh(u) / (cs * cs);
  // distance to the nearer end, computed without cancellation
  const double gap = half * 2.0 / (std::exp(2.0 * std::fabs(s)) + 1.0);
  double t;
  if (u > 0.0) {
    t = p.hi - gap;
    if (t >= p.hi) return {t, 0.0, false};
  } else if (u < 0.0) {
    t = p.lo + gap;
    if (t <= p.lo) return {t, 0.0, false};
  } else {
    t = p.lo + half;
  }
  return {t, weight, weight > 0.0};
}

Node semi_infinite_node(double start, double rate, double direction, double u) {
  const double e = std::exp(-u);
  const double x = std::exp(u - e);
  const double weight = x * (1.0 + e) / rate;
  const double t = start + direction * x / rate;
  if (t == start || !std::isfinite(t) || !(weight > 0.0) || !std::isfinite(weight))
    return {t, 0.0, false};
  return {t, weight, true};
}

Node make_node(const Panel& panel, double u) {
  return std::visit(
      [u](const auto& p) -> Node {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Finite>)
          return finite_node(p, u);
        else if constexpr (std::is_same_v<P, RightInfinite>)
          return semi_infinite_node(p.start, p.rate, 1.0, u);
        else
          return semi_infinite_node(p.start, p.rate, -1.0, -u);
      },
      panel);
}

std::pair<double, double> u_range(const Panel& panel) {
  if (std::holds_alternative<Finite>(panel)) return {-kFiniteHalfRange, kFiniteHalfRange};
  if (std::holds_alternative<RightInfinite>(panel)) return {kInfiniteLow, kInfiniteHigh};
  return {-kInfiniteHigh, -kInfiniteLow};
}

struct PanelState {
  cplx sum;       // trapezoid sum at the current level (step applied)
  double mass;    // same with |f|
};

}  // namespace

Outcome integrate(const Function& f, std::span<const Panel> panels, const Options& options) {
  Outcome out;
  std::vector<PanelState> state(panels.size(), PanelState{});

  auto eval = [&](const Node& node) -> cplx {
    cplx v = f(node.t);
    if (!is_finite(v))
      throw SingularEvaluation("integrand is not finite at t = " + std::to_string(node.t));
    ++out.nodes;
    return v * node.weight;
  };

  cplx previous{};
  for (int level = 0; level <= options.max_level; ++level) {
    const double step = kBaseStep / static_cast<double>(1L << level);
    CompensatedSum total;
    double mass_total = 0.0;
    for (std::size_t p = 0; p < panels.size(); ++p) {
      const auto [lo, hi] = u_range(panels[p]);
      CompensatedSum fresh;
      double fresh_mass = 0.0;
      // level 0 visits every multiple of the base step; later levels only the odd ones
      const long first = static_cast<long>(std::ceil(lo / step));
      const long last = static_cast<long>(std::floor(hi / step));
      for (long i = first; i <= last; ++i) {
        if (level > 0 && (i % 2 == 0)) continue;
        Node node = make_node(panels[p], static_cast<double>(i) * step);
        if (!node.valid) continue;
        cplx term = eval(node);
        fresh.add(term);
        fresh_mass += std::abs(term);
      }
      if (level == 0) {
        state[p].sum = fresh.value() * step;
        state[p].mass = fresh_mass * step;
      } else {
        state[p].sum = 0.5 * state[p].sum + fresh.value() * step;
        state[p].mass = 0.5 * state[p].mass + fresh_mass * step;
      }
      total.add(state[p].sum);
      mass_total += state[p].mass;
    }

    const cplx current = total.value();
    out.value = current;
    out.level = level;
    if (level > 0) {
      out.abs_error_estimate = std::abs(current - previous);
      const double scale = std::max(std::abs(current), 1e-15 * mass_total);
      if (level >= options.min_level && out.abs_error_estimate <= options.rel_tol * scale) {
        out.converged = true;
        return out;
      }
    }
    previous = current;
  }
  return out;
}

}  // namespace extcauchy::de
