#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "extcauchy/closed_forms.hpp"
#include "extcauchy/errors.hpp"

using namespace extcauchy;

namespace {

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// 1 + cos(c pi p / q) = 0 exactly when c p / q is an odd integer.
bool degenerate_by_integers(int alpha, int beta) {
  auto hits = [](int p, int q) {
    for (int j = 0; j < q; ++j) {
      const int c = 1 + 2 * j;
      if ((c * p) % q == 0 && ((c * p) / q) % 2 == 1) return true;
    }
    return false;
  };
  return hits(alpha, beta) || hits(beta, alpha);
}

std::vector<std::pair<int, int>> even_pairs(int limit) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 2; a <= limit; a += 2)
    for (int b = 2; b <= limit; b += 2)
      if (a != b) pairs.emplace_back(a, b);
  return pairs;
}

const std::vector<std::pair<int, int>> kGridPairs{{2, 4}, {2, 8}, {4, 6}, {4, 8}, {6, 8}};

}  // namespace

TEST_CASE("check_degenerate agrees with integer enumeration") {
  int degenerate = 0;
  for (auto [a, b] : even_pairs(16)) {
    CAPTURE(a);
    CAPTURE(b);
    const double d = check_degenerate(a, b);
    if (degenerate_by_integers(a, b)) {
      ++degenerate;
      CHECK(d == 0.0);
    } else {
      CHECK(d > 1e-3);
    }
  }
  CHECK(degenerate > 0);
  CHECK(check_degenerate(2, 6) == 0.0);
  CHECK(check_degenerate(2, 4) > 0.5);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(theorem_rhs({1.0, 1.0, 0, 2, 6}), DegenerateParameters);
  CHECK_THROWS_AS(theorem_rhs({1.0, 1.0, 0, 3, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({1.0, 1.0, 0, 4, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({-1.0, 1.0, 0, 2, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({1.0, 6.0, 0, 2, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({1.0, 0.0, 0, 2, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({1.0, 1.0, -1, 2, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({1.0, 1.0, 33, 2, 4}), DomainError);
  CHECK_THROWS_AS(theorem_rhs({1.0, 1.0, DLogDeriv{}, 2, 4}), DomainError);
}

TEST_CASE("pi/4 at a = 1, m = 1, k = 0") {
  const EvaluationResult r = theorem_rhs({1.0, 1.0, 0, 2, 4});
  CHECK(rel_err(r.value, kPi / 4.0) < 1e-14);
  CHECK(r.method == "theorem");
  CHECK(r.terms == 12);
  CHECK(r.min_denominator > 0.5);
}

TEST_CASE("theorem against reference integrals") {
  struct Case {
    IntegralSpec spec;
    cplx want;
  };
  const Case cases[] = {
      {{2.0, {0.7, 0.3}, 2, 2, 4}, {0.50593777875858521, -2.7430229404117993}},
      {{0.5, {1.5, -0.8}, 3, 4, 6}, {-0.13582243192422049, -1.9727836395407053}},
      {{1.7, 2.5, 5, 2, 8}, {-0.11134719194428789, 0.0}},
      {{3.0, 0.3, 12, 6, 8}, {2160848287703053.9, 0.0}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.want);
    CHECK(rel_err(theorem_rhs(c.spec).value, c.want) < 1e-10);
  }
}

TEST_CASE("exchange symmetry for nondegenerate pairs up to 12") {
  int checked = 0;
  for (auto [a, b] : even_pairs(12)) {
    if (check_degenerate(a, b) < kDegeneracyTolerance) continue;
    for (double scale : {0.5, 1.0, 2.0})
      for (cplx m : {cplx(0.25), cplx(1.5), cplx(0.8, 0.4)})
        for (int k : {0, 1, 3}) {
          const cplx x = theorem_rhs({scale, m, k, a, b}).value;
          const cplx y = theorem_rhs({scale, m, k, b, a}).value;
          CHECK(rel_err(x, y) <= 1e-9);
          ++checked;
        }
  }
  CHECK(checked > 100);
}

TEST_CASE("realness for real parameters") {
  for (auto [a, b] : kGridPairs)
    for (double scale : {0.5, 1.0, 2.0, 5.0})
      for (double m : {0.1, 0.25, 0.5, 1.0, 1.5, 3.3})
        for (int k = 0; k <= 6; ++k) {
          const cplx v = theorem_rhs({scale, m, k, a, b}).value;
          CHECK(std::fabs(v.imag()) <= 1e-8 * (1.0 + std::fabs(v.real())));
        }
}

TEST_CASE("k = 0 reduces to the finite cosine sum") {
  for (auto [a, b] : kGridPairs)
    for (double p : {0.3, 0.5, 1.7, 2.9}) {
      const cplx theorem = theorem_rhs({1.0, p, 0, a, b}).value;
      CHECK(rel_err(theorem, eq1_rhs(p, a, b)) <= 1e-9);
    }
  CHECK(rel_err(eq1_rhs(1.0 + 1e-3, 2, 4), theorem_rhs({1.0, 1.0 + 1e-3, 0, 2, 4}).value) < 1e-9);
  CHECK_THROWS_AS(eq1_rhs(1.0, 2, 4), DegenerateParameters);
  CHECK_THROWS_AS(eq1_rhs(7.0, 2, 4), DomainError);
}

TEST_CASE("example ids") {
  for (int i = 1; i <= kExampleCount; ++i) {
    const auto id = static_cast<ExampleId>(i);
    CHECK(parse_example_id(to_string(id)) == id);
  }
  CHECK_THROWS_AS(parse_example_id("e15"), DomainError);
  CHECK_THROWS_AS(parse_example_id("13"), DomainError);
}

TEST_CASE("e13 is log cot(pi/8)") {
  const cplx v = example_rhs(ExampleId::e13, {}).value;
  CHECK(v.real() == doctest::Approx(0.8813735870).epsilon(1e-9));
  CHECK(v.real() == doctest::Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-14));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("e12 at (2, 4) agrees with e13") {
  ExampleParams p;
  p.alpha = 2;
  p.beta = 4;
  CHECK(rel_err(example_rhs(ExampleId::e12, p).value, std::log(1.0 + std::sqrt(2.0))) < 1e-13);
}

TEST_CASE("e8 is odd in v and vanishes as v -> 0") {
  for (auto [a, b] : kGridPairs)
    for (double u : {0.5, 1.3})
      for (double v : {0.25, 0.6}) {
        ExampleParams p;
        p.alpha = a;
        p.beta = b;
        p.u = u;
        p.v = v;
        const cplx plus = example_rhs(ExampleId::e8, p).value;
        p.v = -v;
        const cplx minus = example_rhs(ExampleId::e8, p).value;
        CHECK(std::abs(plus + minus) <= 1e-9 * std::abs(plus));
        p.v = 1e-6;
        CHECK(std::abs(example_rhs(ExampleId::e8, p).value) <= 1e-4);
      }
}

TEST_CASE("fixed-pair examples reject other pairs") {
  ExampleParams p;
  p.alpha = 2;
  p.beta = 8;
  CHECK_THROWS_AS(example_rhs(ExampleId::e6, p), DomainError);
  CHECK_NOTHROW(example_rhs(ExampleId::e7, p));
}

TEST_CASE("example domain checks") {
  ExampleParams p;
  CHECK_THROWS_AS(example_rhs(ExampleId::e10, p), DomainError);
  p.a = cplx(1.0, 1.0);
  CHECK_NOTHROW(example_rhs(ExampleId::e10, p));
  p.a = -1.0;
  CHECK_THROWS_AS(example_rhs(ExampleId::e9, p), DomainError);
  ExampleParams q;
  q.u = 7.0;
  CHECK_THROWS_AS(example_rhs(ExampleId::e8, q), DomainError);
}

TEST_CASE("family dispatch") {
  CHECK(family_rhs({1.0, 1.0, DLogDeriv{}, 2, 4}).method.find("e5") != std::string::npos);
  CHECK(family_rhs({2.0, 0.25, DLogDeriv{}, 2, 4}).method.find("e3") != std::string::npos);
  CHECK(family_rhs({1.0, 0.5, DLogDeriv{}, 2, 4}).method.find("e2") != std::string::npos);
  CHECK(family_rhs({3.0, 0.5, KNegOne{}, 2, 4}).method.find("e9") != std::string::npos);
  CHECK_THROWS_AS(family_rhs({1.0, 0.7, DLogDeriv{}, 2, 4}), DomainError);
  CHECK_THROWS_AS(family_rhs({1.0, 0.7, KNegOne{}, 2, 4}), DomainError);
  // the log log identity at m = 1 holds for every a
  const cplx at_one = example_rhs(ExampleId::e5, {}).value;
  CHECK(rel_err(family_rhs({1.0, 1.0, DLogDeriv{}, 2, 4}).value, at_one) < 1e-14);
}
