#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "property_checks.hpp"

namespace {

void require_clean(const checks::Outcome& o, int min_samples) {
  INFO(o.name << ": " << o.failures << " of " << o.samples << " failed, worst ratio " << o.worst);
  CHECK(o.samples >= min_samples);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("Lerch recurrence in the shift") { require_clean(checks::lerch_recurrence(), 200); }

TEST_CASE("Hurwitz recurrence in the shift") { require_clean(checks::hurwitz_recurrence(), 200); }

TEST_CASE("Gamma reflection") { require_clean(checks::gamma_reflection(), 200); }

TEST_CASE("Digamma recurrence") { require_clean(checks::digamma_recurrence(), 200); }

TEST_CASE("Lerch on the unit circle matches radial Abel sums") {
  require_clean(checks::abel_oracle(), 48);
}

TEST_CASE("Abel sum reproduces Phi(-1, -1, 1) = 1/4") {
  const auto v = checks::abel_sum(-1.0, 1, 1.0);
  CHECK(static_cast<double>(v.real()) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::fabs(static_cast<double>(v.imag())) < 1e-12);
}
