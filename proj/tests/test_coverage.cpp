#include <doctest.h>

#include <cmath>

#include "dsrlab/coverage.hpp"

using namespace dsrlab;

namespace {
const FadingModel kRay = FadingModel::rayleigh(1.0);
}

TEST_CASE("quadrature equals the alpha = 4 closed form") {
  for (double T : {0.2, 1.0, 5.0})
    for (double lam : {0.01, 0.1, 1.0})
      for (double s2 : {0.05, 1.0}) {
        const double q = pcov(T, lam, 4.0, 1.0, s2, kRay).p;
        const double c = pcov_alpha4_closed(T, lam, 1.0, s2, kRay).p;
        CHECK(q == doctest::Approx(c).epsilon(1e-10));
      }
}

TEST_CASE("no noise short-circuits to 1/beta") {
  const CoverageResult r = pcov(1.0, 0.2, 4.0, 1.0, 0.0, kRay);
  CHECK(r.variant == CoverageVariant::NoNoise);
  CHECK(r.p == doctest::Approx(1.0 / (1.0 + std::sqrt(1.0) * std::atan(1.0)))
                   .epsilon(1e-10));
}

TEST_CASE("extreme density keeps the closed form stable") {
  // interference-limited limit: pcov -> 1/beta
  const double b = 1.0 + std::atan(1.0);
  CHECK(pcov_alpha4_closed(1.0, 1e6, 1.0, 1.0, kRay).p ==
        doctest::Approx(1.0 / b).epsilon(1e-6));
  CHECK(pcov(1.0, 1e-7, 4.0, 1.0, 1.0, kRay).p ==
        doctest::Approx(pcov_alpha4_closed(1.0, 1e-7, 1.0, 1.0, kRay).p)
            .epsilon(1e-8));
}

TEST_CASE("small-noise expansion") {
  // measured oracle gap at this tuple: 2.6e-5
  const double exact = pcov(1.0, 0.04, 4.0, 1.0, 1e-4, kRay).p;
  const CoverageResult sn = pcov_small_noise(1.0, 0.04, 4.0, 1.0, 1e-4, kRay);
  CHECK(std::abs(sn.p - exact) < 4e-5);
  CHECK_FALSE(sn.clamped);
  // huge noise drives the two-term form negative; it must clamp
  const CoverageResult big = pcov_small_noise(1.0, 0.01, 4.0, 1.0, 100.0, kRay);
  CHECK(big.clamped);
  CHECK(big.p == 0.0);
}

TEST_CASE("rho integrals at alpha = 4") {
  CHECK(rho1(1.0, 4.0) == doctest::Approx(M_PI / 4.0).epsilon(1e-9));
  for (double T : {0.3, 1.0, 2.0}) {
    const double want1 = std::sqrt(T) * std::atan(std::sqrt(T));
    const double want2 = std::sqrt(T) * std::atan(1.0 / std::sqrt(T));
    CHECK(rho1(T, 4.0) == doctest::Approx(want1).epsilon(1e-9));
    CHECK(rho2(T, 4.0) == doctest::Approx(want2).epsilon(1e-9));
    CHECK(rho1(T, 4.0) + rho2(T, 4.0) ==
          doctest::Approx(std::sqrt(T) * M_PI / 2.0).epsilon(1e-9));
  }
}

TEST_CASE("simultaneous coverage: quadrature equals the closed form") {
  for (double pj : {0.2, 0.5, 1.0})
    for (double T : {0.5, 1.0, 3.0}) {
      const double lt = 0.1;
      const double q = pcov_simultaneous(T, lt * pj, lt, 4.0, 1.0).p;
      const double c = pcov_simultaneous_alpha4(T, lt, pj, 1.0).p;
      CHECK(q == doctest::Approx(c).epsilon(1e-10));
    }
  CHECK(pcov_simultaneous_alpha4(1.0, 0.1, 0.0, 1.0).p == 0.0);
  CHECK_THROWS_AS(pcov_simultaneous(1.0, 0.2, 0.1, 4.0, 1.0), DomainError);
  CHECK_THROWS_AS(pcov_simultaneous_alpha4(1.0, 0.1, 1.5, 1.0), DomainError);
}

TEST_CASE("simultaneous coverage is below sequential at matched density") {
  // foreign-file transmitters only add interference
  for (double pj : {0.3, 0.7}) {
    const double sim = pcov_simultaneous(1.0, 0.1 * pj, 0.1, 4.0, 1.0).p;
    const double seq = pcov(1.0, 0.1 * pj, 4.0, 1.0, 1.0, kRay).p;
    CHECK(sim < seq);
  }
}

TEST_CASE("parameter validation") {
  NetworkParams p;
  p.gamma1 = 0.25;
  CHECK_NOTHROW(p.validate());
  CHECK(p.gamma2() == doctest::Approx(0.75));
  p.gamma1 = 1.5;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.gamma1 = 0.25;
  p.T = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.T = 1.0;
  p.sigma2 = 0.0;
  CHECK_THROWS_AS(p.snr(), DomainError);
  p.sigma2 = 0.5;
  CHECK(p.snr() == doctest::Approx(2.0));
  CHECK_THROWS_AS(pcov(1.0, 0.0, 4.0, 1.0, 1.0, kRay), DomainError);
}
