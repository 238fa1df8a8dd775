#include <doctest.h>

#include <cmath>
#include <random>

#include "dsrlab/fading.hpp"

using namespace dsrlab;

TEST_CASE("mean power per model") {
  CHECK(FadingModel::rayleigh(2.0).mean_power() == doctest::Approx(0.5));
  CHECK(FadingModel::ricean(1.0).mean_power() == doctest::Approx(2.0));
  CHECK(FadingModel::ricean(0.0).mean_power() == doctest::Approx(1.0));
  CHECK(FadingModel::nakagami(2.5, 1.7).mean_power() == doctest::Approx(1.7));
}

TEST_CASE("densities integrate to one with the right mean") {
  for (const FadingModel& f :
       {FadingModel::rayleigh(1.3), FadingModel::ricean(0.8),
        FadingModel::nakagami(2.0, 1.5)}) {
    const double mass =
        integrate_semi_infinite([&](double g) { return f.pdf(g); }).value;
    const double mean =
        integrate_semi_infinite([&](double g) { return g * f.pdf(g); }).value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mean == doctest::Approx(f.mean_power()).epsilon(1e-8));
  }
}

TEST_CASE("sampling matches the analytic mean") {
  std::mt19937_64 rng(777);
  for (const FadingModel& f :
       {FadingModel::rayleigh(2.0), FadingModel::ricean(1.0),
        FadingModel::nakagami(3.0, 0.8)}) {
    const int n = 40000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double g = sample_power(f, rng);
      sum += g;
      sum2 += g * g;
    }
    const double mean = sum / n;
    const double sd = std::sqrt((sum2 / n - mean * mean) / n);
    CHECK(std::abs(mean - f.mean_power()) < 4.0 * sd);
  }
}

TEST_CASE("beta closed form for Rayleigh at alpha = 4") {
  for (double T : {0.1, 1.0, 10.0})
    for (double mu : {0.5, 1.0, 2.0}) {
      const double want = 1.0 + std::sqrt(T) * std::atan(std::sqrt(T));
      CHECK(beta(T, 4.0, FadingModel::rayleigh(mu)).value ==
            doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("Nakagami(1, 1) reduces to Rayleigh(1)") {
  for (double T : {0.3, 1.0, 4.0})
    CHECK(beta(T, 4.0, FadingModel::nakagami(1.0, 1.0)).value ==
          doctest::Approx(beta(T, 4.0, FadingModel::rayleigh(1.0)).value)
              .epsilon(1e-9));
}

TEST_CASE("beta limits and monotonicity") {
  const FadingModel f = FadingModel::rayleigh(1.0);
  CHECK(beta(1e-9, 4.0, f).value == doctest::Approx(1.0).epsilon(1e-4));
  double prev = 0.0;
  for (double T : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double b = beta(T, 3.5, f).value;
    CHECK(b > prev);
    prev = b;
  }
}

TEST_CASE("separability fit of the coverage exponent") {
  Eigen::ArrayXd grid(20);
  for (int i = 0; i < 20; ++i) grid(i) = std::exp(std::log(50.0) * i / 19.0);
  const SeparabilityFit fit =
      separability_fit(FadingModel::rayleigh(1.0), 4.0, grid);
  CHECK(fit.slope > 0.0);
  CHECK(fit.intercept >= 0.0);
  CHECK(fit.max_rel_residual < 0.05);
  Eigen::ArrayXd tiny(2);
  tiny << 1.0, 2.0;
  CHECK_THROWS_AS(separability_fit(FadingModel::rayleigh(1.0), 4.0, tiny),
                  DomainError);
}

TEST_CASE("signal rate") {
  CHECK(FadingModel::rayleigh(1.7).signal_rate() == doctest::Approx(1.7));
  CHECK(FadingModel::ricean(1.0).signal_rate() == doctest::Approx(1.0));
  CHECK(FadingModel::nakagami(2.0).signal_rate() == doctest::Approx(1.0));
}
