#include "dsrlab/coverage.hpp"

#include <algorithm>
#include <cmath>

namespace dsrlab {

double NetworkParams::snr() const {
  if (sigma2 <= 0.0) throw DomainError("snr: undefined for sigma2 = 0");
  return 1.0 / (mu * sigma2);
}

void NetworkParams::validate() const {
  if (!(lambda > 0.0)) throw DomainError("NetworkParams: lambda must be positive");
  if (!(T > 0.0)) throw DomainError("NetworkParams: T must be positive");
  if (!(alpha > 2.0)) throw DomainError("NetworkParams: alpha must exceed 2");
  if (!(mu > 0.0)) throw DomainError("NetworkParams: mu must be positive");
  if (!(sigma2 >= 0.0)) throw DomainError("NetworkParams: sigma2 must be nonnegative");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("NetworkParams: a must be in (0,1]");
  if (!(gamma1 > 0.0 && gamma1 < a))
    throw DomainError("NetworkParams: gamma1 must be in (0,a)");
}

CoverageResult pcov(double T, double lambda_tx, double alpha, double mu,
                    double sigma2, const FadingModel& fading) {
  if (!(lambda_tx > 0.0)) throw DomainError("pcov: lambda_tx must be positive");
  const BetaValue b = beta(T, alpha, fading);
  if (sigma2 == 0.0)
    return CoverageResult{1.0 / b.value, CoverageVariant::NoNoise,
                          b.err_estimate / (b.value * b.value)};
  return pcov_given_beta(lambda_tx, alpha, mu, T, sigma2, b.value);
}

CoverageResult pcov_given_beta(double lambda_tx, double alpha, double mu,
                               double T, double sigma2, double beta_value) {
  if (!(lambda_tx > 0.0))
    throw DomainError("pcov_given_beta: lambda_tx must be positive");
  if (sigma2 == 0.0)
    return CoverageResult{1.0 / beta_value, CoverageVariant::NoNoise, 0.0};
  // Rescale u = pi lambda_tx beta v so the exponential mass sits at u ~ 1.
  const double rate = M_PI * lambda_tx * beta_value;
  const double noise = mu * T * sigma2;
  const double k = noise * std::pow(rate, -alpha / 2.0);
  const QuadratureResult q =
      integrate_exp_kernel([](double) { return 1.0; }, k, alpha / 2.0);
  return CoverageResult{q.value / beta_value,
                        CoverageVariant::GeneralQuadrature,
                        q.err_estimate / beta_value};
}

CoverageResult pcov_alpha4_closed(double T, double lambda_tx, double mu,
                                  double sigma2, const FadingModel& fading) {
  if (!(lambda_tx > 0.0))
    throw DomainError("pcov_alpha4_closed: lambda_tx must be positive");
  if (!(sigma2 > 0.0))
    throw DomainError("pcov_alpha4_closed: singular at sigma2 = 0, use pcov");
  const double b = beta(T, 4.0, fading).value;
  const double noise = mu * T * sigma2;
  const double x = lambda_tx * M_PI * b / std::sqrt(2.0 * noise);
  const double p = std::pow(M_PI, 1.5) * lambda_tx / std::sqrt(noise) *
                   exp_q_scaled(x);
  return CoverageResult{p, CoverageVariant::ClosedFormAlpha4, 0.0};
}

CoverageResult pcov_small_noise(double T, double lambda_tx, double alpha,
                                double mu, double sigma2,
                                const FadingModel& fading) {
  if (!(lambda_tx > 0.0))
    throw DomainError("pcov_small_noise: lambda_tx must be positive");
  const double b = beta(T, alpha, fading).value;
  const double correction = mu * T * sigma2 *
                            std::pow(lambda_tx * M_PI, -alpha / 2.0) *
                            std::tgamma(1.0 + alpha / 2.0) /
                            std::pow(b, alpha / 2.0 + 1.0);
  double p = 1.0 / b - correction;
  const bool clamp = p < 0.0 || p > 1.0;
  p = std::clamp(p, 0.0, 1.0);
  return CoverageResult{p, CoverageVariant::SmallNoise, 0.0, clamp};
}

double rho1(double T, double alpha) {
  if (!(T > 0.0)) throw DomainError("rho1: T must be positive");
  if (!(alpha > 2.0)) throw DomainError("rho1: alpha must exceed 2");
  const double lo = std::pow(T, -2.0 / alpha);
  auto f = [&](double r) {
    const double u = lo + r;
    return 1.0 / (1.0 + std::pow(u, alpha / 2.0));
  };
  return std::pow(T, 2.0 / alpha) * integrate_semi_infinite(f).value;
}

double rho2(double T, double alpha) {
  if (!(T > 0.0)) throw DomainError("rho2: T must be positive");
  if (!(alpha > 2.0)) throw DomainError("rho2: alpha must exceed 2");
  const double hi = std::pow(T, -2.0 / alpha);
  auto f = [&](double u) { return 1.0 / (1.0 + std::pow(u, alpha / 2.0)); };
  return std::pow(T, 2.0 / alpha) * integrate(f, 0.0, hi).value;
}

CoverageResult pcov_simultaneous(double T, double lambda_j, double lambda_t,
                                 double alpha, double sigma2) {
  if (!(lambda_j > 0.0))
    throw DomainError("pcov_simultaneous: lambda_j must be positive");
  if (lambda_j > lambda_t)
    throw DomainError("pcov_simultaneous: lambda_j cannot exceed lambda_t");
  const double r1 = rho1(T, alpha);
  const double r2 = rho2(T, alpha);
  const double rate =
      M_PI * lambda_j * (1.0 - r2) + M_PI * lambda_t * (r1 + r2);
  const double k = T * sigma2 * std::pow(rate, -alpha / 2.0);
  const QuadratureResult q =
      integrate_exp_kernel([](double) { return 1.0; }, k, alpha / 2.0);
  const double scale = M_PI * lambda_j / rate;
  return CoverageResult{scale * q.value, CoverageVariant::SimultaneousTheorem2,
                        scale * q.err_estimate};
}

CoverageResult pcov_simultaneous_alpha4(double T, double lambda_t, double p_j,
                                        double sigma2) {
  if (!(sigma2 > 0.0))
    throw DomainError("pcov_simultaneous_alpha4: singular at sigma2 = 0");
  if (!(p_j >= 0.0 && p_j <= 1.0))
    throw DomainError("pcov_simultaneous_alpha4: p_j must lie in [0,1]");
  if (p_j == 0.0)
    return CoverageResult{0.0, CoverageVariant::SimultaneousAlpha4, 0.0};
  const double sT = std::sqrt(T);
  const double h = (p_j / sT - p_j * std::atan(1.0 / sT) + M_PI / 2.0) *
                   M_PI * lambda_t / std::sqrt(2.0 * sigma2);
  const double p = M_PI * lambda_t * p_j * std::sqrt(M_PI / (T * sigma2)) *
                   exp_q_scaled(h);
  return CoverageResult{p, CoverageVariant::SimultaneousAlpha4, 0.0};
}

}  // namespace dsrlab
