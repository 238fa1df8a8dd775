#include "dsrlab/fading.hpp"

#include <cmath>

namespace dsrlab {

namespace {

// log I0(x) for x >= 0, via the Abramowitz & Stegun rational fits.
double log_bessel_i0(double x) {
  if (x < 3.75) {
    const double t = (x / 3.75) * (x / 3.75);
    const double p = 1.0 + t * (3.5156229 + t * (3.0899424 +
                     t * (1.2067492 + t * (0.2659732 +
                     t * (0.0360768 + t * 0.0045813)))));
    return std::log(p);
  }
  const double t = 3.75 / x;
  const double p = 0.39894228 + t * (0.01328592 + t * (0.00225319 +
                   t * (-0.00157565 + t * (0.00916281 +
                   t * (-0.02057706 + t * (0.02635537 +
                   t * (-0.01647633 + t * 0.00392377)))))));
  return x - 0.5 * std::log(x) + std::log(p);
}

}  // namespace

FadingModel::FadingModel(Rayleigh r) : kind_(r) {
  if (!(r.mu > 0.0)) throw DomainError("Rayleigh: mu must be positive");
}

FadingModel::FadingModel(Ricean r) : kind_(r) {
  if (!(r.v >= 0.0)) throw DomainError("Ricean: v must be nonnegative");
  if (!(r.sigma_f > 0.0)) throw DomainError("Ricean: sigma_f must be positive");
}

FadingModel::FadingModel(Nakagami n) : kind_(n) {
  if (!(n.m >= 0.5)) throw DomainError("Nakagami: m must be >= 0.5");
  if (!(n.omega > 0.0)) throw DomainError("Nakagami: omega must be positive");
}

double FadingModel::mean_power() const {
  return std::visit(
      [](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Rayleigh>) return 1.0 / k.mu;
        if constexpr (std::is_same_v<K, Ricean>)
          return k.v * k.v + 2.0 * k.sigma_f * k.sigma_f;
        if constexpr (std::is_same_v<K, Nakagami>) return k.omega;
      },
      kind_);
}

double FadingModel::pdf(double g) const {
  if (g <= 0.0) return 0.0;
  return std::visit(
      [g](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Rayleigh>) {
          return k.mu * std::exp(-k.mu * g);
        }
        if constexpr (std::is_same_v<K, Ricean>) {
          const double s2 = k.sigma_f * k.sigma_f;
          const double z = k.v * std::sqrt(g) / s2;
          const double logp =
              -std::log(2.0 * s2) - (g + k.v * k.v) / (2.0 * s2) + log_bessel_i0(z);
          return std::exp(logp);
        }
        if constexpr (std::is_same_v<K, Nakagami>) {
          const double rate = k.m / k.omega;
          const double logp = k.m * std::log(rate) - std::lgamma(k.m) +
                              (k.m - 1.0) * std::log(g) - rate * g;
          return std::exp(logp);
        }
      },
      kind_);
}

double FadingModel::signal_rate() const {
  if (const auto* r = std::get_if<Rayleigh>(&kind_)) return r->mu;
  return 1.0;
}

double sample_power(const FadingModel& fading, std::mt19937_64& rng) {
  return std::visit(
      [&rng](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Rayleigh>) {
          std::exponential_distribution<double> d(k.mu);
          return d(rng);
        }
        if constexpr (std::is_same_v<K, Ricean>) {
          std::normal_distribution<double> n(0.0, k.sigma_f);
          const double x = k.v + n(rng);
          const double y = n(rng);
          return x * x + y * y;
        }
        if constexpr (std::is_same_v<K, Nakagami>) {
          std::gamma_distribution<double> d(k.m, k.omega / k.m);
          return d(rng);
        }
      },
      fading.kind());
}

BetaValue beta(double T, double alpha, const FadingModel& fading) {
  if (!(T > 0.0)) throw DomainError("beta: T must be positive");
  if (!(alpha > 2.0)) throw DomainError("beta: alpha must exceed 2");

  const double s = -2.0 / alpha;
  const double mu = fading.signal_rate();
  const double prefactor = 2.0 * std::pow(mu * T, 2.0 / alpha) / alpha;

  auto integrand = [&](double g) {
    const double p = fading.pdf(g);
    if (p == 0.0) return 0.0;
    // Gamma(s, muTg) - Gamma(s) = -gamma(s, muTg)
    return p * std::pow(g, 2.0 / alpha) *
           (-lower_incomplete_gamma_neg(s, mu * T * g));
  };
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-10;
  const QuadratureResult q = integrate_semi_infinite(integrand, spec);
  return BetaValue{prefactor * q.value, T, alpha, prefactor * q.err_estimate};
}

SeparabilityFit separability_fit(const FadingModel& fading, double alpha,
                                 const Eigen::ArrayXd& T_grid) {
  if (T_grid.size() < 3)
    throw DomainError("separability_fit: need at least 3 grid points");
  if ((T_grid <= 0.0).any())
    throw DomainError("separability_fit: thresholds must be positive");

  const Eigen::Index n = T_grid.size();
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i)
    y(i) = std::pow(beta(T_grid(i), alpha, fading).value, alpha / 2.0);

  // Rows are scaled by 1/y so the fit minimizes relative (not absolute)
  // residuals; otherwise the largest thresholds dominate the line.
  Eigen::MatrixXd design(n, 2);
  design.col(0) = T_grid.matrix();
  design.col(1).setOnes();
  const Eigen::MatrixXd weighted = design.array().colwise() / y.array();
  const Eigen::Vector2d coef =
      weighted.colPivHouseholderQr().solve(Eigen::VectorXd::Ones(n).eval());

  const Eigen::ArrayXd fit = (design * coef).array();
  const double max_rel =
      ((fit - y.array()).abs() / y.array().abs()).maxCoeff();
  return SeparabilityFit{coef(0), coef(1), max_rel};
}

}  // namespace dsrlab
