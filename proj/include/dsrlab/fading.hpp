#pragma once

#include <Eigen/Dense>
#include <random>
#include <variant>

#include "dsrlab/numerics.hpp"

namespace dsrlab {

/// Exponential interference power with rate mu (unit power at mu = 1).
struct Rayleigh {
  double mu = 1.0;
};

/// Line-of-sight component v, scattered spread sigma_f per complex dimension.
/// Power is |CN(v, 2 sigma_f^2)|^2, a noncentral chi-square with 2 dof.
struct Ricean {
  double v = 0.0;
  double sigma_f = 0.70710678118654752440;  // unit mean scattered power
  double k_factor() const { return v * v / (2.0 * sigma_f * sigma_f); }
};

/// Gamma-distributed power with shape m and mean omega.
struct Nakagami {
  double m = 1.0;
  double omega = 1.0;
};

class FadingModel {
 public:
  explicit FadingModel(Rayleigh r);
  explicit FadingModel(Ricean r);
  explicit FadingModel(Nakagami n);

  static FadingModel rayleigh(double mu = 1.0) { return FadingModel(Rayleigh{mu}); }
  static FadingModel ricean(double v, double sigma_f = 0.70710678118654752440) {
    return FadingModel(Ricean{v, sigma_f});
  }
  static FadingModel nakagami(double m, double omega = 1.0) {
    return FadingModel(Nakagami{m, omega});
  }

  bool is_rayleigh() const { return std::holds_alternative<Rayleigh>(kind_); }
  const std::variant<Rayleigh, Ricean, Nakagami>& kind() const { return kind_; }

  double mean_power() const;
  /// Density of the interference power g at a point g > 0.
  double pdf(double g) const;
  /// Rayleigh rate when Rayleigh; the signal normalization 1 otherwise.
  double signal_rate() const;

 private:
  std::variant<Rayleigh, Ricean, Nakagami> kind_;
};

/// One i.i.d. interference-power draw. The caller owns the generator state.
double sample_power(const FadingModel& fading, std::mt19937_64& rng);

struct BetaValue {
  double value = 0.0;
  double T = 0.0;
  double alpha = 0.0;
  double err_estimate = 0.0;
};

/// Interference functional
///   beta(T, alpha) = (2 (mu T)^{2/alpha} / alpha)
///                    * E[g^{2/alpha} (Gamma(-2/alpha, mu T g) - Gamma(-2/alpha))],
/// evaluated by quadrature against the closed-form power density.
/// For Rayleigh at alpha = 4 this equals 1 + sqrt(T) arctan(sqrt(T)).
BetaValue beta(double T, double alpha, const FadingModel& fading);

struct SeparabilityFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_rel_residual = 0.0;
};

/// Least-squares line fit of beta(T, alpha)^{alpha/2} against T.
SeparabilityFit separability_fit(const FadingModel& fading, double alpha,
                                 const Eigen::ArrayXd& T_grid);

}  // namespace dsrlab
