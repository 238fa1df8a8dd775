#pragma once

#include "dsrlab/coverage.hpp"

namespace dsrlab {

struct DsrPoint {
  double gamma1 = 0.0;
  double dsr = 0.0;
  CoverageResult pcov_used;
};

enum class OptMethod {
  NumericScan,
  StationaritySolve,
  ClosedFormAlpha4,
  SmallNoise,
  LowSnr,
};

struct SingleFileOptimum {
  double gamma1_opt = 0.0;
  double dsr_max = 0.0;
  OptMethod method = OptMethod::NumericScan;
  bool degenerate = false;  // no-noise case: gamma1_opt is a placeholder epsilon
};

/// DSR = lambda (a - gamma1) pcov(T, lambda gamma1, alpha).
DsrPoint dsr_single(const NetworkParams& params, const FadingModel& fading);

/// Maximizes DSR over gamma1 in (0, a). NumericScan runs a golden-section
/// search; StationaritySolve roots the first-order condition
///   [1/g - 1/(a-g)] / (pi lambda beta) = I1(g)/I0(g).
/// sigma2 = 0 returns the degenerate epsilon optimum with a flag.
SingleFileOptimum optimize_gamma1(const NetworkParams& params,
                                  const FadingModel& fading,
                                  OptMethod method = OptMethod::NumericScan);

/// alpha = 4, arbitrary noise: solves the stationarity fixed point coupling
/// gamma1 with the closed-form coverage, then evaluates the DSR display.
SingleFileOptimum dsr_max_alpha4(const NetworkParams& params,
                                 const FadingModel& fading);

/// Low-SNR gamma1: smaller root of
///   (a - 3 a g + 3 g^2) / (g^3 (a - g)) = (pi lambda)^2 / (4 mu T sigma2)
/// in (0, a/2). Throws NoSignChange when the right side is below the
/// boundary value and no interior root exists.
double gamma1_low_snr(const NetworkParams& params);

/// Small-noise optimum. alpha = 4 solves the truncated relation
///   (pi lambda g beta)^2 = 2 mu T sigma2 (2a/g - 1)
/// and evaluates 2 lambda (a-g)^2 / (beta (2a-g)); other alpha maximizes the
/// two-term expansion objective numerically.
SingleFileOptimum dsr_max_small_noise(const NetworkParams& params,
                                      const FadingModel& fading);

}  // namespace dsrlab
