#pragma once

#include "dsrlab/fading.hpp"
#include "dsrlab/numerics.hpp"

namespace dsrlab {

struct NetworkParams {
  double lambda = 0.1;   // node density
  double T = 1.0;        // SINR threshold (linear)
  double alpha = 4.0;    // path loss exponent (> 2)
  double mu = 1.0;       // inverse transmit power
  double sigma2 = 1.0;   // noise power
  double a = 1.0;        // total active fraction
  double gamma1 = 0.25;  // transmitter fraction

  double gamma2() const { return a - gamma1; }
  double snr() const;
  void validate() const;
};

enum class CoverageVariant {
  GeneralQuadrature,
  ClosedFormAlpha4,
  SmallNoise,
  NoNoise,
  SimultaneousTheorem2,
  SimultaneousAlpha4,
};

struct CoverageResult {
  double p = 0.0;
  CoverageVariant variant = CoverageVariant::GeneralQuadrature;
  double err_estimate = 0.0;
  bool clamped = false;
};

/// SINR coverage of the typical receiver with transmitter density lambda_tx:
///   pi lambda_tx Int_0^inf exp(-pi lambda_tx v beta(T,alpha) - mu T sigma2 v^{alpha/2}) dv.
/// sigma2 = 0 short-circuits to the exact no-noise value 1/beta(T,alpha).
CoverageResult pcov(double T, double lambda_tx, double alpha, double mu,
                    double sigma2, const FadingModel& fading);

/// alpha = 4 closed form via the scaled complementary error function.
CoverageResult pcov_alpha4_closed(double T, double lambda_tx, double mu,
                                  double sigma2, const FadingModel& fading);

/// Two-term small-noise expansion
///   1/beta - mu T sigma2 (lambda_tx pi)^{-alpha/2} Gamma(1+alpha/2) / beta^{alpha/2+1}.
/// Clamped to [0,1]; `clamped` flags when that happened.
CoverageResult pcov_small_noise(double T, double lambda_tx, double alpha,
                                double mu, double sigma2,
                                const FadingModel& fading);

/// Same integral as pcov with beta(T, alpha) already evaluated; used by
/// callers that sweep lambda_tx at fixed (T, alpha, fading).
CoverageResult pcov_given_beta(double lambda_tx, double alpha, double mu,
                               double T, double sigma2, double beta_value);

/// rho1 = T^{2/a} Int_{T^{-2/a}}^inf du/(1+u^{a/2});
/// rho2 = T^{2/a} Int_0^{T^{-2/a}} du/(1+u^{a/2}).
/// At alpha = 4: rho1 = sqrt(T) arctan(sqrt(T)), rho2 = sqrt(T) arctan(1/sqrt(T)).
double rho1(double T, double alpha);
double rho2(double T, double alpha);

/// Simultaneous-transmission coverage for a receiver whose candidate
/// transmitters have density lambda_j out of total density lambda_t
/// (Rayleigh with unit rate; the derivation fixes mu = 1).
CoverageResult pcov_simultaneous(double T, double lambda_j, double lambda_t,
                                 double alpha, double sigma2);

/// alpha = 4 closed form of the simultaneous coverage, p_j = lambda_j/lambda_t.
CoverageResult pcov_simultaneous_alpha4(double T, double lambda_t, double p_j,
                                        double sigma2);

}  // namespace dsrlab
