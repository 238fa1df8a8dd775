#pragma once

#include <functional>

#include "dsrlab/errors.hpp"

namespace dsrlab {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 400;
};

struct RootSpec {
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  double tol = 1e-12;
  int max_iter = 200;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (G7/K15) on a finite interval [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec = {});

/// Integral of f over (0, inf) via the substitution r = t/(1-t).
/// Handles integrands with exponential or Gaussian-tail decay.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec = {});

/// Integral of f(u) * exp(-u - k u^q) over (0, inf), k >= 0, q > 0.
/// Substitutes u = s w with s = min(1, k^{-1/q}) so the exponential mass
/// sits at w ~ 1 even when k is huge; without this the adaptive panels
/// can miss a spike near zero entirely and report a false zero.
QuadratureResult integrate_exp_kernel(const std::function<double(double)>& f,
                                      double k, double q,
                                      const QuadratureSpec& spec = {});

/// Gaussian tail probability Q(x) = P[N(0,1) > x].
double gaussian_q(double x);

/// Scaled complementary error function exp(x^2) * erfc(x), stable for large x.
double erfcx(double x);

/// exp(h^2/2) * Q(h), computed as 0.5 * erfcx(h / sqrt(2)).
double exp_q_scaled(double h);

/// Karagiannidis-Lioumpas approximation
///   Q(x) ~ (1 - exp(-1.4 x)) exp(-x^2/2) / (1.135 sqrt(2 pi) x),  x > 0.
/// Returns the approximation value itself, never the exact Q.
double gaussian_q_tight_approx(double x);

/// Lower incomplete gamma gamma(s, x) for s in (-1, 0), x > 0, by analytic
/// continuation: Kummer series for small x, continued fraction for Gamma(s,x)
/// otherwise. Note gamma(s, x) = Gamma(s) - Gamma(s, x), so the difference
/// Gamma(s, x) - Gamma(s) equals -gamma(s, x).
double lower_incomplete_gamma_neg(double s, double x);

/// Bracketing root finder (bisection with secant acceleration).
double find_root(const std::function<double(double)>& g, const RootSpec& spec);

}  // namespace dsrlab
