#include "dsrlab/singlefile.hpp"

#include <cmath>

#include "dsrlab/detail/golden.hpp"

namespace dsrlab {

namespace {

constexpr double kEdge = 1e-6;

double dsr_at(const NetworkParams& p, const FadingModel& fading, double g1) {
  return p.lambda * (p.a - g1) *
         pcov(p.T, p.lambda * g1, p.alpha, p.mu, p.sigma2, fading).p;
}

SingleFileOptimum degenerate_no_noise(const NetworkParams& p,
                                      const FadingModel& fading,
                                      OptMethod method) {
  const double b = beta(p.T, p.alpha, fading).value;
  return SingleFileOptimum{kEdge, p.lambda * (p.a - kEdge) / b, method, true};
}

}  // namespace

DsrPoint dsr_single(const NetworkParams& params, const FadingModel& fading) {
  params.validate();
  const CoverageResult cov = pcov(params.T, params.lambda * params.gamma1,
                                  params.alpha, params.mu, params.sigma2,
                                  fading);
  return DsrPoint{params.gamma1, params.lambda * params.gamma2() * cov.p, cov};
}

SingleFileOptimum optimize_gamma1(const NetworkParams& params,
                                  const FadingModel& fading, OptMethod method) {
  switch (method) {
    case OptMethod::ClosedFormAlpha4:
      return dsr_max_alpha4(params, fading);
    case OptMethod::SmallNoise:
      return dsr_max_small_noise(params, fading);
    case OptMethod::LowSnr: {
      const double g1 = gamma1_low_snr(params);
      NetworkParams p = params;
      p.gamma1 = g1;
      return SingleFileOptimum{g1, dsr_single(p, fading).dsr, method, false};
    }
    default:
      break;
  }

  if (params.sigma2 == 0.0) return degenerate_no_noise(params, fading, method);

  if (method == OptMethod::NumericScan) {
    auto obj = [&](double g1) { return dsr_at(params, fading, g1); };
    const double g1 =
        detail::golden_max(obj, kEdge, params.a - kEdge, 1e-8 * params.a);
    return SingleFileOptimum{g1, obj(g1), method, false};
  }

  // StationaritySolve: [1/g - 1/(a-g)] / (pi lambda beta) = I1/I0 with
  // I_k = Int_0^inf v^k exp(-pi lambda g beta v - mu T sigma2 v^{alpha/2}) dv.
  const double b = beta(params.T, params.alpha, fading).value;
  const double noise = params.mu * params.T * params.sigma2;
  auto residual = [&](double g1) {
    const double rate = M_PI * params.lambda * g1 * b;
    const double k = noise * std::pow(rate, -params.alpha / 2.0);
    const double j0 =
        integrate_exp_kernel([](double) { return 1.0; }, k, params.alpha / 2.0)
            .value;
    const double j1 =
        integrate_exp_kernel([](double u) { return u; }, k, params.alpha / 2.0)
            .value;
    const double lhs = (1.0 / g1 - 1.0 / (params.a - g1)) /
                       (M_PI * params.lambda * b);
    return lhs - j1 / (j0 * rate);
  };
  RootSpec spec;
  spec.bracket_lo = kEdge;
  spec.bracket_hi = params.a / 2.0 - 1e-9;
  spec.tol = 1e-10;
  const double g1 = find_root(residual, spec);
  return SingleFileOptimum{g1, dsr_at(params, fading, g1), method, false};
}

SingleFileOptimum dsr_max_alpha4(const NetworkParams& params,
                                 const FadingModel& fading) {
  if (params.alpha != 4.0)
    throw DomainError("dsr_max_alpha4: requires alpha = 4");
  if (params.sigma2 == 0.0)
    return degenerate_no_noise(params, fading, OptMethod::ClosedFormAlpha4);

  const double b = beta(params.T, 4.0, fading).value;
  const double noise = params.mu * params.T * params.sigma2;
  const double pil2 = M_PI * params.lambda * M_PI * params.lambda;
  auto residual = [&](double g1) {
    const double cov =
        pcov_alpha4_closed(params.T, params.lambda * g1, params.mu,
                           params.sigma2, fading)
            .p;
    const double lhs = (1.0 / g1) * (1.0 / g1 - 1.0 / (params.a - g1));
    const double rhs = pil2 * b * b / (2.0 * noise) * (1.0 / (b * cov) - 1.0);
    return lhs - rhs;
  };
  RootSpec spec;
  spec.bracket_lo = 1e-8;
  spec.bracket_hi = params.a / 2.0 - 1e-12;
  spec.tol = 1e-12;
  const double g1 = find_root(residual, spec);
  const double dsr =
      params.lambda * (params.a - g1) /
      ((1.0 / g1) * (1.0 / g1 - 1.0 / (params.a - g1)) * 2.0 * noise /
           (pil2 * b) +
       b);
  return SingleFileOptimum{g1, dsr, OptMethod::ClosedFormAlpha4, false};
}

double gamma1_low_snr(const NetworkParams& params) {
  if (params.alpha != 4.0)
    throw DomainError("gamma1_low_snr: requires alpha = 4");
  if (!(params.sigma2 > 0.0))
    throw DomainError("gamma1_low_snr: requires sigma2 > 0");
  const double a = params.a;
  const double rhs = std::pow(M_PI * params.lambda, 2) /
                     (4.0 * params.mu * params.T * params.sigma2);
  auto g = [&](double x) {
    return (a - 3.0 * a * x + 3.0 * x * x) / (x * x * x * (a - x)) - rhs;
  };
  RootSpec spec;
  spec.bracket_lo = kEdge * a;
  spec.bracket_hi = a / 2.0;
  spec.tol = 1e-12;
  return find_root(g, spec);
}

SingleFileOptimum dsr_max_small_noise(const NetworkParams& params,
                                      const FadingModel& fading) {
  if (params.sigma2 == 0.0)
    return degenerate_no_noise(params, fading, OptMethod::SmallNoise);
  const double b = beta(params.T, params.alpha, fading).value;
  const double a = params.a;

  if (params.alpha == 4.0) {
    // Truncated stationarity: (pi lambda g beta)^2 = 2 mu T sigma2 (2a/g - 1).
    const double noise = params.mu * params.T * params.sigma2;
    auto g = [&](double x) {
      const double lhs = std::pow(M_PI * params.lambda * x * b, 2);
      return lhs - 2.0 * noise * (2.0 * a / x - 1.0);
    };
    RootSpec spec;
    spec.bracket_lo = 1e-12;
    spec.bracket_hi = a - 1e-12;
    spec.tol = 1e-14;
    const double g1 = find_root(g, spec);
    const double dsr = 2.0 * params.lambda * (a - g1) * (a - g1) /
                       (b * (2.0 * a - g1));
    return SingleFileOptimum{g1, dsr, OptMethod::SmallNoise, false};
  }

  // General alpha: maximize the two-term expansion directly.
  auto obj = [&](double g1) {
    return params.lambda * (a - g1) *
           pcov_small_noise(params.T, params.lambda * g1, params.alpha,
                            params.mu, params.sigma2, fading)
               .p;
  };
  const double g1 = detail::golden_max(obj, kEdge, a - kEdge, 1e-8 * a);
  return SingleFileOptimum{g1, obj(g1), OptMethod::SmallNoise, false};
}

}  // namespace dsrlab
