#include "dsrlab/caching.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace dsrlab {

Pmf::Pmf(Eigen::ArrayXd probs) : probs_(std::move(probs)) {
  if (probs_.size() < 1) throw DomainError("Pmf: catalog must be nonempty");
  if ((probs_ < 0.0).any()) throw DomainError("Pmf: entries must be nonnegative");
  if (std::abs(probs_.sum() - 1.0) > 1e-12)
    throw DomainError("Pmf: entries must sum to 1 within 1e-12");
}

bool Pmf::nonincreasing() const {
  for (Eigen::Index i = 1; i < probs_.size(); ++i)
    if (probs_(i) > probs_(i - 1) + 1e-15) return false;
  return true;
}

Pmf zipf(int M, double gamma) {
  if (M < 1) throw DomainError("zipf: M must be >= 1");
  if (gamma < 0.0) throw DomainError("zipf: gamma must be nonnegative");
  Eigen::ArrayXd p(M);
  for (int i = 0; i < M; ++i) p(i) = std::pow(i + 1.0, -gamma);
  p /= p.sum();
  return Pmf(p);
}

double dsrs(const Pmf& pr, const Pmf& pc, const NetworkParams& params,
            const FadingModel& fading) {
  if (pr.size() != pc.size())
    throw DomainError("dsrs: pr and pc must have the same catalog size");
  params.validate();
  const double b = beta(params.T, params.alpha, fading).value;
  const double lambda_t = params.lambda * params.gamma1;
  double sum = 0.0;
  for (int i = 0; i < pr.size(); ++i) {
    if (pc(i) <= 0.0) continue;  // nobody caches file i
    sum += pr(i) * pcov_given_beta(lambda_t * pc(i), params.alpha, params.mu,
                                   params.T, params.sigma2, b)
                       .p;
  }
  return params.lambda * params.gamma2() * sum;
}

double optimal_gamma1_multifile(const Pmf& pr, const Pmf& pc,
                                const NetworkParams& params,
                                const FadingModel& fading) {
  if (pr.size() != pc.size())
    throw DomainError("optimal_gamma1_multifile: catalog size mismatch");
  if (params.a != 1.0)
    throw DomainError("optimal_gamma1_multifile: stationarity assumes a = 1");
  if (!(params.sigma2 > 0.0))
    throw DomainError("optimal_gamma1_multifile: requires sigma2 > 0");
  const double b = beta(params.T, params.alpha, fading).value;
  const double noise = params.mu * params.T * params.sigma2;

  auto stationarity = [&](double g1) {
    const double c = 1.0 / g1 - 1.0 / (1.0 - g1);
    double sum = 0.0;
    for (int i = 0; i < pr.size(); ++i) {
      if (pc(i) <= 0.0) continue;
      const double rate = M_PI * params.lambda * g1 * pc(i) * b;
      const double k = noise * std::pow(rate, -params.alpha / 2.0);
      auto f = [&](double u) { return c - u / g1; };
      sum += pr(i) * pc(i) *
             integrate_exp_kernel(f, k, params.alpha / 2.0).value / rate;
    }
    return sum;
  };
  RootSpec spec;
  spec.bracket_lo = 1e-6;
  spec.bracket_hi = 1.0 - 1e-6;
  spec.tol = 1e-10;
  return find_root(stationarity, spec);
}

double optimal_caching_zipf(double gamma_r, double alpha) {
  if (!(alpha > 2.0)) throw DomainError("optimal_caching_zipf: alpha must exceed 2");
  return gamma_r / (alpha / 2.0 + 1.0);
}

Pmf optimal_caching_general(const Pmf& pr, double alpha) {
  if (!(alpha > 2.0))
    throw DomainError("optimal_caching_general: alpha must exceed 2");
  if ((pr.probs() <= 0.0).any())
    throw DomainError("optimal_caching_general: pr must be strictly positive");
  Eigen::ArrayXd p = pr.probs().pow(1.0 / (alpha / 2.0 + 1.0));
  p /= p.sum();
  return Pmf(p);
}

BenfordPmf benford_caching(int M, double gamma_r, const NetworkParams& params,
                           const FadingModel& fading) {
  if (M < 1) throw DomainError("benford_caching: M must be >= 1");
  if (params.alpha != 4.0)
    throw DomainError("benford_caching: requires alpha = 4");
  params.validate();

  double log_mfact = 0.0;
  for (int j = 1; j <= M; ++j) log_mfact += std::log(static_cast<double>(j));
  const double bound =
      M > 1 ? 1.0 / (M * std::log(static_cast<double>(M)) - log_mfact) : 0.0;

  const double b_beta = beta(params.T, 4.0, fading).value;
  const double lambda_t = params.lambda * params.gamma1;
  const double b = std::sqrt(params.mu * params.T * params.sigma2) * gamma_r /
                   (M_PI * lambda_t * b_beta);
  if (M > 1 && b > bound)
    throw ValidityViolation("benford_caching: scale parameter exceeds the validity bound",
                            bound);

  Eigen::ArrayXd shift(M), probs(M);
  for (int i = 1; i <= M; ++i) {
    double s = 0.0;
    for (int j = 1; j <= M; ++j)
      s += std::log(static_cast<double>(j) / (i + 1.0));
    shift(i - 1) = 1.0 / M + b / M * s;
    probs(i - 1) = shift(i - 1) + b * std::log((i + 1.0) / i);
  }
  if (probs.minCoeff() < 0.0)
    throw ValidityViolation("benford_caching: negative tail entry", bound);
  return BenfordPmf{b, std::move(shift), std::move(probs), bound};
}

Eigen::ArrayXd project_to_simplex(const Eigen::ArrayXd& x, double floor) {
  const Eigen::Index n = x.size();
  std::vector<double> u(x.data(), x.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    css += u[k];
    const double t = (css - 1.0) / (k + 1.0);
    if (k + 1 < n && u[k + 1] <= t) {
      theta = t;
      break;
    }
    theta = t;
  }
  Eigen::ArrayXd p = (x - theta).max(floor);
  p /= p.sum();
  return p;
}

Pmf optimize_caching_numeric(const Pmf& pr, const NetworkParams& params,
                             const FadingModel& fading,
                             const NumericCachingOptions& opts) {
  const int M = pr.size();
  if (M > 200) throw DomainError("optimize_caching_numeric: M must be <= 200");
  if (M == 1) return Pmf(Eigen::ArrayXd::Ones(1));

  params.validate();
  // beta depends only on (T, alpha, fading); hoist it out of the inner loop.
  const double b = beta(params.T, params.alpha, fading).value;
  const double lambda_t = params.lambda * params.gamma1;
  auto objective = [&](const Eigen::ArrayXd& p) {
    double sum = 0.0;
    for (int i = 0; i < M; ++i) {
      if (p(i) <= 0.0) continue;
      sum += pr(i) * pcov_given_beta(lambda_t * p(i), params.alpha, params.mu,
                                     params.T, params.sigma2, b)
                         .p;
    }
    return params.lambda * params.gamma2() * sum;
  };

  std::vector<Eigen::ArrayXd> starts;
  starts.push_back(Eigen::ArrayXd::Constant(M, 1.0 / M));
  if ((pr.probs() > 0.0).all())
    starts.push_back(optimal_caching_general(pr, params.alpha).probs());
  if (params.alpha == 4.0) {
    // Zipf-exponent fit of pr is not assumed; the Benford construction uses
    // the exponent that reproduces pr(1)/pr(2) when that ratio is sane.
    const double ratio = pr(0) / std::max(pr(M - 1), 1e-300);
    const double gamma_r_fit =
        std::log(ratio) / std::log(static_cast<double>(M));
    if (std::isfinite(gamma_r_fit) && gamma_r_fit >= 0.0) {
      try {
        starts.push_back(benford_caching(M, gamma_r_fit, params, fading).probs);
      } catch (const ValidityViolation&) {
      }
    }
  }

  // Random caching distributions as a coarse secondary search.
  std::mt19937_64 rng(opts.seed);
  std::exponential_distribution<double> expd(1.0);
  Eigen::ArrayXd best_random;
  double best_random_val = -1.0;
  for (int k = 0; k < opts.random_probes; ++k) {
    Eigen::ArrayXd p(M);
    for (int i = 0; i < M; ++i) p(i) = expd(rng);
    p /= p.sum();
    const double v = objective(p);
    if (v > best_random_val) {
      best_random_val = v;
      best_random = p;
    }
  }
  if (best_random.size() > 0) starts.push_back(best_random);

  Eigen::ArrayXd best;
  double best_val = -1.0;
  for (const Eigen::ArrayXd& start : starts) {
    Eigen::ArrayXd x = project_to_simplex(start, opts.entry_floor);
    double fx = objective(x);
    for (int iter = 0; iter < opts.max_iters; ++iter) {
      // Central-difference gradient.
      Eigen::ArrayXd grad(M);
      for (int i = 0; i < M; ++i) {
        Eigen::ArrayXd xp = x, xm = x;
        xp(i) += opts.grad_step;
        xm(i) = std::max(xm(i) - opts.grad_step, opts.entry_floor);
        const double denom = xp(i) - xm(i);
        grad(i) = (objective(xp / xp.sum()) - objective(xm / xm.sum())) / denom;
      }
      const double gnorm = std::sqrt((grad * grad).sum());
      if (gnorm == 0.0) break;

      double step = 0.25 / gnorm;
      bool improved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Eigen::ArrayXd cand = project_to_simplex(x + step * grad, opts.entry_floor);
        const double fc = objective(cand);
        if (fc > fx) {
          x = cand;
          fx = fc;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;  // ascent stalled at line-search resolution
    }
    if (fx > best_val) {
      best_val = fx;
      best = x;
    }
  }
  return Pmf(best);
}

DsrsBounds dsrs_bounds(const Pmf& pr, const NetworkParams& params,
                       const FadingModel& fading) {
  params.validate();
  const double lambda_t = params.lambda * params.gamma1;
  const double scale = params.lambda * params.gamma2();
  const double lb =
      scale * pcov(params.T, lambda_t / pr.size(), params.alpha, params.mu,
                   params.sigma2, fading)
                  .p;
  const double ub =
      scale * pcov(params.T, lambda_t * pr.probs().maxCoeff(), params.alpha,
                   params.mu, params.sigma2, fading)
                  .p;
  return DsrsBounds{lb, ub};
}

}  // namespace dsrlab
