#pragma once

#include <Eigen/Dense>

#include "dsrlab/coverage.hpp"

namespace dsrlab {

/// Finite pmf over a catalog of M files. Entries must be nonnegative and
/// sum to 1 within 1e-12.
class Pmf {
 public:
  explicit Pmf(Eigen::ArrayXd probs);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator()(int i) const { return probs_(i); }  // 0-based
  const Eigen::ArrayXd& probs() const { return probs_; }
  bool nonincreasing() const;

 private:
  Eigen::ArrayXd probs_;
};

/// Zipf pmf: p(i) proportional to i^{-gamma}, i = 1..M.
Pmf zipf(int M, double gamma);

struct BenfordPmf {
  double b = 0.0;              // scale parameter
  Eigen::ArrayXd shift;        // a_i
  Eigen::ArrayXd probs;        // a_i + b log((i+1)/i)
  double validity_bound = 0.0; // [M log M - log M!]^{-1}
  Pmf pmf() const { return Pmf(probs); }
};

/// Sequential-model DSR:
///   lambda gamma2 sum_i pr(i) pcov(T, lambda gamma1 pc(i), alpha).
double dsrs(const Pmf& pr, const Pmf& pc, const NetworkParams& params,
            const FadingModel& fading);

/// Roots the multi-file gamma1 stationarity sum (written for a = 1).
double optimal_gamma1_multifile(const Pmf& pr, const Pmf& pc,
                                const NetworkParams& params,
                                const FadingModel& fading);

/// gamma_c = gamma_r / (alpha/2 + 1).
double optimal_caching_zipf(double gamma_r, double alpha);

/// Exponent-flattened renormalization pc(i) = pr(i)^{1/(alpha/2+1)} / sum.
Pmf optimal_caching_general(const Pmf& pr, double alpha);

/// Benford-law caching pmf for alpha = 4 and arbitrary noise. Throws
/// ValidityViolation (carrying the bound) when b exceeds it.
BenfordPmf benford_caching(int M, double gamma_r, const NetworkParams& params,
                           const FadingModel& fading);

struct NumericCachingOptions {
  int max_iters = 300;
  double grad_step = 1e-6;
  double entry_floor = 1e-9;
  int random_probes = 200;  // secondary random-search oracle
  uint64_t seed = 20240915;
};

/// Maximizes dsrs over the probability simplex by projected gradient ascent
/// with numerically estimated gradients; multi-start from uniform, the
/// Zipf flattening rule, and the Benford construction when valid. A random
/// caching-distribution probe runs alongside and the better result wins.
Pmf optimize_caching_numeric(const Pmf& pr, const NetworkParams& params,
                             const FadingModel& fading,
                             const NumericCachingOptions& opts = {});

/// Euclidean projection onto the simplex with a strictly-positive floor.
Eigen::ArrayXd project_to_simplex(const Eigen::ArrayXd& x, double floor = 0.0);

struct DsrsBounds {
  double lb = 0.0;
  double ub = 0.0;
};

/// LB = lambda gamma2 pcov(T, lambda_t / M, alpha);
/// UB = lambda gamma2 pcov(T, lambda_t pr(1), alpha) with pr(1) the max entry.
DsrsBounds dsrs_bounds(const Pmf& pr, const NetworkParams& params,
                       const FadingModel& fading);

}  // namespace dsrlab
