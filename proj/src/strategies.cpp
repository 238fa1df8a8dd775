#include "dsrlab/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dsrlab {

ReceiverState make_state(int state_id, std::vector<int> requested_files,
                         const Pmf& pc) {
  if (requested_files.empty())
    throw DomainError("make_state: requested file set must be nonempty");
  double pj = 0.0;
  for (int i : requested_files) {
    if (i < 0 || i >= pc.size())
      throw DomainError("make_state: file index out of range");
    pj += pc(i);
  }
  if (!(pj > 0.0)) throw DomainError("make_state: p_j must be positive");
  return ReceiverState{state_id, std::move(requested_files), pj};
}

PopularitySets top_k_sets(const Pmf& pr, int K) {
  if (K < 1 || K > pr.size())
    throw DomainError("top_k_sets: K must be in [1, M]");
  std::vector<int> idx(pr.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return pr(a) > pr(b); });
  idx.resize(K);
  return PopularitySets{idx, idx};
}

WeightVector maxmin_weights(const Pmf& pr, const Pmf& pc) {
  if (pr.size() != pc.size())
    throw DomainError("maxmin_weights: catalog size mismatch");
  const int M = pr.size();
  Eigen::ArrayXd prod = pr.probs() * pc.probs();
  if ((prod <= 0.0).any())
    throw DomainError("maxmin_weights: pr and pc entries must be positive");
  const double eta = prod.minCoeff();
  Eigen::ArrayXd rho(M);
  for (int i = 0; i < M; ++i) rho(i) = std::min(1.0, eta / prod(i));
  const double xi = (rho * pc.probs()).sum();
  return WeightVector{std::move(rho), xi};
}

WeightVector maxall_weights(const Pmf& pr, const Pmf& pc) {
  if (pr.size() != pc.size())
    throw DomainError("maxall_weights: catalog size mismatch");
  return WeightVector{Eigen::ArrayXd::Ones(pr.size()), 1.0};
}

WeightVector waterfill_weights(const Pmf& pr, const Pmf& pc,
                               double xi_budget) {
  if (pr.size() != pc.size())
    throw DomainError("waterfill_weights: catalog size mismatch");
  if (!(xi_budget > 0.0 && xi_budget <= 1.0))
    throw DomainError("waterfill_weights: budget must lie in (0,1]");
  const int M = pr.size();
  Eigen::ArrayXd rho = Eigen::ArrayXd::Zero(M);
  double remaining = xi_budget;
  double prev = 1.0;
  for (int i = 0; i < M; ++i) {
    const double r =
        pc(i) > 0.0 ? std::min(prev, remaining / pc(i)) : prev;
    rho(i) = std::max(0.0, r);
    remaining = std::max(0.0, remaining - rho(i) * pc(i));
    prev = rho(i);
  }
  const double xi = (rho * pc.probs()).sum();
  return WeightVector{std::move(rho), xi};
}

double dsr_popularity(const Pmf& pr, const Pmf& pc, int K,
                      const NetworkParams& params, const FadingModel& fading) {
  if (pr.size() != pc.size())
    throw DomainError("dsr_popularity: catalog size mismatch");
  params.validate();
  const PopularitySets sets = top_k_sets(pr, K);
  const double lambda_t = params.lambda * params.gamma1;

  if (K == 1) {
    // Single candidate file: the simultaneous coverage collapses to the
    // sequential one at transmitter density lambda_t pc(k).
    const int k = sets.K_set.front();
    if (pc(k) <= 0.0) return 0.0;
    const double cov = pcov(params.T, lambda_t * pc(k), params.alpha,
                            params.mu, params.sigma2, fading)
                           .p;
    return params.lambda * params.gamma2() * pr(k) * cov;
  }

  double p_l = 0.0;
  for (int i : sets.L_set) p_l += pc(i);
  if (p_l <= 0.0) return 0.0;
  const double cov =
      params.alpha == 4.0
          ? pcov_simultaneous_alpha4(params.T, lambda_t, p_l, params.sigma2).p
          : pcov_simultaneous(params.T, lambda_t * p_l, lambda_t, params.alpha,
                              params.sigma2)
                .p;
  double sum = 0.0;
  for (int k : sets.K_set) sum += pr(k);
  return params.lambda * params.gamma2() * sum * cov;
}

double dsr_global(const Pmf& pr, const Pmf& pc, const NetworkParams& params) {
  if (pr.size() != pc.size())
    throw DomainError("dsr_global: catalog size mismatch");
  params.validate();
  const double lambda_t = params.lambda * params.gamma1;
  double sum = 0.0;
  for (int i = 0; i < pr.size(); ++i) {
    if (pc(i) <= 0.0) continue;
    const double cov =
        params.alpha == 4.0
            ? pcov_simultaneous_alpha4(params.T, lambda_t, pc(i),
                                       params.sigma2)
                  .p
            : pcov_simultaneous(params.T, lambda_t * pc(i), lambda_t,
                                params.alpha, params.sigma2)
                  .p;
    sum += pr(i) * cov;
  }
  return params.lambda * params.gamma2() * sum;
}

double best_zipf_exponent(SweepObjective objective, const Pmf& pr,
                          const NetworkParams& params,
                          const FadingModel& fading,
                          const std::vector<double>& gamma_c_grid, int K) {
  if (gamma_c_grid.empty())
    throw DomainError("best_zipf_exponent: grid must be nonempty");
  double best_gc = gamma_c_grid.front();
  double best_val = -1.0;
  for (double gc : gamma_c_grid) {
    const Pmf pc = zipf(pr.size(), gc);
    double val = 0.0;
    switch (objective) {
      case SweepObjective::Sequential:
        val = dsrs(pr, pc, params, fading);
        break;
      case SweepObjective::Popularity:
        val = dsr_popularity(pr, pc, K, params, fading);
        break;
      case SweepObjective::Global:
        val = dsr_global(pr, pc, params);
        break;
    }
    if (val > best_val) {  // strict: ties keep the smaller exponent
      best_val = val;
      best_gc = gc;
    }
  }
  return best_gc;
}

}  // namespace dsrlab
