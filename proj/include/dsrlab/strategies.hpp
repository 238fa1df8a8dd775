#pragma once

#include <vector>

#include "dsrlab/caching.hpp"

namespace dsrlab {

struct WeightVector {
  Eigen::ArrayXd rho;  // per-file weights in [0,1]
  double xi = 0.0;     // sum_i rho_i pc(i)
};

/// A receiver's state: the set of files it requests (0-based indices) and
/// the probability p_j that a transmitter holds at least one of them.
struct ReceiverState {
  int state_id = 0;
  std::vector<int> requested_files;
  double p_j = 0.0;
};

ReceiverState make_state(int state_id, std::vector<int> requested_files,
                         const Pmf& pc);

/// The K most popular files (receiver side) and the transmitter-side set,
/// which defaults to the same files.
struct PopularitySets {
  std::vector<int> K_set;
  std::vector<int> L_set;
};

PopularitySets top_k_sets(const Pmf& pr, int K);

/// Max-min weighting: equalizes the weighted products pr(i) rho_i pc(i) at
/// eta = min_i pr(i) pc(i), with rho_i = 1 wherever the raw product already
/// sits at or below eta. Ties in the products break toward the smaller index.
WeightVector maxmin_weights(const Pmf& pr, const Pmf& pc);

/// Max-total weighting: rho_i = 1 for every file (the unconstrained optimum).
WeightVector maxall_weights(const Pmf& pr, const Pmf& pc);

/// Constrained variant for a budget xi < 1: greedy water-filling in index
/// order under the monotonicity 1 >= rho_1 >= ... >= rho_M, consuming the
/// budget in units of pc so that sum rho_i pc(i) = xi_budget.
WeightVector waterfill_weights(const Pmf& pr, const Pmf& pc,
                               double xi_budget);

/// Simultaneous-model DSR restricted to the K most popular files:
///   lambda gamma2 sum_{k in K} pr(k) Pcov(T, xi_l, alpha),
/// xi_l = lambda gamma1 sum_{i in L} pc(i), L = K by default. K = 1 reduces
/// to the sequential coverage of the single most popular file.
double dsr_popularity(const Pmf& pr, const Pmf& pc, int K,
                      const NetworkParams& params, const FadingModel& fading);

/// Simultaneous-model DSR over the whole catalog with singleton states:
///   lambda gamma2 sum_i pr(i) Pcov(T, lambda gamma1 pc(i), alpha).
double dsr_global(const Pmf& pr, const Pmf& pc, const NetworkParams& params);

enum class SweepObjective { Sequential, Popularity, Global };

/// Argmax over the grid of the chosen objective with pc = zipf(M, gamma_c);
/// ties break toward the smaller exponent.
double best_zipf_exponent(SweepObjective objective, const Pmf& pr,
                          const NetworkParams& params,
                          const FadingModel& fading,
                          const std::vector<double>& gamma_c_grid, int K = 1);

}  // namespace dsrlab
