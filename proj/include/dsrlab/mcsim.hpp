#pragma once

#include <cstdint>
#include <optional>

#include "dsrlab/strategies.hpp"

namespace dsrlab {

enum class SimModel {
  SequentialSingleFile,
  SequentialMultiFile,
  SimultaneousMultiFile,
};

struct SimConfig {
  NetworkParams params;
  FadingModel fading = FadingModel::rayleigh(1.0);
  double window_radius = 0.0;  // <= 0: chosen by truncation_check
  long n_trials = 100000;
  uint64_t seed = 1;
  SimModel model = SimModel::SequentialSingleFile;
  std::optional<Pmf> pr;  // required for the multi-file models
  std::optional<Pmf> pc;
  // Receiver states for the simultaneous model; empty means singleton
  // per-file states drawn from pr.
  std::vector<ReceiverState> states;
  Eigen::ArrayXd state_probs;
  int n_threads = 0;  // 0: DSRLAB_THREADS env var, else hardware concurrency
};

struct SimOutcome {
  double coverage_est = 0.0;
  double dsr_est = 0.0;
  double half_width_95 = 0.0;
  long n_effective = 0;   // trials with an in-window serving transmitter
  long n_degenerate = 0;  // trials with no in-window holder of the request
  long n_points = 0;      // total PPP points drawn across trials
  long n_transmitters = 0;
};

struct TruncationResult {
  double required_radius = 0.0;
  double residual = 0.0;  // coverage perturbation bound at that radius
};

/// Estimates the coverage probability and DSR by direct simulation of the
/// disk-truncated point process: Poisson point count, uniform placement,
/// independent transmitter marks, cached files drawn from pc, the typical
/// receiver at the origin requesting from pr, nearest-holder association,
/// and per-link i.i.d. fading. Trials are split across workers on
/// index-derived RNG substreams, so the result is identical for any worker
/// count and is bit-reproducible given the seed.
SimOutcome simulate(const SimConfig& config);

/// Radius at which ignoring interferers outside the window perturbs the
/// analytic coverage by less than `target` (first-order Laplace-transform
/// tail), combined with a radius making the no-holder probability negligible.
TruncationResult truncation_check(const SimConfig& config,
                                  double target = 1e-3);

}  // namespace dsrlab
