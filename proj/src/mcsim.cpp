#include "dsrlab/mcsim.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

namespace dsrlab {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Tally {
  long succ = 0;
  long eff = 0;
  long degen = 0;
  long points = 0;
  long tx = 0;
};

struct ResolvedModel {
  int M = 1;
  Eigen::ArrayXd pr_cdf;
  Eigen::ArrayXd pc_cdf;
  std::vector<std::vector<char>> state_mask;  // per state: file membership
  Eigen::ArrayXd state_cdf;
  bool simultaneous = false;
};

// Draws from a cdf; consumes no randomness when the outcome is certain, so
// a degenerate pmf (all mass on file 1) replays the single-file stream.
int draw_cdf(const Eigen::ArrayXd& cdf, std::mt19937_64& rng) {
  if (cdf.size() == 1 || cdf(0) >= 1.0) return 0;
  const double u = canonical(rng);
  int i = 0;
  while (i + 1 < cdf.size() && u >= cdf(i)) ++i;
  return i;
}

Eigen::ArrayXd to_cdf(const Eigen::ArrayXd& p) {
  Eigen::ArrayXd c(p.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    acc += p(i);
    c(i) = acc;
  }
  return c;
}

ResolvedModel resolve_model(const SimConfig& cfg) {
  ResolvedModel m;
  m.simultaneous = cfg.model == SimModel::SimultaneousMultiFile;
  if (cfg.model == SimModel::SequentialSingleFile) {
    m.M = 1;
    m.pr_cdf = m.pc_cdf = Eigen::ArrayXd::Ones(1);
    m.state_mask = {{1}};
    m.state_cdf = Eigen::ArrayXd::Ones(1);
    return m;
  }
  if (!cfg.pr || !cfg.pc)
    throw DomainError("simulate: multi-file models require pr and pc");
  if (cfg.pr->size() != cfg.pc->size())
    throw DomainError("simulate: pr and pc catalog sizes differ");
  m.M = cfg.pr->size();
  m.pr_cdf = to_cdf(cfg.pr->probs());
  m.pc_cdf = to_cdf(cfg.pc->probs());
  if (!cfg.states.empty()) {
    if (cfg.state_probs.size() != static_cast<Eigen::Index>(cfg.states.size()))
      throw DomainError("simulate: state_probs must match states");
    for (const ReceiverState& s : cfg.states) {
      std::vector<char> mask(m.M, 0);
      for (int f : s.requested_files) {
        if (f < 0 || f >= m.M)
          throw DomainError("simulate: state file index out of range");
        mask[f] = 1;
      }
      m.state_mask.push_back(std::move(mask));
    }
    m.state_cdf = to_cdf(cfg.state_probs);
  } else {
    // Singleton states: the receiver requests one file drawn from pr.
    for (int i = 0; i < m.M; ++i) {
      std::vector<char> mask(m.M, 0);
      mask[i] = 1;
      m.state_mask.push_back(std::move(mask));
    }
    m.state_cdf = m.pr_cdf;
  }
  return m;
}

Tally run_range(const SimConfig& cfg, const ResolvedModel& m, double radius,
                long lo, long hi) {
  const NetworkParams& p = cfg.params;
  const double mean_n = p.lambda * M_PI * radius * radius;
  const double r2max = radius * radius;
  const double half_alpha = p.alpha / 2.0;
  Tally t;
  for (long trial = lo; trial < hi; ++trial) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(trial)));
    std::poisson_distribution<long> pois(mean_n);
    const long n = pois(rng);
    t.points += n;

    const int state = draw_cdf(m.state_cdf, rng);
    const std::vector<char>& wanted = m.state_mask[state];

    double interference = 0.0;
    double best_d2 = -1.0;
    double best_contrib = 0.0;
    for (long z = 0; z < n; ++z) {
      const double d2 = r2max * canonical(rng);
      if (canonical(rng) >= p.gamma1) continue;  // not a transmitter
      ++t.tx;
      const int file = m.M == 1 ? 0 : draw_cdf(m.pc_cdf, rng);
      const bool candidate = wanted[file] != 0;
      const bool active = m.simultaneous || candidate;
      if (!active) continue;
      const double g = sample_power(cfg.fading, rng);
      const double contrib = g * std::pow(d2, -half_alpha);
      interference += contrib;
      if (candidate && (best_d2 < 0.0 || d2 < best_d2)) {
        best_d2 = d2;
        best_contrib = contrib;
      }
    }
    if (best_d2 < 0.0) {
      ++t.degen;
      continue;
    }
    ++t.eff;
    const double sinr =
        best_contrib / (p.sigma2 + interference - best_contrib);
    if (sinr > p.T) ++t.succ;
  }
  return t;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DSRLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

SimOutcome simulate(const SimConfig& config) {
  config.params.validate();
  if (config.n_trials < 1)
    throw DomainError("simulate: n_trials must be >= 1");
  const ResolvedModel model = resolve_model(config);
  const double radius = config.window_radius > 0.0
                            ? config.window_radius
                            : truncation_check(config).required_radius;

  const int n_threads =
      std::min<long>(resolve_threads(config.n_threads), config.n_trials);
  std::vector<Tally> tallies(n_threads);
  std::vector<std::thread> workers;
  const long chunk = (config.n_trials + n_threads - 1) / n_threads;
  for (int w = 0; w < n_threads; ++w) {
    const long lo = w * chunk;
    const long hi = std::min<long>(lo + chunk, config.n_trials);
    workers.emplace_back([&, w, lo, hi] {
      tallies[w] = run_range(config, model, radius, lo, hi);
    });
  }
  for (std::thread& w : workers) w.join();

  Tally total;
  for (const Tally& t : tallies) {
    total.succ += t.succ;
    total.eff += t.eff;
    total.degen += t.degen;
    total.points += t.points;
    total.tx += t.tx;
  }

  SimOutcome out;
  out.n_effective = total.eff;
  out.n_degenerate = total.degen;
  out.n_points = total.points;
  out.n_transmitters = total.tx;
  if (total.eff > 0) {
    const double phat = static_cast<double>(total.succ) / total.eff;
    out.coverage_est = phat;
    out.dsr_est = config.params.lambda * config.params.gamma2() * phat;
    out.half_width_95 = 1.96 * std::sqrt(phat * (1.0 - phat) / total.eff);
  }
  return out;
}

TruncationResult truncation_check(const SimConfig& config, double target) {
  const NetworkParams& p = config.params;
  p.validate();
  const double lambda_t = p.lambda * p.gamma1;

  // Weakest per-request holder density: the slowest-decaying serving-link law
  // gives the most conservative tail bound and association radius.
  double pc_min = 1.0;
  if (config.pc) {
    pc_min = 2.0;
    for (int i = 0; i < config.pc->size(); ++i) {
      const double v = (*config.pc)(i);
      if (v > 0.0) pc_min = std::min(pc_min, v);
    }
    if (pc_min > 1.0)
      throw DomainError("truncation_check: pc has no positive entry");
  }
  const double lambda_s = lambda_t * pc_min;

  // Radius making the no-holder probability exp(-lambda_s pi R^2) < 1e-4.
  const double r_assoc = std::sqrt(std::log(1e4) / (M_PI * lambda_s));

  // First-order coverage perturbation from dropping interferers beyond R:
  //   d(R) = pi lambda_s Int exp(-pi lambda_s beta v - noise v^{a/2})
  //            * 2 pi lambda_int T v^{a/2} R^{2-a} / (a-2) dv,
  // with lambda_int = lambda gamma1 (every transmitter interferes in the
  // worst case). d scales as R^{2-a}, so one evaluation at R = 1 suffices.
  const double b = beta(p.T, p.alpha, config.fading).value;
  const double rate = M_PI * lambda_s * b;
  const double noise = p.mu * p.T * p.sigma2;
  const double k = noise * std::pow(rate, -p.alpha / 2.0);
  const double moment =
      integrate_exp_kernel([&](double u) { return std::pow(u, p.alpha / 2.0); },
                           k, p.alpha / 2.0)
          .value *
      std::pow(rate, -p.alpha / 2.0);
  const double mean_g = p.mu * config.fading.mean_power();
  const double delta_at_1 = 2.0 * M_PI * lambda_t * p.T * mean_g /
                            ((p.alpha - 2.0) * b) * moment;

  const double r_tail =
      delta_at_1 > target
          ? std::pow(delta_at_1 / target, 1.0 / (p.alpha - 2.0))
          : 1.0;

  TruncationResult r;
  r.required_radius = std::max(r_assoc, r_tail);
  r.residual = delta_at_1 * std::pow(r.required_radius, 2.0 - p.alpha);
  return r;
}

}  // namespace dsrlab
