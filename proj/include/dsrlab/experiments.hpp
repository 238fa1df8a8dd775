#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsrlab/mcsim.hpp"

namespace dsrlab {

enum class Experiment {
  Fig3Sweep,       // single-file DSR vs gamma1, one curve per SNR, MC overlay
  Fig4Separability,  // beta(T,alpha)^{alpha/2} vs T with a least-squares line
  Fig5to8Bounds,   // multi-file DSR bounds and caching rules vs T
  Fig9to12Sweeps,  // sequential/popularity/global DSR vs Zipf caching exponent
  Fig13Benford,    // Benford vs Zipf caching pmfs per catalog size
  Custom,          // single-file DSR along a user-chosen parameter sweep
};

struct SweepSpec {
  std::string variable = "gamma1";  // gamma1 | T | lambda | sigma2
  std::vector<double> grid;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::Custom;
  NetworkParams params;
  SweepSpec sweep;
  std::string output_dir = "out";
  bool emit_svg = true;
  bool mc_validate = false;
  uint64_t seed = 1;
  long n_trials = 100000;
  std::vector<double> snr_list = {1.0, 10.0, 100.0};
  int catalog_size = 10;
  double gamma_r = 0.5;
  int k_popular = 1;
  std::vector<int> m_list = {5, 10, 20};
};

/// Names accepted in the "experiment" field, in declaration order.
const std::vector<std::string>& experiment_names();

/// Strict parse: every unknown key is an error, all fields type-checked,
/// parameter ranges validated. Throws ConfigError with the offending key.
ExperimentConfig parse_config(const std::string& json_text);

/// Reads the file and delegates to parse_config. Throws IoError/ConfigError.
ExperimentConfig load_config(const std::string& path);

struct ManifestEntry {
  std::string file;
  std::string checksum;  // fnv1a-64 of the file bytes, hex
};

struct RunManifest {
  std::vector<ManifestEntry> files;
  std::string manifest_path;
};

/// Executes the experiment: CSV tables (header row first), optional SVG
/// plots, and a run manifest holding the resolved config, a version string,
/// and a checksum per produced file. The manifest is written last.
RunManifest run_experiment(const ExperimentConfig& config);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace dsrlab
