#include "dsrlab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dsrlab/singlefile.hpp"
#include "dsrlab/svgplot.hpp"

namespace dsrlab {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "dsrlab-0.1.0";

const std::vector<std::string> kNames = {
    "fig3_sweep",      "fig4_separability", "fig5to8_bounds",
    "fig9to12_sweeps", "fig13_benford",     "custom",
};

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[v & 0xf];
    v >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

void require_keys(const json& obj, const std::string& scope,
                  const std::vector<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError("unknown key \"" + scope + it.key() + "\"");
  }
}

double get_number(const json& obj, const std::string& scope,
                  const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    throw ConfigError("key \"" + scope + key + "\" must be a number");
  return obj[key].get<double>();
}

// One CSV per curve family: header row first, shortest round-trip decimals.
class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::vector<std::string>& header)
      : path_(path.string()) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) body_ += ',';
      body_ += header[i];
    }
    body_ += '\n';
  }

  void row(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) body_ += ',';
      if (!std::isfinite(values[i]))
        throw IoError("CSV cell is not finite in " + path_);
      body_ += format_double(values[i]);
    }
    body_ += '\n';
  }

  ManifestEntry commit() {
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw IoError("cannot open " + path_);
    out << body_;
    if (!out) throw IoError("write failed for " + path_);
    return ManifestEntry{path_, hex64(fnv1a64(body_))};
  }

 private:
  std::string path_;
  std::string body_;
};

ManifestEntry checksum_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ManifestEntry{path, hex64(fnv1a64(ss.str()))};
}

std::vector<double> default_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

SimOutcome run_mc(const ExperimentConfig& cfg, const NetworkParams& p,
                  uint64_t point_index) {
  SimConfig sc;
  sc.params = p;
  sc.fading = FadingModel::rayleigh(p.mu);
  sc.n_trials = cfg.n_trials;
  sc.seed = cfg.seed + 1315423911ULL * point_index;
  sc.window_radius = truncation_check(sc, 1e-4).required_radius;
  return simulate(sc);
}

struct Outputs {
  std::vector<ManifestEntry> files;
};

void emit_plot(const ExperimentConfig& cfg, Outputs& out,
               const std::string& name, const std::vector<Curve>& curves,
               PlotOptions opt) {
  if (!cfg.emit_svg) return;
  const std::string path = (fs::path(cfg.output_dir) / name).string();
  write_svg(path, curves, opt);
  out.files.push_back(checksum_file(path));
}

Outputs run_fig3(const ExperimentConfig& cfg) {
  const std::vector<double> grid =
      cfg.sweep.grid.empty() ? default_grid(0.1, 0.9, 9) : cfg.sweep.grid;
  std::vector<std::string> header = {"snr", "gamma1", "dsr_analytic"};
  if (cfg.mc_validate) {
    header.push_back("dsr_mc");
    header.push_back("mc_halfwidth");
  }
  CsvWriter csv(fs::path(cfg.output_dir) / "fig3_dsr_sweep.csv", header);
  const FadingModel fading = FadingModel::rayleigh(cfg.params.mu);
  std::vector<Curve> curves;
  uint64_t point = 0;
  for (double snr : cfg.snr_list) {
    NetworkParams p = cfg.params;
    p.sigma2 = 1.0 / (p.mu * snr);
    p.T = snr / 2.0;
    Curve ana{"SNR=" + format_double(snr), {}, {}};
    Curve mc{"SNR=" + format_double(snr) + " MC", {}, {}};
    for (double g1 : grid) {
      p.gamma1 = g1;
      const double d = dsr_single(p, fading).dsr;
      std::vector<double> row = {snr, g1, d};
      if (cfg.mc_validate) {
        const SimOutcome o = run_mc(cfg, p, point);
        row.push_back(o.dsr_est);
        row.push_back(p.lambda * p.gamma2() * o.half_width_95);
        mc.x.push_back(g1);
        mc.y.push_back(o.dsr_est);
      }
      csv.row(row);
      ana.x.push_back(g1);
      ana.y.push_back(d);
      ++point;
    }
    curves.push_back(std::move(ana));
    if (cfg.mc_validate) curves.push_back(std::move(mc));
  }
  Outputs out;
  out.files.push_back(csv.commit());
  emit_plot(cfg, out, "fig3_dsr_sweep.svg", curves,
            PlotOptions{"Single-file DSR vs transmitter fraction", "gamma1",
                        "DSR"});
  return out;
}

Outputs run_fig4(const ExperimentConfig& cfg) {
  const std::vector<double> grid =
      cfg.sweep.grid.empty() ? default_grid(0.5, 10.0, 20) : cfg.sweep.grid;
  const FadingModel fading = FadingModel::rayleigh(cfg.params.mu);
  Eigen::ArrayXd tg(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) tg(i) = grid[i];
  const SeparabilityFit fit =
      separability_fit(fading, cfg.params.alpha, tg);
  CsvWriter csv(fs::path(cfg.output_dir) / "fig4_separability.csv",
                {"T", "beta", "beta_pow", "fit_value"});
  Curve data{"beta^(alpha/2)", {}, {}};
  Curve line{"linear fit", {}, {}};
  for (double T : grid) {
    const double b = beta(T, cfg.params.alpha, fading).value;
    const double bp = std::pow(b, cfg.params.alpha / 2.0);
    const double fv = fit.intercept + fit.slope * T;
    csv.row({T, b, bp, fv});
    data.x.push_back(T);
    data.y.push_back(bp);
    line.x.push_back(T);
    line.y.push_back(fv);
  }
  Outputs out;
  out.files.push_back(csv.commit());
  emit_plot(cfg, out, "fig4_separability.svg", {data, line},
            PlotOptions{"Separability of the coverage exponent", "T",
                        "beta^(alpha/2)"});
  return out;
}

Outputs run_fig5to8(const ExperimentConfig& cfg) {
  const std::vector<double> grid =
      cfg.sweep.grid.empty() ? default_grid(0.4, 4.0, 10) : cfg.sweep.grid;
  const FadingModel fading = FadingModel::rayleigh(cfg.params.mu);
  const Pmf pr = zipf(cfg.catalog_size, cfg.gamma_r);
  const Pmf pc_flat = optimal_caching_general(pr, cfg.params.alpha);
  const Pmf pc_unif(
      Eigen::ArrayXd::Constant(cfg.catalog_size, 1.0 / cfg.catalog_size));
  CsvWriter csv(fs::path(cfg.output_dir) / "fig5to8_bounds.csv",
                {"snr", "T", "lb", "dsr_uniform", "dsr_flattened", "ub"});
  std::vector<Curve> curves;
  for (double snr : cfg.snr_list) {
    NetworkParams p = cfg.params;
    p.sigma2 = 1.0 / (p.mu * snr);
    Curve c{"SNR=" + format_double(snr) + " opt", {}, {}};
    for (double T : grid) {
      p.T = T;
      const DsrsBounds b = dsrs_bounds(pr, p, fading);
      const double du = dsrs(pr, pc_unif, p, fading);
      const double df = dsrs(pr, pc_flat, p, fading);
      csv.row({snr, T, b.lb, du, df, b.ub});
      c.x.push_back(T);
      c.y.push_back(df);
    }
    curves.push_back(std::move(c));
  }
  Outputs out;
  out.files.push_back(csv.commit());
  emit_plot(cfg, out, "fig5to8_bounds.svg", curves,
            PlotOptions{"Multi-file DSR vs threshold", "T", "DSR"});
  return out;
}

Outputs run_fig9to12(const ExperimentConfig& cfg) {
  const std::vector<double> grid =
      cfg.sweep.grid.empty() ? default_grid(0.0, 1.5, 16) : cfg.sweep.grid;
  const FadingModel fading = FadingModel::rayleigh(cfg.params.mu);
  const Pmf pr = zipf(cfg.catalog_size, cfg.gamma_r);
  CsvWriter csv(
      fs::path(cfg.output_dir) / "fig9to12_exponent_sweep.csv",
      {"gamma_c", "dsr_sequential", "dsr_popularity", "dsr_global"});
  Curve cs{"sequential", {}, {}}, cp{"popularity", {}, {}},
      cg{"global", {}, {}};
  for (double gc : grid) {
    const Pmf pc = zipf(cfg.catalog_size, gc);
    const double ds = dsrs(pr, pc, cfg.params, fading);
    const double dp =
        dsr_popularity(pr, pc, cfg.k_popular, cfg.params, fading);
    const double dg = dsr_global(pr, pc, cfg.params);
    csv.row({gc, ds, dp, dg});
    cs.x.push_back(gc);
    cs.y.push_back(ds);
    cp.x.push_back(gc);
    cp.y.push_back(dp);
    cg.x.push_back(gc);
    cg.y.push_back(dg);
  }
  Outputs out;
  out.files.push_back(csv.commit());
  emit_plot(cfg, out, "fig9to12_exponent_sweep.svg", {cs, cp, cg},
            PlotOptions{"DSR vs Zipf caching exponent", "gamma_c", "DSR"});
  return out;
}

Outputs run_fig13(const ExperimentConfig& cfg) {
  const FadingModel fading = FadingModel::rayleigh(cfg.params.mu);
  CsvWriter csv(fs::path(cfg.output_dir) / "fig13_benford.csv",
                {"M", "file_index", "benford", "zipf", "gap", "max_gap"});
  std::vector<Curve> curves;
  const double gc = optimal_caching_zipf(cfg.gamma_r, cfg.params.alpha);
  for (int M : cfg.m_list) {
    BenfordPmf bf;
    try {
      bf = benford_caching(M, cfg.gamma_r, cfg.params, fading);
    } catch (const ValidityViolation& e) {
      throw ConfigError(std::string("fig13_benford: ") + e.what());
    }
    const Pmf z = zipf(M, gc);
    double max_gap = 0.0;
    for (int i = 0; i < M; ++i)
      max_gap = std::max(max_gap, std::abs(bf.probs(i) - z(i)));
    Curve cb{"Benford M=" + std::to_string(M), {}, {}};
    Curve cz{"Zipf M=" + std::to_string(M), {}, {}};
    for (int i = 0; i < M; ++i) {
      csv.row({static_cast<double>(M), static_cast<double>(i + 1),
               bf.probs(i), z(i), std::abs(bf.probs(i) - z(i)), max_gap});
      cb.x.push_back(i + 1);
      cb.y.push_back(bf.probs(i));
      cz.x.push_back(i + 1);
      cz.y.push_back(z(i));
    }
    curves.push_back(std::move(cb));
    curves.push_back(std::move(cz));
  }
  Outputs out;
  out.files.push_back(csv.commit());
  emit_plot(cfg, out, "fig13_benford.svg", curves,
            PlotOptions{"Benford vs Zipf caching pmf", "file index",
                        "probability"});
  return out;
}

Outputs run_custom(const ExperimentConfig& cfg) {
  if (cfg.sweep.grid.empty())
    throw ConfigError("custom experiment requires a nonempty sweep.grid");
  const FadingModel fading = FadingModel::rayleigh(cfg.params.mu);
  std::vector<std::string> header = {cfg.sweep.variable, "dsr_analytic"};
  if (cfg.mc_validate) {
    header.push_back("dsr_mc");
    header.push_back("mc_halfwidth");
  }
  CsvWriter csv(fs::path(cfg.output_dir) / "custom_sweep.csv", header);
  Curve ana{"analytic", {}, {}};
  Curve mc{"MC", {}, {}};
  uint64_t point = 0;
  for (double v : cfg.sweep.grid) {
    NetworkParams p = cfg.params;
    if (cfg.sweep.variable == "gamma1")
      p.gamma1 = v;
    else if (cfg.sweep.variable == "T")
      p.T = v;
    else if (cfg.sweep.variable == "lambda")
      p.lambda = v;
    else if (cfg.sweep.variable == "sigma2")
      p.sigma2 = v;
    else
      throw ConfigError("unknown sweep variable \"" + cfg.sweep.variable +
                        "\"");
    const double d = dsr_single(p, fading).dsr;
    std::vector<double> row = {v, d};
    if (cfg.mc_validate) {
      const SimOutcome o = run_mc(cfg, p, point);
      row.push_back(o.dsr_est);
      row.push_back(p.lambda * p.gamma2() * o.half_width_95);
      mc.x.push_back(v);
      mc.y.push_back(o.dsr_est);
    }
    csv.row(row);
    ana.x.push_back(v);
    ana.y.push_back(d);
    ++point;
  }
  Outputs out;
  out.files.push_back(csv.commit());
  std::vector<Curve> curves = {ana};
  if (cfg.mc_validate) curves.push_back(mc);
  emit_plot(cfg, out, "custom_sweep.svg", curves,
            PlotOptions{"Single-file DSR sweep", cfg.sweep.variable, "DSR"});
  return out;
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = kNames[static_cast<int>(c.experiment)];
  j["params"] = {{"lambda", c.params.lambda}, {"T", c.params.T},
                 {"alpha", c.params.alpha},   {"mu", c.params.mu},
                 {"sigma2", c.params.sigma2}, {"a", c.params.a},
                 {"gamma1", c.params.gamma1}};
  j["sweep"] = {{"variable", c.sweep.variable}, {"grid", c.sweep.grid}};
  j["output_dir"] = c.output_dir;
  j["emit_svg"] = c.emit_svg;
  j["mc_validate"] = c.mc_validate;
  j["seed"] = c.seed;
  j["n_trials"] = c.n_trials;
  j["snr_list"] = c.snr_list;
  j["catalog_size"] = c.catalog_size;
  j["gamma_r"] = c.gamma_r;
  j["k_popular"] = c.k_popular;
  j["m_list"] = c.m_list;
  return j;
}

}  // namespace

const std::vector<std::string>& experiment_names() { return kNames; }

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  require_keys(doc, "",
               {"experiment", "params", "sweep", "output_dir", "emit_svg",
                "mc_validate", "seed", "n_trials", "snr_list", "catalog_size",
                "gamma_r", "k_popular", "m_list"});
  if (!doc.contains("experiment"))
    throw ConfigError("missing required key \"experiment\"");
  if (!doc["experiment"].is_string())
    throw ConfigError("key \"experiment\" must be a string");

  ExperimentConfig cfg;
  const std::string name = doc["experiment"].get<std::string>();
  const auto it = std::find(kNames.begin(), kNames.end(), name);
  if (it == kNames.end())
    throw ConfigError("unknown experiment \"" + name + "\"");
  cfg.experiment = static_cast<Experiment>(it - kNames.begin());

  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_object()) throw ConfigError("key \"params\" must be an object");
    require_keys(p, "params.",
                 {"lambda", "T", "alpha", "mu", "sigma2", "a", "gamma1"});
    cfg.params.lambda = get_number(p, "params.", "lambda", cfg.params.lambda);
    cfg.params.T = get_number(p, "params.", "T", cfg.params.T);
    cfg.params.alpha = get_number(p, "params.", "alpha", cfg.params.alpha);
    cfg.params.mu = get_number(p, "params.", "mu", cfg.params.mu);
    cfg.params.sigma2 = get_number(p, "params.", "sigma2", cfg.params.sigma2);
    cfg.params.a = get_number(p, "params.", "a", cfg.params.a);
    cfg.params.gamma1 = get_number(p, "params.", "gamma1", cfg.params.gamma1);
  }
  if (!(cfg.params.lambda > 0.0))
    throw ConfigError("params.lambda must be positive");
  if (!(cfg.params.T > 0.0)) throw ConfigError("params.T must be positive");
  if (!(cfg.params.alpha > 2.0))
    throw ConfigError("params.alpha must exceed 2");
  if (!(cfg.params.mu > 0.0)) throw ConfigError("params.mu must be positive");
  if (!(cfg.params.sigma2 >= 0.0))
    throw ConfigError("params.sigma2 must be nonnegative");
  if (!(cfg.params.a > 0.0 && cfg.params.a <= 1.0))
    throw ConfigError("params.a must lie in (0,1]");
  if (!(cfg.params.gamma1 > 0.0 && cfg.params.gamma1 < cfg.params.a))
    throw ConfigError("params.gamma1 must lie in (0, a)");

  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    if (!s.is_object()) throw ConfigError("key \"sweep\" must be an object");
    require_keys(s, "sweep.", {"variable", "grid"});
    if (s.contains("variable")) {
      if (!s["variable"].is_string())
        throw ConfigError("key \"sweep.variable\" must be a string");
      cfg.sweep.variable = s["variable"].get<std::string>();
    }
    if (s.contains("grid")) {
      if (!s["grid"].is_array())
        throw ConfigError("key \"sweep.grid\" must be an array");
      for (const json& v : s["grid"]) {
        if (!v.is_number())
          throw ConfigError("sweep.grid entries must be numbers");
        cfg.sweep.grid.push_back(v.get<double>());
      }
      if (cfg.sweep.grid.empty())
        throw ConfigError("sweep.grid must be nonempty");
    }
  }

  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string())
      throw ConfigError("key \"output_dir\" must be a string");
    cfg.output_dir = doc["output_dir"].get<std::string>();
  }
  if (doc.contains("emit_svg")) {
    if (!doc["emit_svg"].is_boolean())
      throw ConfigError("key \"emit_svg\" must be a boolean");
    cfg.emit_svg = doc["emit_svg"].get<bool>();
  }
  if (doc.contains("mc_validate")) {
    if (!doc["mc_validate"].is_boolean())
      throw ConfigError("key \"mc_validate\" must be a boolean");
    cfg.mc_validate = doc["mc_validate"].get<bool>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      throw ConfigError("key \"seed\" must be an integer");
    cfg.seed = doc["seed"].get<uint64_t>();
  }
  if (doc.contains("n_trials")) {
    if (!doc["n_trials"].is_number_integer())
      throw ConfigError("key \"n_trials\" must be an integer");
    cfg.n_trials = doc["n_trials"].get<long>();
    if (cfg.n_trials < 1) throw ConfigError("n_trials must be >= 1");
  }
  if (doc.contains("snr_list")) {
    if (!doc["snr_list"].is_array())
      throw ConfigError("key \"snr_list\" must be an array");
    cfg.snr_list.clear();
    for (const json& v : doc["snr_list"]) {
      if (!v.is_number() || v.get<double>() <= 0.0)
        throw ConfigError("snr_list entries must be positive numbers");
      cfg.snr_list.push_back(v.get<double>());
    }
    if (cfg.snr_list.empty()) throw ConfigError("snr_list must be nonempty");
  }
  if (doc.contains("catalog_size")) {
    if (!doc["catalog_size"].is_number_integer())
      throw ConfigError("key \"catalog_size\" must be an integer");
    cfg.catalog_size = doc["catalog_size"].get<int>();
    if (cfg.catalog_size < 1) throw ConfigError("catalog_size must be >= 1");
  }
  cfg.gamma_r = get_number(doc, "", "gamma_r", cfg.gamma_r);
  if (cfg.gamma_r < 0.0) throw ConfigError("gamma_r must be nonnegative");
  if (doc.contains("k_popular")) {
    if (!doc["k_popular"].is_number_integer())
      throw ConfigError("key \"k_popular\" must be an integer");
    cfg.k_popular = doc["k_popular"].get<int>();
    if (cfg.k_popular < 1) throw ConfigError("k_popular must be >= 1");
  }
  if (doc.contains("m_list")) {
    if (!doc["m_list"].is_array())
      throw ConfigError("key \"m_list\" must be an array");
    cfg.m_list.clear();
    for (const json& v : doc["m_list"]) {
      if (!v.is_number_integer() || v.get<int>() < 1)
        throw ConfigError("m_list entries must be positive integers");
      cfg.m_list.push_back(v.get<int>());
    }
    if (cfg.m_list.empty()) throw ConfigError("m_list must be nonempty");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

RunManifest run_experiment(const ExperimentConfig& config) {
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec)
    throw IoError("cannot create output directory " + config.output_dir);

  Outputs out;
  switch (config.experiment) {
    case Experiment::Fig3Sweep:
      out = run_fig3(config);
      break;
    case Experiment::Fig4Separability:
      out = run_fig4(config);
      break;
    case Experiment::Fig5to8Bounds:
      out = run_fig5to8(config);
      break;
    case Experiment::Fig9to12Sweeps:
      out = run_fig9to12(config);
      break;
    case Experiment::Fig13Benford:
      out = run_fig13(config);
      break;
    case Experiment::Custom:
      out = run_custom(config);
      break;
  }

  json manifest;
  manifest["version"] = kVersion;
  manifest["config"] = config_to_json(config);
  manifest["files"] = json::array();
  for (const ManifestEntry& e : out.files)
    manifest["files"].push_back({{"file", e.file}, {"checksum", e.checksum}});

  RunManifest rm;
  rm.files = out.files;
  rm.manifest_path =
      (fs::path(config.output_dir) / "run_manifest.json").string();
  std::ofstream mf(rm.manifest_path, std::ios::binary);
  if (!mf) throw IoError("cannot write " + rm.manifest_path);
  mf << manifest.dump(2) << "\n";
  return rm;
}

}  // namespace dsrlab
