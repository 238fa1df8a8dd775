#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "dsrlab/experiments.hpp"

namespace {

int run(const std::string& config_path) {
  const dsrlab::ExperimentConfig cfg = dsrlab::load_config(config_path);
  const dsrlab::RunManifest manifest = dsrlab::run_experiment(cfg);
  for (const dsrlab::ManifestEntry& e : manifest.files)
    std::printf("%s  %s\n", e.checksum.c_str(), e.file.c_str());
  std::printf("manifest: %s\n", manifest.manifest_path.c_str());
  return 0;
}

int validate(const std::string& config_path) {
  dsrlab::load_config(config_path);
  std::printf("ok: %s\n", config_path.c_str());
  return 0;
}

int list_experiments() {
  for (const std::string& name : dsrlab::experiment_names())
    std::printf("%s\n", name.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cache-enabled D2D network simulator and optimizer"};
  app.require_subcommand(1);

  std::string run_config;
  std::string validate_config;
  CLI::App* cmd_run = app.add_subcommand("run", "Run an experiment config");
  cmd_run->add_option("config", run_config, "Path to a JSON config")
      ->required();
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Parse and validate a config");
  cmd_validate->add_option("config", validate_config, "Path to a JSON config")
      ->required();
  CLI::App* cmd_list =
      app.add_subcommand("list-experiments", "List experiment names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) return run(run_config);
    if (cmd_validate->parsed()) return validate(validate_config);
    if (cmd_list->parsed()) return list_experiments();
  } catch (const dsrlab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const dsrlab::NonConvergence& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
