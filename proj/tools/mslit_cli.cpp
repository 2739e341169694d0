#include <CLI11.hpp>

#include "mslit/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"multi-slit interferometer simulation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string parameter;
  std::vector<double> values;
  unsigned seed = 1;

  CLI::App* simulate =
      app.add_subcommand("simulate", "run the full aperture/grating pipeline");
  simulate->add_option("--config", config_path, "config file (JSON)")
      ->required();
  simulate->add_option("--out", out_dir, "output directory");

  CLI::App* eigenstate =
      app.add_subcommand("eigenstate", "construct a joint eigenstate");
  eigenstate->add_option("--config", config_path, "config file (JSON)")
      ->required();
  eigenstate->add_option("--out", out_dir, "output directory");

  CLI::App* validate =
      app.add_subcommand("validate", "run the cross-module invariant suite");
  validate->add_option("--seed", seed, "seed for randomized checks");
  validate->add_option("--out", out_dir, "optional directory for checks.csv");

  CLI::App* sweep = app.add_subcommand("sweep", "rerun over a parameter range");
  sweep->add_option("--config", config_path, "config file (JSON)")->required();
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--param", parameter, "parameter name")->required();
  sweep->add_option("--values", values, "parameter values")
      ->required()
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) return mslit::cmd_simulate(config_path, out_dir);
  if (eigenstate->parsed()) return mslit::cmd_eigenstate(config_path, out_dir);
  if (validate->parsed()) return mslit::cmd_validate(seed, out_dir);
  return mslit::cmd_sweep(config_path, out_dir, parameter, values);
}
