#pragma once

#include <string>
#include <vector>

namespace mslit {

/// Exit codes shared by all subcommands:
/// 0 success, 1 validation failure, 2 config error, 3 numerical failure.
int cmd_simulate(const std::string& config_path, const std::string& out_dir);
int cmd_eigenstate(const std::string& config_path, const std::string& out_dir);
int cmd_validate(unsigned seed, const std::string& out_dir);
int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::string& parameter,
              const std::vector<double>& values);

}  // namespace mslit
