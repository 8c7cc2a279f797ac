#pragma once

#include <string>

namespace numerov {

// Exit codes shared by every subcommand:
//   0 success, 1 validation failure, 2 usage/config error, 3 numerical failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation_failed = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_numerical_error = 3;

struct CliOptions {
    std::string config_path;      // --config
    std::string preset_name;      // --preset
    std::string out;              // --out (directory; file for dump-preset)
    int modes_override = 0;       // --modes
    int grid_points_override = 0; // --grid-points
};

int cmd_solve(const CliOptions& options);
int cmd_validate(const CliOptions& options);
int cmd_sweep(const CliOptions& options);
int cmd_plot(const CliOptions& options, const std::string& result_dir);
int cmd_dump_preset(const CliOptions& options);
int cmd_list_presets();

}
