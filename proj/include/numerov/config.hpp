#pragma once

#include <string>

#include "numerov/scenarios.hpp"

namespace numerov {

/// Parse a config file; throws ConfigError with line/field diagnostics.
ScenarioConfig load_config(const std::string& path);

/// Parse config text; `origin` names the source in diagnostics.
ScenarioConfig config_from_json_text(const std::string& text, const std::string& origin);

/// Canonical JSON form (stable key order); load/save round-trips exactly.
std::string config_to_json_text(const ScenarioConfig& config);

void save_config(const ScenarioConfig& config, const std::string& path);

}
