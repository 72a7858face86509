#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "specsim/engine.hpp"

namespace specsim {

/// Parses a sectioned key=value scenario file into a validated config.
/// Unknown sections or keys are rejected; missing optional keys take the
/// documented defaults. See the README for the full key reference.
ScenarioConfig parse_config(const std::filesystem::path& path);

/// Same parser over in-memory text; `origin` names the source in errors.
ScenarioConfig parse_config_text(std::string_view text,
                                 const std::string& origin = "<config>");

/// Replaces the service classes and traffic shape with the unscaled
/// reference rate table (all users active, uniform pattern, unit weights).
/// Demand then exceeds a venue-sized pool by orders of magnitude.
void apply_strict_rates(ScenarioConfig& config);

}  // namespace specsim
