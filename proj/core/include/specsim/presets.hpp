#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specsim/engine.hpp"
#include "specsim/metrics.hpp"

namespace specsim {

/// A canned sweep: base scenario, axis, axis values, the policies to run,
/// how to group the summary, and which entities the chart shows.
struct Preset {
  std::string name;
  ScenarioConfig base;
  SweepAxis axis = SweepAxis::mno_user_count;
  std::vector<double> values;
  std::vector<PolicyMode> policies;
  EntityGrouping grouping = EntityGrouping::per_entity;
  std::vector<std::string> chart_entities;
};

const std::vector<std::string>& preset_names();

/// Builds one of the named presets. With `strict_rates` the scenario uses
/// the unscaled reference rate table instead of the desk-scale profile.
Preset make_preset(const std::string& name, bool strict_rates = false);

/// Runs every (policy, axis value) block of the preset and returns the
/// tabulated rows. Each block runs with the same seed, so demand columns
/// are identical across policies.
std::vector<RecordRow> run_preset(
    const Preset& preset, std::optional<int> windows_override = {},
    std::optional<std::uint64_t> seed_override = {});

}  // namespace specsim
