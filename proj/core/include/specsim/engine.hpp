#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specsim/demand.hpp"
#include "specsim/model.hpp"
#include "specsim/policies.hpp"

namespace specsim {

/// Policy selection for the inter-slice stage. fr_psi is the normalized
/// static split, used only in FR mode.
struct PolicySetup {
  PolicyMode mode = PolicyMode::pr;
  ShareProfile profile = ShareProfile::equal(2);
  std::vector<double> fr_psi = {0.5, 0.5};
};

/// Policy selection for the intra-slice stage, plus the slice-local reserve
/// and optional per-operator grant caps.
struct IntraPolicySetup {
  PolicyMode mode = PolicyMode::pr;
  ShareProfile profile = ShareProfile::equal(1);
  std::vector<double> fr_psi = {1.0};
  double reserved_mhz = 0.0;
  std::vector<double> caps_mhz;
};

struct ScenarioConfig {
  SpectrumPool pool{30.0, 0.0};
  Si1TrafficModel si1;
  SpectralEfficiency si1_eta{1.0};
  SpectralEfficiency si2_eta{1.0};
  std::vector<MnoProfile> mnos;
  std::vector<ServiceClass> classes;
  PolicySetup inter;
  IntraPolicySetup intra;
  int windows = 1000;
  std::uint64_t seed = 1;
  bool stochastic_mno_load = true;
  std::string run_id = "run";
};

void validate_config(const ScenarioConfig& config);

/// Switches the inter-slice policy, rebuilding the FR split from the
/// profile's shares when needed.
void set_inter_mode(ScenarioConfig& config, PolicyMode mode);

enum class Level { inter, intra };

std::string to_string(Level level);
Level level_from_string(const std::string& text);

/// One entity's outcome in one window; the row unit of all output.
struct WindowRecord {
  int window_index = 0;
  Level level = Level::inter;
  std::string entity_id;
  double demand_mhz = 0.0;
  double grant_mhz = 0.0;
  double deviation_mhz = 0.0;
  CaseLabel case_label = CaseLabel::c1;
};

/// Runs one coordination window: sample loads, map to demands, allocate
/// across slices, then divide slice II's grant across its operators.
/// Emits one inter-level record per slice and one intra-level record per
/// operator. Randomness is derived from (seed, window, entity lane), so
/// windows can be evaluated in any order.
std::vector<WindowRecord> run_window(const ScenarioConfig& config,
                                     int window_index);

std::vector<WindowRecord> run_experiment(const ScenarioConfig& config);

enum class SweepAxis {
  mno_user_count,
  si1_uniform_low,
  si1_principal_share,
  policy_kind,
  theta,
  n_mno,
};

std::string to_string(SweepAxis axis);
SweepAxis axis_from_string(const std::string& text);

/// Returns a copy of the config with the axis value substituted. Sweeping
/// the slice-I principal share sets slice II's share to its complement.
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis,
                          double value);

struct SweepBlock {
  double axis_value = 0.0;
  ScenarioConfig config;
  std::vector<WindowRecord> records;
};

std::vector<SweepBlock> run_sweep(const ScenarioConfig& base, SweepAxis axis,
                                  std::span<const double> values);

}  // namespace specsim
