#include "specsim/presets.hpp"

#include "specsim/config_file.hpp"
#include "specsim/errors.hpp"

namespace specsim {

namespace {

/// Common venue scenario: 30 MHz shared pool, slice I at 5 Mbps fixed plus
/// U[1,20] Mbps local traffic, one-to-one load mapping, three tenant
/// operators on the desk-scale traffic profile, equal shares and
/// priorities everywhere.
ScenarioConfig venue_base() {
  ScenarioConfig config;
  config.pool = SpectrumPool(30.0, 0.0);
  config.si1 = Si1TrafficModel{5.0, 1.0, 20.0};
  config.si1_eta = SpectralEfficiency{1.0};
  config.si2_eta = SpectralEfficiency{1.0};
  config.classes = desk_scale_service_classes();
  for (int q = 0; q < 3; ++q) {
    MnoProfile mno;
    mno.user_count = UserCount::range(30);
    mno.activity_factor = 0.1;
    mno.usage_pattern = uniform_pattern(config.classes.size());
    config.mnos.push_back(std::move(mno));
  }
  config.inter.mode = PolicyMode::pr;
  config.inter.profile = ShareProfile({0.5, 0.5}, {1.0, 1.0});
  config.inter.fr_psi = {0.5, 0.5};
  config.intra.mode = PolicyMode::pr;
  config.intra.profile = ShareProfile::equal(3);
  config.intra.fr_psi = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  config.intra.reserved_mhz = 0.0;
  config.windows = 20000;
  config.seed = 1;
  config.stochastic_mno_load = true;
  return config;
}

std::vector<double> share_axis_values() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig4", "fig5", "fig6a",
                                                 "fig6b", "fig7", "fig8"};
  return names;
}

Preset make_preset(const std::string& name, bool strict_rates) {
  Preset preset;
  preset.name = name;
  preset.base = venue_base();
  preset.base.run_id = name;

  const std::vector<PolicyMode> all_policies = {PolicyMode::fr, PolicyMode::pr,
                                                PolicyMode::cs};
  if (name == "fig4" || name == "fig6a") {
    // Tenant population sweep; deviations read off slice I (fig4) or the
    // average over both slices (fig6a).
    preset.axis = SweepAxis::mno_user_count;
    preset.values = {20, 40, 60, 80, 100, 120};
    preset.policies = all_policies;
    if (name == "fig6a") {
      preset.grouping = EntityGrouping::inter_average;
      preset.chart_entities = {"SI-avg"};
    } else {
      preset.chart_entities = {"SI-I"};
    }
  } else if (name == "fig5" || name == "fig6b") {
    // Slice-I traffic floor sweep against a moderate tenant load.
    preset.axis = SweepAxis::si1_uniform_low;
    preset.values = {1, 4, 7, 10, 13, 16, 19};
    preset.policies = all_policies;
    if (name == "fig6b") {
      preset.grouping = EntityGrouping::inter_average;
      preset.chart_entities = {"SI-avg"};
    } else {
      preset.chart_entities = {"SI-II"};
    }
  } else if (name == "fig7") {
    // Principal-share sweep at a fixed population of 30 users per tenant.
    preset.axis = SweepAxis::si1_principal_share;
    preset.values = share_axis_values();
    preset.policies = {PolicyMode::pr};
    preset.chart_entities = {"SI-I", "SI-II"};
    for (MnoProfile& mno : preset.base.mnos) {
      mno.user_count = UserCount::fixed(30);
    }
  } else if (name == "fig8") {
    // Principal-share sweep at a lighter fixed population.
    preset.axis = SweepAxis::si1_principal_share;
    preset.values = share_axis_values();
    preset.policies = {PolicyMode::pr};
    preset.chart_entities = {"SI-I", "SI-II"};
    for (MnoProfile& mno : preset.base.mnos) {
      mno.user_count = UserCount::fixed(20);
    }
  } else {
    fail(Errc::unknown_preset, "no preset named '" + name + "'");
  }

  if (strict_rates) {
    apply_strict_rates(preset.base);
  }
  validate_config(preset.base);
  return preset;
}

std::vector<RecordRow> run_preset(const Preset& preset,
                                  std::optional<int> windows_override,
                                  std::optional<std::uint64_t> seed_override) {
  std::vector<RecordRow> rows;
  for (PolicyMode mode : preset.policies) {
    ScenarioConfig config = preset.base;
    if (windows_override) config.windows = *windows_override;
    if (seed_override) config.seed = *seed_override;
    set_inter_mode(config, mode);
    const auto blocks = run_sweep(config, preset.axis, preset.values);
    for (const SweepBlock& block : blocks) {
      auto block_rows =
          tabulate(preset.name, config.seed, to_string(mode),
                   to_string(preset.axis), block.axis_value, block.records);
      rows.insert(rows.end(), std::make_move_iterator(block_rows.begin()),
                  std::make_move_iterator(block_rows.end()));
    }
  }
  return rows;
}

}  // namespace specsim
