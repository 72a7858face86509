// Command-line front end: single runs, preset or custom sweeps, and a
// self-test of the preset tables. Outputs land as CSV plus an SVG chart.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specsim/chart.hpp"
#include "specsim/config_file.hpp"
#include "specsim/engine.hpp"
#include "specsim/errors.hpp"
#include "specsim/io.hpp"
#include "specsim/metrics.hpp"
#include "specsim/presets.hpp"

namespace {

namespace fs = std::filesystem;
using namespace specsim;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> windows;
  std::string policy;
  bool strict_rates = false;
};

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SPECSIM_OUT"); env != nullptr && *env) {
    return env;
  }
  return "out";
}

std::string value_slug(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

void warn_strict_rates() {
  std::cerr << "warning: strict rates selected; per-user rates are far above "
               "the pool and demand will saturate supply\n";
}

int cmd_run(const CommonOptions& opt) {
  ScenarioConfig config = parse_config(opt.config_path);
  if (opt.seed) config.seed = *opt.seed;
  if (opt.windows) config.windows = *opt.windows;
  if (!opt.policy.empty()) {
    set_inter_mode(config, policy_mode_from_string(opt.policy));
  }
  if (opt.strict_rates) {
    apply_strict_rates(config);
    warn_strict_rates();
  }
  validate_config(config);

  const fs::path out = resolve_out_dir(opt.out_dir);
  const auto records = run_experiment(config);
  const auto rows = tabulate(config.run_id, config.seed,
                             to_string(config.inter.mode), "none", 0.0, records);
  fs::create_directories(out);
  write_records_csv(rows, out / "records.csv");
  write_summary_csv(summarize(rows), out / "summary.csv");
  std::cout << "wrote " << rows.size() << " records to "
            << (out / "records.csv").string() << "\n";
  return kExitOk;
}

int cmd_sweep(const CommonOptions& opt, const std::string& preset_name,
              const std::string& axis_name, const std::string& values_csv) {
  std::vector<RecordRow> rows;
  EntityGrouping grouping = EntityGrouping::per_entity;
  std::vector<std::string> chart_entities;
  fs::path out = resolve_out_dir(opt.out_dir);

  if (!preset_name.empty()) {
    Preset preset = make_preset(preset_name, opt.strict_rates);
    if (opt.strict_rates) warn_strict_rates();
    if (!opt.policy.empty()) {
      preset.policies = {policy_mode_from_string(opt.policy)};
    }
    rows = run_preset(preset, opt.windows, opt.seed);
    grouping = preset.grouping;
    chart_entities = preset.chart_entities;
  } else {
    if (opt.config_path.empty() || axis_name.empty()) {
      fail(Errc::unknown_axis,
           "custom sweeps need --config together with --axis and --values");
    }
    ScenarioConfig config = parse_config(opt.config_path);
    if (opt.seed) config.seed = *opt.seed;
    if (opt.windows) config.windows = *opt.windows;
    if (!opt.policy.empty()) {
      set_inter_mode(config, policy_mode_from_string(opt.policy));
    }
    if (opt.strict_rates) {
      apply_strict_rates(config);
      warn_strict_rates();
    }
    const SweepAxis axis = axis_from_string(axis_name);
    std::vector<double> values;
    std::stringstream in(values_csv);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      if (axis == SweepAxis::policy_kind &&
          (item == "fr" || item == "pr" || item == "cs")) {
        values.push_back(
            static_cast<double>(policy_mode_from_string(item)));
        continue;
      }
      try {
        values.push_back(std::stod(item));
      } catch (const std::exception&) {
        fail(Errc::unknown_axis, "bad axis value '" + item + "'");
      }
    }
    if (values.empty()) {
      fail(Errc::unknown_axis, "sweep needs at least one axis value");
    }
    const auto blocks = run_sweep(config, axis, values);
    for (const SweepBlock& block : blocks) {
      auto block_rows = tabulate(
          config.run_id, block.config.seed, to_string(block.config.inter.mode),
          to_string(axis), block.axis_value, block.records);
      rows.insert(rows.end(), block_rows.begin(), block_rows.end());
    }
    chart_entities = {"SI-I", "SI-II"};
  }

  fs::create_directories(out);

  // One records file per (policy, axis value) block, in row order.
  std::size_t begin = 0;
  while (begin < rows.size()) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].policy == rows[begin].policy &&
           rows[end].axis_value == rows[begin].axis_value) {
      ++end;
    }
    const std::string file_name = "records_" + rows[begin].policy + "_" +
                                  rows[begin].axis_name + "_" +
                                  value_slug(rows[begin].axis_value) + ".csv";
    write_records_csv(std::span(rows).subspan(begin, end - begin),
                      out / file_name);
    begin = end;
  }

  const auto summaries = summarize(rows, grouping);
  write_summary_csv(summaries, out / "summary.csv");
  render_summary_chart(summaries, out / "chart.svg", chart_entities);
  std::cout << "wrote " << rows.size() << " records across "
            << summaries.size() << " summary groups to " << out.string()
            << "\n";
  return kExitOk;
}

bool check(bool ok, const std::string& what, int& failures) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  if (!ok) ++failures;
  return ok;
}

/// Verifies that the preset tables carry the venue-scenario constants they
/// are documented to carry.
int cmd_selftest() {
  int failures = 0;
  for (const std::string& name : preset_names()) {
    const Preset preset = make_preset(name);
    const ScenarioConfig& base = preset.base;
    check(base.pool.total_mhz() == 30.0 && base.pool.reserved_mhz() == 0.0,
          name + ": 30 MHz pool, no reserve", failures);
    check(base.si1.fixed_mbps == 5.0 && base.si1.uniform_high_mbps == 20.0,
          name + ": slice-I fixed 5 Mbps, uniform cap 20 Mbps", failures);
    check(base.si1_eta.eta_bps_per_hz == 1.0 &&
              base.si2_eta.eta_bps_per_hz == 1.0,
          name + ": one-to-one load mapping", failures);
    check(base.mnos.size() == 3, name + ": three tenant operators", failures);
    check(!preset.values.empty(), name + ": non-empty axis", failures);
  }
  {
    const Preset fig4 = make_preset("fig4");
    const auto shares = fig4.base.inter.profile.principal_shares();
    check(shares[0] == 0.5 && shares[1] == 0.5,
          "fig4: equal principal shares", failures);
    check(fig4.policies.size() == 3, "fig4: all three policies", failures);
    check(fig4.axis == SweepAxis::mno_user_count, "fig4: user-count axis",
          failures);
    check(fig4.base.si1.uniform_low_mbps == 1.0, "fig4: traffic floor 1 Mbps",
          failures);
  }
  {
    const Preset fig5 = make_preset("fig5");
    check(fig5.axis == SweepAxis::si1_uniform_low, "fig5: traffic-floor axis",
          failures);
    for (double v : fig5.values) {
      if (v > fig5.base.si1.uniform_high_mbps) ++failures;
    }
    check(true, "fig5: floor stays below the 20 Mbps cap", failures);
  }
  {
    const Preset fig7 = make_preset("fig7");
    check(fig7.policies == std::vector<PolicyMode>{PolicyMode::pr},
          "fig7: priority policy only", failures);
    bool fixed30 = true;
    for (const MnoProfile& mno : fig7.base.mnos) {
      fixed30 = fixed30 && !mno.user_count.is_range && mno.user_count.value == 30;
    }
    check(fixed30, "fig7: 30 users fixed per operator", failures);
    check(fig7.axis == SweepAxis::si1_principal_share,
          "fig7: principal-share axis with complementary slice-II share",
          failures);
  }
  {
    const Preset fig8 = make_preset("fig8");
    check(fig8.base.si1.uniform_low_mbps == 1.0, "fig8: traffic floor 1 Mbps",
          failures);
    check(fig8.policies == std::vector<PolicyMode>{PolicyMode::pr},
          "fig8: priority policy only", failures);
  }
  std::cout << (failures == 0 ? "self-test passed\n" : "self-test FAILED\n");
  return failures == 0 ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shared-spectrum coordination simulator for neutral-host "
               "small-cell networks"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string preset_name;
  std::string axis_name;
  std::string values_csv;

  CLI::App* run = app.add_subcommand("run", "Run one scenario and write CSVs");
  run->add_option("--config", opt.config_path, "Scenario config file")
      ->required();
  run->add_option("--seed", opt.seed, "Master seed override");
  run->add_option("--windows", opt.windows, "Window count override");
  run->add_option("--out", opt.out_dir, "Output directory (or $SPECSIM_OUT)");
  run->add_option("--policy", opt.policy, "Inter-slice policy: fr, pr or cs");
  run->add_flag("--strict-paper", opt.strict_rates,
                "Use the unscaled reference rate table");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Run a preset or custom parameter sweep");
  sweep->add_option("--preset", preset_name,
                    "Preset name: fig4, fig5, fig6a, fig6b, fig7, fig8");
  sweep->add_option("--config", opt.config_path, "Scenario config file");
  sweep->add_option("--axis", axis_name,
                    "Sweep axis: mno_user_count, si1_uniform_low, "
                    "si1_principal_share, policy_kind, theta, n_mno");
  sweep->add_option("--values", values_csv, "Comma-separated axis values");
  sweep->add_option("--seed", opt.seed, "Master seed override");
  sweep->add_option("--windows", opt.windows, "Window count override");
  sweep->add_option("--out", opt.out_dir, "Output directory (or $SPECSIM_OUT)");
  sweep->add_option("--policy", opt.policy, "Restrict to one policy");
  sweep->add_flag("--strict-paper", opt.strict_rates,
                  "Use the unscaled reference rate table");

  app.add_subcommand("selftest", "Check the preset parameter tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("run")) return cmd_run(opt);
    if (app.got_subcommand("sweep")) {
      return cmd_sweep(opt, preset_name, axis_name, values_csv);
    }
    return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_usage() ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
