#include "specsim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "specsim/errors.hpp"
#include "specsim/metrics.hpp"
#include "specsim/rng.hpp"

namespace specsim {

void validate_config(const ScenarioConfig& config) {
  if (config.windows < 1) {
    fail(Errc::validation_error, "window count must be at least one");
  }
  if (config.mnos.empty()) {
    fail(Errc::validation_error, "at least one MNO is required");
  }
  validate_si1(config.si1);
  validate_eta(config.si1_eta);
  validate_eta(config.si2_eta);
  validate_classes(config.classes);
  for (const MnoProfile& mno : config.mnos) {
    validate_mno(mno, config.classes.size());
  }

  validate_profile(config.inter.profile, config.pool, 2);
  if (config.inter.mode == PolicyMode::fr) {
    validate_policy_kind({PolicyMode::fr, config.inter.fr_psi}, 2);
  }

  const std::size_t n = config.mnos.size();
  if (config.intra.profile.size() != n) {
    fail(Errc::length_mismatch, "intra-slice share profile covers " +
                                    std::to_string(config.intra.profile.size()) +
                                    " entities, expected " + std::to_string(n));
  }
  if (config.intra.mode == PolicyMode::fr) {
    validate_policy_kind({PolicyMode::fr, config.intra.fr_psi}, n);
  }
  if (!std::isfinite(config.intra.reserved_mhz) ||
      config.intra.reserved_mhz < 0.0) {
    fail(Errc::validation_error, "intra-slice reserve must be non-negative");
  }
  if (!config.intra.caps_mhz.empty() && config.intra.caps_mhz.size() != n) {
    fail(Errc::length_mismatch, "grant caps cover " +
                                    std::to_string(config.intra.caps_mhz.size()) +
                                    " entities, expected " + std::to_string(n));
  }
  for (double cap : config.intra.caps_mhz) {
    if (!std::isfinite(cap) || cap < 0.0) {
      fail(Errc::validation_error, "grant caps must be non-negative");
    }
  }
  if (config.run_id.empty() ||
      config.run_id.find_first_not_of(
          "abcdefghijklmnopqrstuvwxyz"
          "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-") != std::string::npos) {
    fail(Errc::validation_error,
         "run id must be non-empty and use only [A-Za-z0-9_.-]");
  }
}

void set_inter_mode(ScenarioConfig& config, PolicyMode mode) {
  config.inter.mode = mode;
  if (mode != PolicyMode::fr) return;
  const auto shares = config.inter.profile.principal_shares();
  double sum = 0.0;
  for (double s : shares) sum += s;
  config.inter.fr_psi.assign(shares.begin(), shares.end());
  for (double& psi : config.inter.fr_psi) psi /= sum;
}

std::string to_string(Level level) {
  return level == Level::inter ? "inter" : "intra";
}

Level level_from_string(const std::string& text) {
  if (text == "inter") return Level::inter;
  if (text == "intra") return Level::intra;
  fail(Errc::parse_error, "unknown level '" + text + "'");
}

namespace {

AllocationResult allocate_inter_stage(const ScenarioConfig& config,
                                      const DemandVector& demands) {
  switch (config.inter.mode) {
    case PolicyMode::fr:
      return allocate_fr(demands, config.inter.fr_psi, config.pool);
    case PolicyMode::cs:
      return allocate_cs(demands, config.pool);
    case PolicyMode::pr:
      return allocate_pr_inter(demands, config.inter.profile, config.pool);
  }
  fail(Errc::validation_error, "unhandled policy mode");
}

/// Divides the slice's grant across its operators. The pool here is
/// whatever the slice actually received, which can be less than it asked
/// for, and zero when the slice had no demand at all.
AllocationResult allocate_intra_stage(const ScenarioConfig& config,
                                      const DemandVector& demands,
                                      double slice_grant_mhz) {
  const std::size_t n = demands.demands_mhz.size();
  const double reserved = std::min(config.intra.reserved_mhz, slice_grant_mhz);
  AllocationResult result;
  switch (config.intra.mode) {
    case PolicyMode::pr:
      return allocate_pr_intra(demands, config.intra.profile, slice_grant_mhz,
                               reserved, config.intra.caps_mhz);
    case PolicyMode::fr: {
      std::vector<double> grants(n);
      result.fractions.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        grants[i] = config.intra.fr_psi[i] * slice_grant_mhz;
        result.fractions[i] = config.intra.fr_psi[i];
      }
      result.grants_mhz = std::move(grants);
      result.case_label = CaseLabel::fr;
      break;
    }
    case PolicyMode::cs: {
      double sum = 0.0;
      for (double d : demands.demands_mhz) sum += d;
      std::vector<double> grants(n);
      result.fractions.resize(n);
      if (sum > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
          result.fractions[i] = demands.demands_mhz[i] / sum;
          grants[i] = result.fractions[i] * slice_grant_mhz;
        }
        result.case_label = CaseLabel::cs;
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          result.fractions[i] = 1.0 / static_cast<double>(n);
          grants[i] = slice_grant_mhz / static_cast<double>(n);
        }
        result.case_label = CaseLabel::cs_degenerate;
      }
      result.grants_mhz = std::move(grants);
      break;
    }
  }
  if (!config.intra.caps_mhz.empty() && config.intra.mode != PolicyMode::pr) {
    for (std::size_t i = 0; i < n; ++i) {
      result.grants_mhz[i] =
          std::min(result.grants_mhz[i], config.intra.caps_mhz[i]);
    }
  }
  return result;
}

}  // namespace

std::vector<WindowRecord> run_window(const ScenarioConfig& config,
                                     int window_index) {
  const std::size_t n_mno = config.mnos.size();
  const auto w = static_cast<std::uint64_t>(window_index);

  // Lane 0 feeds slice I, lane 1+q feeds operator q; every entity draws
  // from its own stream.
  RandomStream si1_stream = RandomStream::derive(config.seed, w, 0);
  LoadReport si1_report = sample_si1_load(config.si1, si1_stream);
  si1_report.entity_id = "SI-I";
  const double si1_demand = map_load_to_spectrum(si1_report, config.si1_eta);

  std::vector<LoadReport> reports;
  reports.reserve(n_mno);
  for (std::size_t q = 0; q < n_mno; ++q) {
    RandomStream stream = RandomStream::derive(config.seed, w, 1 + q);
    LoadReport report =
        config.stochastic_mno_load
            ? sample_mno_load(config.mnos[q], config.classes, stream)
            : mno_load(config.mnos[q], config.classes);
    report.entity_id = "MNO-" + std::to_string(q + 1);
    reports.push_back(std::move(report));
  }
  const Si2Demand si2 = aggregate_si2_demand(reports, config.si2_eta);

  const DemandVector inter_demands{{si1_demand, si2.total_mhz}};
  const AllocationResult inter = allocate_inter_stage(config, inter_demands);
  const AllocationResult intra =
      allocate_intra_stage(config, si2.per_mno, inter.grants_mhz[1]);

  std::vector<WindowRecord> records;
  records.reserve(2 + n_mno);
  const char* slice_names[2] = {"SI-I", "SI-II"};
  for (std::size_t i = 0; i < 2; ++i) {
    WindowRecord rec;
    rec.window_index = window_index;
    rec.level = Level::inter;
    rec.entity_id = slice_names[i];
    rec.demand_mhz = inter_demands.demands_mhz[i];
    rec.grant_mhz = inter.grants_mhz[i];
    rec.deviation_mhz = deviation(rec.demand_mhz, rec.grant_mhz);
    rec.case_label = inter.case_label;
    records.push_back(std::move(rec));
  }
  for (std::size_t q = 0; q < n_mno; ++q) {
    WindowRecord rec;
    rec.window_index = window_index;
    rec.level = Level::intra;
    rec.entity_id = reports[q].entity_id;
    rec.demand_mhz = si2.per_mno.demands_mhz[q];
    rec.grant_mhz = intra.grants_mhz[q];
    rec.deviation_mhz = deviation(rec.demand_mhz, rec.grant_mhz);
    rec.case_label = intra.case_label;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<WindowRecord> run_experiment(const ScenarioConfig& config) {
  validate_config(config);
  std::vector<WindowRecord> records;
  records.reserve(static_cast<std::size_t>(config.windows) *
                  (2 + config.mnos.size()));
  for (int w = 0; w < config.windows; ++w) {
    std::vector<WindowRecord> window = run_window(config, w);
    records.insert(records.end(), std::make_move_iterator(window.begin()),
                   std::make_move_iterator(window.end()));
  }
  return records;
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::mno_user_count: return "mno_user_count";
    case SweepAxis::si1_uniform_low: return "si1_uniform_low";
    case SweepAxis::si1_principal_share: return "si1_principal_share";
    case SweepAxis::policy_kind: return "policy_kind";
    case SweepAxis::theta: return "theta";
    case SweepAxis::n_mno: return "n_mno";
  }
  return "?";
}

SweepAxis axis_from_string(const std::string& text) {
  if (text == "mno_user_count") return SweepAxis::mno_user_count;
  if (text == "si1_uniform_low") return SweepAxis::si1_uniform_low;
  if (text == "si1_principal_share") return SweepAxis::si1_principal_share;
  if (text == "policy_kind") return SweepAxis::policy_kind;
  if (text == "theta") return SweepAxis::theta;
  if (text == "n_mno") return SweepAxis::n_mno;
  fail(Errc::unknown_axis, "unknown sweep axis '" + text + "'");
}

namespace {

int axis_int(double value, const char* what) {
  const double rounded = std::round(value);
  if (!std::isfinite(value) || std::abs(value - rounded) > 1e-9 ||
      rounded < 1.0) {
    fail(Errc::validation_error,
         std::string(what) + " axis values must be positive integers");
  }
  return static_cast<int>(rounded);
}

}  // namespace

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis,
                          double value) {
  ScenarioConfig config = base;
  switch (axis) {
    case SweepAxis::mno_user_count: {
      const int users = axis_int(value, "user count");
      for (MnoProfile& mno : config.mnos) {
        mno.user_count = mno.user_count.is_range ? UserCount::range(users)
                                                 : UserCount::fixed(users);
      }
      break;
    }
    case SweepAxis::si1_uniform_low:
      config.si1.uniform_low_mbps = value;
      break;
    case SweepAxis::si1_principal_share: {
      if (!(value > 0.0) || !(value < 1.0)) {
        fail(Errc::validation_error,
             "principal share axis values must lie in (0, 1)");
      }
      const auto priorities = config.inter.profile.priorities();
      config.inter.profile = ShareProfile(
          {value, 1.0 - value}, {priorities[0], priorities[1]});
      if (config.inter.mode == PolicyMode::fr) {
        config.inter.fr_psi = {value, 1.0 - value};
      }
      break;
    }
    case SweepAxis::policy_kind: {
      const int mode = axis_int(value + 1.0, "policy") - 1;
      if (mode < 0 || mode > 2) {
        fail(Errc::validation_error,
             "policy axis values must be 0 (fr), 1 (pr) or 2 (cs)");
      }
      set_inter_mode(config, static_cast<PolicyMode>(mode));
      break;
    }
    case SweepAxis::theta:
      config.pool = SpectrumPool(config.pool.total_mhz(), value);
      break;
    case SweepAxis::n_mno: {
      const int n = axis_int(value, "MNO count");
      std::vector<MnoProfile> mnos;
      mnos.reserve(n);
      for (int i = 0; i < n; ++i) {
        mnos.push_back(base.mnos[i % base.mnos.size()]);
      }
      config.mnos = std::move(mnos);
      const auto shares = base.intra.profile.principal_shares();
      const auto priorities = base.intra.profile.priorities();
      std::vector<double> new_shares(n), new_priorities(n);
      for (int i = 0; i < n; ++i) {
        new_shares[i] = shares[std::min<std::size_t>(i, shares.size() - 1)];
        new_priorities[i] =
            priorities[std::min<std::size_t>(i, priorities.size() - 1)];
      }
      config.intra.profile = ShareProfile(new_shares, new_priorities);
      if (config.intra.mode == PolicyMode::fr) {
        double sum = 0.0;
        for (double s : new_shares) sum += s;
        config.intra.fr_psi = new_shares;
        for (double& psi : config.intra.fr_psi) psi /= sum;
      }
      if (!base.intra.caps_mhz.empty()) {
        config.intra.caps_mhz.resize(n, base.intra.caps_mhz.back());
      }
      break;
    }
  }
  validate_config(config);
  return config;
}

std::vector<SweepBlock> run_sweep(const ScenarioConfig& base, SweepAxis axis,
                                  std::span<const double> values) {
  if (values.empty()) {
    fail(Errc::unknown_axis, "sweep needs at least one axis value");
  }
  std::vector<SweepBlock> blocks;
  blocks.reserve(values.size());
  for (double value : values) {
    SweepBlock block;
    block.axis_value = value;
    block.config = apply_axis(base, axis, value);
    block.records = run_experiment(block.config);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace specsim
