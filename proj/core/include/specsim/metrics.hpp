#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specsim/engine.hpp"

namespace specsim {

/// Absolute demand-supply difference in MHz; over-supply counts the same
/// as under-supply.
double deviation(double demand_mhz, double grant_mhz);

/// One CSV row: a window record plus the run metadata that identifies it.
struct RecordRow {
  std::string run_id;
  std::uint64_t seed = 0;
  std::string policy;
  Level level = Level::inter;
  std::string entity;
  std::string axis_name = "none";
  double axis_value = 0.0;
  int window = 0;
  double demand_mhz = 0.0;
  double grant_mhz = 0.0;
  double deviation_mhz = 0.0;
  CaseLabel case_label = CaseLabel::c1;
};

std::vector<RecordRow> tabulate(const std::string& run_id, std::uint64_t seed,
                                const std::string& policy,
                                const std::string& axis_name,
                                double axis_value,
                                std::span<const WindowRecord> records);

/// per_entity keeps every entity separate; inter_average additionally
/// merges the two inter-level slices into one "SI-avg" group (intra rows
/// stay per-entity).
enum class EntityGrouping { per_entity, inter_average };

struct DeviationSummary {
  std::string run_id;
  std::string policy;
  Level level = Level::inter;
  std::string entity;
  std::string axis_name = "none";
  double axis_value = 0.0;
  std::size_t window_count = 0;
  double mean_deviation_mhz = 0.0;
  double std_deviation_mhz = 0.0;
};

/// Groups rows by (run, policy, level, entity, axis point) and reports the
/// mean and population standard deviation of the deviation column. Output
/// order is deterministic regardless of input order.
std::vector<DeviationSummary> summarize(
    std::span<const RecordRow> rows,
    EntityGrouping grouping = EntityGrouping::per_entity);

}  // namespace specsim
