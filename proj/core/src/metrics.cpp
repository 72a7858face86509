#include "specsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "specsim/errors.hpp"

namespace specsim {

double deviation(double demand_mhz, double grant_mhz) {
  if (!std::isfinite(demand_mhz) || !std::isfinite(grant_mhz)) {
    fail(Errc::validation_error, "deviation needs finite inputs");
  }
  return std::abs(demand_mhz - grant_mhz);
}

std::vector<RecordRow> tabulate(const std::string& run_id, std::uint64_t seed,
                                const std::string& policy,
                                const std::string& axis_name,
                                double axis_value,
                                std::span<const WindowRecord> records) {
  std::vector<RecordRow> rows;
  rows.reserve(records.size());
  for (const WindowRecord& rec : records) {
    RecordRow row;
    row.run_id = run_id;
    row.seed = seed;
    row.policy = policy;
    row.level = rec.level;
    row.entity = rec.entity_id;
    row.axis_name = axis_name;
    row.axis_value = axis_value;
    row.window = rec.window_index;
    row.demand_mhz = rec.demand_mhz;
    row.grant_mhz = rec.grant_mhz;
    row.deviation_mhz = rec.deviation_mhz;
    row.case_label = rec.case_label;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DeviationSummary> summarize(std::span<const RecordRow> rows,
                                        EntityGrouping grouping) {
  if (rows.empty()) {
    fail(Errc::empty_table, "no rows to summarize");
  }
  struct Accumulator {
    std::size_t count = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  using Key = std::tuple<std::string, std::string, std::string, double,
                         std::string, int>;
  std::map<Key, Accumulator> groups;
  for (const RecordRow& row : rows) {
    std::string entity = row.entity;
    if (grouping == EntityGrouping::inter_average &&
        row.level == Level::inter) {
      entity = "SI-avg";
    }
    Key key{row.run_id, row.policy, row.axis_name, row.axis_value, entity,
            row.level == Level::inter ? 0 : 1};
    Accumulator& acc = groups[key];
    acc.count += 1;
    acc.sum += row.deviation_mhz;
    acc.sum_sq += row.deviation_mhz * row.deviation_mhz;
  }

  std::vector<DeviationSummary> out;
  out.reserve(groups.size());
  for (const auto& [key, acc] : groups) {
    DeviationSummary summary;
    summary.run_id = std::get<0>(key);
    summary.policy = std::get<1>(key);
    summary.axis_name = std::get<2>(key);
    summary.axis_value = std::get<3>(key);
    summary.entity = std::get<4>(key);
    summary.level = std::get<5>(key) == 0 ? Level::inter : Level::intra;
    summary.window_count = acc.count;
    const double n = static_cast<double>(acc.count);
    summary.mean_deviation_mhz = acc.sum / n;
    const double variance =
        std::max(0.0, acc.sum_sq / n -
                          summary.mean_deviation_mhz * summary.mean_deviation_mhz);
    summary.std_deviation_mhz = std::sqrt(variance);
    out.push_back(std::move(summary));
  }
  return out;
}

}  // namespace specsim
