#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specsim/metrics.hpp"

namespace specsim {

inline constexpr std::string_view kRecordsCsvHeader =
    "run_id,seed,policy,level,entity,axis_name,axis_value,window,"
    "demand_mhz,grant_mhz,deviation_mhz,case_label";

inline constexpr std::string_view kSummaryCsvHeader =
    "run_id,policy,level,entity,axis_name,axis_value,window_count,"
    "mean_deviation_mhz,std_deviation_mhz";

/// Writes the file atomically: content goes to a temp file in the same
/// directory which is then renamed over the target.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Records CSV, fixed column order, floats with nine decimal places.
void write_records_csv(std::span<const RecordRow> rows,
                       const std::filesystem::path& path);
std::vector<RecordRow> read_records_csv(const std::filesystem::path& path);

void write_summary_csv(std::span<const DeviationSummary> summaries,
                       const std::filesystem::path& path);
std::vector<DeviationSummary> read_summary_csv(
    const std::filesystem::path& path);

}  // namespace specsim
