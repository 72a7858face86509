#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "specsim/metrics.hpp"

namespace specsim {

/// Renders mean deviation against the sweep axis as a standalone SVG:
/// one polyline (with point markers) per (policy, entity) series. When
/// `entities` is non-empty only those entity groups are drawn.
void render_summary_chart(std::span<const DeviationSummary> summaries,
                          const std::filesystem::path& path,
                          std::span<const std::string> entities = {});

}  // namespace specsim
