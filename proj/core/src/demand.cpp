#include "specsim/demand.hpp"

#include <cmath>

#include "specsim/errors.hpp"

namespace specsim {

void validate_eta(SpectralEfficiency eta) {
  if (!std::isfinite(eta.eta_bps_per_hz) || eta.eta_bps_per_hz <= 0.0) {
    fail(Errc::validation_error, "spectral efficiency must be positive");
  }
}

LoadReport sample_si1_load(const Si1TrafficModel& model, RandomStream& rng) {
  validate_si1(model);
  LoadReport report;
  report.load_mbps =
      model.fixed_mbps +
      rng.uniform(model.uniform_low_mbps, model.uniform_high_mbps);
  return report;
}

double mno_class_load(const MnoProfile& profile,
                      std::span<const ServiceClass> classes,
                      std::size_t class_index) {
  validate_mno(profile, classes.size());
  const double active_users =
      profile.user_count.expected() * profile.activity_factor;
  return active_users * profile.usage_pattern[class_index] *
         classes[class_index].rate_mbps;
}

LoadReport mno_load(const MnoProfile& profile,
                    std::span<const ServiceClass> classes) {
  validate_mno(profile, classes.size());
  LoadReport report;
  std::vector<double> weighted(classes.size(), 0.0);
  for (std::size_t s = 0; s < classes.size(); ++s) {
    weighted[s] = classes[s].weight * mno_class_load(profile, classes, s);
  }
  double total = 0.0;
  for (double w : weighted) total += w;
  report.load_mbps = total;
  report.per_class_mbps = std::move(weighted);
  return report;
}

LoadReport sample_mno_load(const MnoProfile& profile,
                           std::span<const ServiceClass> classes,
                           RandomStream& rng) {
  validate_mno(profile, classes.size());
  const int users = profile.user_count.is_range
                        ? rng.uniform_int(1, profile.user_count.value)
                        : profile.user_count.value;
  // The small epsilon keeps users*activity integral when it is one
  // mathematically (e.g. activity given as a ratio of integers).
  const int active = static_cast<int>(
      std::floor(static_cast<double>(users) * profile.activity_factor + 1e-9));

  LoadReport report;
  std::vector<double> weighted(classes.size(), 0.0);
  for (int i = 0; i < active; ++i) {
    const std::size_t s = rng.pick_index(profile.usage_pattern);
    weighted[s] += classes[s].weight * classes[s].rate_mbps;
  }
  double total = 0.0;
  for (double w : weighted) total += w;
  report.load_mbps = total;
  report.per_class_mbps = std::move(weighted);
  return report;
}

double map_load_to_spectrum(const LoadReport& load, SpectralEfficiency eta) {
  validate_eta(eta);
  if (!std::isfinite(load.load_mbps) || load.load_mbps < 0.0) {
    fail(Errc::validation_error, "load must be finite and non-negative");
  }
  return load.load_mbps / eta.eta_bps_per_hz;
}

Si2Demand aggregate_si2_demand(std::span<const LoadReport> reports,
                               SpectralEfficiency eta) {
  validate_eta(eta);
  Si2Demand out;
  out.per_mno.demands_mhz.reserve(reports.size());
  for (const LoadReport& report : reports) {
    const double demand = map_load_to_spectrum(report, eta);
    out.per_mno.demands_mhz.push_back(demand);
    out.total_mhz += demand;
  }
  return out;
}

}  // namespace specsim
