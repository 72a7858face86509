#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specsim/model.hpp"
#include "specsim/rng.hpp"

namespace specsim {

struct SpectralEfficiency {
  double eta_bps_per_hz = 1.0;
};

void validate_eta(SpectralEfficiency eta);

/// One entity's estimated traffic. When the per-class breakdown is present
/// its entries are the priority-weighted class loads and they sum to
/// load_mbps.
struct LoadReport {
  std::string entity_id;
  double load_mbps = 0.0;
  std::optional<std::vector<double>> per_class_mbps;
};

/// Slice-I load for one window: the fixed load plus one uniform draw.
LoadReport sample_si1_load(const Si1TrafficModel& model, RandomStream& rng);

/// Expected load of one service class for one operator:
/// (users x activity) x pattern[index] x rate. The class is identified by
/// its position, which is the index into the operator's usage pattern.
double mno_class_load(const MnoProfile& profile,
                      std::span<const ServiceClass> classes,
                      std::size_t class_index);

/// Closed-form operator load: priority-weighted sum of the class loads.
/// A ranged user count enters through its expectation.
LoadReport mno_load(const MnoProfile& profile,
                    std::span<const ServiceClass> classes);

/// Stochastic operator load: draws the user count if ranged, then assigns
/// each of the floor(users x activity) active users a class at random.
/// With a fixed user count the estimator's expectation equals mno_load.
LoadReport sample_mno_load(const MnoProfile& profile,
                           std::span<const ServiceClass> classes,
                           RandomStream& rng);

/// Load-to-spectrum mapping: Mbps divided by bps/Hz gives MHz.
double map_load_to_spectrum(const LoadReport& load, SpectralEfficiency eta);

struct Si2Demand {
  DemandVector per_mno;
  double total_mhz = 0.0;
};

/// Maps each operator's load to spectrum and totals the slice demand.
Si2Demand aggregate_si2_demand(std::span<const LoadReport> reports,
                               SpectralEfficiency eta);

}  // namespace specsim
