#pragma once

#include <span>
#include <string>
#include <vector>

namespace specsim {

/// Bandwidth comparisons treat amounts closer than this as equal (MHz).
inline constexpr double kMhzTolerance = 1e-9;

/// Shareable spectrum: the total pool and the portion held in reserve,
/// released only by the overload branches of the priority policy.
class SpectrumPool {
 public:
  explicit SpectrumPool(double total_mhz, double reserved_mhz = 0.0);

  double total_mhz() const { return total_mhz_; }
  double reserved_mhz() const { return reserved_mhz_; }

 private:
  double total_mhz_;
  double reserved_mhz_;
};

/// Principal shares and priority weights for a set of entities (slice
/// instances or tenant operators). Shares may be absolute MHz or plain
/// weights; normalization makes the two conventions coincide.
class ShareProfile {
 public:
  ShareProfile(std::vector<double> principal_shares,
               std::vector<double> priorities);

  /// n entities with equal shares and equal priorities.
  static ShareProfile equal(std::size_t n);

  std::span<const double> principal_shares() const { return shares_; }
  std::span<const double> priorities() const { return priorities_; }
  std::size_t size() const { return shares_.size(); }

 private:
  std::vector<double> shares_;
  std::vector<double> priorities_;
};

/// Share and priority fractions after normalization. Share fractions are
/// share / (sum of shares + reserved); priority fractions sum to one.
struct NormalizedProfile {
  std::vector<double> share_fractions;
  std::vector<double> priority_fractions;
};

NormalizedProfile normalize_profile(const ShareProfile& profile,
                                    double reserved_mhz);

/// Checks the profile against the pool and expected entity count and
/// returns the normalized fractions.
NormalizedProfile validate_profile(const ShareProfile& profile,
                                   const SpectrumPool& pool,
                                   std::size_t n_entities);

enum class ClassLabel { vl, l, m, mh, h, s };

std::string to_string(ClassLabel label);
ClassLabel class_label_from_string(const std::string& text);

/// One service class: its application data rate and priority weight.
struct ServiceClass {
  ClassLabel label;
  double rate_mbps;
  double weight = 1.0;
};

void validate_classes(std::span<const ServiceClass> classes);

/// The six-class rate table with per-user rates in Mbps. At a venue-sized
/// pool these rates swamp the supply; they are kept as the reference
/// defaults and the presets use the desk-scale table below instead.
std::vector<ServiceClass> default_service_classes();

/// Rate table scaled down (x0.01) so that demand and supply are comparable
/// on a 30 MHz pool. Used by the bundled presets.
std::vector<ServiceClass> desk_scale_service_classes();

/// Tenant user population: either a fixed count or a per-window draw from
/// the integer range {1..max}.
struct UserCount {
  static UserCount fixed(int n) { return {false, n}; }
  static UserCount range(int u_max) { return {true, u_max}; }

  bool is_range = true;
  int value = 30;

  double expected() const {
    return is_range ? 0.5 * (1.0 + static_cast<double>(value))
                    : static_cast<double>(value);
  }
};

/// Traffic shape of one tenant operator: population, fraction of active
/// users, and the probability of each service class.
struct MnoProfile {
  UserCount user_count;
  double activity_factor = 0.1;
  std::vector<double> usage_pattern;
};

void validate_mno(const MnoProfile& profile, std::size_t n_classes);

std::vector<double> uniform_pattern(std::size_t n);

/// Slice-I traffic: a fixed business-operation load plus a uniformly
/// distributed local-services load, all in Mbps.
struct Si1TrafficModel {
  double fixed_mbps = 5.0;
  double uniform_low_mbps = 1.0;
  double uniform_high_mbps = 20.0;
};

void validate_si1(const Si1TrafficModel& model);

/// Per-entity spectrum demands in MHz for one coordination window.
struct DemandVector {
  std::vector<double> demands_mhz;
};

void validate_demands(const DemandVector& demands);

enum class CaseLabel { c1, c2, c3, fr, cs, cs_degenerate };

std::string to_string(CaseLabel label);
CaseLabel case_label_from_string(const std::string& text);

/// Load regime driving the priority-policy branches.
struct LoadCase {
  CaseLabel label;
};

/// Outcome of one allocation: per-entity grants, their fractions of the
/// pool, and the branch that produced them.
struct AllocationResult {
  std::vector<double> grants_mhz;
  std::vector<double> fractions;
  CaseLabel case_label;
};

}  // namespace specsim
