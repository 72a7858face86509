#pragma once

#include <span>
#include <string>
#include <vector>

#include "specsim/model.hpp"

namespace specsim {

enum class PolicyMode { fr, pr, cs };

std::string to_string(PolicyMode mode);
PolicyMode policy_mode_from_string(const std::string& text);

/// Coordination policy selector. fixed_fractions holds the static split
/// (entries positive, summing to one) and is only meaningful in FR mode.
struct PolicyKind {
  PolicyMode mode = PolicyMode::pr;
  std::vector<double> fixed_fractions;
};

void validate_policy_kind(const PolicyKind& kind, std::size_t n_entities);

/// Classifies the load regime:
///   C-I   every demand within its share, or the total excess non-positive;
///   C-II  every demand above its share;
///   C-III mixed demands with positive total excess.
/// C-I is checked first, then C-II; the raw conditions overlap.
LoadCase classify_case(const DemandVector& demands,
                       const ShareProfile& profile, const SpectrumPool& pool);

/// Same classification against a plain pool amount, as used inside a slice
/// where the pool is the slice's own grant.
LoadCase classify_case_over(const DemandVector& demands,
                            const ShareProfile& profile, double pool_mhz,
                            double reserved_mhz);

/// Static split: every entity gets its fixed fraction of the pool, demands
/// are ignored entirely.
AllocationResult allocate_fr(const DemandVector& demands,
                             std::span<const double> fixed_fractions,
                             const SpectrumPool& pool);

/// Demand-proportional split of the whole pool. A zero demand total is
/// degenerate and falls back to an equal split with its own case label.
AllocationResult allocate_cs(const DemandVector& demands,
                             const SpectrumPool& pool);

/// Priority policy between the two slice instances. Grants demands when the
/// system is light, shares (plus a priority-weighted cut of the reserve)
/// when everyone is overloaded, and moves the light side's unused share to
/// the heavy side in the mixed regime.
AllocationResult allocate_pr_inter(const DemandVector& demands,
                                   const ShareProfile& profile,
                                   const SpectrumPool& pool);

/// Priority policy across any number of entities inside one slice. The
/// pool is the slice's grant from the inter-slice stage, so it is passed
/// as a plain amount and may be zero. In the mixed regime the pooled
/// surplus is split over the heavy entities by priority, clamped to each
/// receiver's demand with the leftover re-offered until it settles.
/// Optional caps clamp the final grants.
AllocationResult allocate_pr_intra(const DemandVector& demands,
                                   const ShareProfile& profile,
                                   double pool_mhz, double reserved_mhz,
                                   std::span<const double> caps_mhz = {});

}  // namespace specsim
