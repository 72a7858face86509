#include "specsim/policies.hpp"

#include <algorithm>
#include <cmath>

#include "specsim/errors.hpp"

namespace specsim {

std::string to_string(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::fr: return "FR";
    case PolicyMode::pr: return "PR";
    case PolicyMode::cs: return "CS";
  }
  return "?";
}

PolicyMode policy_mode_from_string(const std::string& text) {
  if (text == "fr" || text == "FR") return PolicyMode::fr;
  if (text == "pr" || text == "PR") return PolicyMode::pr;
  if (text == "cs" || text == "CS") return PolicyMode::cs;
  fail(Errc::parse_error, "unknown policy mode '" + text + "'");
}

void validate_policy_kind(const PolicyKind& kind, std::size_t n_entities) {
  if (kind.mode != PolicyMode::fr) return;
  if (kind.fixed_fractions.size() != n_entities) {
    fail(Errc::length_mismatch, "fixed split covers " +
                                    std::to_string(kind.fixed_fractions.size()) +
                                    " entities, expected " +
                                    std::to_string(n_entities));
  }
  double sum = 0.0;
  for (double psi : kind.fixed_fractions) {
    if (!std::isfinite(psi) || psi <= 0.0) {
      fail(Errc::validation_error, "fixed split fractions must be positive");
    }
    sum += psi;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    fail(Errc::validation_error, "fixed split fractions must sum to one");
  }
}

namespace {

AllocationResult make_result(std::vector<double> grants, double pool_mhz,
                             CaseLabel label) {
  AllocationResult out;
  out.fractions.resize(grants.size());
  for (std::size_t i = 0; i < grants.size(); ++i) {
    out.fractions[i] = pool_mhz > 0.0 ? grants[i] / pool_mhz : 0.0;
  }
  out.grants_mhz = std::move(grants);
  out.case_label = label;
  return out;
}

/// Regime test shared by both classification entry points. The light set
/// is {i : demand_i <= share_i}; total_excess is the signed sum of
/// (demand_i - share_i).
struct RegimeEval {
  std::vector<double> share_mhz;
  double total_excess = 0.0;
  bool all_under = true;
  bool all_over = true;

  CaseLabel label() const {
    if (all_under || total_excess <= 0.0) return CaseLabel::c1;
    if (all_over) return CaseLabel::c2;
    return CaseLabel::c3;
  }
};

RegimeEval evaluate_regime(std::span<const double> demands,
                           const NormalizedProfile& np, double pool_mhz) {
  RegimeEval ev;
  ev.share_mhz.resize(demands.size());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const double share = np.share_fractions[i] * pool_mhz;
    ev.share_mhz[i] = share;
    const double excess = demands[i] - share;
    ev.total_excess += excess;
    if (excess > 0.0) {
      ev.all_under = false;
    } else {
      ev.all_over = false;
    }
  }
  return ev;
}

}  // namespace

LoadCase classify_case(const DemandVector& demands, const ShareProfile& profile,
                       const SpectrumPool& pool) {
  validate_demands(demands);
  const NormalizedProfile np =
      validate_profile(profile, pool, demands.demands_mhz.size());
  return {evaluate_regime(demands.demands_mhz, np, pool.total_mhz()).label()};
}

LoadCase classify_case_over(const DemandVector& demands,
                            const ShareProfile& profile, double pool_mhz,
                            double reserved_mhz) {
  validate_demands(demands);
  if (profile.size() != demands.demands_mhz.size()) {
    fail(Errc::entity_count_mismatch,
         "share profile and demand vector cover different entities");
  }
  const NormalizedProfile np = normalize_profile(profile, reserved_mhz);
  return {evaluate_regime(demands.demands_mhz, np, pool_mhz).label()};
}

AllocationResult allocate_fr(const DemandVector& demands,
                             std::span<const double> fixed_fractions,
                             const SpectrumPool& pool) {
  validate_demands(demands);
  PolicyKind kind{PolicyMode::fr,
                  {fixed_fractions.begin(), fixed_fractions.end()}};
  validate_policy_kind(kind, demands.demands_mhz.size());
  std::vector<double> grants(fixed_fractions.size());
  for (std::size_t i = 0; i < fixed_fractions.size(); ++i) {
    grants[i] = fixed_fractions[i] * pool.total_mhz();
  }
  return make_result(std::move(grants), pool.total_mhz(), CaseLabel::fr);
}

AllocationResult allocate_cs(const DemandVector& demands,
                             const SpectrumPool& pool) {
  validate_demands(demands);
  const auto& d = demands.demands_mhz;
  double sum = 0.0;
  for (double v : d) sum += v;
  std::vector<double> grants(d.size());
  if (sum > 0.0) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      grants[i] = (d[i] / sum) * pool.total_mhz();
    }
    return make_result(std::move(grants), pool.total_mhz(), CaseLabel::cs);
  }
  // 0/0 split: fall back to equal shares and flag the window.
  const double each = pool.total_mhz() / static_cast<double>(d.size());
  std::fill(grants.begin(), grants.end(), each);
  return make_result(std::move(grants), pool.total_mhz(),
                     CaseLabel::cs_degenerate);
}

AllocationResult allocate_pr_inter(const DemandVector& demands,
                                   const ShareProfile& profile,
                                   const SpectrumPool& pool) {
  validate_demands(demands);
  if (demands.demands_mhz.size() != 2) {
    fail(Errc::entity_count_mismatch,
         "inter-slice coordination pairs exactly two slice instances");
  }
  const NormalizedProfile np = validate_profile(profile, pool, 2);
  const double total = pool.total_mhz();
  const double reserved = pool.reserved_mhz();
  const double d0 = demands.demands_mhz[0];
  const double d1 = demands.demands_mhz[1];
  const double s0 = np.share_fractions[0] * total;
  const double s1 = np.share_fractions[1] * total;
  const double e0 = d0 - s0;
  const double e1 = d1 - s1;
  const double total_excess = e0 + e1;
  const bool all_under = e0 <= 0.0 && e1 <= 0.0;
  const bool all_over = e0 > 0.0 && e1 > 0.0;

  std::vector<double> grants(2);
  CaseLabel label;
  if (all_under || total_excess <= 0.0) {
    label = CaseLabel::c1;
    grants[0] = d0;
    grants[1] = d1;
  } else if (all_over) {
    label = CaseLabel::c2;
    if (reserved == 0.0) {
      grants[0] = s0;
      grants[1] = s1;
    } else if (total_excess <= reserved) {
      grants[0] = d0;
      grants[1] = d1;
    } else {
      grants[0] = s0 + reserved * np.priority_fractions[0];
      grants[1] = s1 + reserved * np.priority_fractions[1];
    }
  } else {
    label = CaseLabel::c3;
    if (reserved > 0.0 && total_excess <= reserved) {
      grants[0] = d0;
      grants[1] = d1;
    } else {
      // Exactly one slice is within its share here; its unused share (plus
      // the full reserve in the overload branch) goes to the heavy slice.
      const std::size_t light = e0 <= 0.0 ? 0 : 1;
      const std::size_t heavy = 1 - light;
      const double light_demand = light == 0 ? d0 : d1;
      const double light_share = light == 0 ? s0 : s1;
      const double heavy_share = heavy == 0 ? s0 : s1;
      double surplus = light_share - light_demand;
      if (reserved > 0.0) surplus += reserved;
      grants[light] = light_demand;
      grants[heavy] = heavy_share + surplus;
    }
  }
  return make_result(std::move(grants), total, label);
}

AllocationResult allocate_pr_intra(const DemandVector& demands,
                                   const ShareProfile& profile,
                                   double pool_mhz, double reserved_mhz,
                                   std::span<const double> caps_mhz) {
  validate_demands(demands);
  const auto& d = demands.demands_mhz;
  const std::size_t n = d.size();
  if (!std::isfinite(pool_mhz) || pool_mhz < 0.0) {
    fail(Errc::negative_pool, "slice pool must be non-negative");
  }
  if (!std::isfinite(reserved_mhz) || reserved_mhz < 0.0 ||
      reserved_mhz > pool_mhz) {
    fail(Errc::validation_error,
         "slice reserve must lie within [0, slice pool]");
  }
  if (profile.size() != n) {
    fail(Errc::entity_count_mismatch,
         "share profile and demand vector cover different entities");
  }
  if (!caps_mhz.empty() && caps_mhz.size() != n) {
    fail(Errc::length_mismatch, "grant caps cover " +
                                    std::to_string(caps_mhz.size()) +
                                    " entities, expected " +
                                    std::to_string(n));
  }
  for (double cap : caps_mhz) {
    if (!std::isfinite(cap) || cap < 0.0) {
      fail(Errc::validation_error, "grant caps must be non-negative");
    }
  }

  const NormalizedProfile np = normalize_profile(profile, reserved_mhz);
  const RegimeEval ev = evaluate_regime(d, np, pool_mhz);
  const auto& share = ev.share_mhz;
  const auto rho = profile.priorities();

  std::vector<double> grants(n, 0.0);
  const CaseLabel label = ev.label();

  if (n == 1) {
    // Single claimant: the policy degenerates to take-what-fits.
    grants[0] = std::min(d[0], pool_mhz);
  } else if (label == CaseLabel::c1) {
    for (std::size_t i = 0; i < n; ++i) grants[i] = d[i];
  } else if (label == CaseLabel::c2) {
    if (reserved_mhz == 0.0) {
      for (std::size_t i = 0; i < n; ++i) grants[i] = share[i];
    } else if (ev.total_excess <= reserved_mhz) {
      for (std::size_t i = 0; i < n; ++i) grants[i] = d[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        grants[i] = share[i] + reserved_mhz * np.priority_fractions[i];
      }
    }
  } else {
    if (reserved_mhz > 0.0 && ev.total_excess <= reserved_mhz) {
      for (std::size_t i = 0; i < n; ++i) grants[i] = d[i];
    } else {
      // Light entities keep their demand; their unused share pools into a
      // surplus distributed over the heavy set by priority. Each receiver
      // is clamped to its demand and the leftover is re-offered to the
      // still-unsaturated receivers until everything settles.
      double surplus = 0.0;
      std::vector<std::size_t> open;
      std::vector<double> headroom(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double excess = d[i] - share[i];
        if (excess <= 0.0) {
          grants[i] = d[i];
          surplus += share[i] - d[i];
        } else {
          open.push_back(i);
          headroom[i] = excess;
        }
      }
      if (reserved_mhz > 0.0) surplus += reserved_mhz;

      std::vector<double> extra(n, 0.0);
      double remaining = surplus;
      while (remaining > 0.0 && !open.empty()) {
        double weight_sum = 0.0;
        for (std::size_t i : open) weight_sum += rho[i];
        std::vector<std::size_t> keep;
        double freed = 0.0;
        bool any_saturated = false;
        for (std::size_t i : open) {
          const double offer = remaining * (rho[i] / weight_sum);
          if (offer >= headroom[i]) {
            extra[i] = headroom[i];
            freed += headroom[i];
            any_saturated = true;
          } else {
            keep.push_back(i);
          }
        }
        if (any_saturated) {
          remaining -= freed;
          open = std::move(keep);
          continue;
        }
        for (std::size_t i : open) {
          extra[i] = remaining * (rho[i] / weight_sum);
        }
        remaining = 0.0;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (headroom[i] > 0.0) grants[i] = share[i] + extra[i];
      }
    }
  }

  if (!caps_mhz.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      grants[i] = std::min(grants[i], caps_mhz[i]);
    }
  }
  return make_result(std::move(grants), pool_mhz, label);
}

}  // namespace specsim
