#include "specsim/model.hpp"

#include <cmath>
#include <utility>

#include "specsim/errors.hpp"

namespace specsim {

SpectrumPool::SpectrumPool(double total_mhz, double reserved_mhz)
    : total_mhz_(total_mhz), reserved_mhz_(reserved_mhz) {
  if (!std::isfinite(total_mhz) || total_mhz <= 0.0) {
    fail(Errc::validation_error, "pool total must be positive MHz");
  }
  if (!std::isfinite(reserved_mhz) || reserved_mhz < 0.0 ||
      reserved_mhz > total_mhz) {
    fail(Errc::validation_error,
         "reserved spectrum must lie within [0, total]");
  }
}

ShareProfile::ShareProfile(std::vector<double> principal_shares,
                           std::vector<double> priorities)
    : shares_(std::move(principal_shares)), priorities_(std::move(priorities)) {
  if (shares_.empty()) {
    fail(Errc::empty_shares, "share profile needs at least one entity");
  }
  if (shares_.size() != priorities_.size()) {
    fail(Errc::length_mismatch, "shares and priorities differ in length");
  }
  double sum = 0.0;
  for (double s : shares_) {
    if (!std::isfinite(s) || s < 0.0) {
      fail(Errc::non_positive_share, "principal shares must be non-negative");
    }
    sum += s;
  }
  if (sum <= 0.0) {
    fail(Errc::non_positive_share, "principal shares must not all be zero");
  }
  for (double p : priorities_) {
    if (!std::isfinite(p) || p <= 0.0) {
      fail(Errc::non_positive_priority, "priorities must be positive");
    }
  }
}

ShareProfile ShareProfile::equal(std::size_t n) {
  if (n == 0) fail(Errc::empty_shares, "share profile needs at least one entity");
  return ShareProfile(std::vector<double>(n, 1.0), std::vector<double>(n, 1.0));
}

NormalizedProfile normalize_profile(const ShareProfile& profile,
                                    double reserved_mhz) {
  NormalizedProfile out;
  const auto shares = profile.principal_shares();
  const auto priorities = profile.priorities();
  double share_sum = 0.0;
  for (double s : shares) share_sum += s;
  double priority_sum = 0.0;
  for (double p : priorities) priority_sum += p;

  const double share_norm = share_sum + reserved_mhz;
  out.share_fractions.reserve(shares.size());
  out.priority_fractions.reserve(priorities.size());
  for (double s : shares) out.share_fractions.push_back(s / share_norm);
  for (double p : priorities) out.priority_fractions.push_back(p / priority_sum);
  return out;
}

NormalizedProfile validate_profile(const ShareProfile& profile,
                                   const SpectrumPool& pool,
                                   std::size_t n_entities) {
  if (profile.size() != n_entities) {
    fail(Errc::length_mismatch, "share profile covers " +
                                    std::to_string(profile.size()) +
                                    " entities, expected " +
                                    std::to_string(n_entities));
  }
  return normalize_profile(profile, pool.reserved_mhz());
}

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::vl: return "VL";
    case ClassLabel::l: return "L";
    case ClassLabel::m: return "M";
    case ClassLabel::mh: return "MH";
    case ClassLabel::h: return "H";
    case ClassLabel::s: return "S";
  }
  return "?";
}

ClassLabel class_label_from_string(const std::string& text) {
  if (text == "VL" || text == "vl") return ClassLabel::vl;
  if (text == "L" || text == "l") return ClassLabel::l;
  if (text == "M" || text == "m") return ClassLabel::m;
  if (text == "MH" || text == "mh") return ClassLabel::mh;
  if (text == "H" || text == "h") return ClassLabel::h;
  if (text == "S" || text == "s") return ClassLabel::s;
  fail(Errc::parse_error, "unknown service class label '" + text + "'");
}

void validate_classes(std::span<const ServiceClass> classes) {
  if (classes.empty()) {
    fail(Errc::validation_error, "at least one service class is required");
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!std::isfinite(classes[i].rate_mbps) || classes[i].rate_mbps <= 0.0) {
      fail(Errc::validation_error, "service class rates must be positive");
    }
    if (!std::isfinite(classes[i].weight) || classes[i].weight <= 0.0) {
      fail(Errc::validation_error, "service class weights must be positive");
    }
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i].label == classes[j].label) {
        fail(Errc::validation_error, "service class labels must be distinct");
      }
    }
  }
}

namespace {

std::vector<ServiceClass> class_table(const double (&rates)[6]) {
  return {
      {ClassLabel::vl, rates[0]}, {ClassLabel::l, rates[1]},
      {ClassLabel::m, rates[2]},  {ClassLabel::mh, rates[3]},
      {ClassLabel::h, rates[4]},  {ClassLabel::s, rates[5]},
  };
}

}  // namespace

std::vector<ServiceClass> default_service_classes() {
  return class_table({5.0, 20.0, 30.0, 300.0, 600.0, 940.0});
}

std::vector<ServiceClass> desk_scale_service_classes() {
  return class_table({0.05, 0.2, 0.3, 3.0, 6.0, 9.4});
}

void validate_mno(const MnoProfile& profile, std::size_t n_classes) {
  if (profile.user_count.value < 0 ||
      (profile.user_count.is_range && profile.user_count.value < 1)) {
    fail(Errc::validation_error, "user count must be non-negative (range max >= 1)");
  }
  if (!std::isfinite(profile.activity_factor) ||
      profile.activity_factor < 0.0 || profile.activity_factor > 1.0) {
    fail(Errc::validation_error, "activity factor must lie in [0, 1]");
  }
  if (profile.usage_pattern.size() != n_classes) {
    fail(Errc::length_mismatch, "usage pattern covers " +
                                    std::to_string(profile.usage_pattern.size()) +
                                    " classes, expected " +
                                    std::to_string(n_classes));
  }
  double sum = 0.0;
  for (double b : profile.usage_pattern) {
    if (!std::isfinite(b) || b < 0.0) {
      fail(Errc::validation_error, "usage pattern entries must be non-negative");
    }
    sum += b;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    fail(Errc::validation_error, "usage pattern must sum to one");
  }
}

std::vector<double> uniform_pattern(std::size_t n) {
  return std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
}

void validate_si1(const Si1TrafficModel& model) {
  if (!std::isfinite(model.fixed_mbps) || model.fixed_mbps < 0.0) {
    fail(Errc::validation_error, "fixed slice-I load must be non-negative");
  }
  if (!std::isfinite(model.uniform_low_mbps) ||
      !std::isfinite(model.uniform_high_mbps) || model.uniform_low_mbps < 0.0 ||
      model.uniform_low_mbps > model.uniform_high_mbps) {
    fail(Errc::validation_error,
         "slice-I uniform bounds must satisfy 0 <= low <= high");
  }
}

void validate_demands(const DemandVector& demands) {
  if (demands.demands_mhz.empty()) {
    fail(Errc::validation_error, "demand vector is empty");
  }
  for (double d : demands.demands_mhz) {
    if (!std::isfinite(d) || d < 0.0) {
      fail(Errc::validation_error, "demands must be finite and non-negative");
    }
  }
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::c1: return "C-I";
    case CaseLabel::c2: return "C-II";
    case CaseLabel::c3: return "C-III";
    case CaseLabel::fr: return "FR";
    case CaseLabel::cs: return "CS";
    case CaseLabel::cs_degenerate: return "CS-degenerate";
  }
  return "?";
}

CaseLabel case_label_from_string(const std::string& text) {
  if (text == "C-I") return CaseLabel::c1;
  if (text == "C-II") return CaseLabel::c2;
  if (text == "C-III") return CaseLabel::c3;
  if (text == "FR") return CaseLabel::fr;
  if (text == "CS") return CaseLabel::cs;
  if (text == "CS-degenerate") return CaseLabel::cs_degenerate;
  fail(Errc::parse_error, "unknown case label '" + text + "'");
}

}  // namespace specsim
