#include "specsim/model.hpp"

#include <functional>
#include <vector>

#include "doctest.h"
#include "specsim/errors.hpp"
#include "specsim/rng.hpp"

using namespace specsim;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::validation_error;
}

}  // namespace

TEST_CASE("spectrum pool rejects bad bounds") {
  CHECK_THROWS_AS(SpectrumPool(0.0), Error);
  CHECK_THROWS_AS(SpectrumPool(-5.0), Error);
  CHECK_THROWS_AS(SpectrumPool(30.0, -1.0), Error);
  CHECK_THROWS_AS(SpectrumPool(30.0, 31.0), Error);
  const SpectrumPool pool(30.0, 6.0);
  CHECK(pool.total_mhz() == 30.0);
  CHECK(pool.reserved_mhz() == 6.0);
}

TEST_CASE("share profile invariants") {
  CHECK(code_of([] { ShareProfile({}, {}); }) == Errc::empty_shares);
  CHECK(code_of([] { ShareProfile({1.0, 1.0}, {1.0}); }) ==
        Errc::length_mismatch);
  CHECK(code_of([] { ShareProfile({1.0, -1.0}, {1.0, 1.0}); }) ==
        Errc::non_positive_share);
  CHECK(code_of([] { ShareProfile({0.0, 0.0}, {1.0, 1.0}); }) ==
        Errc::non_positive_share);
  CHECK(code_of([] { ShareProfile({1.0, 1.0}, {1.0, 0.0}); }) ==
        Errc::non_positive_priority);
  CHECK(code_of([] { ShareProfile({1.0, 1.0}, {1.0, -2.0}); }) ==
        Errc::non_positive_priority);
}

TEST_CASE("validate_profile normalizes symmetric weights") {
  const ShareProfile profile({1.0, 1.0}, {1.0, 1.0});
  const auto np = validate_profile(profile, SpectrumPool(30.0, 0.0), 2);
  CHECK(np.share_fractions[0] == doctest::Approx(0.5));
  CHECK(np.share_fractions[1] == doctest::Approx(0.5));
  CHECK(np.priority_fractions[0] == doctest::Approx(0.5));
  CHECK(np.priority_fractions[1] == doctest::Approx(0.5));
}

TEST_CASE("validate_profile normalizes MHz shares over shares plus reserve") {
  const ShareProfile profile({12.0, 12.0}, {1.0, 1.0});
  const auto np = validate_profile(profile, SpectrumPool(30.0, 6.0), 2);
  CHECK(np.share_fractions[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(np.share_fractions[1] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("validate_profile rejects entity count mismatch") {
  const ShareProfile profile({1.0, 1.0}, {1.0, 1.0});
  CHECK(code_of([&] {
          validate_profile(profile, SpectrumPool(30.0), 3);
        }) == Errc::length_mismatch);
}

TEST_CASE("normalization is idempotent with no reserve") {
  RandomStream rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    std::vector<double> shares(n), priorities(n);
    for (auto& s : shares) s = rng.uniform(0.01, 10.0);
    for (auto& p : priorities) p = rng.uniform(0.01, 10.0);
    const auto once = normalize_profile(ShareProfile(shares, priorities), 0.0);
    const auto twice = normalize_profile(
        ShareProfile(once.share_fractions, once.priority_fractions), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(twice.share_fractions[i] ==
            doctest::Approx(once.share_fractions[i]).epsilon(1e-12));
      CHECK(twice.priority_fractions[i] ==
            doctest::Approx(once.priority_fractions[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("priority normalization is scale invariant") {
  RandomStream rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const double scale = rng.uniform(0.001, 1000.0);
    std::vector<double> priorities = {rng.uniform(0.1, 5.0),
                                      rng.uniform(0.1, 5.0),
                                      rng.uniform(0.1, 5.0)};
    std::vector<double> scaled = priorities;
    for (double& p : scaled) p *= scale;
    const ShareProfile a({1.0, 2.0, 3.0}, priorities);
    const ShareProfile b({1.0, 2.0, 3.0}, scaled);
    const double theta = rng.uniform(0.0, 10.0);
    const auto na = normalize_profile(a, theta);
    const auto nb = normalize_profile(b, theta);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(nb.priority_fractions[i] ==
            doctest::Approx(na.priority_fractions[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("share normalization is scale invariant when reserve is zero") {
  RandomStream rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const double scale = rng.uniform(0.001, 1000.0);
    std::vector<double> shares = {rng.uniform(0.1, 5.0), rng.uniform(0.1, 5.0)};
    std::vector<double> scaled = shares;
    for (double& s : scaled) s *= scale;
    const auto na = normalize_profile(ShareProfile(shares, {1.0, 1.0}), 0.0);
    const auto nb = normalize_profile(ShareProfile(scaled, {1.0, 1.0}), 0.0);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(nb.share_fractions[i] ==
            doctest::Approx(na.share_fractions[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("default rate table is strictly increasing over the six labels") {
  for (const auto& classes :
       {default_service_classes(), desk_scale_service_classes()}) {
    REQUIRE(classes.size() == 6);
    CHECK(classes.front().label == ClassLabel::vl);
    CHECK(classes.back().label == ClassLabel::s);
    for (std::size_t i = 1; i < classes.size(); ++i) {
      CHECK(classes[i].rate_mbps > classes[i - 1].rate_mbps);
    }
    CHECK_NOTHROW(validate_classes(classes));
  }
}

TEST_CASE("mno profile validation") {
  MnoProfile mno;
  mno.user_count = UserCount::fixed(10);
  mno.activity_factor = 0.5;
  mno.usage_pattern = uniform_pattern(6);
  CHECK_NOTHROW(validate_mno(mno, 6));

  MnoProfile bad = mno;
  bad.activity_factor = 1.5;
  CHECK_THROWS_AS(validate_mno(bad, 6), Error);

  bad = mno;
  bad.usage_pattern = {0.5, 0.6};
  CHECK(code_of([&] { validate_mno(bad, 2); }) == Errc::validation_error);
  CHECK(code_of([&] { validate_mno(bad, 6); }) == Errc::length_mismatch);

  bad = mno;
  bad.user_count = UserCount::fixed(-1);
  CHECK_THROWS_AS(validate_mno(bad, 6), Error);
}

TEST_CASE("user count expectation") {
  CHECK(UserCount::fixed(30).expected() == 30.0);
  CHECK(UserCount::range(30).expected() == doctest::Approx(15.5));
}

TEST_CASE("si1 model validation") {
  CHECK_NOTHROW(validate_si1(Si1TrafficModel{5.0, 1.0, 20.0}));
  CHECK_NOTHROW(validate_si1(Si1TrafficModel{0.0, 0.0, 0.0}));
  CHECK_THROWS_AS(validate_si1(Si1TrafficModel{-1.0, 1.0, 20.0}), Error);
  CHECK_THROWS_AS(validate_si1(Si1TrafficModel{5.0, 21.0, 20.0}), Error);
}

TEST_CASE("demand vector validation") {
  CHECK_NOTHROW(validate_demands(DemandVector{{0.0, 3.5}}));
  CHECK_THROWS_AS(validate_demands(DemandVector{{}}), Error);
  CHECK_THROWS_AS(validate_demands(DemandVector{{-0.5}}), Error);
}

TEST_CASE("label round trips") {
  for (CaseLabel label :
       {CaseLabel::c1, CaseLabel::c2, CaseLabel::c3, CaseLabel::fr,
        CaseLabel::cs, CaseLabel::cs_degenerate}) {
    CHECK(case_label_from_string(to_string(label)) == label);
  }
  for (ClassLabel label : {ClassLabel::vl, ClassLabel::l, ClassLabel::m,
                           ClassLabel::mh, ClassLabel::h, ClassLabel::s}) {
    CHECK(class_label_from_string(to_string(label)) == label);
  }
  CHECK_THROWS_AS(case_label_from_string("C-IV"), Error);
}
