#include "specsim/config_file.hpp"

#include <string>

#include "doctest.h"
#include "specsim/errors.hpp"
#include "specsim/presets.hpp"

using namespace specsim;

namespace {

const char* kMinimalConfig = R"(
[pool]
total_mhz = 30

[mno.1]
[mno.2]
[mno.3]
)";

}  // namespace

TEST_CASE("minimal config fills documented defaults") {
  const ScenarioConfig config = parse_config_text(kMinimalConfig);
  CHECK(config.pool.total_mhz() == 30.0);
  CHECK(config.pool.reserved_mhz() == 0.0);
  CHECK(config.si1_eta.eta_bps_per_hz == 1.0);
  CHECK(config.si2_eta.eta_bps_per_hz == 1.0);
  CHECK(config.mnos.size() == 3);
  for (const auto& mno : config.mnos) {
    CHECK(mno.user_count.is_range);
    CHECK(mno.user_count.value == 30);
    CHECK(mno.activity_factor == doctest::Approx(0.1));
  }
  CHECK(config.classes.size() == 6);
  CHECK(config.classes[0].rate_mbps == 5.0);
  CHECK(config.classes[5].rate_mbps == 940.0);
  for (const auto& cls : config.classes) CHECK(cls.weight == 1.0);
  CHECK(config.inter.mode == PolicyMode::pr);
  const auto priorities = config.inter.profile.priorities();
  CHECK(priorities[0] == 1.0);
  CHECK(priorities[1] == 1.0);
  CHECK(config.windows == 1000);
  CHECK(config.seed == 1);
}

TEST_CASE("reserve larger than the pool is rejected") {
  const std::string text = R"(
[pool]
total_mhz = 30
reserved_mhz = 40

[mno.1]
)";
  try {
    parse_config_text(text);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_error);
    CHECK(std::string(e.what()).find("reserved") != std::string::npos);
  }
}

TEST_CASE("unknown keys and sections are rejected with context") {
  try {
    parse_config_text("[pool]\ntotal_mhz = 30\nbandwidth = 2\n[mno.1]\n",
                      "test.cfg");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("test.cfg:3") != std::string::npos);
    CHECK(std::string(e.what()).find("bandwidth") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text("[spectrum]\nx = 1\n"), Error);
  CHECK_THROWS_AS(parse_config_text("total_mhz = 30\n"), Error);
  CHECK_THROWS_AS(parse_config_text("[pool]\ntotal_mhz\n[mno.1]\n"), Error);
}

TEST_CASE("mno sections must be contiguously numbered") {
  CHECK_THROWS_AS(parse_config_text("[pool]\ntotal_mhz = 30\n[mno.2]\n"),
                  Error);
  CHECK_THROWS_AS(parse_config_text("[pool]\ntotal_mhz = 30\n"), Error);
}

TEST_CASE("policy section controls both stages") {
  const std::string text = R"(
[mno.1]
users = 10
[mno.2]
users = 20

[policy]
inter = fr
inter_shares = 0.3, 0.7
intra = cs
intra_reserved_mhz = 2
)";
  const ScenarioConfig config = parse_config_text(text);
  CHECK(config.inter.mode == PolicyMode::fr);
  CHECK(config.inter.fr_psi[0] == doctest::Approx(0.3));
  CHECK(config.inter.fr_psi[1] == doctest::Approx(0.7));
  CHECK(config.intra.mode == PolicyMode::cs);
  CHECK(config.intra.reserved_mhz == 2.0);
  CHECK_FALSE(config.mnos[0].user_count.is_range);
  CHECK(config.mnos[0].user_count.value == 10);
}

TEST_CASE("custom classes pattern and caps") {
  const std::string text = R"(
[classes]
rates_mbps = 1, 2, 3, 4, 5, 6
weights = 1, 1, 2, 2, 3, 3

[mno.1]
users_max = 12
activity = 0.5
pattern = 0.5, 0.5, 0, 0, 0, 0

[policy]
intra_caps = 9
)";
  const ScenarioConfig config = parse_config_text(text);
  CHECK(config.classes[2].weight == 2.0);
  CHECK(config.classes[5].rate_mbps == 6.0);
  CHECK(config.mnos[0].usage_pattern[0] == 0.5);
  CHECK(config.intra.caps_mhz == std::vector<double>{9.0});
  CHECK_THROWS_AS(
      parse_config_text("[classes]\nrates_mbps = 1, 2\n[mno.1]\n"), Error);
  CHECK_THROWS_AS(parse_config_text(R"(
[mno.1]
pattern = 0.5, 0.6, 0, 0, 0, 0
)"),
                  Error);
  CHECK_THROWS_AS(parse_config_text(R"(
[mno.1]
users = 5
users_max = 10
)"),
                  Error);
}

TEST_CASE("desk table shorthand") {
  const ScenarioConfig config = parse_config_text(
      "[classes]\ntable = desk\n[mno.1]\n");
  CHECK(config.classes[0].rate_mbps == doctest::Approx(0.05));
  CHECK(config.classes[5].rate_mbps == doctest::Approx(9.4));
}

TEST_CASE("strict rates override restores the reference table") {
  ScenarioConfig config = parse_config_text("[classes]\ntable = desk\n[mno.1]\n");
  apply_strict_rates(config);
  CHECK(config.classes[0].rate_mbps == 5.0);
  CHECK(config.mnos[0].activity_factor == 1.0);
}

TEST_CASE("presets expand to valid configs") {
  for (const std::string& name : preset_names()) {
    const Preset preset = make_preset(name);
    CHECK_NOTHROW(validate_config(preset.base));
    CHECK(!preset.values.empty());
    CHECK(!preset.policies.empty());
    for (double v : preset.values) {
      CHECK_NOTHROW(apply_axis(preset.base, preset.axis, v));
    }
  }
  CHECK_THROWS_AS(make_preset("fig9"), Error);
}
