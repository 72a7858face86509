#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "specsim/chart.hpp"
#include "specsim/errors.hpp"
#include "specsim/io.hpp"
#include "specsim/metrics.hpp"
#include "specsim/rng.hpp"

using namespace specsim;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir =
      fs::temp_directory_path() / "specsim_metrics_io_test";
  fs::create_directories(dir);
  return dir;
}

RecordRow make_row(const std::string& policy, Level level,
                   const std::string& entity, double axis_value, int window,
                   double demand, double grant) {
  RecordRow row;
  row.run_id = "test";
  row.seed = 7;
  row.policy = policy;
  row.level = level;
  row.entity = entity;
  row.axis_name = "mno_user_count";
  row.axis_value = axis_value;
  row.window = window;
  row.demand_mhz = demand;
  row.grant_mhz = grant;
  row.deviation_mhz = deviation(demand, grant);
  row.case_label = CaseLabel::c1;
  return row;
}

}  // namespace

TEST_CASE("deviation is the absolute demand-supply difference") {
  CHECK(deviation(25.0, 15.0) == 10.0);
  CHECK(deviation(15.0, 15.0) == 0.0);
  CHECK(deviation(0.0, 30.0) == 30.0);
}

TEST_CASE("summarize computes per-group mean and std") {
  std::vector<RecordRow> rows = {
      make_row("PR", Level::inter, "SI-I", 5, 0, 20.0, 10.0)};
  auto summaries = summarize(rows);
  REQUIRE(summaries.size() == 1);
  CHECK(summaries[0].mean_deviation_mhz == 10.0);
  CHECK(summaries[0].std_deviation_mhz == 0.0);
  CHECK(summaries[0].window_count == 1);

  rows.push_back(make_row("PR", Level::inter, "SI-I", 5, 1, 10.0, 10.0));
  summaries = summarize(rows);
  REQUIRE(summaries.size() == 1);
  CHECK(summaries[0].mean_deviation_mhz == doctest::Approx(5.0));
  CHECK(summaries[0].window_count == 2);
}

TEST_CASE("summarize groups one row per policy and axis point") {
  std::vector<RecordRow> rows;
  for (const std::string& policy : {"FR", "PR", "CS"}) {
    for (double axis : {5.0, 10.0, 15.0}) {
      for (int w = 0; w < 4; ++w) {
        rows.push_back(make_row(policy, Level::inter, "SI-I", axis, w, 20.0,
                                15.0));
      }
    }
  }
  const auto summaries = summarize(rows);
  CHECK(summaries.size() == 9);
  for (const auto& s : summaries) {
    CHECK(s.window_count == 4);
  }
}

TEST_CASE("summarize is permutation invariant") {
  std::vector<RecordRow> rows;
  RandomStream rng(5);
  for (int i = 0; i < 200; ++i) {
    rows.push_back(make_row(i % 2 == 0 ? "PR" : "CS", Level::inter,
                            i % 3 == 0 ? "SI-I" : "SI-II", 5.0, i,
                            rng.uniform(0.0, 30.0), rng.uniform(0.0, 30.0)));
  }
  const auto before = summarize(rows);
  std::mt19937 shuffler(17);
  std::shuffle(rows.begin(), rows.end(), shuffler);
  const auto after = summarize(rows);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(before[i].policy == after[i].policy);
    CHECK(before[i].entity == after[i].entity);
    CHECK(before[i].mean_deviation_mhz ==
          doctest::Approx(after[i].mean_deviation_mhz).epsilon(1e-12));
  }
}

TEST_CASE("inter-average grouping merges the two slices") {
  std::vector<RecordRow> rows = {
      make_row("PR", Level::inter, "SI-I", 5, 0, 20.0, 10.0),
      make_row("PR", Level::inter, "SI-II", 5, 0, 10.0, 10.0),
      make_row("PR", Level::intra, "MNO-1", 5, 0, 4.0, 4.0)};
  const auto summaries = summarize(rows, EntityGrouping::inter_average);
  REQUIRE(summaries.size() == 2);
  bool found_avg = false;
  for (const auto& s : summaries) {
    if (s.entity == "SI-avg") {
      found_avg = true;
      CHECK(s.mean_deviation_mhz == doctest::Approx(5.0));
      CHECK(s.window_count == 2);
    }
  }
  CHECK(found_avg);
}

TEST_CASE("summarize rejects an empty table") {
  CHECK_THROWS_AS(summarize({}), Error);
}

TEST_CASE("records CSV round trip preserves the table") {
  const fs::path path = temp_dir() / "roundtrip.csv";
  std::vector<RecordRow> rows;
  RandomStream rng(8);
  for (int i = 0; i < 1000; ++i) {
    RecordRow row = make_row(i % 2 == 0 ? "PR" : "FR",
                             i % 3 == 0 ? Level::inter : Level::intra,
                             i % 3 == 0 ? "SI-I" : "MNO-1",
                             rng.uniform(0.0, 100.0), i,
                             rng.uniform(0.0, 500.0), rng.uniform(0.0, 30.0));
    row.case_label = static_cast<CaseLabel>(i % 6);
    rows.push_back(std::move(row));
  }
  write_records_csv(rows, path);
  const auto back = read_records_csv(path);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].run_id == rows[i].run_id);
    CHECK(back[i].seed == rows[i].seed);
    CHECK(back[i].policy == rows[i].policy);
    CHECK(back[i].level == rows[i].level);
    CHECK(back[i].entity == rows[i].entity);
    CHECK(back[i].window == rows[i].window);
    CHECK(back[i].case_label == rows[i].case_label);
    CHECK(std::abs(back[i].demand_mhz - rows[i].demand_mhz) < 1e-9);
    CHECK(std::abs(back[i].grant_mhz - rows[i].grant_mhz) < 1e-9);
    CHECK(std::abs(back[i].deviation_mhz - rows[i].deviation_mhz) < 1e-9);
  }
}

TEST_CASE("empty record list writes a header-only file") {
  const fs::path path = temp_dir() / "empty.csv";
  write_records_csv({}, path);
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == kRecordsCsvHeader);
  CHECK_FALSE(std::getline(in, line));
  CHECK(read_records_csv(path).empty());
}

TEST_CASE("summary CSV round trip") {
  const fs::path path = temp_dir() / "summary_roundtrip.csv";
  std::vector<RecordRow> rows;
  RandomStream rng(9);
  for (int i = 0; i < 50; ++i) {
    rows.push_back(make_row("CS", Level::inter, "SI-II", 10.0, i,
                            rng.uniform(0.0, 50.0), rng.uniform(0.0, 30.0)));
  }
  const auto summaries = summarize(rows);
  write_summary_csv(summaries, path);
  const auto back = read_summary_csv(path);
  REQUIRE(back.size() == summaries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].policy == summaries[i].policy);
    CHECK(back[i].window_count == summaries[i].window_count);
    CHECK(std::abs(back[i].mean_deviation_mhz -
                   summaries[i].mean_deviation_mhz) < 1e-9);
    CHECK(std::abs(back[i].std_deviation_mhz - summaries[i].std_deviation_mhz) <
          1e-9);
  }
}

TEST_CASE("csv reader rejects malformed input") {
  const fs::path path = temp_dir() / "bad.csv";
  {
    std::ofstream out(path);
    out << "wrong,header\n";
  }
  CHECK_THROWS_AS(read_records_csv(path), Error);
  CHECK_THROWS_AS(read_records_csv(temp_dir() / "missing.csv"), Error);
}

namespace {

/// Minimal well-formedness scan: tags balance and nest properly.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    const bool self_closing = tag.back() == '/';
    if (self_closing) tag.pop_back();
    const bool closing = tag[0] == '/';
    if (closing) tag.erase(0, 1);
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
    if (name.empty()) return false;
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("chart renders one polyline per policy-entity series") {
  std::vector<RecordRow> rows;
  for (const std::string& policy : {"FR", "PR", "CS"}) {
    for (double axis : {5.0, 10.0, 15.0, 20.0, 25.0, 30.0}) {
      for (int w = 0; w < 3; ++w) {
        rows.push_back(make_row(policy, Level::inter, "SI-I", axis, w,
                                20.0 + axis, 15.0));
      }
    }
  }
  const fs::path path = temp_dir() / "chart.svg";
  const std::vector<std::string> entities = {"SI-I"};
  render_summary_chart(summarize(rows), path, entities);
  const std::string svg = read_file(path);
  CHECK(xml_well_formed(svg));
  std::size_t polylines = 0;
  std::size_t pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    pos += 9;
  }
  CHECK(polylines == 3);
}

TEST_CASE("chart with a single point draws a marker without crashing") {
  std::vector<RecordRow> rows = {
      make_row("PR", Level::inter, "SI-I", 5.0, 0, 20.0, 15.0)};
  const fs::path path = temp_dir() / "point.svg";
  render_summary_chart(summarize(rows), path);
  const std::string svg = read_file(path);
  CHECK(xml_well_formed(svg));
  CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("chart rejects an empty summary set") {
  CHECK_THROWS_AS(render_summary_chart({}, temp_dir() / "none.svg"), Error);
}
