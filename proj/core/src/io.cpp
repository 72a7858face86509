#include "specsim/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "specsim/errors.hpp"

namespace specsim {

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

double parse_double(const std::string& text, const std::string& where) {
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(text.c_str(), &end);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    fail(Errc::parse_error, where + ": bad number '" + text + "'");
  }
  return value;
}

long long parse_int(const std::string& text, const std::string& where) {
  char* end = nullptr;
  errno = 0;
  const long long value = std::strtoll(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    fail(Errc::parse_error, where + ": bad integer '" + text + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& where) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    fail(Errc::parse_error, where + ": bad integer '" + text + "'");
  }
  return value;
}

std::vector<std::string> read_lines(const std::filesystem::path& path,
                                    std::string_view expected_header) {
  std::ifstream in(path);
  if (!in) {
    fail(Errc::io_error, "cannot open '" + path.string() + "' for reading");
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty() || lines.front() != expected_header) {
    fail(Errc::parse_error,
         "'" + path.string() + "' does not start with the expected header");
  }
  return lines;
}

}  // namespace

void atomic_write(const std::filesystem::path& path,
                  std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      fail(Errc::io_error, "cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) {
      fail(Errc::io_error, "short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    fail(Errc::io_error,
         "cannot move '" + tmp.string() + "' to '" + path.string() + "'");
  }
}

void write_records_csv(std::span<const RecordRow> rows,
                       const std::filesystem::path& path) {
  std::string buf;
  buf.reserve(rows.size() * 96 + 128);
  buf.append(kRecordsCsvHeader);
  buf.push_back('\n');
  for (const RecordRow& row : rows) {
    buf.append(row.run_id);
    buf.push_back(',');
    buf.append(std::to_string(row.seed));
    buf.push_back(',');
    buf.append(row.policy);
    buf.push_back(',');
    buf.append(to_string(row.level));
    buf.push_back(',');
    buf.append(row.entity);
    buf.push_back(',');
    buf.append(row.axis_name);
    buf.push_back(',');
    buf.append(format_double(row.axis_value));
    buf.push_back(',');
    buf.append(std::to_string(row.window));
    buf.push_back(',');
    buf.append(format_double(row.demand_mhz));
    buf.push_back(',');
    buf.append(format_double(row.grant_mhz));
    buf.push_back(',');
    buf.append(format_double(row.deviation_mhz));
    buf.push_back(',');
    buf.append(to_string(row.case_label));
    buf.push_back('\n');
  }
  atomic_write(path, buf);
}

std::vector<RecordRow> read_records_csv(const std::filesystem::path& path) {
  const auto lines = read_lines(path, kRecordsCsvHeader);
  std::vector<RecordRow> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != 12) {
      fail(Errc::parse_error, where + ": expected 12 fields");
    }
    RecordRow row;
    row.run_id = fields[0];
    row.seed = parse_u64(fields[1], where);
    row.policy = fields[2];
    row.level = level_from_string(fields[3]);
    row.entity = fields[4];
    row.axis_name = fields[5];
    row.axis_value = parse_double(fields[6], where);
    row.window = static_cast<int>(parse_int(fields[7], where));
    row.demand_mhz = parse_double(fields[8], where);
    row.grant_mhz = parse_double(fields[9], where);
    row.deviation_mhz = parse_double(fields[10], where);
    row.case_label = case_label_from_string(fields[11]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_summary_csv(std::span<const DeviationSummary> summaries,
                       const std::filesystem::path& path) {
  std::string buf;
  buf.reserve(summaries.size() * 96 + 128);
  buf.append(kSummaryCsvHeader);
  buf.push_back('\n');
  for (const DeviationSummary& s : summaries) {
    buf.append(s.run_id);
    buf.push_back(',');
    buf.append(s.policy);
    buf.push_back(',');
    buf.append(to_string(s.level));
    buf.push_back(',');
    buf.append(s.entity);
    buf.push_back(',');
    buf.append(s.axis_name);
    buf.push_back(',');
    buf.append(format_double(s.axis_value));
    buf.push_back(',');
    buf.append(std::to_string(s.window_count));
    buf.push_back(',');
    buf.append(format_double(s.mean_deviation_mhz));
    buf.push_back(',');
    buf.append(format_double(s.std_deviation_mhz));
    buf.push_back('\n');
  }
  atomic_write(path, buf);
}

std::vector<DeviationSummary> read_summary_csv(
    const std::filesystem::path& path) {
  const auto lines = read_lines(path, kSummaryCsvHeader);
  std::vector<DeviationSummary> summaries;
  summaries.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != 9) {
      fail(Errc::parse_error, where + ": expected 9 fields");
    }
    DeviationSummary s;
    s.run_id = fields[0];
    s.policy = fields[1];
    s.level = level_from_string(fields[2]);
    s.entity = fields[3];
    s.axis_name = fields[4];
    s.axis_value = parse_double(fields[5], where);
    s.window_count = static_cast<std::size_t>(parse_int(fields[6], where));
    s.mean_deviation_mhz = parse_double(fields[7], where);
    s.std_deviation_mhz = parse_double(fields[8], where);
    summaries.push_back(std::move(s));
  }
  return summaries;
}

}  // namespace specsim
