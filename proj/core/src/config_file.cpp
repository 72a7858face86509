#include "specsim/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "specsim/errors.hpp"

namespace specsim {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

struct Section {
  std::string name;
  int line = 0;
  std::map<std::string, Entry> entries;
};

struct Document {
  std::string origin;
  std::vector<Section> sections;

  const Section* find(const std::string& name) const {
    for (const Section& sec : sections) {
      if (sec.name == name) return &sec;
    }
    return nullptr;
  }
};

[[noreturn]] void parse_fail(const std::string& origin, int line,
                             const std::string& message) {
  fail(Errc::parse_error, origin + ":" + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return std::string(text.substr(begin, end - begin));
}

Document parse_document(std::string_view text, const std::string& origin) {
  Document doc;
  doc.origin = origin;
  Section* current = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    // Strip comments: whole-line or after whitespace.
    std::string line(raw);
    for (std::size_t i = 0; i < line.size(); ++i) {
      if ((line[i] == '#' || line[i] == ';') &&
          (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
        line.erase(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        parse_fail(origin, line_no, "unterminated section header");
      }
      Section sec;
      sec.name = trim(std::string_view(line).substr(1, line.size() - 2));
      sec.line = line_no;
      if (sec.name.empty()) {
        parse_fail(origin, line_no, "empty section name");
      }
      if (doc.find(sec.name) != nullptr) {
        parse_fail(origin, line_no, "duplicate section [" + sec.name + "]");
      }
      doc.sections.push_back(std::move(sec));
      current = &doc.sections.back();
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      parse_fail(origin, line_no, "expected key = value");
    }
    if (current == nullptr) {
      parse_fail(origin, line_no, "key outside of any section");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      parse_fail(origin, line_no, "empty key");
    }
    if (current->entries.count(key) != 0) {
      parse_fail(origin, line_no,
                 "duplicate key '" + key + "' in [" + current->name + "]");
    }
    current->entries[key] = Entry{value, line_no};
  }
  return doc;
}

class SectionReader {
 public:
  SectionReader(const Document& doc, const Section* section)
      : doc_(doc), section_(section) {}

  bool present() const { return section_ != nullptr; }

  std::optional<std::string> raw(const std::string& key) const {
    if (section_ == nullptr) return std::nullopt;
    const auto it = section_->entries.find(key);
    if (it == section_->entries.end()) return std::nullopt;
    return it->second.value;
  }

  double number(const std::string& key, double fallback) const {
    const auto text = raw(key);
    if (!text) return fallback;
    return to_number(*text, key);
  }

  int integer(const std::string& key, int fallback) const {
    const double v = number(key, fallback);
    const double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-9) {
      key_fail(key, "expected an integer");
    }
    return static_cast<int>(rounded);
  }

  std::uint64_t unsigned64(const std::string& key,
                           std::uint64_t fallback) const {
    const auto text = raw(key);
    if (!text) return fallback;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(text->c_str(), &end, 10);
    if (errno != 0 || end == text->c_str() || *end != '\0') {
      key_fail(key, "expected an unsigned integer, got '" + *text + "'");
    }
    return v;
  }

  bool boolean(const std::string& key, bool fallback) const {
    const auto text = raw(key);
    if (!text) return fallback;
    if (*text == "true" || *text == "yes" || *text == "1") return true;
    if (*text == "false" || *text == "no" || *text == "0") return false;
    key_fail(key, "expected true/false, got '" + *text + "'");
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto value = raw(key);
    return value ? *value : fallback;
  }

  std::optional<std::vector<double>> number_list(const std::string& key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    std::vector<double> values;
    std::string item;
    std::istringstream in(*text);
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (item.empty()) {
        key_fail(key, "empty list item");
      }
      values.push_back(to_number(item, key));
    }
    if (values.empty()) {
      key_fail(key, "expected a comma-separated list");
    }
    return values;
  }

  [[noreturn]] void key_fail(const std::string& key,
                             const std::string& message) const {
    const int line =
        section_ != nullptr && section_->entries.count(key)
            ? section_->entries.at(key).line
            : (section_ != nullptr ? section_->line : 0);
    parse_fail(doc_.origin, line, "key '" + key + "': " + message);
  }

 private:
  double to_number(const std::string& text, const std::string& key) const {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end == text.c_str() || *end != '\0') {
      key_fail(key, "expected a number, got '" + text + "'");
    }
    return v;
  }

  const Document& doc_;
  const Section* section_;
};

void reject_unknown_keys(const Document& doc, const Section& section,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, entry] : section.entries) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end()) {
      parse_fail(doc.origin, entry.line,
                 "unknown key '" + key + "' in [" + section.name + "]");
    }
  }
}

std::vector<ServiceClass> load_classes(const Document& doc) {
  const Section* section = doc.find("classes");
  SectionReader reader(doc, section);
  std::vector<ServiceClass> classes = default_service_classes();
  if (section != nullptr) {
    reject_unknown_keys(doc, *section, {"rates_mbps", "weights", "table"});
    const std::string table = reader.text("table", "");
    if (table == "desk") {
      classes = desk_scale_service_classes();
    } else if (table == "paper-rates" || table == "reference") {
      classes = default_service_classes();
    } else if (!table.empty()) {
      reader.key_fail("table", "expected 'desk' or 'reference'");
    }
    if (const auto rates = reader.number_list("rates_mbps")) {
      if (rates->size() != classes.size()) {
        reader.key_fail("rates_mbps", "expected " +
                                          std::to_string(classes.size()) +
                                          " rates");
      }
      for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].rate_mbps = (*rates)[i];
      }
    }
    if (const auto weights = reader.number_list("weights")) {
      if (weights->size() != classes.size()) {
        reader.key_fail("weights", "expected " +
                                       std::to_string(classes.size()) +
                                       " weights");
      }
      for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].weight = (*weights)[i];
      }
    }
  }
  return classes;
}

MnoProfile load_mno(const Document& doc, const Section& section,
                    std::size_t n_classes) {
  reject_unknown_keys(doc, section,
                      {"users", "users_max", "activity", "pattern"});
  SectionReader reader(doc, &section);
  MnoProfile mno;
  const auto fixed = reader.raw("users");
  const auto ranged = reader.raw("users_max");
  if (fixed && ranged) {
    reader.key_fail("users", "give either users or users_max, not both");
  }
  if (fixed) {
    mno.user_count = UserCount::fixed(reader.integer("users", 0));
  } else {
    mno.user_count = UserCount::range(reader.integer("users_max", 30));
  }
  mno.activity_factor = reader.number("activity", 0.1);
  const std::string pattern = reader.text("pattern", "uniform");
  if (pattern == "uniform") {
    mno.usage_pattern = uniform_pattern(n_classes);
  } else {
    mno.usage_pattern = *reader.number_list("pattern");
  }
  return mno;
}

}  // namespace

ScenarioConfig parse_config_text(std::string_view text,
                                 const std::string& origin) {
  const Document doc = parse_document(text, origin);

  for (const Section& section : doc.sections) {
    const bool known = section.name == "pool" || section.name == "si1" ||
                       section.name == "si2" || section.name == "classes" ||
                       section.name == "policy" || section.name == "run" ||
                       section.name.rfind("mno.", 0) == 0;
    if (!known) {
      parse_fail(origin, section.line,
                 "unknown section [" + section.name + "]");
    }
  }

  ScenarioConfig config;

  const Section* pool_sec = doc.find("pool");
  if (pool_sec != nullptr) {
    reject_unknown_keys(doc, *pool_sec, {"total_mhz", "reserved_mhz"});
  }
  SectionReader pool(doc, pool_sec);
  config.pool =
      SpectrumPool(pool.number("total_mhz", 30.0), pool.number("reserved_mhz", 0.0));

  const Section* si1_sec = doc.find("si1");
  if (si1_sec != nullptr) {
    reject_unknown_keys(doc, *si1_sec,
                        {"fixed_mbps", "uniform_low_mbps", "uniform_high_mbps",
                         "eta_bps_per_hz"});
  }
  SectionReader si1(doc, si1_sec);
  config.si1.fixed_mbps = si1.number("fixed_mbps", 5.0);
  config.si1.uniform_low_mbps = si1.number("uniform_low_mbps", 1.0);
  config.si1.uniform_high_mbps = si1.number("uniform_high_mbps", 20.0);
  config.si1_eta.eta_bps_per_hz = si1.number("eta_bps_per_hz", 1.0);

  const Section* si2_sec = doc.find("si2");
  if (si2_sec != nullptr) {
    reject_unknown_keys(doc, *si2_sec, {"eta_bps_per_hz", "stochastic"});
  }
  SectionReader si2(doc, si2_sec);
  config.si2_eta.eta_bps_per_hz = si2.number("eta_bps_per_hz", 1.0);
  config.stochastic_mno_load = si2.boolean("stochastic", true);

  config.classes = load_classes(doc);

  // MNO sections must be numbered mno.1 ... mno.K without gaps.
  std::vector<const Section*> mno_sections;
  for (std::size_t q = 1;; ++q) {
    const Section* sec = doc.find("mno." + std::to_string(q));
    if (sec == nullptr) break;
    mno_sections.push_back(sec);
  }
  std::size_t mno_total = 0;
  for (const Section& section : doc.sections) {
    if (section.name.rfind("mno.", 0) == 0) ++mno_total;
  }
  if (mno_total != mno_sections.size()) {
    fail(Errc::parse_error,
         origin + ": MNO sections must be numbered mno.1..mno.N without gaps");
  }
  if (mno_sections.empty()) {
    fail(Errc::validation_error, origin + ": at least one [mno.N] section is required");
  }
  for (const Section* sec : mno_sections) {
    config.mnos.push_back(load_mno(doc, *sec, config.classes.size()));
  }
  const std::size_t n_mno = config.mnos.size();

  const Section* policy_sec = doc.find("policy");
  if (policy_sec != nullptr) {
    reject_unknown_keys(doc, *policy_sec,
                        {"inter", "inter_shares", "inter_priorities", "intra",
                         "intra_shares", "intra_priorities",
                         "intra_reserved_mhz", "intra_caps"});
  }
  SectionReader policy(doc, policy_sec);

  const std::string inter_mode = policy.text("inter", "pr");
  auto inter_shares = policy.number_list("inter_shares")
                          .value_or(std::vector<double>{0.5, 0.5});
  auto inter_priorities = policy.number_list("inter_priorities")
                              .value_or(std::vector<double>(inter_shares.size(), 1.0));
  config.inter.profile = ShareProfile(inter_shares, inter_priorities);
  set_inter_mode(config, policy_mode_from_string(inter_mode));

  const std::string intra_mode = policy.text("intra", "pr");
  auto intra_shares = policy.number_list("intra_shares")
                          .value_or(std::vector<double>(n_mno, 1.0));
  auto intra_priorities =
      policy.number_list("intra_priorities")
          .value_or(std::vector<double>(intra_shares.size(), 1.0));
  config.intra.mode = policy_mode_from_string(intra_mode);
  config.intra.profile = ShareProfile(intra_shares, intra_priorities);
  config.intra.reserved_mhz = policy.number("intra_reserved_mhz", 0.0);
  if (const auto caps = policy.number_list("intra_caps")) {
    config.intra.caps_mhz = *caps;
  }
  {
    double sum = 0.0;
    for (double s : intra_shares) sum += s;
    config.intra.fr_psi = intra_shares;
    for (double& psi : config.intra.fr_psi) psi /= sum;
  }

  const Section* run_sec = doc.find("run");
  if (run_sec != nullptr) {
    reject_unknown_keys(doc, *run_sec, {"windows", "seed", "run_id"});
  }
  SectionReader run(doc, run_sec);
  config.windows = run.integer("windows", 1000);
  config.seed = run.unsigned64("seed", 1);
  config.run_id = run.text("run_id", "run");

  validate_config(config);
  return config;
}

ScenarioConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(Errc::io_error, "cannot open config '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path.string());
}

void apply_strict_rates(ScenarioConfig& config) {
  config.classes = default_service_classes();
  for (MnoProfile& mno : config.mnos) {
    mno.activity_factor = 1.0;
    mno.usage_pattern = uniform_pattern(config.classes.size());
  }
}

}  // namespace specsim
