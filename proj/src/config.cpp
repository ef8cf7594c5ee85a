#include "symexp/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace symexp {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool valid_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

std::optional<double> parse_double(std::string_view s) {
  if (s == "inf" || s == "infinity") return HUGE_VAL;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || std::isnan(value)) return std::nullopt;
  return value;
}

}  // namespace

Config Config::parse(std::string_view text, std::string source) {
  Config config;
  config.source_ = std::move(source);
  std::istringstream in{std::string(text)};
  std::string section;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto comment = raw.find_first_of("#;");
    const std::string line = trim(std::string_view(raw).substr(0, comment));
    if (line.empty()) continue;
    const std::string where = config.source_ + ":" + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header", line_no);
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!valid_identifier(section)) throw ConfigError(where + "invalid section name '" + section + "'", line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!valid_identifier(key)) throw ConfigError(where + "invalid key '" + key + "'", line_no);
    if (section.empty()) throw ConfigError(where + "key '" + key + "' outside of a [section]", line_no);
    const std::string full = section + "." + key;
    if (config.entries_.contains(full)) {
      throw ConfigError(where + "duplicate key '" + full + "' (first defined on line " +
                            std::to_string(config.entries_[full].line) + ")",
                        line_no);
    }
    config.entries_[full] = Entry{value, line_no};
  }
  return config;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

void Config::set(const std::string& key, std::string value) { entries_[key] = Entry{std::move(value), 0}; }

void Config::apply_override(std::string_view assignment) {
  const auto eq = assignment.find('=');
  const std::string key = trim(assignment.substr(0, std::min(eq, assignment.size())));
  const auto dot = key.find('.');
  if (eq == std::string_view::npos || dot == std::string::npos || !valid_identifier(key.substr(0, dot)) ||
      !valid_identifier(key.substr(dot + 1))) {
    throw ConfigError("--set: expected section.key=value, got '" + std::string(assignment) + "'", 0);
  }
  set(key, trim(assignment.substr(eq + 1)));
}

bool Config::has_section(std::string_view section) const {
  const std::string prefix = std::string(section) + ".";
  const auto it = entries_.lower_bound(prefix);
  return it != entries_.end() && it->first.starts_with(prefix);
}

std::string Config::location(const Entry& e) const {
  return e.line == 0 ? std::string("--set") : source_ + ":" + std::to_string(e.line);
}

void Config::fail(const std::string& key, const std::string& message) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(source_ + ": " + key + ": " + message, 0);
  throw ConfigError(location(it->second) + ": " + key + ": " + message, it->second.line);
}

std::optional<std::string> Config::get_string(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::optional<double> Config::get_double(const std::string& key) const {
  const auto s = get_string(key);
  if (!s) return std::nullopt;
  const auto value = parse_double(*s);
  if (!value) fail(key, "expected a number, got '" + *s + "'");
  return value;
}

std::optional<long long> Config::get_int(const std::string& key) const {
  const auto s = get_string(key);
  if (!s) return std::nullopt;
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), value);
  if (ec == std::errc{} && ptr == s->data() + s->size()) return value;
  // Accept integral values written in scientific notation, e.g. 1e6.
  const auto d = parse_double(*s);
  if (d && std::isfinite(*d) && std::floor(*d) == *d && std::abs(*d) < 9.2e18) return static_cast<long long>(*d);
  fail(key, "expected an integer, got '" + *s + "'");
}

std::optional<bool> Config::get_bool(const std::string& key) const {
  const auto s = get_string(key);
  if (!s) return std::nullopt;
  if (*s == "true" || *s == "1" || *s == "yes") return true;
  if (*s == "false" || *s == "0" || *s == "no") return false;
  fail(key, "expected true/false, got '" + *s + "'");
}

std::optional<std::vector<double>> Config::get_double_list(const std::string& key) const {
  const auto s = get_string(key);
  if (!s) return std::nullopt;
  std::vector<double> values;
  std::istringstream items(*s);
  for (std::string item; std::getline(items, item, ',');) {
    const auto value = parse_double(trim(item));
    if (!value) fail(key, "expected a comma-separated list of numbers, got '" + *s + "'");
    values.push_back(*value);
  }
  if (values.empty()) fail(key, "empty list");
  return values;
}

double Config::require_double(const std::string& key) const {
  const auto value = get_double(key);
  if (!value) throw ConfigError(source_ + ": missing required key '" + key + "'", 0);
  return *value;
}

void Config::check_known(std::string_view section, const std::set<std::string>& allowed) const {
  const std::string prefix = std::string(section) + ".";
  for (auto it = entries_.lower_bound(prefix); it != entries_.end() && it->first.starts_with(prefix); ++it) {
    if (!allowed.contains(it->first.substr(prefix.size()))) fail(it->first, "unknown key");
  }
}

std::string Config::canonical() const {
  std::string out;
  for (const auto& [key, entry] : entries_) out += key + "=" + entry.value + "\n";
  return out;
}

}  // namespace symexp
