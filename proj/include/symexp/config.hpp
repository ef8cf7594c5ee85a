#pragma once

/**
 * @file   config.hpp
 * @brief  Flat key-value configuration files with line-precise diagnostics.
 *
 *   # comment            (';' also starts a comment)
 *   [section]
 *   key = value
 *
 * Keys are addressed as "section.key". Values given on the command line
 * with --set section.key=value replace file values and are reported as
 * coming from "--set".
 */

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symexp/errors.hpp"

namespace symexp {

class ConfigError : public ValidationError {
 public:
  ConfigError(const std::string& message, int line) : ValidationError(message), line_(line) {}
  /// 1-based line in the source file; 0 for command-line values or file-level problems.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class Config {
 public:
  static Config parse(std::string_view text, std::string source = "<config>");
  /// Throws IoError if the file cannot be read.
  static Config load(const std::filesystem::path& path);

  /// Replaces or adds "section.key"; reported as coming from --set.
  void set(const std::string& key, std::string value);
  /// Parses "section.key=value".
  void apply_override(std::string_view assignment);

  bool has(const std::string& key) const { return entries_.contains(key); }
  bool has_section(std::string_view section) const;
  bool empty() const noexcept { return entries_.empty(); }

  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<long long> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<double>> get_double_list(const std::string& key) const;

  double require_double(const std::string& key) const;

  /// Rejects keys of `section` that are not in `allowed`.
  void check_known(std::string_view section, const std::set<std::string>& allowed) const;

  /// Throws ConfigError located at the line where `key` was defined.
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

  /// Sorted "key=value" lines; stable input for provenance hashes.
  std::string canonical() const;
  const std::string& source() const noexcept { return source_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::string location(const Entry& e) const;

  std::map<std::string, Entry> entries_;
  std::string source_ = "<config>";
};

}  // namespace symexp
