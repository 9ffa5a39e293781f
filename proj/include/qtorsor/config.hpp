#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qtorsor/report.hpp"

namespace qtorsor {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no ? "config line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
  int line;
};

/// Number with its source text (q values keep their exact decimal form).
struct ConfigNumber {
  double value = 0;
  std::string text;
};

/// Value of a TOML-subset entry: string, number, bool, or a flat array of strings/numbers.
using ConfigValue = std::variant<std::string, ConfigNumber, bool, std::vector<std::string>>;

/// Parses `key = value` lines under `[section]` headers; keys come back as "section.key".
std::map<std::string, ConfigValue> parse_toml_subset(const std::string& text);

struct RunConfig {
  std::vector<std::string> q;       // empty: each suite uses its default q points
  std::vector<std::string> suites;  // names or groups; empty means all
  std::string out = "qtorsor-out";
  bool timing = false;
  SuiteContext ctx;
};

/// Applies a parsed file onto cfg; unknown keys are errors.
void apply_config(RunConfig& cfg, const std::map<std::string, ConfigValue>& values);
RunConfig load_config_file(const std::string& path);
/// Throws ConfigError when q, truncation, precision or suite names are invalid.
void validate(const RunConfig& cfg);

/// TOML-subset text that reproduces cfg.
std::string config_to_text(const RunConfig& cfg);

}  // namespace qtorsor
