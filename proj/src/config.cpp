#include "qtorsor/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qtorsor/suites.hpp"

namespace qtorsor {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Drops a trailing # comment that is not inside a string.
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

std::string parse_string(const std::string& v, int line) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') throw ConfigError("expected a quoted string", line);
  std::string body = v.substr(1, v.size() - 2);
  if (body.find('"') != std::string::npos) throw ConfigError("unexpected quote inside string", line);
  return body;
}

double parse_number(const std::string& v, int line) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + v + "'", line);
  }
  if (used != v.size()) throw ConfigError("trailing characters after number '" + v + "'", line);
  return d;
}

ConfigValue parse_value(const std::string& v, int line) {
  if (v.empty()) throw ConfigError("missing value", line);
  if (v == "true") return true;
  if (v == "false") return false;
  if (v.front() == '"') return parse_string(v, line);
  if (v.front() == '[') {
    if (v.back() != ']') throw ConfigError("unterminated array", line);
    std::vector<std::string> items;
    std::stringstream ss(v.substr(1, v.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      items.push_back(item.front() == '"' ? parse_string(item, line) : (parse_number(item, line), item));
    }
    return items;
  }
  return ConfigNumber{parse_number(v, line), v};
}

}  // namespace

std::map<std::string, ConfigValue> parse_toml_subset(const std::string& text) {
  std::map<std::string, ConfigValue> out;
  std::stringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("malformed section header", line);
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) throw ConfigError("empty section name", line);
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw ConfigError("empty key", line);
    std::string full = section.empty() ? key : section + "." + key;
    if (out.count(full)) throw ConfigError("duplicate key '" + full + "'", line);
    out.emplace(full, parse_value(trim(s.substr(eq + 1)), line));
  }
  return out;
}

namespace {

std::vector<std::string> as_list(const ConfigValue& v, const std::string& key) {
  if (auto s = std::get_if<std::string>(&v)) return {*s};
  if (auto l = std::get_if<std::vector<std::string>>(&v)) return *l;
  if (auto d = std::get_if<ConfigNumber>(&v)) return {d->text};
  throw ConfigError("'" + key + "' expects a string or a list");
}

int as_int(const ConfigValue& v, const std::string& key) {
  auto d = std::get_if<ConfigNumber>(&v);
  if (!d || std::floor(d->value) != d->value || std::abs(d->value) > 1e9)
    throw ConfigError("'" + key + "' expects an integer");
  return static_cast<int>(d->value);
}

double as_double(const ConfigValue& v, const std::string& key) {
  auto d = std::get_if<ConfigNumber>(&v);
  if (!d) throw ConfigError("'" + key + "' expects a number");
  return d->value;
}

std::string as_string(const ConfigValue& v, const std::string& key) {
  auto s = std::get_if<std::string>(&v);
  if (!s) throw ConfigError("'" + key + "' expects a string");
  return *s;
}

bool as_bool(const ConfigValue& v, const std::string& key) {
  auto b = std::get_if<bool>(&v);
  if (!b) throw ConfigError("'" + key + "' expects true or false");
  return *b;
}

}  // namespace

void apply_config(RunConfig& cfg, const std::map<std::string, ConfigValue>& values) {
  SuiteContext& c = cfg.ctx;
  const std::map<std::string, int*> ints{
      {"truncation.N", &c.trunc.N},
      {"truncation.M", &c.trunc.M},
      {"truncation.W", &c.trunc.W},
      {"cutoffs.series_terms", &c.series_terms},
      {"cutoffs.symbolic_degree", &c.symbolic_degree},
      {"cutoffs.symbolic_k", &c.symbolic_k},
      {"cutoffs.pairing_grid", &c.pairing_grid},
      {"cutoffs.confluence_length", &c.confluence_length},
      {"cutoffs.gmax", &c.gmax},
      {"cutoffs.unitarity_terms", &c.unitarity_terms},
      {"cutoffs.family_cutoff", &c.family_cutoff},
  };
  for (const auto& [key, v] : values) {
    if (auto it = ints.find(key); it != ints.end()) {
      *it->second = as_int(v, key);
    } else if (key == "run.q") {
      cfg.q = as_list(v, key);
    } else if (key == "run.suites") {
      cfg.suites = as_list(v, key);
    } else if (key == "run.out") {
      cfg.out = as_string(v, key);
    } else if (key == "run.precision") {
      c.precision = as_string(v, key);
    } else if (key == "run.seed") {
      int s = as_int(v, key);
      if (s < 0) throw ConfigError("'run.seed' must be nonnegative");
      c.seed = static_cast<unsigned>(s);
    } else if (key == "run.timing") {
      cfg.timing = as_bool(v, key);
    } else if (key.rfind("tolerances.", 0) == 0) {
      c.tolerances[key.substr(11)] = as_double(v, key);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  RunConfig cfg;
  apply_config(cfg, parse_toml_subset(ss.str()));
  return cfg;
}

void validate(const RunConfig& cfg) {
  for (const auto& q : cfg.q) {
    try {
      QPoint p(q);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("invalid q: ") + e.what());
    }
  }
  const Truncation& t = cfg.ctx.trunc;
  if (t.N < 4 || t.M < 4 || t.W < 4) throw ConfigError("truncation N, M, W must be at least 4");
  if (t.M < t.N) throw ConfigError("truncation requires M >= N");
  if (cfg.ctx.precision != "double" && cfg.ctx.precision != "mp50")
    throw ConfigError("precision must be \"double\" or \"mp50\"");
  for (int v : {cfg.ctx.series_terms, cfg.ctx.symbolic_degree, cfg.ctx.symbolic_k, cfg.ctx.pairing_grid,
                cfg.ctx.confluence_length, cfg.ctx.gmax, cfg.ctx.unitarity_terms, cfg.ctx.family_cutoff})
    if (v < 0) throw ConfigError("cutoffs must be nonnegative");
  for (const auto& s : cfg.suites) {
    if (s == "all") continue;
    bool known = false;
    for (const auto& info : suite_registry()) known = known || info.name == s || info.group == s;
    if (!known) throw ConfigError("unknown suite or group '" + s + "'");
  }
  for (const auto& [name, tol] : cfg.ctx.tolerances) {
    try {
      find_suite(name);
    } catch (const std::invalid_argument&) {
      throw ConfigError("tolerance given for unknown suite '" + name + "'");
    }
    if (!(tol >= 0)) throw ConfigError("tolerance for '" + name + "' must be nonnegative");
  }
}

std::string config_to_text(const RunConfig& cfg) {
  auto list = [](const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", \"" : "\"") + v[i] + "\"";
    return s + "]";
  };
  const SuiteContext& c = cfg.ctx;
  std::ostringstream os;
  os << "[run]\n"
     << "q = " << list(cfg.q) << "\n"
     << "suites = " << list(cfg.suites) << "\n"
     << "out = \"" << cfg.out << "\"\n"
     << "precision = \"" << c.precision << "\"\n"
     << "seed = " << c.seed << "\n"
     << "timing = " << (cfg.timing ? "true" : "false") << "\n\n"
     << "[truncation]\nN = " << c.trunc.N << "\nM = " << c.trunc.M << "\nW = " << c.trunc.W << "\n\n"
     << "[cutoffs]\n"
     << "series_terms = " << c.series_terms << "\n"
     << "symbolic_degree = " << c.symbolic_degree << "\n"
     << "symbolic_k = " << c.symbolic_k << "\n"
     << "pairing_grid = " << c.pairing_grid << "\n"
     << "confluence_length = " << c.confluence_length << "\n"
     << "gmax = " << c.gmax << "\n"
     << "unitarity_terms = " << c.unitarity_terms << "\n"
     << "family_cutoff = " << c.family_cutoff << "\n";
  if (!c.tolerances.empty()) {
    os << "\n[tolerances]\n";
    os.precision(17);
    for (const auto& [k, v] : c.tolerances) os << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace qtorsor
