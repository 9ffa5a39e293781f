#include "qtorsor/report_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qtorsor/pairing.hpp"
#include "qtorsor/xmodule.hpp"

namespace qtorsor {

using ojson = nlohmann::ordered_json;

std::string format_number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write(std::ostringstream& os, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << inner << ojson(it.key()).dump() << ": ";
        write(os, it.value(), indent + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << inner;
        write(os, j[i], indent + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << "]";
      return;
    }
    case ojson::value_t::number_float:
      os << format_number(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

ojson named(const NamedValues& v) {
  ojson o = ojson::object();
  for (const auto& [k, x] : v) o[k] = x;
  return o;
}

ojson config_json(const RunConfig& cfg) {
  const SuiteContext& c = cfg.ctx;
  ojson o;
  o["q"] = cfg.q;
  o["suites"] = cfg.suites;
  o["precision"] = c.precision;
  o["seed"] = c.seed;
  o["truncation"] = {{"N", c.trunc.N}, {"M", c.trunc.M}, {"W", c.trunc.W}};
  o["cutoffs"] = {{"series_terms", c.series_terms},       {"symbolic_degree", c.symbolic_degree},
                  {"symbolic_k", c.symbolic_k},           {"pairing_grid", c.pairing_grid},
                  {"confluence_length", c.confluence_length}, {"gmax", c.gmax},
                  {"unitarity_terms", c.unitarity_terms}, {"family_cutoff", c.family_cutoff}};
  ojson tol = ojson::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  o["tolerances"] = tol;
  return o;
}

}  // namespace

bool all_hard_passed(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports)
    if (r.hard && !r.pass) return false;
  return true;
}

std::string report_json(const std::vector<VerifyReport>& reports, const RunConfig& cfg,
                        std::optional<double> total_seconds) {
  ojson root;
  root["toolkit"] = "qtorsor";
  root["version"] = kVersion;
  root["config"] = config_json(cfg);
  int passed = 0, failed = 0, soft_failed = 0;
  ojson list = ojson::array();
  for (const auto& r : reports) {
    (r.pass ? passed : r.hard ? failed : soft_failed)++;
    ojson o;
    o["suite"] = r.suite;
    o["q"] = r.q;
    o["params"] = named(r.params);
    o["defect"] = r.defect;
    o["tolerance"] = r.tolerance;
    o["pass"] = r.pass;
    o["seconds"] = r.seconds ? ojson(*r.seconds) : ojson(nullptr);
    o["hard"] = r.hard;
    o["method"] = r.method;
    o["details"] = named(r.details);
    o["error"] = r.error.empty() ? ojson(nullptr) : ojson(r.error);
    o["note"] = r.note.empty() ? ojson(nullptr) : ojson(r.note);
    list.push_back(o);
  }
  root["counts"] = {{"reports", reports.size()}, {"passed", passed}, {"failed", failed}, {"soft_failed", soft_failed}};
  root["all_hard_passed"] = all_hard_passed(reports);
  root["total_seconds"] = total_seconds ? ojson(*total_seconds) : ojson(nullptr);
  root["reports"] = list;
  std::ostringstream os;
  write(os, root, 0);
  os << "\n";
  return os.str();
}

std::string summary_markdown(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  os << "# qtorsor verify\n\n"
     << (all_hard_passed(reports) ? "All hard suites passed.\n\n" : "Some hard suites FAILED.\n\n")
     << "| suite | q | defect | tolerance | result |\n|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    char d[32], t[32];
    std::snprintf(d, sizeof d, "%.3e", r.defect);
    std::snprintf(t, sizeof t, "%.1e", r.tolerance);
    std::string res = r.pass ? "pass" : "FAIL";
    if (!r.hard) res += " (soft)";
    if (!r.error.empty()) res += ": " + r.error;
    if (!r.note.empty()) res += " [" + r.note + "]";
    os << "| " << r.suite << " | " << r.q << " | " << d << " | " << t << " | " << res << " |\n";
  }
  return os.str();
}

namespace {

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string numeric_columns(const std::complex<double>& v) {
  return format_number(v.real()) + "," + format_number(v.imag());
}

}  // namespace

std::string pairing_csv(int grid, const QPoint& q) {
  std::ostringstream os;
  os << "tag,m,n,l,r,s,t,exact,re,im\n";
  for (Sign mu : {Sign::Zero, Sign::Plus})
    for (int m = -grid; m <= grid; ++m)
      for (int n = 0; n <= grid; ++n)
        for (int l = 0; l <= grid; ++l)
          for (int r = -grid; r <= grid; ++r)
            for (int s = 0; s <= grid; ++s)
              for (int t = 0; t <= grid; ++t) {
                ExactScalar v = pair_closed(mu, {m, n, l}, {r, s, t});
                os << sign_name(mu) << "," << m << "," << n << "," << l << "," << r << "," << s << "," << t << ","
                   << csv_quote(v.str()) << "," << numeric_columns(q.eval(v)) << "\n";
              }
  return os.str();
}

std::string g_entry_csv(int gmax, const QPoint& q) {
  std::ostringstream os;
  os << "t,s,term,coefficient,sqrt_num,sqrt_den,re,im\n";
  for (int t = 0; t <= gmax; ++t)
    for (int s = 0; s <= gmax; ++s) {
      GEntry g = g_entry(t, s);
      const double root = g.sqrt_factor(q.q());
      for (const auto& [mono, c] : g.body.terms()) {
        os << t << "," << s << "," << csv_quote(XElement::monomial(mono).str()) << "," << csv_quote(c.str()) << ","
           << g.sqrt_num_index << "," << g.sqrt_den_index << "," << numeric_columns(q.eval(c) * root) << "\n";
      }
    }
  return os.str();
}

}  // namespace qtorsor
