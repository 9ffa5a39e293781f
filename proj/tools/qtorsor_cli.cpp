#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qtorsor/config.hpp"
#include "qtorsor/report_io.hpp"
#include "qtorsor/suites.hpp"

namespace fs = std::filesystem;
using namespace qtorsor;

namespace {

struct Overrides {
  std::string config;
  std::vector<std::string> q, suites;
  int trunc_n = -1, trunc_m = -1, trunc_w = -1, series_terms = -1;
  long seed = -1;
  std::string out, precision;
  bool timing = false;
};

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("-c,--config", o.config, "TOML-style config file")->check(CLI::ExistingFile);
  app->add_option("--q", o.q, "q values, e.g. --q 0.3,0.6")->delimiter(',');
  app->add_option("--out", o.out, "output directory (else $QTORSOR_OUT, else config)");
}

RunConfig resolve(const Overrides& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config_file(o.config);
  if (!o.q.empty()) cfg.q = o.q;
  if (!o.suites.empty()) cfg.suites = o.suites;
  if (o.trunc_n > 0) cfg.ctx.trunc.N = o.trunc_n;
  if (o.trunc_m > 0) cfg.ctx.trunc.M = o.trunc_m;
  if (o.trunc_w > 0) cfg.ctx.trunc.W = o.trunc_w;
  if (o.series_terms >= 0) cfg.ctx.series_terms = o.series_terms;
  if (o.seed >= 0) cfg.ctx.seed = static_cast<unsigned>(o.seed);
  if (!o.precision.empty()) cfg.ctx.precision = o.precision;
  if (o.timing) cfg.timing = true;
  if (!o.out.empty()) {
    cfg.out = o.out;
  } else if (const char* env = std::getenv("QTORSOR_OUT"); env && *env) {
    cfg.out = env;
  }
  validate(cfg);
  return cfg;
}

bool selected(const SuiteInfo& s, const std::vector<std::string>& sel) {
  if (sel.empty()) return true;
  for (const auto& x : sel)
    if (x == "all" || x == s.name || x == s.group) return true;
  return false;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

int cmd_verify(const Overrides& o) {
  RunConfig cfg = resolve(o);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerifyReport> reports;
  for (const auto& info : suite_registry()) {
    if (!selected(info, cfg.suites)) continue;
    std::vector<std::optional<QPoint>> points;
    if (info.exact) {
      points.emplace_back(std::nullopt);
    } else {
      for (const auto& q : cfg.q.empty() ? info.default_q : cfg.q) points.emplace_back(QPoint(q));
    }
    for (const auto& q : points) {
      VerifyReport r = run_suite(info, cfg.ctx, q);
      if (!cfg.timing) r.seconds.reset();
      std::printf("%-4s %-22s q=%-6s defect=%.3e tol=%.1e%s%s\n", r.pass ? "PASS" : "FAIL", r.suite.c_str(),
                  r.q.c_str(), r.defect, r.tolerance, r.hard ? "" : " (soft)",
                  r.error.empty() ? "" : ("  " + r.error).c_str());
      std::fflush(stdout);
      reports.push_back(std::move(r));
    }
  }
  std::optional<double> total;
  if (cfg.timing) total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  fs::create_directories(cfg.out);
  write_file(fs::path(cfg.out) / "report.json", report_json(reports, cfg, total));
  write_file(fs::path(cfg.out) / "summary.md", summary_markdown(reports));
  write_file(fs::path(cfg.out) / "config.toml", config_to_text(cfg));
  const bool ok = all_hard_passed(reports);
  std::printf("%s: %zu reports written to %s\n", ok ? "OK" : "FAILED", reports.size(), cfg.out.c_str());
  return ok ? 0 : 1;
}

int cmd_dump(const Overrides& o, int grid, int gmax) {
  RunConfig cfg = resolve(o);
  QPoint q(cfg.q.empty() ? std::string("0.5") : cfg.q.front());
  if (grid < 0) grid = cfg.ctx.pairing_grid;
  if (gmax < 0) gmax = cfg.ctx.gmax;
  fs::create_directories(cfg.out);
  write_file(fs::path(cfg.out) / "pairing.csv", pairing_csv(grid, q));
  write_file(fs::path(cfg.out) / "g_entries.csv", g_entry_csv(gmax, q));
  std::printf("wrote pairing.csv and g_entries.csv (q=%s) to %s\n", q.text().c_str(), cfg.out.c_str());
  return 0;
}

int cmd_list() {
  for (const auto& s : suite_registry()) {
    std::string qs;
    for (const auto& q : s.default_q) qs += (qs.empty() ? "" : ",") + q;
    std::printf("%-22s %-15s %-8s %-4s tol=%-8.1e q=%-8s %s\n", s.name.c_str(), s.group.c_str(),
                s.exact ? "exact" : "numeric", s.hard ? "hard" : "soft", s.tolerance, qs.empty() ? "-" : qs.c_str(),
                s.summary.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtorsor: exact and numeric verification toolkit"};
  app.require_subcommand(1);
  Overrides o;
  int grid = -1, gmax = -1;

  auto* verify = app.add_subcommand("verify", "run verification suites and write report.json");
  add_common(verify, o);
  verify->add_option("--suite", o.suites, "suite names or groups (repeatable)")->delimiter(',');
  verify->add_option("--trunc-n", o.trunc_n, "truncation N of H+");
  verify->add_option("--trunc-m", o.trunc_m, "truncation M of H0+");
  verify->add_option("--trunc-w", o.trunc_w, "k window half-width W");
  verify->add_option("--series-terms", o.series_terms, "series cutoff P");
  verify->add_option("--precision", o.precision, "double or mp50");
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  verify->add_flag("--timing", o.timing, "record wall-clock seconds (breaks byte-determinism)");

  auto* dump = app.add_subcommand("dump", "write pairing and corepresentation CSV tables");
  add_common(dump, o);
  dump->add_option("--grid", grid, "pairing grid cutoff");
  dump->add_option("--gmax", gmax, "largest corepresentation index");

  auto* list = app.add_subcommand("list-suites", "list registered suites");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return cmd_verify(o);
    if (*dump) return cmd_dump(o, grid, gmax);
    if (*list) return cmd_list();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
