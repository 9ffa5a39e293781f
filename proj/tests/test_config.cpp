#include <doctest.h>

#include "qtorsor/config.hpp"

using namespace qtorsor;

TEST_CASE("toml subset: sections, comments, arrays") {
  auto v = parse_toml_subset(R"(
# leading comment
[run]
q = ["0.30", 0.6]   # mixed list
out = "dir # not a comment"
timing = true
[truncation]
N = 28
)");
  CHECK(std::get<std::vector<std::string>>(v.at("run.q")) == std::vector<std::string>{"0.30", "0.6"});
  CHECK(std::get<std::string>(v.at("run.out")) == "dir # not a comment");
  CHECK(std::get<bool>(v.at("run.timing")));
  CHECK(std::get<ConfigNumber>(v.at("truncation.N")).value == 28);
}

TEST_CASE("toml subset: errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_toml_subset(text);
    } catch (const ConfigError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("[run]\nq = \n") == 2);
  CHECK(line_of("[run\n") == 1);
  CHECK(line_of("a = 1\na = 2\n") == 2);
  CHECK(line_of("x = 1.5.2\n") == 1);
  CHECK(line_of("x = [1, 2\n") == 1);
  CHECK(line_of("just words\n") == 1);
}

TEST_CASE("apply_config maps keys and rejects unknown ones") {
  RunConfig cfg;
  apply_config(cfg, parse_toml_subset("[run]\nq = 0.45\nsuites = \"operator-rep\"\nprecision = \"mp50\"\n"
                                      "[cutoffs]\nseries_terms = 12\n[tolerances]\nlemcom1 = 1e-9\n"));
  CHECK(cfg.q == std::vector<std::string>{"0.45"});
  CHECK(cfg.suites == std::vector<std::string>{"operator-rep"});
  CHECK(cfg.ctx.precision == "mp50");
  CHECK(cfg.ctx.series_terms == 12);
  CHECK(cfg.ctx.tolerance_for("lemcom1", 1) == 1e-9);
  CHECK(cfg.ctx.tolerance_for("limit", 0.2) == 0.2);
  CHECK_NOTHROW(validate(cfg));

  RunConfig bad;
  CHECK_THROWS_AS(apply_config(bad, parse_toml_subset("[run]\nqq = 1\n")), ConfigError);
  CHECK_THROWS_AS(apply_config(bad, parse_toml_subset("[truncation]\nN = 2.5\n")), ConfigError);
  CHECK_THROWS_AS(apply_config(bad, parse_toml_subset("[run]\ntiming = 1\n")), ConfigError);
}

TEST_CASE("validate enforces the run invariants") {
  auto fails = [](auto mutate) {
    RunConfig cfg;
    mutate(cfg);
    try {
      validate(cfg);
    } catch (const ConfigError&) {
      return true;
    }
    return false;
  };
  CHECK(fails([](RunConfig& c) { c.q = {"1.2"}; }));
  CHECK(fails([](RunConfig& c) { c.q = {"0"}; }));
  CHECK(fails([](RunConfig& c) { c.q = {"abc"}; }));
  CHECK(fails([](RunConfig& c) { c.ctx.trunc.W = 3; }));
  CHECK(fails([](RunConfig& c) { c.ctx.trunc = {24, 20, 16}; }));
  CHECK(fails([](RunConfig& c) { c.ctx.precision = "quad"; }));
  CHECK(fails([](RunConfig& c) { c.suites = {"no-such-suite"}; }));
  CHECK(fails([](RunConfig& c) { c.ctx.tolerances["nope"] = 1; }));
  CHECK(fails([](RunConfig& c) { c.ctx.tolerances["limit"] = -1; }));
  CHECK_FALSE(fails([](RunConfig& c) { c.suites = {"all", "qkernel", "propval"}; }));
}

TEST_CASE("config text round-trips") {
  RunConfig cfg;
  cfg.q = {"0.3", "0.60"};
  cfg.suites = {"limit"};
  cfg.ctx.trunc = {20, 30, 8};
  cfg.ctx.tolerances["limit"] = 0.125;
  RunConfig back;
  apply_config(back, parse_toml_subset(config_to_text(cfg)));
  CHECK(back.q == cfg.q);
  CHECK(back.suites == cfg.suites);
  CHECK(back.ctx.trunc.N == 20);
  CHECK(back.ctx.trunc.M == 30);
  CHECK(back.ctx.trunc.W == 8);
  CHECK(back.ctx.tolerances == cfg.ctx.tolerances);
  CHECK(config_to_text(back) == config_to_text(cfg));
}
