#include <doctest.h>

#include <cmath>

#include "qtorsor/suites.hpp"

using namespace qtorsor;

namespace {

SuiteContext small_context() {
  SuiteContext ctx;
  ctx.symbolic_degree = 2;
  ctx.symbolic_k = 1;
  ctx.pairing_grid = 2;
  ctx.confluence_length = 4;
  ctx.gmax = 3;
  return ctx;
}

double detail_value(const VerifyReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  FAIL("missing detail " << key);
  return NAN;
}

}  // namespace

TEST_CASE("registry names are unique and grouped") {
  const auto& reg = suite_registry();
  CHECK(reg.size() == 20);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(&find_suite(reg[i].name) == &reg[i]);
    CHECK(reg[i].exact == reg[i].default_q.empty());
    for (std::size_t j = i + 1; j < reg.size(); ++j) CHECK(reg[i].name != reg[j].name);
  }
  CHECK_FALSE(find_suite("cocycle-demo").hard);
  CHECK_THROWS_AS(find_suite("nope"), std::invalid_argument);
}

TEST_CASE("exact suites pass at reduced cutoffs") {
  const SuiteContext ctx = small_context();
  for (const auto& info : suite_registry()) {
    if (!info.exact) continue;
    CAPTURE(info.name);
    VerifyReport r = run_suite(info, ctx, std::nullopt);
    CHECK(r.error == "");
    CHECK(r.q == "exact");
    CHECK(r.defect == 0);
    CHECK(r.pass);
  }
}

TEST_CASE("hard numeric suites pass at an off-grid q") {
  const SuiteContext ctx = small_context();
  for (const auto& info : suite_registry()) {
    if (info.exact || !info.hard) continue;
    CAPTURE(info.name);
    VerifyReport r = run_suite(info, ctx, QPoint("0.45"));
    CHECK(r.error == "");
    CHECK(r.q == "0.45");
    CHECK(r.defect <= r.tolerance);
    CHECK(r.pass);
  }
}

TEST_CASE("negative controls") {
  SuiteContext ctx = small_context();
  VerifyReport th = run_suite(find_suite("theocomu"), ctx, QPoint("0.6"));
  CHECK(th.pass);
  CHECK(detail_value(th, "without_poch_normalization") > 1e-3);

  ctx.tolerances["limit"] = 0;
  VerifyReport lim = run_suite(find_suite("limit"), ctx, QPoint("0.6"));
  CHECK(lim.defect > 0);
  CHECK_FALSE(lim.pass);
  CHECK(lim.hard);
}

TEST_CASE("50-digit operator suites") {
  SuiteContext ctx = small_context();
  ctx.precision = "mp50";
  for (std::string name : {"lemcom1", "proprow", "limit"}) {
    CAPTURE(name);
    VerifyReport r = run_suite(find_suite(name), ctx, QPoint("0.3"));
    CHECK(r.error == "");
    CHECK(r.pass);
  }
}

TEST_CASE("cocycle demo at a small truncation") {
  SuiteContext ctx = small_context();
  ctx.trunc = {10, 12, 4};
  ctx.series_terms = 6;
  ctx.family_cutoff = 3;
  VerifyReport r = run_suite(find_suite("cocycle-demo"), ctx, QPoint("0.5"));
  CHECK(r.error == "");
  CHECK_FALSE(r.hard);
  CHECK(std::isfinite(r.defect));
  CHECK(r.tolerance >= 10 * detail_value(r, "series_tail_bound"));
  CHECK(detail_value(r, "family_cutoff") <= 3);
}
