#pragma once

#include <cmath>
#include <string>

#include "qtorsor/suites.hpp"

namespace qtorsor::detail {

inline VerifyReport numeric_report(const std::string& name, const QPoint& q, const SuiteContext& ctx,
                                   double defect, double default_tol, std::string method,
                                   NamedValues details = {}) {
  VerifyReport r;
  r.suite = name;
  r.q = q.text();
  r.params = {{"N", ctx.trunc.N}, {"M", ctx.trunc.M}, {"W", ctx.trunc.W}};
  r.defect = std::isfinite(defect) ? defect : INFINITY;
  r.tolerance = ctx.tolerance_for(name, default_tol);
  r.method = std::move(method);
  r.details = std::move(details);
  r.finish();
  return r;
}

inline const char* kColumnNorm = "max column 2-norm of the defect over interior basis vectors";

}  // namespace qtorsor::detail
