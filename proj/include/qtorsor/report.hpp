#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtorsor/operators.hpp"

namespace qtorsor {

using NamedValues = std::vector<std::pair<std::string, double>>;

struct VerifyReport {
  std::string suite;
  std::string q;  // decimal text, or "exact" for symbolic suites
  NamedValues params;
  double defect = 0;
  double tolerance = 0;
  bool pass = false;
  bool hard = true;
  std::string method;
  NamedValues details;
  std::optional<double> seconds;
  std::string error;
  std::string note;  // e.g. boundary-dominated

  void finish() { pass = error.empty() && defect <= tolerance; }
};

/// Parameters shared by the suites of one run.
struct SuiteContext {
  Truncation trunc;
  int series_terms = 30;       // P
  int symbolic_degree = 4;     // n + l (or s + t) cutoff
  int symbolic_k = 2;          // |m|, |r| cutoff for exhaustive symbolic checks
  int pairing_grid = 3;        // |m|, n, l, |r|, s, t cutoff
  int confluence_length = 6;
  int gmax = 6;                // r, s cutoff for corepresentation entries
  int unitarity_terms = 24;    // s (or t) range of the unitarity sums
  int family_cutoff = 8;       // cocycle demo
  std::string precision = "double";
  unsigned seed = 20240601;
  std::map<std::string, double> tolerances;  // per-suite overrides

  double tolerance_for(const std::string& suite, double fallback) const {
    auto it = tolerances.find(suite);
    return it == tolerances.end() ? fallback : it->second;
  }
};

}  // namespace qtorsor
