#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtorsor/config.hpp"
#include "qtorsor/exact_scalar.hpp"

namespace qtorsor {

inline constexpr const char* kVersion = "0.3.0";

/// %.17g; non-finite values become the strings "inf", "-inf", "nan".
std::string format_number(double v);

/// Bundle JSON with fixed field order; total_seconds is null unless given.
std::string report_json(const std::vector<VerifyReport>& reports, const RunConfig& cfg,
                        std::optional<double> total_seconds);
std::string summary_markdown(const std::vector<VerifyReport>& reports);

/// True when every hard report passed.
bool all_hard_passed(const std::vector<VerifyReport>& reports);

/// Pairing table over |m|,n,l,|r|,s,t <= grid for both tags, numeric columns at q.
std::string pairing_csv(int grid, const QPoint& q);
/// Corepresentation entry table for t, s <= gmax, numeric columns at q.
std::string g_entry_csv(int gmax, const QPoint& q);

}  // namespace qtorsor
