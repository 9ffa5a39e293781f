#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtorsor/report.hpp"

namespace qtorsor {

// Exact suites; defect = number of identities with a nonzero residual.
VerifyReport suite_uq_hopf(const SuiteContext& ctx);
VerifyReport suite_weak_coassociativity(const SuiteContext& ctx);
VerifyReport suite_antipode_laws(const SuiteContext& ctx);
VerifyReport suite_casimir(const SuiteContext& ctx);
VerifyReport suite_confluence(const SuiteContext& ctx);
VerifyReport suite_pol_hopf(const SuiteContext& ctx);
VerifyReport suite_pairing_grid(const SuiteContext& ctx);
VerifyReport suite_theta_calculus(const SuiteContext& ctx);
VerifyReport suite_podles_embedding(const SuiteContext& ctx);

// Numeric suites at one q.
VerifyReport suite_theta_casimir(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_propval(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_lemcom1(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_proprow(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_limit(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_unitarity(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_theocomu(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_coassociativity(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_h_coproducts(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_alpha(const SuiteContext& ctx, const QPoint& q);
VerifyReport suite_cocycle_demo(const SuiteContext& ctx, const QPoint& q);

struct SuiteInfo {
  std::string name;
  std::string group;  // qkernel, hopf-algebras, pairing-galois, operator-rep
  bool exact = false;
  bool hard = true;
  double tolerance = 0;
  std::string summary;
  std::vector<std::string> default_q;  // empty for exact suites
  std::function<VerifyReport(const SuiteContext&, const std::optional<QPoint>&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
/// Throws std::invalid_argument for unknown names.
const SuiteInfo& find_suite(const std::string& name);

/// Failures at q >= kBoundaryQ are annotated "boundary-dominated".
inline constexpr double kBoundaryQ = 0.9;

/// Runs one registered suite, catching memory-guard and numeric failures into the report.
VerifyReport run_suite(const SuiteInfo& info, const SuiteContext& ctx, const std::optional<QPoint>& q);

}  // namespace qtorsor
