#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qtorsor/suites.hpp"
#include "qtorsor/tensor.hpp"

namespace qtorsor {

namespace {

using Exact = VerifyReport (*)(const SuiteContext&);
using Numeric = VerifyReport (*)(const SuiteContext&, const QPoint&);

SuiteInfo exact(std::string name, std::string group, Exact f, std::string summary) {
  SuiteInfo s{std::move(name), std::move(group), true, true, 0, std::move(summary), {}, nullptr};
  s.run = [f](const SuiteContext& ctx, const std::optional<QPoint>&) { return f(ctx); };
  return s;
}

SuiteInfo numeric(std::string name, std::string group, Numeric f, double tol, std::vector<std::string> qs,
                  std::string summary, bool hard = true) {
  SuiteInfo s{std::move(name), std::move(group), false, hard, tol, std::move(summary), std::move(qs), nullptr};
  s.run = [f, n = s.name](const SuiteContext& ctx, const std::optional<QPoint>& q) {
    if (!q) throw std::invalid_argument("suite " + n + " needs a value of q");
    return f(ctx, *q);
  };
  return s;
}

std::vector<SuiteInfo> build() {
  const std::vector<std::string> op_q{"0.3", "0.6"};
  return {
      exact("uq-hopf", "hopf-algebras", suite_uq_hopf, "Hopf axioms of U_q(0,0) and U_q(+,+) on PBW monomials"),
      exact("weak-coassociativity", "hopf-algebras", suite_weak_coassociativity,
            "all 16 coassociativity identities of the co-linking weak Hopf algebra"),
      exact("antipode-laws", "hopf-algebras", suite_antipode_laws, "antipode laws across the four corners"),
      exact("casimir", "hopf-algebras", suite_casimir, "Casimir is self-adjoint and central"),
      exact("confluence", "qkernel", suite_confluence, "rewriting strategies agree on random words"),
      exact("pol-hopf", "hopf-algebras", suite_pol_hopf, "Hopf axioms of Pol_q(0) and Pol_q(+)"),
      exact("pairing-grid", "pairing-galois", suite_pairing_grid, "closed-form pairing equals the oracle on the grid"),
      exact("theta-calculus", "pairing-galois", suite_theta_calculus, "theta functional relations at pairing level"),
      exact("podles-embedding", "operator-rep", suite_podles_embedding, "Podles relations vanish in the Casimir quotient"),
      numeric("theta-casimir", "operator-rep", suite_theta_casimir, 1e-12, op_q, "Theta(C) is the scalar q^-1 lambda^2"),
      numeric("propval", "operator-rep", suite_propval, 1e-11, {"0.3", "0.5"},
              "corepresentation entries pair to Theta matrix entries"),
      numeric("lemcom1", "operator-rep", suite_lemcom1, 1e-12, op_q, "L intertwines a, a^* with v0, v0^*"),
      numeric("proprow", "operator-rep", suite_proprow, 1e-10, op_q, "first row Gram matrices by three routes"),
      numeric("limit", "operator-rep", suite_limit, 0.2, op_q, "strong limit of a^{n-s} a*^{n-t} decays like q^2n"),
      numeric("unitarity", "operator-rep", suite_unitarity, 1e-8, op_q, "row and column sums of G are the identity"),
      numeric("theocomu", "operator-rep", suite_theocomu, 1e-8, op_q, "coproduct of G_{0,r} from the series for Delta(L)"),
      numeric("coassociativity", "operator-rep", suite_coassociativity, 1e-8, op_q,
              "(Delta (x) id) Delta(L) = (id (x) Delta) Delta(L)"),
      numeric("h-coproducts", "operator-rep", suite_h_coproducts, 1e-8, op_q, "coproducts of v0 and n0"),
      numeric("alpha", "operator-rep", suite_alpha, 1e-8, op_q, "G^dag (1 (x) x) G matches (id (x) theta) Delta"),
      numeric("cocycle-demo", "operator-rep", suite_cocycle_demo, 0, {"0.3"},
              "unitary 2-cocycle from a truncated expansion (soft)", false),
  };
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = build();
  return reg;
}

const SuiteInfo& find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

VerifyReport run_suite(const SuiteInfo& info, const SuiteContext& ctx, const std::optional<QPoint>& q) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r;
  try {
    r = info.run(ctx, q);
  } catch (const std::exception& e) {
    r = VerifyReport{};
    r.suite = info.name;
    r.q = q ? q->text() : "exact";
    r.defect = INFINITY;
    r.tolerance = ctx.tolerance_for(info.name, info.tolerance);
    r.error = (dynamic_cast<const MemoryGuardError*>(&e) ? "memory guard: " : "error: ") + std::string(e.what());
    r.finish();
  }
  r.hard = info.hard;
  if (!r.pass && q && q->q() >= kBoundaryQ) r.note = "boundary-dominated";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace qtorsor
