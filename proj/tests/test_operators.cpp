#include <doctest.h>

#include "qtorsor/operators.hpp"
#include "qtorsor/tensor.hpp"
#include "qtorsor/xmodule.hpp"

using namespace qtorsor;

namespace {

using Model = OperatorModel<double>;
using Op = SparseOperator<double>;

Op word(const Model& m, std::vector<std::string> w) { return m.eval_word(w); }

}  // namespace

TEST_CASE("truncated space indexing") {
  TruncSpace h = TruncSpace::h_zeroplus(5, 4);
  CHECK(h.dim() == 11 * 9);
  std::vector<bool> seen(h.dim(), false);
  for (int n = -5; n <= 5; ++n)
    for (int k = -4; k <= 4; ++k) {
      int i = h.index(n, k);
      REQUIRE(i >= 0);
      REQUIRE(i < h.dim());
      CHECK_FALSE(seen[i]);
      seen[i] = true;
      CHECK(h.n_of(i) == n);
      CHECK(h.k_of(i) == k);
    }
  CHECK(h.index(0, 5) == h.index(0, -4));
  InteriorMask mask{2, 3};
  CHECK(mask.n_values(TruncSpace::h_plus(10, 4)).size() == 7);
  CHECK(mask.n_values(h).size() == 6);
}

TEST_CASE("generator matrix elements") {
  Model m(QPoint("0.5"), {12, 12, 4});
  CHECK(word(m, {"b"}).entry(0, 3, 0, 2) == doctest::Approx(1.0));
  CHECK(word(m, {"a"}).m.col(m.hp().index(0, 0)).nonZeros() == 0);
  CHECK(word(m, {"L"}).entry(0, 1, 0, 1) == doctest::Approx(std::sqrt(qpoch_inf(0.25, 0.25))));
  CHECK(word(m, {"n0"}).entry(-3, 1, -3, 0) == doctest::Approx(8.0));
  CHECK_THROWS_AS(word(m, {"a", "v0"}), std::invalid_argument);
  CHECK_THROWS_AS(word(m, {"c"}), std::invalid_argument);
  Op id = m.eval_word({}, m.hp());
  CHECK(id.m.nonZeros() == m.hp().dim());
}

TEST_CASE("Pol(SU_q(2)) relations on the interior") {
  for (double q : {0.3, 0.6}) {
    Model m(QPoint(q), {24, 32, 8});
    InteriorMask in{0, 2};
    Op id = Op::identity(m.hp());
    CHECK(masked_defect(word(m, {"astar", "a"}) + word(m, {"bstar", "b"}), id, in) < 1e-12);
    CHECK(masked_defect(word(m, {"a", "astar"}) + q * q * word(m, {"b", "bstar"}), id, in) < 1e-12);
    CHECK(masked_defect(word(m, {"a", "b"}), q * word(m, {"b", "a"}), in) < 1e-12);
    CHECK(masked_defect(word(m, {"a", "bstar"}), q * word(m, {"bstar", "a"}), in) < 1e-12);
    CHECK(masked_defect(word(m, {"b", "bstar"}), word(m, {"bstar", "b"}), in) < 1e-14);
  }
}

TEST_CASE("Podles relations on concrete operators") {
  for (double q : {0.3, 0.6}) {
    Model m(QPoint(q), {16, 16, 4});
    InteriorMask in{0, 2};
    Op z = word(m, {"Z"});
    CHECK(masked_defect(word(m, {"X", "Z"}), q * q * word(m, {"Z", "X"}), in) < 1e-12);
    CHECK(masked_defect(word(m, {"Xstar", "Z"}), (1 / (q * q)) * word(m, {"Z", "Xstar"}), in) < 1e-12);
    CHECK(masked_defect(word(m, {"Xstar", "X"}), z - z * z, in) < 1e-12);
    CHECK(masked_defect(word(m, {"X", "Xstar"}), q * q * z - q * q * q * q * (z * z), in) < 1e-12);
    CHECK(masked_defect(z.adjoint(), z, in) == 0);
    CHECK(masked_defect(q * word(m, {"B", "A"}), word(m, {"X"}), in) < 1e-14);
  }
}

TEST_CASE("v0 and L") {
  Model m(QPoint("0.45"), {20, 24, 6});
  Op idz = Op::identity(m.hz());
  InteriorMask in{1, 1};
  CHECK(masked_defect(word(m, {"v0star", "v0"}), idz, in) == 0);
  Op ll = word(m, {"Lstar", "L"});
  const double q2 = 0.45 * 0.45;
  for (int n = 0; n < 20; ++n) CHECK(ll.entry(n, 0, n, 0) == doctest::Approx(qpoch_inf(q2 * std::pow(q2, n), q2)).epsilon(1e-14));
  // n0 grows like q^{-M} at the lower edge; compare relative to the entry size
  Op lhs = word(m, {"v0", "n0", "v0star"}), rhs = 0.45 * word(m, {"n0"});
  for (int n = -23; n <= 23; ++n)
    CHECK(lhs.entry(n, 1, n, 0) == doctest::Approx(rhs.entry(n, 1, n, 0)).epsilon(1e-15));
}

TEST_CASE("gmatrix agrees with the symbolic entries") {
  for (const char* qt : {"0.3", "0.6"}) {
    Model m(QPoint(qt), {24, 32, 4});
    OperatorModel<mp50> hi(QPoint(qt), {24, 32, 4});
    CHECK(masked_defect(m.gmatrix(0, 0), word(m, {"L"}), InteriorMask{}) < 1e-15);
    for (int s = 0; s <= 4; ++s)
      CHECK(masked_defect(m.gmatrix(0, s), (1 / std::sqrt(m.qsq_poch(s))) * m.vlb(s, s, 0), InteriorMask{}) < 1e-13);
    const mp50 sq = sqrt(hi.q());
    for (int t = 0; t <= 6; ++t)
      for (int s = 0; s <= 6; ++s) {
        // substitution a0 -> v0, theta^* -> L evaluated in 50 digits
        GEntry g = g_entry(t, s);
        double worst = 0;
        for (int n = 0; n < 24; ++n) {
          mp50 v = 0;
          for (const auto& [mono, c] : g.body.terms())
            v += c.eval<mp50>(sq).re * hi.vlb(mono.r, mono.s, mono.t).entry(n - s - t, s - t, n, 0);
          v *= g.sqrt_factor(hi.q());
          worst = std::max(worst, std::abs(static_cast<double>(v) - m.gmatrix(t, s).entry(n - s - t, s - t, n, 0)));
        }
        CAPTURE(t); CAPTURE(s);
        CHECK(worst < 1e-12);
      }
  }
}

TEST_CASE("tensor application") {
  Model m(QPoint("0.5"), {8, 8, 4});
  const Op& a = m.gen("a");
  const Op& b = m.gen("b");
  TensorOp<double> op{{2.0, {&a, &b}}, {-1.0, {&b, &a}}};
  auto x = basis_vector<double>({m.hp().index(2, 0), m.hp().index(1, 0)});
  auto y = apply_tensor(op, x);
  CHECK(y.size() == 2);
  CHECK(y.at({m.hp().index(1, 0), m.hp().index(1, 1)}) == doctest::Approx(2 * std::sqrt(1 - 0.0625) * 0.5));
  CHECK(norm(y) > 0);
  CHECK_THROWS_AS(apply_tensor(op, x, 1), MemoryGuardError);
}
