#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hitchinlab/quantum_algebra.hpp"

using namespace hitchinlab;

namespace {

// independent long-double evaluation of the theta symbol product formula
long double theta_direct(int a, int b, int c, int r) {
  auto qi = [&](int j) -> long double {
    return sinl(j * 3.14159265358979323846264338327950288L / r) /
           sinl(3.14159265358979323846264338327950288L / r);
  };
  auto qf = [&](int j) -> long double {
    long double f = 1.0L;
    for (int m = 1; m <= j; ++m) f *= qi(m);
    return f;
  };
  const int alpha = (b + c - a) / 2, beta = (a + c - b) / 2, gamma = (a + b - c) / 2;
  const long double sign = ((alpha + beta + gamma) % 2 == 0) ? 1.0L : -1.0L;
  return sign * qf(alpha + beta + gamma + 1) * qf(alpha) * qf(beta) * qf(gamma) /
         (qf(a) * qf(b) * qf(c));
}

}  // namespace

TEST_CASE("quantum params") {
  const QuantumParams p1(1);
  CHECK(p1.r == 3);
  CHECK(p1.eta == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(QuantumParams(3).r == 5);
  CHECK_THROWS_AS(QuantumParams(0), validation_error);
}

TEST_CASE("quantum integers") {
  for (int k = 1; k <= 8; ++k) {
    const QuantumParams p(k);
    CHECK(quantum_integer(1, p).qint == doctest::Approx(1.0));
    const auto zero = quantum_integer(0, p);
    CHECK(zero.qint == doctest::Approx(0.0));
    CHECK(zero.qfact == doctest::Approx(1.0));  // empty product
    CHECK(zero.loop == doctest::Approx(1.0));   // <0> = [1] = 1
    // reflection [j] = [r - j]
    for (int j = 0; j <= p.r - 1; ++j) {
      const double left = quantum_integer(j, p).qint;
      const double right =
          std::sin((p.r - j) * std::numbers::pi / p.r) / std::sin(std::numbers::pi / p.r);
      CHECK(std::abs(left - right) < 1e-12);
    }
    CHECK_THROWS_AS(quantum_integer(p.r, p), validation_error);
    CHECK_THROWS_AS(quantum_integer(-1, p), validation_error);
  }
  // [2] at r=4 is sqrt 2
  CHECK(quantum_integer(2, QuantumParams(2)).qint ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
}

TEST_CASE("theta symbol values") {
  const QuantumParams p1(1);
  CHECK(theta_symbol(0, 0, 0, p1) == doctest::Approx(1.0));
  CHECK(theta_symbol(1, 1, 0, p1) == doctest::Approx(-1.0).epsilon(1e-14));

  // r = 5: frozen 30-digit value of the direct product formula, and the
  // long-double route as an independent check
  const QuantumParams p3(3);
  const double got = theta_symbol(2, 2, 2, p3);
  CHECK(std::abs(got - (-0.618033988749894848204586834366)) < 1e-12);
  CHECK(std::abs(got - static_cast<double>(theta_direct(2, 2, 2, 5))) < 1e-13);

  CHECK_THROWS_AS(theta_symbol(1, 0, 0, p1), validation_error);
}

TEST_CASE("theta symbol permutation symmetry") {
  const int k = 6;
  const QuantumParams p(k);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      for (int c = 0; c <= k; ++c) {
        if (!is_admissible_triple(a, b, c, k)) continue;
        const double base = theta_symbol(a, b, c, p);
        CHECK(theta_symbol(a, c, b, p) == doctest::Approx(base));
        CHECK(theta_symbol(b, a, c, p) == doctest::Approx(base));
        CHECK(theta_symbol(b, c, a, p) == doctest::Approx(base));
        CHECK(theta_symbol(c, a, b, p) == doctest::Approx(base));
        CHECK(theta_symbol(c, b, a, p) == doctest::Approx(base));
      }
}

TEST_CASE("norms") {
  const auto theta = theta_graph();
  const QuantumParams p1(1);
  const Labeling l110{{1, 1, 0}, 1};
  CHECK(norm_squared(theta, l110, p1) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));

  // all-zero labeling gives eta^{1-g}
  for (const auto& graph : {theta_graph(), dumbbell_graph(), chain_graph(3)}) {
    for (int k = 1; k <= 4; ++k) {
      const QuantumParams p(k);
      const Labeling zero{std::vector<int>(graph.edge_ids().size(), 0), k};
      CHECK(norm_squared(graph, zero, p) ==
            doctest::Approx(std::pow(p.eta, 1 - graph.genus())).epsilon(1e-12));
    }
  }

  // positivity across the enumeration
  for (const auto& graph : {theta_graph(), dumbbell_graph(), chain_graph(3), k4_graph()}) {
    for (int k = 1; k <= 6; ++k) {
      const QuantumParams p(k);
      for (const Labeling& l : enumerate_labelings(graph, k))
        CHECK(norm_squared(graph, l, p) > 0.0);
    }
  }

  // non-members rejected: odd value on the dumbbell bridge
  const QuantumParams p2(2);
  CHECK_THROWS_AS(norm_squared(dumbbell_graph(), Labeling{{1, 1, 1}, 2}, p2),
                  validation_error);
  CHECK_THROWS_AS(norm_squared(theta, Labeling{{1, 0, 0}, 1}, p1), validation_error);
}

TEST_CASE("inner product") {
  const auto theta = theta_graph();
  const NormTable table = build_norm_table(theta, 1);
  REQUIRE(table.entries.size() == 4);
  for (const auto& [values, nsq] : table.entries) {
    (void)values;
    CHECK(nsq > 0.0);
  }

  const std::vector<int> l110 = {1, 1, 0};
  const std::vector<int> l011 = {0, 1, 1};
  CoefficientMap e1 = {{l110, 1.0}};
  CoefficientMap e2 = {{l011, 1.0}};

  CHECK(bs_inner(e1, e1, table, BasisKind::orthonormal_v).real() ==
        doctest::Approx(1.0));
  CHECK(bs_inner(e1, e1, table, BasisKind::raw_v).real() ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(std::abs(bs_inner(e1, e2, table, BasisKind::raw_v)) == doctest::Approx(0.0));

  // sesquilinearity: conjugate-linear in the second slot
  CoefficientMap scaled = {{l110, complexd(0.0, 2.0)}};
  const complexd v = bs_inner(e1, scaled, table, BasisKind::orthonormal_v);
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(-2.0));

  // rescaling coefficients by the norms reconciles the two bases
  CoefficientMap raw_coeffs, ortho_coeffs;
  int sign = 1;
  for (const auto& [values, nsq] : table.entries) {
    raw_coeffs[values] = complexd(0.5 * sign, 0.25);
    ortho_coeffs[values] = raw_coeffs[values] * std::sqrt(nsq);
    sign = -sign;
  }
  const complexd raw = bs_inner(raw_coeffs, raw_coeffs, table, BasisKind::raw_v);
  const complexd ortho =
      bs_inner(ortho_coeffs, ortho_coeffs, table, BasisKind::orthonormal_v);
  CHECK(std::abs(raw - ortho) < 1e-12);

  CoefficientMap outside = {{{2, 0, 0}, 1.0}};
  CHECK_THROWS_AS(bs_inner(e1, outside, table, BasisKind::raw_v), validation_error);
}
