#include <cmath>

#include "doctest.h"
#include "hitchinlab/character_variety.hpp"

using namespace hitchinlab;

TEST_CASE("haar sampling") {
  RandomStream rng(5);
  for (int i = 0; i < 100; ++i) validate_su2(random_su2(rng));

  // reproducibility per seed
  RandomStream a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK((random_su2(a) - random_su2(b)).norm() == 0.0);
}

TEST_CASE("four-holed sphere relation") {
  FourHoleTraces identity_point{2, 2, 2, 2, 2, 2, 2};
  CHECK(sphere4_residual(identity_point) == doctest::Approx(0.0));

  FourHoleTraces origin{0, 0, 0, 0, 0, 0, 0};
  CHECK(sphere4_residual(origin) == doctest::Approx(4.0));

  RandomStream rng(7);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto t = traces_from_representation(random_su2(rng), random_su2(rng),
                                              random_su2(rng));
    worst = std::max(worst, sphere4_residual(t));
  }
  CHECK(worst < 1e-10);

  const SampleReport report = sample_sphere4(12345, 20000);
  CHECK(report.max_residual < 1e-10);
  CHECK(report.draws == 20000);
}

TEST_CASE("one-holed torus relation") {
  const SU2Element id = SU2Element::Identity();
  CHECK(torus_residual(id, id) == doctest::Approx(0.0));

  SU2Element a, b;
  a << complexd(0, 1), 0.0, 0.0, complexd(0, -1);
  const double c = std::cos(std::atan(1.0)), s = std::sin(std::atan(1.0));
  b << complexd(c, 0), complexd(0, -s), complexd(0, -s), complexd(c, 0);
  CHECK(torus_residual(a, b) < 1e-14);

  RandomStream rng(8);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i)
    worst = std::max(worst, torus_residual(random_su2(rng), random_su2(rng)));
  CHECK(worst < 1e-12);

  SU2Element not_unitary = SU2Element::Identity() * 2.0;
  CHECK_THROWS_AS(torus_residual(not_unitary, id), validation_error);
}

TEST_CASE("conjugation invariance") {
  RandomStream rng(9);
  for (int i = 0; i < 200; ++i) {
    const SU2Element a = random_su2(rng), b = random_su2(rng), c = random_su2(rng);
    const SU2Element g = random_su2(rng);
    const double before = torus_residual(a, b);
    const double after = torus_residual(SU2Element(g * a * g.adjoint()),
                                        SU2Element(g * b * g.adjoint()));
    CHECK(std::abs(before - after) < 1e-12);

    const double s_before = sphere4_residual(traces_from_representation(a, b, c));
    const double s_after = sphere4_residual(traces_from_representation(
        SU2Element(g * a * g.adjoint()), SU2Element(g * b * g.adjoint()),
        SU2Element(g * c * g.adjoint())));
    CHECK(std::abs(s_before - s_after) < 1e-12);
  }
}

TEST_CASE("torus fiber membership") {
  CHECK(torus_fiber_membership(0, 0, 0, -2.0));
  CHECK(torus_fiber_membership(2, 2, 2, 2.0));
  CHECK_FALSE(torus_fiber_membership(1, 0, 0, 2.0));
  CHECK_THROWS_AS(torus_fiber_membership(3, 0, 0, 0.0), validation_error);

  // commuting pairs land on the c0 = 2 fiber
  RandomStream rng(10);
  for (int i = 0; i < 200; ++i) {
    const double alpha = 2 * M_PI * rng.uniform();
    const double beta = 2 * M_PI * rng.uniform();
    SU2Element a = SU2Element::Zero(), b = SU2Element::Zero();
    a(0, 0) = std::exp(complexd(0, alpha));
    a(1, 1) = std::exp(complexd(0, -alpha));
    b(0, 0) = std::exp(complexd(0, beta));
    b(1, 1) = std::exp(complexd(0, -beta));
    const double x = a.trace().real();
    const double y = b.trace().real();
    const double z = (a * b).trace().real();
    CHECK(torus_fiber_membership(x, y, z, 2.0));
    CHECK(torus_residual(a, b) < 1e-12);
  }
}

TEST_CASE("moment domain membership") {
  const TrivalentGraph theta = theta_graph();
  CHECK(bs_domain_membership(theta, {{0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}}));
  CHECK_FALSE(bs_domain_membership(theta, {{0, 1.0}, {1, 1.0}, {2, 1.0}}));
  // the asymmetric reading keeps (1,1,1): z2 + z3 = 2 is allowed
  CHECK(bs_domain_membership(theta, {{0, 1.0}, {1, 1.0}, {2, 1.0}},
                             SumBound::asymmetric));
  CHECK_THROWS_AS(bs_domain_membership(theta, {{0, 1.5}, {1, 0.0}, {2, 0.0}}),
                  validation_error);
  CHECK_THROWS_AS(bs_domain_membership(theta, {{0, 0.5}, {1, 0.5}}),
                  validation_error);

  // rescaled labelings populate the domain
  for (const auto& graph : {theta_graph(), dumbbell_graph()}) {
    for (int k = 1; k <= 6; ++k) {
      for (const Labeling& l : enumerate_labelings(graph, k)) {
        std::map<int, double> z;
        for (std::size_t i = 0; i < l.values.size(); ++i)
          z[graph.edge_ids()[i]] = static_cast<double>(l.values[i]) / k;
        CHECK(bs_domain_membership(graph, z));
      }
    }
  }
}

TEST_CASE("seeded sampling reports") {
  const SampleReport first = sample_torus(777, 50000);
  const SampleReport second = sample_torus(777, 50000);
  CHECK(first.max_residual == second.max_residual);
  CHECK(first.max_residual < 1e-12);
}
