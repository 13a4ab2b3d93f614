#include <cmath>

#include "doctest.h"
#include "hitchinlab/siegel_geometry.hpp"

using namespace hitchinlab;

namespace {

Eigen::MatrixXd rand_sym(int n, RandomStream& rng) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = rng.gaussian();
  return m;
}

Eigen::MatrixXd rand_spd(int n, RandomStream& rng) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();
  return a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(n, n);
}

SiegelPoint rand_point(int n, RandomStream& rng) {
  return SiegelPoint(rand_sym(n, rng), rand_spd(n, rng));
}

int svd_rank(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-8 * std::max(1.0, sv(0))) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("siegel point validation") {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd bad_y = Eigen::MatrixXd::Identity(2, 2);
  bad_y(1, 1) = -1.0;
  CHECK_THROWS_AS(SiegelPoint(x, bad_y), validation_error);
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(SiegelPoint(asym, Eigen::MatrixXd::Identity(2, 2)),
                  validation_error);
}

TEST_CASE("complex structure") {
  const int n = 3;
  const SiegelPoint flat(Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Identity(n, n));
  const Eigen::MatrixXd big_i = complex_structure(flat);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  expected.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  expected.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  CHECK((big_i - expected).norm() < 1e-14);

  RandomStream rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 5;
    const SiegelPoint zpt = rand_point(dim, rng);
    const Eigen::MatrixXd j = complex_structure(zpt);
    CHECK((j * j + Eigen::MatrixXd::Identity(2 * dim, 2 * dim)).norm() < 1e-9);

    // g(u, v) = omega(u, J v) is symmetric positive definite
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * dim, 2 * dim);
    omega.topRightCorner(dim, dim) = Eigen::MatrixXd::Identity(dim, dim);
    omega.bottomLeftCorner(dim, dim) = -Eigen::MatrixXd::Identity(dim, dim);
    const Eigen::MatrixXd metric = omega * j;
    CHECK((metric - metric.transpose()).norm() < 1e-9);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 *
                                                      (metric + metric.transpose()));
    CHECK(es.eigenvalues()(0) > 0.0);
  }

  // diagonal case: g = diag(Y^{-1}, Y)
  Eigen::MatrixXd ydiag = Eigen::Vector3d(0.5, 1.0, 4.0).asDiagonal();
  const SiegelPoint diag_pt(Eigen::MatrixXd::Zero(3, 3), ydiag);
  const Eigen::MatrixXd jd = complex_structure(diag_pt);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(6, 6);
  omega.topRightCorner(3, 3) = Eigen::MatrixXd::Identity(3, 3);
  omega.bottomLeftCorner(3, 3) = -Eigen::MatrixXd::Identity(3, 3);
  Eigen::MatrixXd expected_metric = Eigen::MatrixXd::Zero(6, 6);
  expected_metric.topLeftCorner(3, 3) = ydiag.inverse();
  expected_metric.bottomRightCorner(3, 3) = ydiag;
  CHECK((omega * jd - expected_metric).norm() < 1e-13);
}

TEST_CASE("complex structure derivative") {
  RandomStream rng(12);
  const SiegelPoint zpt = rand_point(3, rng);
  const int n = 3;

  CHECK(complex_structure_derivative(zpt, Eigen::MatrixXd::Zero(n, n),
                                     Eigen::MatrixXd::Zero(n, n))
            .norm() == doctest::Approx(0.0));

  // finite differences
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 + trial % 4;
    const SiegelPoint pt = rand_point(dim, rng);
    Eigen::MatrixXd xdot = rand_sym(dim, rng);
    Eigen::MatrixXd ydot = rand_sym(dim, rng);
    xdot /= std::max(1.0, xdot.norm());
    ydot /= std::max(1.0, ydot.norm());
    const double h = 1e-5;
    const Eigen::MatrixXd fd =
        (complex_structure(SiegelPoint(pt.X + h * xdot, pt.Y + h * ydot)) -
         complex_structure(SiegelPoint(pt.X - h * xdot, pt.Y - h * ydot))) /
        (2 * h);
    const Eigen::MatrixXd di = complex_structure_derivative(pt, xdot, ydot);
    CHECK((di - fd).cwiseAbs().maxCoeff() < 1e-6);

    // differentiating J^2 = -Id forces anti-commutation
    const Eigen::MatrixXd j = complex_structure(pt);
    CHECK((di * j + j * di).norm() < 1e-9);

    // w-frame block: dJ sends w = p + Z q to -(Zdot Y^{-1}) wbar. The block
    // presentation acts on the frame row; its transpose acts on coordinates.
    Eigen::MatrixXcd wcols(2 * dim, dim), wbar(2 * dim, dim);
    const Eigen::MatrixXcd z = pt.Z();
    wcols.topRows(dim) = Eigen::MatrixXcd::Identity(dim, dim);
    wcols.bottomRows(dim) = z;
    wbar.topRows(dim) = Eigen::MatrixXcd::Identity(dim, dim);
    wbar.bottomRows(dim) = z.conjugate();
    CHECK((j.transpose().cast<complexd>() * wcols - complexd(0, 1) * wcols).norm() <
          1e-9);
    const Eigen::MatrixXcd zdot =
        xdot.cast<complexd>() + complexd(0, 1) * ydot.cast<complexd>();
    const Eigen::MatrixXcd coeff = zdot * pt.Y.inverse().cast<complexd>();
    CHECK((di.transpose().cast<complexd>() * wcols + wbar * coeff.transpose())
              .norm() < 1e-9);
  }

  // the symmetric-coefficient identity for the bivector matrix
  for (int trial = 0; trial < 10; ++trial) {
    const SiegelPoint pt = rand_point(3, rng);
    const Eigen::MatrixXcd zdot = rand_sym(3, rng).cast<complexd>() +
                                  complexd(0, 1) * rand_sym(3, rng).cast<complexd>();
    const Eigen::MatrixXcd yinv = pt.Y.inverse().cast<complexd>();
    const Eigen::MatrixXcd coeff = complexd(0, -0.5) * yinv * zdot * yinv;
    CHECK((coeff - coeff.transpose()).norm() < 1e-12);
  }

  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(n, n);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(complex_structure_derivative(zpt, asym, Eigen::MatrixXd::Zero(n, n)),
                  validation_error);
}

TEST_CASE("frame and projections") {
  RandomStream rng(13);
  {
    const SiegelPoint flat(Eigen::MatrixXd::Zero(2, 2),
                           Eigen::MatrixXd::Identity(2, 2));
    const FrameData frame = frame_and_projections(flat);
    CHECK((frame.omega_w - complexd(0, -2) * Eigen::MatrixXcd::Identity(2, 2))
              .norm() < 1e-14);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const SiegelPoint pt = rand_point(n, rng);
    const FrameData frame = frame_and_projections(pt);

    CHECK((frame.omega_w + complexd(0, 2) * pt.Y.cast<complexd>()).norm() < 1e-12);
    CHECK((frame.pi_t * frame.pi_t - frame.pi_t).norm() < 1e-10);
    CHECK((frame.pi_prime * frame.pi_prime - frame.pi_prime).norm() < 1e-10);
    CHECK((frame.pi_t * frame.pi_prime - frame.pi_t).norm() < 1e-10);
    CHECK((frame.pi_prime * frame.pi_t - frame.pi_prime).norm() < 1e-10);

    CHECK(svd_rank(frame.pi_t) == n);
    CHECK(svd_rank(frame.pi_prime) == n);
    // shared kernel: stacked null spaces span only n directions
    Eigen::JacobiSVD<Eigen::MatrixXcd> s1(frame.pi_t, Eigen::ComputeFullV);
    Eigen::JacobiSVD<Eigen::MatrixXcd> s2(frame.pi_prime, Eigen::ComputeFullV);
    Eigen::MatrixXcd kernels(2 * n, 2 * n);
    kernels.leftCols(n) = s1.matrixV().rightCols(n);
    kernels.rightCols(n) = s2.matrixV().rightCols(n);
    CHECK(svd_rank(kernels) == n);

    // the cobasis map inverts the w-frame column matrix
    Eigen::MatrixXcd frame_cols(2 * n, 2 * n);
    frame_cols.topLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    frame_cols.bottomLeftCorner(n, n) = pt.Z();
    frame_cols.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    frame_cols.bottomRightCorner(n, n) = pt.Z().conjugate();
    CHECK((frame.cobasis_map * frame_cols -
           Eigen::MatrixXcd::Identity(2 * n, 2 * n))
              .norm() < 1e-10);

    // omega in the w-frame has the stated off-diagonal blocks
    Eigen::MatrixXcd omega_pq = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    omega_pq.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    omega_pq.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd omega_frame =
        frame_cols.transpose() * omega_pq * frame_cols;
    CHECK((omega_frame.topRightCorner(n, n) - frame.omega_w).norm() < 1e-10);
    CHECK((omega_frame.bottomLeftCorner(n, n) + frame.omega_w).norm() < 1e-10);
    CHECK(omega_frame.topLeftCorner(n, n).norm() < 1e-10);
    CHECK(omega_frame.bottomRightCorner(n, n).norm() < 1e-10);
  }
}

TEST_CASE("inverse decomposition") {
  RandomStream rng(14);
  {
    const SiegelPoint pt(Eigen::MatrixXd::Zero(3, 3), rand_spd(3, rng));
    const InverseDecomposition inv = inverse_decomposition(pt);
    CHECK(inv.V.norm() < 1e-12);
    CHECK((inv.W + pt.Y.inverse()).norm() < 1e-12);
  }
  {
    Eigen::MatrixXd one = Eigen::MatrixXd::Identity(1, 1);
    const SiegelPoint pt(one, one);
    const InverseDecomposition inv = inverse_decomposition(pt);
    CHECK(inv.V(0, 0) == doctest::Approx(0.5));
    CHECK(inv.W(0, 0) == doctest::Approx(-0.5));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const SiegelPoint pt = rand_point(4, rng);
    const InverseDecomposition inv = inverse_decomposition(pt);
    const Eigen::MatrixXcd recon =
        (inv.V.cast<complexd>() + complexd(0, 1) * inv.W.cast<complexd>()) * pt.Z();
    CHECK((recon - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inv.W);
    CHECK(es.eigenvalues()(es.eigenvalues().size() - 1) < 0.0);  // negative definite
  }
}

TEST_CASE("transversality") {
  RandomStream rng(15);
  const SiegelPoint flat(Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Identity(2, 2));
  const TransversalityReport both = transversality(flat);
  CHECK(both.graph_transverse);
  CHECK(both.totally_complex);

  // Y positive definite forces both flags on
  for (int trial = 0; trial < 50; ++trial) {
    const SiegelPoint pt = rand_point(1 + trial % 5, rng);
    const TransversalityReport r = transversality(pt);
    CHECK(r.graph_transverse);
    CHECK(r.totally_complex);
  }

  // relaxed frames: real Z stays graph transverse but drops total complexity
  Eigen::MatrixXd one(1, 1), zero(1, 1);
  one << 1.0;
  zero << 0.0;
  const TransversalityReport relaxed = transversality_relaxed(one, zero);
  CHECK(relaxed.graph_transverse);
  CHECK_FALSE(relaxed.totally_complex);

  // designed rank deficiency
  Eigen::MatrixXd x2 = Eigen::MatrixXd::Zero(2, 2);
  x2(0, 0) = 1.0;
  const TransversalityReport degenerate =
      transversality_relaxed(x2, Eigen::MatrixXd::Zero(2, 2));
  CHECK_FALSE(degenerate.graph_transverse);
  CHECK_FALSE(degenerate.totally_complex);
  // span-intersection confirmation: p-span and w-span overlap
  Eigen::MatrixXcd joined(4, 4);
  joined.setZero();
  joined.topLeftCorner(2, 2) = Eigen::MatrixXcd::Identity(2, 2);
  joined.topRightCorner(2, 2) = Eigen::MatrixXcd::Identity(2, 2);
  joined.bottomRightCorner(2, 2) = x2.cast<complexd>();
  CHECK(svd_rank(joined) < 4);
}

TEST_CASE("degeneration limit") {
  Eigen::MatrixXcd zinf(2, 2);
  zinf << complexd(1.2, 0.3), complexd(-0.4, 0.2), complexd(-0.4, 0.2),
      complexd(0.9, -0.5);

  SUBCASE("exact hyperbola has zero residual") {
    SiegelPath path;
    path.Z_infinity = zinf;
    path.remainder = [](double) { return Eigen::MatrixXcd::Zero(2, 2); };
    path.remainder_derivative = [](double) { return Eigen::MatrixXcd::Zero(2, 2); };
    path.t_min = 1.0;
    for (double r : degeneration_limit(path, {1.0, 4.0, 64.0})) CHECK(r < 1e-12);
  }

  SUBCASE("scalar identity") {
    SiegelPath path;
    path.Z_infinity = Eigen::MatrixXcd::Identity(1, 1);
    path.remainder = [](double) { return Eigen::MatrixXcd::Zero(1, 1); };
    path.remainder_derivative = [](double) { return Eigen::MatrixXcd::Zero(1, 1); };
    path.t_min = 0.5;
    const auto residuals = degeneration_limit(path, {1.0});
    CHECK(residuals[0] < 1e-15);
  }

  SUBCASE("cubic remainder decays") {
    Eigen::MatrixXcd cmat(2, 2);
    cmat << complexd(0.4, 0.0), complexd(0.1, 0.2), complexd(0.1, 0.2),
        complexd(-0.3, 0.1);
    SiegelPath path;
    path.Z_infinity = zinf;
    path.remainder = [cmat](double t) -> Eigen::MatrixXcd {
      return cmat * std::pow(t, -3.0);
    };
    path.remainder_derivative = [cmat](double t) -> Eigen::MatrixXcd {
      return -3.0 * cmat * std::pow(t, -4.0);
    };
    path.t_min = 10.0;
    std::vector<double> grid;
    for (int m = 0; m <= 10; ++m) grid.push_back(10.0 * std::pow(2.0, m));
    const auto residuals = degeneration_limit(path, grid);
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i)
      CHECK(residuals[i + 1] < residuals[i]);
    CHECK(degeneration_limit(path, {1e4})[0] < 1e-4);

    CHECK_THROWS_AS(degeneration_limit(path, {5.0}), validation_error);
  }

  SUBCASE("singular limit rejected") {
    SiegelPath path;
    path.Z_infinity = Eigen::MatrixXcd::Zero(2, 2);
    path.remainder = [](double) { return Eigen::MatrixXcd::Zero(2, 2); };
    path.remainder_derivative = [](double) { return Eigen::MatrixXcd::Zero(2, 2); };
    CHECK_THROWS_AS(degeneration_limit(path, {2.0}), validation_error);
  }
}
