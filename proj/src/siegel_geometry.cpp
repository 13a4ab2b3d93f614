#include "hitchinlab/siegel_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hitchinlab {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols()) throw validation_error(std::string(what) + ": not square");
  if ((m - m.transpose()).norm() > 1e-12 * std::max(1.0, m.norm()))
    throw validation_error(std::string(what) + ": not symmetric");
}

// scale so the spectral radius is at most 10 before determinant thresholding
Eigen::MatrixXcd unit_scale(const Eigen::MatrixXcd& m) {
  const double radius = operator_norm(m);
  if (radius > 10.0) return m * (10.0 / radius);
  return m;
}

constexpr double kDetTol = 1e-10;

bool rank_deficient(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd s = unit_scale(m);
  return std::abs(s.determinant()) <= kDetTol;
}

}  // namespace

SiegelPoint::SiegelPoint(Eigen::MatrixXd x, Eigen::MatrixXd y)
    : X(std::move(x)), Y(std::move(y)) {
  require_symmetric(X, "SiegelPoint X");
  require_symmetric(Y, "SiegelPoint Y");
  if (X.rows() != Y.rows()) throw validation_error("SiegelPoint: size mismatch");
  n = static_cast<int>(X.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Y);
  if (es.eigenvalues()(0) <= 0.0)
    throw validation_error("SiegelPoint: Y must be positive definite");
}

Eigen::MatrixXd complex_structure(const SiegelPoint& zpt) {
  const int n = zpt.n;
  const Eigen::MatrixXd yinv = zpt.Y.inverse();
  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = -zpt.X * yinv;
  out.topRightCorner(n, n) = -(zpt.Y + zpt.X * yinv * zpt.X);
  out.bottomLeftCorner(n, n) = yinv;
  out.bottomRightCorner(n, n) = yinv * zpt.X;
  return out;
}

Eigen::MatrixXd complex_structure_derivative(const SiegelPoint& zpt,
                                             const Eigen::MatrixXd& xdot,
                                             const Eigen::MatrixXd& ydot) {
  require_symmetric(xdot, "Xdot");
  require_symmetric(ydot, "Ydot");
  if (xdot.rows() != zpt.n || ydot.rows() != zpt.n)
    throw validation_error("complex_structure_derivative: size mismatch");
  const Eigen::MatrixXd yinv = zpt.Y.inverse();
  const Eigen::MatrixXd dyinv = -yinv * ydot * yinv;
  const Eigen::MatrixXd& x = zpt.X;
  const int n = zpt.n;
  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = -xdot * yinv - x * dyinv;
  out.topRightCorner(n, n) =
      -(ydot + xdot * yinv * x + x * dyinv * x + x * yinv * xdot);
  out.bottomLeftCorner(n, n) = dyinv;
  out.bottomRightCorner(n, n) = dyinv * x + yinv * xdot;
  return out;
}

FrameData frame_and_projections(const SiegelPoint& zpt) {
  const int n = zpt.n;
  const Eigen::MatrixXcd z = zpt.Z();
  const Eigen::MatrixXcd zbar = z.conjugate();
  const Eigen::MatrixXcd yinv = zpt.Y.inverse().cast<complexd>();
  const complexd ihalf(0.0, 0.5);

  FrameData out;
  out.omega_w = complexd(0.0, -2.0) * zpt.Y.cast<complexd>();

  // covector coordinate convention: columns give the image of (p_i*, q_i*)
  out.pi_t = Eigen::MatrixXcd(2 * n, 2 * n);
  out.pi_t.topLeftCorner(n, n) = ihalf * zbar * yinv;
  out.pi_t.topRightCorner(n, n) = ihalf * zbar * yinv * z;
  out.pi_t.bottomLeftCorner(n, n) = -ihalf * yinv;
  out.pi_t.bottomRightCorner(n, n) = -ihalf * yinv * z;

  out.pi_prime = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.pi_prime.topLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  out.pi_prime.topRightCorner(n, n) = z;

  out.cobasis_map = Eigen::MatrixXcd(2 * n, 2 * n);
  out.cobasis_map.topLeftCorner(n, n) = ihalf * yinv * zbar;
  out.cobasis_map.topRightCorner(n, n) = -ihalf * yinv;
  out.cobasis_map.bottomLeftCorner(n, n) = -ihalf * yinv * z;
  out.cobasis_map.bottomRightCorner(n, n) = ihalf * yinv;
  return out;
}

InverseDecomposition inverse_decomposition(const SiegelPoint& zpt) {
  const Eigen::MatrixXd yinv = zpt.Y.inverse();
  const Eigen::MatrixXd core = (zpt.X * yinv * zpt.X + zpt.Y).inverse();
  InverseDecomposition out;
  out.W = -core;
  out.V = yinv * zpt.X * core;
  return out;
}

TransversalityReport transversality(const SiegelPoint& zpt) {
  TransversalityReport out;
  out.graph_transverse = !rank_deficient(zpt.Z());
  out.totally_complex = !rank_deficient(zpt.Y.cast<complexd>());
  return out;
}

TransversalityReport transversality_relaxed(const Eigen::MatrixXd& x,
                                            const Eigen::MatrixXd& y) {
  require_symmetric(x, "X");
  require_symmetric(y, "Y");
  if (x.rows() != y.rows()) throw validation_error("transversality: size mismatch");
  const Eigen::MatrixXcd z = x.cast<complexd>() + complexd(0, 1) * y.cast<complexd>();
  TransversalityReport out;
  out.graph_transverse = !rank_deficient(z);
  out.totally_complex = !rank_deficient(y.cast<complexd>());
  return out;
}

std::vector<double> degeneration_limit(const SiegelPath& path,
                                       const std::vector<double>& t_grid) {
  const int n = static_cast<int>(path.Z_infinity.rows());
  if ((path.Z_infinity - path.Z_infinity.transpose()).norm() >
      1e-12 * std::max(1.0, path.Z_infinity.norm()))
    throw validation_error("SiegelPath: Z_infinity not symmetric");
  if (std::abs(unit_scale(path.Z_infinity).determinant()) <= kDetTol)
    throw validation_error("SiegelPath: Z_infinity must be invertible");
  if (t_grid.empty()) return {};
  for (double t : t_grid)
    if (t < path.t_min) throw validation_error("degeneration_limit: t below t_min");

  // sample the decay hypotheses on the grid: t R(t) and t^2 R'(t) head to zero
  std::vector<double> sorted = t_grid;
  std::sort(sorted.begin(), sorted.end());
  auto decaying = [&](const std::function<double(double)>& q) {
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (q(sorted[i + 1]) > 1.001 * q(sorted[i]) + 1e-12) return false;
    if (sorted.size() > 1) {
      const double first = q(sorted.front()), last = q(sorted.back());
      if (last > 0.9 * first + 1e-12) return false;
    }
    return true;
  };
  if (!decaying([&](double t) { return t * path.remainder(t).norm(); }) ||
      !decaying([&](double t) { return t * t * path.remainder_derivative(t).norm(); }))
    throw validation_error("SiegelPath: decay hypothesis fails on the grid");

  const Eigen::MatrixXcd zinf_bar_inv = path.Z_infinity.conjugate().inverse();
  std::vector<double> residuals;
  residuals.reserve(t_grid.size());
  for (double t : t_grid) {
    const Eigen::MatrixXcd z = path.Z_infinity / t + path.remainder(t);
    const Eigen::MatrixXcd zdot =
        -path.Z_infinity / (t * t) + path.remainder_derivative(t);
    const Eigen::MatrixXcd zbar_inv = z.conjugate().inverse();
    const Eigen::MatrixXcd coeff = zbar_inv * zdot.conjugate() * zbar_inv;
    residuals.push_back((coeff + zinf_bar_inv).norm());
    (void)n;
  }
  return residuals;
}

}  // namespace hitchinlab
