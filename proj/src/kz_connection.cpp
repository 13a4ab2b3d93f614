#include "hitchinlab/kz_connection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hitchinlab {

namespace {

const std::array<complexd, 3> kPunctures = {complexd(-1.0, 0.0), complexd(0.0, 0.0),
                                            complexd(1.0, 0.0)};
constexpr double kPathMargin = 1e-3;   // transport paths keep this clearance
constexpr double kPointMargin = 1e-9;  // a basepoint only has to miss the poles

// Hermitian spin matrices S_x, S_y, S_z for spin j = lambda/2.
std::array<Eigen::MatrixXcd, 3> spin_matrices(int lambda) {
  const int dim = lambda + 1;
  const double j = lambda / 2.0;
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) sz(i, i) = j - i;
  for (int i = 1; i < dim; ++i) {
    const double m = j - i;
    sp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Eigen::MatrixXcd sm = sp.adjoint();
  Eigen::MatrixXcd sx = (sp + sm) / 2.0;
  Eigen::MatrixXcd sy = (sp - sm) / complexd(0.0, 2.0);
  return {sx, sy, sz};
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Embed op acting on one slot into the four-fold tensor product.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& op, int slot,
                       const std::array<SpinLabel, 4>& labels) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int s = 0; s < 4; ++s) {
    const int d = labels[s].dim();
    out = kron(out, s == slot ? op : Eigen::MatrixXcd::Identity(d, d));
  }
  return out;
}

void check_point_clear(complexd p, double margin) {
  for (complexd s : kPunctures)
    if (std::abs(p - s) < margin)
      throw validation_error("kz: point too close to a puncture");
}

// distance from puncture s to the segment [a, b]
double segment_distance(complexd a, complexd b, complexd s) {
  const complexd d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(s - a);
  double t = ((s - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(s - (a + t * d));
}

}  // namespace

std::array<Eigen::MatrixXcd, 3> irrep_generators(SpinLabel label) {
  if (label.lambda < 0)
    throw validation_error("irrep_generators: lambda must be >= 0");
  auto s = spin_matrices(label.lambda);
  const complexd scale(0.0, std::numbers::sqrt2);
  return {scale * s[0], scale * s[1], scale * s[2]};
}

Eigen::MatrixXcd casimir_pair(int slot_i, int slot_j,
                              const std::array<SpinLabel, 4>& labels) {
  if (slot_i < 0 || slot_i > 3 || slot_j < 0 || slot_j > 3)
    throw validation_error("casimir_pair: slot out of range");
  if (slot_i == slot_j) throw validation_error("casimir_pair: slots must differ");
  long total = 1;
  for (const SpinLabel& l : labels) total *= l.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
  for (int a = 0; a < 3; ++a) {
    const Eigen::MatrixXcd si =
        spin_matrices(labels[slot_i].lambda)[a] * std::numbers::sqrt2;
    const Eigen::MatrixXcd sj =
        spin_matrices(labels[slot_j].lambda)[a] * std::numbers::sqrt2;
    out += embed(si, slot_i, labels) * embed(sj, slot_j, labels);
  }
  return out;
}

InvariantSubspace invariant_subspace(const std::array<SpinLabel, 4>& labels) {
  long total = 1;
  for (const SpinLabel& l : labels) total *= l.dim();
  Eigen::MatrixXcd stacked(3 * total, total);
  for (int a = 0; a < 3; ++a) {
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(total, total);
    for (int s = 0; s < 4; ++s)
      gen += embed(spin_matrices(labels[s].lambda)[a], s, labels);
    stacked.block(a * total, 0, total, total) = gen;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) < cutoff) ++null_dim;
  InvariantSubspace out;
  out.ambient_dim = total;
  out.basis = svd.matrixV().rightCols(null_dim);
  return out;
}

KzSystem::KzSystem(const FourPointConfig& config) : coupling_(config.coupling) {
  check_point_clear(config.tau, kPointMargin);
  subspace_ = invariant_subspace(config.labels);
  const auto& b = subspace_.basis;
  a41_ = b.adjoint() * casimir_pair(3, 0, config.labels) * b;
  a42_ = b.adjoint() * casimir_pair(3, 1, config.labels) * b;
  a43_ = b.adjoint() * casimir_pair(3, 2, config.labels) * b;
}

Eigen::MatrixXcd KzSystem::one_form(complexd tau) const {
  return coupling_ * (a41_ / tau + a42_ / (tau - 1.0) + a43_ / (tau + 1.0));
}

Eigen::MatrixXcd KzSystem::transport(const std::vector<complexd>& path,
                                     int steps) const {
  const int m = subspace_.dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(m, m);
  if (path.size() < 2) return u;
  if (steps < 100) throw validation_error("kz transport: need at least 100 steps");

  double total_len = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    check_point_clear(path[i], kPathMargin);
    for (complexd s : kPunctures)
      if (segment_distance(path[i], path[i + 1], s) < kPathMargin)
        throw validation_error("kz path: segment too close to a puncture");
    total_len += std::abs(path[i + 1] - path[i]);
  }
  check_point_clear(path.back(), kPathMargin);
  if (total_len == 0.0) return u;

  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const complexd a = path[i];
    const complexd b = path[i + 1];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    const int n = std::max(1, static_cast<int>(std::lround(steps * len / total_len)));
    const complexd h = (b - a) / static_cast<double>(n);
    complexd tau = a;
    for (int s = 0; s < n; ++s) {
      const Eigen::MatrixXcd k1 = h * (one_form(tau) * u);
      const Eigen::MatrixXcd k2 = h * (one_form(tau + 0.5 * h) * (u + 0.5 * k1));
      const Eigen::MatrixXcd k3 = h * (one_form(tau + 0.5 * h) * (u + 0.5 * k2));
      const Eigen::MatrixXcd k4 = h * (one_form(tau + h) * (u + k3));
      u += (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
      tau += h;
    }
  }
  return u;
}

KzSystem::CheckedTransport KzSystem::transport_checked(
    const std::vector<complexd>& path, int steps) const {
  CheckedTransport out;
  out.matrix = transport(path, steps);
  const Eigen::MatrixXcd coarse = transport(path, std::max(100, steps / 2));
  out.halving_defect = (out.matrix - coarse).norm();
  return out;
}

Eigen::MatrixXcd kz_transport(const FourPointConfig& config,
                              const std::vector<complexd>& path, int steps) {
  return KzSystem(config).transport(path, steps);
}

bool symbol_conjugacy_check(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b) {
  for (const auto* m : {&a, &b}) {
    if ((*m - m->transpose()).norm() > 1e-10)
      throw validation_error("symbol_conjugacy_check: matrix not symmetric");
    if (std::abs(m->trace()) > 1e-10)
      throw validation_error("symbol_conjugacy_check: matrix not traceless");
  }
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> ea(a, false), eb(b, false);
  std::array<complexd, 3> sa, sb;
  for (int i = 0; i < 3; ++i) {
    sa[i] = ea.eigenvalues()(i);
    sb[i] = eb.eigenvalues()(i);
  }
  auto lex = [](complexd x, complexd y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  };
  std::sort(sa.begin(), sa.end(), lex);
  std::sort(sb.begin(), sb.end(), lex);
  for (int i = 0; i < 3; ++i)
    if (std::abs(sa[i] - sb[i]) > 1e-8) return false;
  return true;
}

std::vector<complexd> circle_path(complexd center, double radius, int segments) {
  if (segments < 64)
    throw validation_error("circle_path: arcs need at least 64 segments");
  std::vector<complexd> pts;
  pts.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / segments;
    pts.push_back(center + radius * complexd(std::cos(angle), std::sin(angle)));
  }
  pts.back() = pts.front();  // close exactly
  return pts;
}

}  // namespace hitchinlab
