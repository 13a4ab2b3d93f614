#include "hitchinlab/toeplitz_cp1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

namespace hitchinlab {

SphereFunction::SphereFunction(std::vector<SphereFunctionTerm> terms)
    : terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (term.s < 0 || term.t < 0 || term.q < 0)
      throw validation_error("SphereFunction: negative exponent");
    if (term.s + term.t > 2 * term.q)
      throw validation_error("SphereFunction: term unbounded on the sphere");
  }
}

complexd SphereFunction::operator()(complexd z) const {
  const double u = std::norm(z);
  complexd total = 0.0;
  for (const auto& term : terms_) {
    complexd v = term.coeff;
    for (int i = 0; i < term.s; ++i) v *= z;
    for (int i = 0; i < term.t; ++i) v *= std::conj(z);
    v *= std::pow(1.0 + u, -term.q);
    total += v;
  }
  return total;
}

SphereFunction SphereFunction::operator*(const SphereFunction& other) const {
  std::vector<SphereFunctionTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& x : terms_)
    for (const auto& y : other.terms_)
      out.push_back({x.coeff * y.coeff, x.s + y.s, x.t + y.t, x.q + y.q});
  return SphereFunction(std::move(out));
}

SphereFunction SphereFunction::conjugated() const {
  std::vector<SphereFunctionTerm> out;
  out.reserve(terms_.size());
  for (const auto& x : terms_) out.push_back({std::conj(x.coeff), x.t, x.s, x.q});
  return SphereFunction(std::move(out));
}

int SphereFunction::max_angular_frequency() const {
  int m = 0;
  for (const auto& term : terms_) m = std::max(m, std::abs(term.s - term.t));
  return m;
}

bool SphereFunction::is_real() const {
  // compare against the conjugate termwise after normalization
  auto key = [](const SphereFunctionTerm& t) {
    return std::tuple<int, int, int>(t.s, t.t, t.q);
  };
  std::vector<SphereFunctionTerm> a = terms_, b = conjugated().terms();
  auto order = [&](const SphereFunctionTerm& x, const SphereFunctionTerm& y) {
    return key(x) < key(y);
  };
  std::sort(a.begin(), a.end(), order);
  std::sort(b.begin(), b.end(), order);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (key(a[i]) != key(b[i])) return false;
    if (std::abs(a[i].coeff - b[i].coeff) > 1e-14) return false;
  }
  return true;
}

SphereFunction registry_function(const std::string& name, int k) {
  if (name == "one") return SphereFunction({{1.0, 0, 0, 0}});
  if (name == "zero") return SphereFunction(std::vector<SphereFunctionTerm>{});
  if (name == "x1")
    return SphereFunction({{1.0, 1, 0, 1}, {1.0, 0, 1, 1}});
  if (name == "x2")
    return SphereFunction({{complexd(0, -1), 1, 0, 1}, {complexd(0, 1), 0, 1, 1}});
  if (name == "x3")
    return SphereFunction({{1.0, 0, 0, 1}, {-1.0, 1, 1, 1}});
  if (name == "highmode") {
    if (k < 0) throw validation_error("registry_function: highmode needs a level");
    return SphereFunction({{1.0, k + 1, 0, k + 1}});
  }
  throw validation_error("registry_function: unknown name '" + name + "'");
}

FockBasis::FockBasis(int level) : k(level) {
  if (level < 0) throw validation_error("FockBasis: level must be >= 0");
  norm_squared.resize(level + 1);
  double binom = 1.0;
  for (int a = 0; a <= level; ++a) {
    norm_squared[a] = 1.0 / binom;
    binom = binom * (level - a) / (a + 1);
  }
}

namespace {

Eigen::MatrixXcd toeplitz_once(const SphereFunction& f, const FockBasis& basis,
                               int radial, int angular) {
  const int k = basis.k;
  const GaussLegendre gl(radial);

  // radial substitution u = v/(1-v):
  //   int_0^inf h(u) (1+u)^{-(k+2)} du = int_0^1 h(u(v)) (1-v)^k dv
  // angular transform: F_m(u) = (1/2 pi) int f(sqrt(u) e^{i a}) e^{-i m a} da
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k + 1, k + 1);
  std::vector<complexd> bins(2 * k + 1);
  for (int rnode = 0; rnode < radial; ++rnode) {
    const double v = 0.5 * (gl.nodes[rnode] + 1.0);
    const double wv = 0.5 * gl.weights[rnode];
    const double u = v / (1.0 - v);
    const double radial_weight = wv * std::pow(1.0 - v, k);
    const double sqrt_u = std::sqrt(u);

    std::fill(bins.begin(), bins.end(), complexd(0.0, 0.0));
    for (int anode = 0; anode < angular; ++anode) {
      const double angle = 2.0 * std::numbers::pi * anode / angular;
      const complexd z = sqrt_u * complexd(std::cos(angle), std::sin(angle));
      const complexd fv = f(z) / static_cast<double>(angular);
      for (int m = -k; m <= k; ++m)
        bins[m + k] += fv * complexd(std::cos(m * angle), -std::sin(m * angle));
    }
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        const complexd fm = bins[(a - b) + k];
        if (fm == complexd(0.0, 0.0)) continue;
        out(a, b) += radial_weight * fm * std::pow(u, 0.5 * (a + b));
      }
  }
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      out(a, b) *= (k + 1) / std::sqrt(basis.norm_squared[a] * basis.norm_squared[b]);
  return out;
}

}  // namespace

Eigen::MatrixXcd toeplitz_matrix(const SphereFunction& f, const FockBasis& basis,
                                 const QuadratureSpec& quad) {
  const int k = basis.k;
  int radial = quad.radial > 0 ? quad.radial : k + 12;
  int angular = quad.angular > 0
                    ? quad.angular
                    : 2 * (k + f.max_angular_frequency()) + 8;
  const Eigen::MatrixXcd coarse = toeplitz_once(f, basis, radial, angular);
  if (!quad.check) return coarse;
  const Eigen::MatrixXcd fine = toeplitz_once(f, basis, 2 * radial, 2 * angular);
  const double drift = (coarse - fine).cwiseAbs().maxCoeff();
  if (drift > quad.tol)
    throw tolerance_error("toeplitz_matrix: quadrature did not converge");
  return fine;
}

DecayReport multiplicativity_decay(const SphereFunction& f, const SphereFunction& g,
                                   const std::vector<int>& levels) {
  if (levels.empty())
    throw validation_error("multiplicativity_decay: empty level list");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 2)
      throw validation_error("multiplicativity_decay: levels must be >= 2");
    if (i > 0 && levels[i] <= levels[i - 1])
      throw validation_error("multiplicativity_decay: levels must increase");
  }
  const SphereFunction product = f * g;
  DecayReport report;
  report.levels = levels;
  report.defects.resize(levels.size());
  parallel_for(static_cast<long>(levels.size()), [&](long i) {
    const FockBasis basis(levels[i]);
    const Eigen::MatrixXcd tf = toeplitz_matrix(f, basis);
    const Eigen::MatrixXcd tg = toeplitz_matrix(g, basis);
    const Eigen::MatrixXcd tfg = toeplitz_matrix(product, basis);
    report.defects[i] = operator_norm(tf * tg - tfg);
  });

  // least-squares slope of log defect against log level
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (report.defects[i] <= 0.0) continue;
    const double x = std::log(static_cast<double>(levels[i]));
    const double y = std::log(report.defects[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2 && count == static_cast<int>(levels.size()))
    report.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  else
    report.slope = std::numeric_limits<double>::quiet_NaN();
  return report;
}

bool kernel_check(const SphereFunction& f, const FockBasis& basis, double tol) {
  if (tol <= 0.0) throw validation_error("kernel_check: tol must be > 0");
  return operator_norm(toeplitz_matrix(f, basis)) < tol;
}

}  // namespace hitchinlab
