#include "hitchinlab/abelian_hitchin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hitchinlab {

namespace {

constexpr double kTailTarget = 1e-15;
constexpr double kValueTail = 1e-14;

double tail_term(int k, double im_tau, double im_z, double a) {
  // modulus of the series term at frequency a = n + j/k
  return std::exp(-std::numbers::pi * k * (a * a * im_tau) +
                  2.0 * std::numbers::pi * k * std::abs(a) * std::abs(im_z));
}

}  // namespace

ThetaParams::ThetaParams(int level, complexd tau_in, int truncation_in)
    : k(level), tau(tau_in), truncation(truncation_in) {
  if (k < 1) throw validation_error("ThetaParams: level must be >= 1");
  if (tau.imag() < 0.1)
    throw validation_error("ThetaParams: need Im(tau) >= 0.1");
  if (truncation < 0) {
    int n = 10;
    while (std::exp(-std::numbers::pi * k * tau.imag() * n * n) >= kTailTarget)
      ++n;
    truncation = n;
  }
  if (truncation < 10)
    throw validation_error("ThetaParams: truncation must be >= 10");
  if (std::exp(-std::numbers::pi * k * tau.imag() * truncation * truncation) >=
      kTailTarget)
    throw validation_error("ThetaParams: truncation tail bound not met");
}

complexd theta_value(int j, const ThetaParams& params, complexd z) {
  if (j < 0 || j >= params.k)
    throw validation_error("theta_value: residue j out of [0, k)");
  const int k = params.k;
  const int bign = params.truncation;
  const double edge = static_cast<double>(bign) + 1.0 + static_cast<double>(j) / k;
  if (tail_term(k, params.tau.imag(), z.imag(), edge) +
          tail_term(k, params.tau.imag(), z.imag(), -edge) >=
      kValueTail)
    throw validation_error("theta_value: truncation insufficient for this z");

  const complexd ipi(0.0, std::numbers::pi);
  complexd sum = 0.0;
  for (int n = -bign; n <= bign; ++n) {
    const double a = n + static_cast<double>(j) / k;
    sum += std::exp(ipi * static_cast<double>(k) *
                    (a * a * params.tau + 2.0 * a * z));
  }
  return sum;
}

double heat_residual(int j, const ThetaParams& params, complexd z) {
  if (j < 0 || j >= params.k)
    throw validation_error("heat_residual: residue j out of [0, k)");
  const int k = params.k;
  const int bign = params.truncation;
  const complexd ipi(0.0, std::numbers::pi);
  const complexd heat_constant =
      1.0 / (complexd(0.0, 4.0 * std::numbers::pi) * static_cast<double>(k));
  complexd dtau = 0.0, dzz = 0.0;
  for (int n = -bign; n <= bign; ++n) {
    const double a = n + static_cast<double>(j) / k;
    const complexd term = std::exp(ipi * static_cast<double>(k) *
                                   (a * a * params.tau + 2.0 * a * z));
    dtau += ipi * static_cast<double>(k) * a * a * term;
    const complexd dz = complexd(0.0, 2.0 * std::numbers::pi * k * a);
    dzz += dz * dz * term;
  }
  return std::abs(dtau - heat_constant * dzz);
}

double heat_evolve_check(int j, int k, complexd tau0, complexd tau1,
                         const std::vector<complexd>& z_grid) {
  if (tau0.imag() < 0.1 || tau1.imag() < 0.1)
    throw validation_error("heat_evolve_check: need Im(tau) >= 0.1 at both ends");
  // Im is affine along the straight segment, so the minimum sits at an end.
  const ThetaParams from(k, tau0);
  const ThetaParams to(k, tau1);
  const int bign = std::max(from.truncation, to.truncation);
  const ThetaParams to_wide(k, tau1, bign);
  const complexd ipi(0.0, std::numbers::pi);
  double worst = 0.0;
  for (complexd z : z_grid) {
    complexd evolved = 0.0;
    for (int n = -bign; n <= bign; ++n) {
      const double a = n + static_cast<double>(j) / k;
      const complexd coeff =
          std::exp(ipi * static_cast<double>(k) * (a * a * tau0 + 2.0 * a * z));
      const complexd multiplier =
          std::exp(ipi * static_cast<double>(k) * a * a * (tau1 - tau0));
      evolved += multiplier * coeff;
    }
    worst = std::max(worst, std::abs(evolved - theta_value(j, to_wide, z)));
  }
  return worst;
}

}  // namespace hitchinlab
