#pragma once

#include <functional>
#include <vector>

#include "hitchinlab/common.hpp"

namespace hitchinlab {

// Generator P(t) = P_infinity + delta(t) for the transport problem
// E'(t) = -P(t) E(t), with ||delta(t)|| <= bound_c t^alpha, alpha < -1, and
// e^{-s P_infinity} a contraction for s >= 0 (positive semidefinite Hermitian
// part, which is sufficient and testable).
struct GeneratorFamily {
  Eigen::MatrixXcd P_infinity;
  std::function<Eigen::MatrixXcd(double)> delta;
  double bound_c = 0.0;
  double alpha = -2.0;
  double t_min = 1.0;

  int dim() const { return static_cast<int>(P_infinity.rows()); }
  void validate() const;  // throws validation_error on any broken invariant
};

// Time-ordered series solution: partial sums of the iterated integrals
//   E_0 = e^{-(t-t0) P_inf},
//   E_n(t) = -int_{t0}^t e^{-(t-s) P_inf} delta(s) E_{n-1}(s) ds,
// truncated once the analytic term bound (c^n/n!) ((t^{a+1}-t0^{a+1})/(a+1))^n
// drops below tol. Each nesting level is a 16-node Gauss-Legendre integral;
// the previous level is carried on a Chebyshev grid.
Eigen::MatrixXcd dyson_transport(const GeneratorFamily& fam, double t0, double t,
                                 double tol);

struct OdeResult {
  Eigen::MatrixXcd E;
  double halving_defect;  // change under halving the step count
};

// Fixed-step RK4 for E' = -P(t) E with E(t0) = Id.
OdeResult ode_transport(const GeneratorFamily& fam, double t0, double t, int steps);

// Doubles the step count until the halving defect is below tol.
Eigen::MatrixXcd ode_transport_tol(const GeneratorFamily& fam, double t0, double t,
                                   double tol);

struct LimitResult {
  Eigen::MatrixXcd E_infinity;
  double kernel_residual;  // ||P_infinity E_infinity||
  double final_time;
};

// Doubles t until ||E(2t) - E(t)|| < tol (at most 40 doublings); the columns
// of the limit land in ker P_infinity up to kernel_residual < 10 tol.
LimitResult limit_transport(const GeneratorFamily& fam, double t0, double tol);

// Per grid point: ||E(t)|| <= exp(c (t^{a+1} - t0^{a+1})/(a+1)).
std::vector<bool> bound_check(const GeneratorFamily& fam, double t0,
                              const std::vector<double>& t_grid);

double simplex_volume(int n, double t0, double t);  // (t-t0)^n / n!
double mc_simplex_volume(int n, double t0, double t, long samples,
                         std::uint64_t seed);

}  // namespace hitchinlab
