#pragma once

#include <vector>

#include "hitchinlab/common.hpp"

namespace hitchinlab {

// Level-k theta series data on the torus:
//   theta_j(z, tau) = sum_n exp(pi i k (n + j/k)^2 tau + 2 pi i k (n + j/k) z),
// truncated at |n| <= truncation.
struct ThetaParams {
  int k;
  complexd tau;
  int truncation;

  // truncation < 0 picks the smallest N >= 10 with
  // exp(-pi k Im(tau) N^2) < 1e-15.
  ThetaParams(int level, complexd tau_in, int truncation_in = -1);
};

complexd theta_value(int j, const ThetaParams& params, complexd z);

// |d/dtau theta_j - (1/(4 pi i k)) d^2/dz^2 theta_j| by termwise
// differentiation of the truncated series; the flat heat equation the basis
// satisfies makes this vanish identically term by term.
double heat_residual(int j, const ThetaParams& params, complexd z);

// Evolves the frequency coefficients from tau0 to tau1 with the exact heat
// multiplier exp(pi i k (n+j/k)^2 (tau1 - tau0)) and returns the max over the
// grid of |evolved - theta_j(., tau1)|.
double heat_evolve_check(int j, int k, complexd tau0, complexd tau1,
                         const std::vector<complexd>& z_grid);

}  // namespace hitchinlab
