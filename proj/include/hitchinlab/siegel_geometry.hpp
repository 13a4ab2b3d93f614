#pragma once

#include <functional>
#include <vector>

#include "hitchinlab/common.hpp"

namespace hitchinlab {

// Point Z = X + iY of the Siegel upper half space: X, Y real symmetric and
// Y positive definite. Parametrizes a compatible linear complex structure on
// the standard symplectic vector space R^{2n} with frame (p, q) and
// omega = sum p_i* ^ q_i*.
struct SiegelPoint {
  Eigen::MatrixXd X;
  Eigen::MatrixXd Y;
  int n = 0;

  SiegelPoint(Eigen::MatrixXd x, Eigen::MatrixXd y);
  Eigen::MatrixXcd Z() const { return X.cast<complexd>() + complexd(0, 1) * Y.cast<complexd>(); }
};

// Block matrix [[-X Y^{-1}, -(Y + X Y^{-1} X)], [Y^{-1}, Y^{-1} X]] acting on
// the (p, q) frame; squares to -Id and is omega-compatible.
Eigen::MatrixXd complex_structure(const SiegelPoint& zpt);

// Derivative of complex_structure along a symmetric perturbation
// (Xdot, Ydot), using d(Y^{-1}) = -Y^{-1} Ydot Y^{-1}.
Eigen::MatrixXd complex_structure_derivative(const SiegelPoint& zpt,
                                             const Eigen::MatrixXd& xdot,
                                             const Eigen::MatrixXd& ydot);

struct FrameData {
  Eigen::MatrixXcd omega_w;      // -2i Y: matrix of omega in the w-frame
  Eigen::MatrixXcd pi_t;         // projection onto span(w*) along span(wbar*)
  Eigen::MatrixXcd pi_prime;     // projection onto span(p*) along span(wbar*)
  Eigen::MatrixXcd cobasis_map;  // (w*, wbar*) = cobasis_map (p*, q*)
};

FrameData frame_and_projections(const SiegelPoint& zpt);

struct InverseDecomposition {
  Eigen::MatrixXd V;  // real part of Z^{-1}
  Eigen::MatrixXd W;  // imaginary part; negative definite
};

// Z^{-1} = V + iW with W = -(X Y^{-1} X + Y)^{-1}, V = Y^{-1} X (X Y^{-1} X + Y)^{-1}.
InverseDecomposition inverse_decomposition(const SiegelPoint& zpt);

struct TransversalityReport {
  bool graph_transverse;  // span(p) meets span(w) trivially <=> det Z != 0
  bool totally_complex;   // span(w) meets its conjugate trivially <=> det Y != 0
};

TransversalityReport transversality(const SiegelPoint& zpt);
// Relaxed variant: Y only symmetric, to probe degenerate frames.
TransversalityReport transversality_relaxed(const Eigen::MatrixXd& x,
                                            const Eigen::MatrixXd& y);

// Degenerating family Z(t) = Z_infinity / t + R(t) with det Z_infinity != 0,
// t R(t) -> 0 and t^2 R'(t) -> 0.
struct SiegelPath {
  Eigen::MatrixXcd Z_infinity;
  std::function<Eigen::MatrixXcd(double)> remainder;
  std::function<Eigen::MatrixXcd(double)> remainder_derivative;
  double t_min = 1.0;
};

// For each grid time, || conj(Z)^{-1} d(conj Z)/dt conj(Z)^{-1} + conj(Z_inf)^{-1} ||.
// The grid must stay at or above t_min; the decay hypotheses are sampled on it.
std::vector<double> degeneration_limit(const SiegelPath& path,
                                       const std::vector<double>& t_grid);

}  // namespace hitchinlab
