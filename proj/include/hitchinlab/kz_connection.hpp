#pragma once

#include <array>
#include <complex>
#include <vector>

#include "hitchinlab/common.hpp"

namespace hitchinlab {

// SU(2) irrep with highest weight lambda (spin lambda/2, dimension lambda+1).
struct SpinLabel {
  int lambda = 0;
  double spin() const { return lambda / 2.0; }
  int dim() const { return lambda + 1; }
};

// Four punctures pinned at -1, 0, 1 and a moving point tau.
struct FourPointConfig {
  std::array<SpinLabel, 4> labels;
  complexd tau;
  double coupling = 1.0;
};

// Anti-Hermitian generators J_1, J_2, J_3 of the irrep, orthonormal for the
// trace form on the defining representation (longest root of length sqrt 2);
// sum_a J_a J_a = -2 j (j+1) Id.
std::array<Eigen::MatrixXcd, 3> irrep_generators(SpinLabel label);

// Casimir element acting in tensor slots i and j (0-based) of the four-fold
// product, built from the bilinear-form-orthonormal (Hermitian) generator
// basis so the spin-J eigenvalue is J(J+1) - j_i(j_i+1) - j_j(j_j+1).
Eigen::MatrixXcd casimir_pair(int slot_i, int slot_j,
                              const std::array<SpinLabel, 4>& labels);

struct InvariantSubspace {
  long ambient_dim = 0;
  Eigen::MatrixXcd basis;  // orthonormal columns
  int dim() const { return static_cast<int>(basis.cols()); }
};

// Joint kernel of the three diagonal generator actions on the tensor product.
InvariantSubspace invariant_subspace(const std::array<SpinLabel, 4>& labels);

// Connection one-form Omega_41/tau + Omega_42/(tau-1) + Omega_43/(tau+1),
// restricted to the invariant subspace; cached for repeated transports.
class KzSystem {
 public:
  explicit KzSystem(const FourPointConfig& config);

  const InvariantSubspace& subspace() const { return subspace_; }
  // restricted Casimir residues at the punctures 0, 1, -1 (coupling excluded)
  const Eigen::MatrixXcd& residue_at_zero() const { return a41_; }
  const Eigen::MatrixXcd& residue_at_one() const { return a42_; }
  const Eigen::MatrixXcd& residue_at_minus_one() const { return a43_; }

  Eigen::MatrixXcd one_form(complexd tau) const;

  // RK4 parallel transport along a polyline; `steps` is the total budget
  // distributed over the segments by arc length.
  Eigen::MatrixXcd transport(const std::vector<complexd>& path, int steps) const;

  // same transport plus the change under halving the step count
  struct CheckedTransport {
    Eigen::MatrixXcd matrix;
    double halving_defect;
  };
  CheckedTransport transport_checked(const std::vector<complexd>& path,
                                     int steps) const;

 private:
  double coupling_;
  InvariantSubspace subspace_;
  Eigen::MatrixXcd a41_, a42_, a43_;
};

Eigen::MatrixXcd kz_transport(const FourPointConfig& config,
                              const std::vector<complexd>& path, int steps);

// Two traceless symmetric 3x3 complex matrices are conjugate under
// SL(2, C) iff their spectra agree.
bool symbol_conjugacy_check(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b);

std::vector<complexd> circle_path(complexd center, double radius, int segments);

}  // namespace hitchinlab
