#pragma once

#include <string>
#include <vector>

#include "hitchinlab/common.hpp"

namespace hitchinlab {

// Functions on the sphere written in the affine coordinate as finite sums
//   f(z) = sum c z^s conj(z)^t (1 + |z|^2)^{-q},   s + t <= 2q,
// which is closed under products and conjugation and covers the registry.
struct SphereFunctionTerm {
  complexd coeff;
  int s = 0;
  int t = 0;
  int q = 0;
};

class SphereFunction {
 public:
  SphereFunction() = default;
  explicit SphereFunction(std::vector<SphereFunctionTerm> terms);

  const std::vector<SphereFunctionTerm>& terms() const { return terms_; }
  complexd operator()(complexd z) const;

  SphereFunction operator*(const SphereFunction& other) const;
  SphereFunction conjugated() const;

  int max_angular_frequency() const;  // max |s - t|
  bool is_real() const;               // closed under conjugation

 private:
  std::vector<SphereFunctionTerm> terms_;
};

// Named test functions: "one", "zero", "x1", "x2", "x3" (the sphere coordinate
// functions 2 Re z/(1+|z|^2), 2 Im z/(1+|z|^2), (1-|z|^2)/(1+|z|^2)) and
// "highmode" (angular frequency k+1, invisible to the level-k Toeplitz map).
SphereFunction registry_function(const std::string& name, int k);

// Monomial section basis at level k: e_a = sqrt(binom(k,a)) z^a, orthonormal
// for the measure ((k+1)/pi) (1+|z|^2)^{-(k+2)} dA.
struct FockBasis {
  int k;
  std::vector<double> norm_squared;  // ||z^a||^2 = 1 / binom(k, a)
  explicit FockBasis(int level);
};

struct QuadratureSpec {
  int radial = 0;   // Gauss-Legendre nodes in u/(1+u); 0 = from level
  int angular = 0;  // uniform angle nodes; 0 = from level and function
  double tol = 1e-10;
  bool check = true;  // node-doubling convergence check
};

// (T_f)_{ab} = <f e_b, e_a> by Gauss-Legendre in the compactified radial
// variable and uniform angular nodes.
Eigen::MatrixXcd toeplitz_matrix(const SphereFunction& f, const FockBasis& basis,
                                 const QuadratureSpec& quad = {});

struct DecayReport {
  std::vector<int> levels;
  std::vector<double> defects;  // ||T_f T_g - T_{fg}|| per level
  double slope;                 // least-squares log-log slope (NaN if defect 0)
};

DecayReport multiplicativity_decay(const SphereFunction& f, const SphereFunction& g,
                                   const std::vector<int>& levels);

// true iff ||T_f|| < tol, i.e. f represents zero in the Toeplitz quotient.
bool kernel_check(const SphereFunction& f, const FockBasis& basis, double tol);

}  // namespace hitchinlab
