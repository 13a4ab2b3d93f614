#pragma once

#include <map>

#include "hitchinlab/common.hpp"
#include "hitchinlab/pants_graph.hpp"

namespace hitchinlab {

using SU2Element = Eigen::Matrix2cd;

void validate_su2(const SU2Element& u);  // unitary with determinant 1

// Haar-distributed SU(2) element from a normalized Gaussian quaternion.
SU2Element random_su2(RandomStream& rng);

// Holonomy trace coordinates of a four-holed sphere representation:
// boundary traces a, b, c, d and belt/diagonal traces x, y, z.
struct FourHoleTraces {
  double a, b, c, d;
  double x, y, z;
};

// Traces of (A, B, C, D = (ABC)^{-1}) with x = tr AB, y = tr BC, z = tr AC.
FourHoleTraces traces_from_representation(const SU2Element& a, const SU2Element& b,
                                          const SU2Element& c);

// |x^2+y^2+z^2+xyz - (ab+cd)x - (ad+bc)y - (ac+bd)z + (a^2+b^2+c^2+d^2+abcd-4)|
double sphere4_residual(const FourHoleTraces& t);

// |tr(ABA^{-1}B^{-1}) - (trA)^2 - (trB)^2 - (trAB)^2 + trA trB trAB + 2|
double torus_residual(const SU2Element& a, const SU2Element& b);

// Level set x^2+y^2+z^2-xyz-2 = c0 inside [-2,2]^3.
bool torus_fiber_membership(double x, double y, double z, double c0);

enum class SumBound {
  symmetric,   // z1 + z2 + z3 <= 2 at every vertex
  asymmetric,  // z2 + z3 <= 2, in the order the slots are listed
};

// Rescaled-moment-polytope membership: at every vertex the incident triple
// satisfies |z1 - z2| <= z3 <= z1 + z2 plus the selected sum bound.
bool bs_domain_membership(const TrivalentGraph& graph,
                          const std::map<int, double>& z,
                          SumBound bound = SumBound::symmetric);

struct SampleReport {
  std::uint64_t seed;
  long draws;
  double max_residual;
};

SampleReport sample_sphere4(std::uint64_t seed, long draws);
SampleReport sample_torus(std::uint64_t seed, long draws);

}  // namespace hitchinlab
