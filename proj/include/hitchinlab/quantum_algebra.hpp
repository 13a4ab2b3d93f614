#pragma once

#include <complex>
#include <map>

#include "hitchinlab/pants_graph.hpp"

namespace hitchinlab {

// Root-of-unity data at order r = k + 2.
struct QuantumParams {
  int k;
  int r;
  double eta;  // sqrt(2/r) sin(pi/r)
  explicit QuantumParams(int level);
};

struct QuantumInteger {
  double qint;   // [j] = sin(j pi/r) / sin(pi/r)
  double qfact;  // [j]! with [0]! = 1
  double loop;   // <j> = (-1)^j [j+1]
};

QuantumInteger quantum_integer(int j, const QuantumParams& params);

// <a,b,c> = (-1)^{A+B+G} [A+B+G+1]! [A]! [B]! [G]! / ([a]! [b]! [c]!)
// with A = (b+c-a)/2, B = (a+c-b)/2, G = (a+b-c)/2; the triple must be
// admissible at level k so that A, B, G are nonnegative integers.
double theta_symbol(int a, int b, int c, const QuantumParams& params);

// eta^{1-g} prod_v theta(labels at v) / prod_e <l(e)>. The labeling must be a
// member of the admissible set of the graph at level k.
double norm_squared(const TrivalentGraph& graph, const Labeling& labeling,
                    const QuantumParams& params);

struct NormTable {
  std::vector<int> edge_ids;
  std::map<std::vector<int>, double> entries;  // labeling values -> [v_l, v_l]
};

NormTable build_norm_table(const TrivalentGraph& graph, int k);

enum class BasisKind { raw_v, orthonormal_v };

using CoefficientMap = std::map<std::vector<int>, std::complex<double>>;

// Hermitian pairing of coefficient vectors over the labeling set, conjugate
// linear in the second argument. In the raw basis each diagonal term carries
// the [v_l, v_l] weight; in the orthonormal basis the weights are 1.
std::complex<double> bs_inner(const CoefficientMap& c1, const CoefficientMap& c2,
                              const NormTable& norms, BasisKind basis);

}  // namespace hitchinlab
