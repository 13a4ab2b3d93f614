#include "hitchinlab/quantum_algebra.hpp"

#include <cmath>
#include <numbers>

namespace hitchinlab {

QuantumParams::QuantumParams(int level) : k(level), r(level + 2) {
  if (level < 1) throw validation_error("QuantumParams: level must be >= 1");
  eta = std::sqrt(2.0 / r) * std::sin(std::numbers::pi / r);
}

namespace {

double qint_raw(int j, int r) {
  return std::sin(j * std::numbers::pi / r) / std::sin(std::numbers::pi / r);
}

double qfact_raw(int j, int r) {
  double f = 1.0;
  for (int m = 1; m <= j; ++m) f *= qint_raw(m, r);
  return f;
}

}  // namespace

QuantumInteger quantum_integer(int j, const QuantumParams& params) {
  if (j < 0 || j > params.r - 1)
    throw validation_error("quantum_integer: j out of [0, r-1]");
  QuantumInteger out;
  out.qint = qint_raw(j, params.r);
  out.qfact = qfact_raw(j, params.r);
  out.loop = ((j % 2 == 0) ? 1.0 : -1.0) * qint_raw(j + 1, params.r);
  return out;
}

double theta_symbol(int a, int b, int c, const QuantumParams& params) {
  if (!is_admissible_triple(a, b, c, params.k))
    throw validation_error("theta_symbol: triple not admissible at this level");
  const int alpha = (b + c - a) / 2;
  const int beta = (a + c - b) / 2;
  const int gamma = (a + b - c) / 2;
  const int r = params.r;
  const double sign = ((alpha + beta + gamma) % 2 == 0) ? 1.0 : -1.0;
  return sign * qfact_raw(alpha + beta + gamma + 1, r) * qfact_raw(alpha, r) *
         qfact_raw(beta, r) * qfact_raw(gamma, r) /
         (qfact_raw(a, r) * qfact_raw(b, r) * qfact_raw(c, r));
}

double norm_squared(const TrivalentGraph& graph, const Labeling& labeling,
                    const QuantumParams& params) {
  if (labeling.level != params.k)
    throw validation_error("norm_squared: labeling level mismatch");
  if (labeling.values.size() != graph.edge_ids().size())
    throw validation_error("norm_squared: labeling size mismatch");

  // membership: even on bridges, admissible at every vertex
  const auto bridges = separating_edges(graph);
  for (std::size_t i = 0; i < labeling.values.size(); ++i) {
    const int v = labeling.values[i];
    if (v < 0 || v > params.k)
      throw validation_error("norm_squared: label out of range");
    if (bridges.count(graph.edge_ids()[i]) && v % 2 != 0)
      throw validation_error("norm_squared: odd label on separating edge");
  }
  auto label_at = [&](int edge_id) {
    return labeling.values[graph.edge_index(edge_id)];
  };
  double vertex_product = 1.0;
  for (int v : graph.vertices()) {
    const auto inc = graph.incident_edges(v);
    const int l1 = label_at(inc[0]), l2 = label_at(inc[1]), l3 = label_at(inc[2]);
    if (!is_admissible_triple(l1, l2, l3, params.k))
      throw validation_error("norm_squared: labeling not admissible at a vertex");
    vertex_product *= theta_symbol(l1, l2, l3, params);
  }
  double edge_product = 1.0;
  for (std::size_t i = 0; i < labeling.values.size(); ++i)
    edge_product *= quantum_integer(labeling.values[i], params).loop;

  const int g = graph.genus();
  return std::pow(params.eta, 1 - g) * vertex_product / edge_product;
}

NormTable build_norm_table(const TrivalentGraph& graph, int k) {
  const QuantumParams params(k);
  NormTable table;
  table.edge_ids = graph.edge_ids();
  for (const Labeling& l : enumerate_labelings(graph, k))
    table.entries[l.values] = norm_squared(graph, l, params);
  return table;
}

std::complex<double> bs_inner(const CoefficientMap& c1, const CoefficientMap& c2,
                              const NormTable& norms, BasisKind basis) {
  for (const auto* cm : {&c1, &c2})
    for (const auto& [key, value] : *cm) {
      (void)value;
      if (!norms.entries.count(key))
        throw validation_error("bs_inner: coefficient outside the labeling set");
    }
  std::complex<double> total = 0.0;
  for (const auto& [key, v1] : c1) {
    auto it = c2.find(key);
    if (it == c2.end()) continue;
    const double weight =
        (basis == BasisKind::raw_v) ? norms.entries.at(key) : 1.0;
    total += v1 * std::conj(it->second) * weight;
  }
  return total;
}

}  // namespace hitchinlab
