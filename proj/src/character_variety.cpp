#include "hitchinlab/character_variety.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace hitchinlab {

void validate_su2(const SU2Element& u) {
  if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() > 1e-12)
    throw validation_error("SU2Element: not unitary");
  if (std::abs(u.determinant() - complexd(1.0, 0.0)) > 1e-12)
    throw validation_error("SU2Element: determinant != 1");
}

SU2Element random_su2(RandomStream& rng) {
  double q[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& c : q) {
      c = rng.gaussian();
      norm2 += c * c;
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : q) c *= inv;
  SU2Element u;
  u << complexd(q[0], q[1]), complexd(q[2], q[3]),
      complexd(-q[2], q[3]), complexd(q[0], -q[1]);
  return u;
}

FourHoleTraces traces_from_representation(const SU2Element& a, const SU2Element& b,
                                          const SU2Element& c) {
  for (const auto* m : {&a, &b, &c}) validate_su2(*m);
  const SU2Element d = (a * b * c).inverse();
  FourHoleTraces t;
  t.a = a.trace().real();
  t.b = b.trace().real();
  t.c = c.trace().real();
  t.d = d.trace().real();
  t.x = (a * b).trace().real();
  t.y = (b * c).trace().real();
  t.z = (a * c).trace().real();
  return t;
}

double sphere4_residual(const FourHoleTraces& t) {
  const double lhs = t.x * t.x + t.y * t.y + t.z * t.z + t.x * t.y * t.z;
  const double rhs = (t.a * t.b + t.c * t.d) * t.x + (t.a * t.d + t.b * t.c) * t.y +
                     (t.a * t.c + t.b * t.d) * t.z -
                     (t.a * t.a + t.b * t.b + t.c * t.c + t.d * t.d +
                      t.a * t.b * t.c * t.d - 4.0);
  return std::abs(lhs - rhs);
}

double torus_residual(const SU2Element& a, const SU2Element& b) {
  validate_su2(a);
  validate_su2(b);
  const double commutator_trace =
      (a * b * a.inverse() * b.inverse()).trace().real();
  const double ta = a.trace().real();
  const double tb = b.trace().real();
  const double tab = (a * b).trace().real();
  return std::abs(commutator_trace - ta * ta - tb * tb - tab * tab +
                  ta * tb * tab + 2.0);
}

bool torus_fiber_membership(double x, double y, double z, double c0) {
  for (double v : {x, y, z})
    if (v < -2.0 || v > 2.0)
      throw validation_error("torus_fiber_membership: coordinate outside [-2,2]");
  return std::abs(x * x + y * y + z * z - x * y * z - 2.0 - c0) < 1e-9;
}

bool bs_domain_membership(const TrivalentGraph& graph,
                          const std::map<int, double>& z, SumBound bound) {
  for (int eid : graph.edge_ids()) {
    auto it = z.find(eid);
    if (it == z.end())
      throw validation_error("bs_domain_membership: missing edge coordinate");
    if (it->second < 0.0 || it->second > 1.0)
      throw validation_error("bs_domain_membership: coordinate outside [0,1]");
  }
  for (int v : graph.vertices()) {
    const auto inc = graph.incident_edges(v);
    const double z1 = z.at(inc[0]);
    const double z2 = z.at(inc[1]);
    const double z3 = z.at(inc[2]);
    const double eps = 1e-12;
    if (std::abs(z1 - z2) > z3 + eps || z3 > z1 + z2 + eps) return false;
    if (bound == SumBound::symmetric) {
      if (z1 + z2 + z3 > 2.0 + eps) return false;
    } else {
      if (z2 + z3 > 2.0 + eps) return false;
    }
  }
  return true;
}

namespace {

SampleReport run_sampling(std::uint64_t seed, long draws,
                          double (*residual)(RandomStream&)) {
  // fixed chunking so the result is independent of the worker count
  const long chunks = std::min<long>(64, std::max<long>(1, draws / 1024));
  const long per_chunk = draws / chunks;
  const long leftover = draws % chunks;
  std::vector<double> maxima(chunks, 0.0);
  parallel_for(chunks, [&](long c) {
    RandomStream rng(seed + static_cast<std::uint64_t>(c) * 0x9e3779b97f4a7c15ULL);
    const long n = per_chunk + (c == chunks - 1 ? leftover : 0);
    double worst = 0.0;
    for (long i = 0; i < n; ++i) worst = std::max(worst, residual(rng));
    maxima[c] = worst;
  });
  SampleReport report{seed, draws, 0.0};
  for (double m : maxima) report.max_residual = std::max(report.max_residual, m);
  return report;
}

}  // namespace

SampleReport sample_sphere4(std::uint64_t seed, long draws) {
  if (draws < 1) throw validation_error("sample_sphere4: draws must be >= 1");
  return run_sampling(seed, draws, [](RandomStream& rng) {
    const SU2Element a = random_su2(rng);
    const SU2Element b = random_su2(rng);
    const SU2Element c = random_su2(rng);
    return sphere4_residual(traces_from_representation(a, b, c));
  });
}

SampleReport sample_torus(std::uint64_t seed, long draws) {
  if (draws < 1) throw validation_error("sample_torus: draws must be >= 1");
  return run_sampling(seed, draws, [](RandomStream& rng) {
    const SU2Element a = random_su2(rng);
    const SU2Element b = random_su2(rng);
    return torus_residual(a, b);
  });
}

}  // namespace hitchinlab
