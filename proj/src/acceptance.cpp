#include "hitchinlab/acceptance.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hitchinlab/abelian_hitchin.hpp"
#include "hitchinlab/character_variety.hpp"
#include "hitchinlab/kz_connection.hpp"
#include "hitchinlab/pants_graph.hpp"
#include "hitchinlab/quantum_algebra.hpp"
#include "hitchinlab/siegel_geometry.hpp"
#include "hitchinlab/toeplitz_cp1.hpp"
#include "hitchinlab/volterra_transport.hpp"

namespace hitchinlab::acceptance {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

Eigen::MatrixXd random_symmetric(int n, RandomStream& rng) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = rng.gaussian();
  return m;
}

Eigen::MatrixXd random_spd(int n, RandomStream& rng) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();
  return a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXcd random_complex(int rows, int cols, RandomStream& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = complexd(rng.gaussian(), rng.gaussian());
  return m;
}

// rank of the column concatenation [A B] with a relative SVD cutoff
int stacked_rank(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd joined(a.rows(), a.cols() + b.cols());
  joined << a, b;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(joined);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-8 * sv(0)) ++rank;
  return rank;
}

// span-intersection oracle for the transversality flags
bool oracle_graph_transverse(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const int n = static_cast<int>(x.rows());
  const Eigen::MatrixXcd z = x.cast<complexd>() + complexd(0, 1) * y.cast<complexd>();
  Eigen::MatrixXcd pcols = Eigen::MatrixXcd::Zero(2 * n, n);
  pcols.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd wcols(2 * n, n);
  wcols.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
  wcols.bottomRows(n) = z;
  return stacked_rank(pcols, wcols) == 2 * n;
}

bool oracle_totally_complex(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  const int n = static_cast<int>(x.rows());
  const Eigen::MatrixXcd z = x.cast<complexd>() + complexd(0, 1) * y.cast<complexd>();
  Eigen::MatrixXcd wcols(2 * n, n), wbar(2 * n, n);
  wcols.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
  wcols.bottomRows(n) = z;
  wbar.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
  wbar.bottomRows(n) = z.conjugate();
  return stacked_rank(wcols, wbar) == 2 * n;
}

// greedy closest-pair matching distance between two small spectra
double spectrum_distance(std::vector<complexd> a, std::vector<complexd> b) {
  double worst = 0.0;
  while (!a.empty()) {
    std::size_t bi = 0;
    double best = std::abs(a.back() - b[0]);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const double d = std::abs(a.back() - b[i]);
      if (d < best) {
        best = d;
        bi = i;
      }
    }
    worst = std::max(worst, best);
    a.pop_back();
    b.erase(b.begin() + bi);
  }
  return worst;
}

std::vector<complexd> eigenvalues_of(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<complexd> out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[i] = es.eigenvalues()(i);
  return out;
}

CriterionResult criterion_labeling_counts() {
  Check c;
  const TrivalentGraph theta = theta_graph();
  const TrivalentGraph dumbbell = dumbbell_graph();
  for (int k = 1; k <= 8; ++k) {
    const long nt = static_cast<long>(enumerate_labelings(theta, k).size());
    const long nd = static_cast<long>(enumerate_labelings(dumbbell, k).size());
    const long verlinde = std::lround(verlinde_su2(2, k));
    c.require(nt == nd, "theta/dumbbell mismatch at k=" + std::to_string(k));
    c.require(nt == verlinde, "count != Verlinde at k=" + std::to_string(k));
    if (k == 1) c.require(nt == 4, "k=1 count must be 4");
    if (k == 2) c.require(nt == 10, "k=2 count must be 10");
  }
  if (c.ok) c.note("g=2 counts match the analytic oracle for k=1..8");
  return {1, "labeling-counts", c.ok, c.detail.str()};
}

CriterionResult criterion_norms() {
  Check c;
  std::vector<TrivalentGraph> graphs = {theta_graph(), dumbbell_graph(),
                                        chain_graph(3), k4_graph()};
  double min_norm = std::numeric_limits<double>::infinity();
  for (const auto& graph : graphs) {
    for (int k = 1; k <= 6; ++k) {
      const QuantumParams params(k);
      for (const Labeling& l : enumerate_labelings(graph, k)) {
        const double nsq = norm_squared(graph, l, params);
        min_norm = std::min(min_norm, nsq);
        if (nsq <= 0.0) {
          c.require(false, "non-positive norm at genus " +
                               std::to_string(graph.genus()) +
                               ", k=" + std::to_string(k));
          break;
        }
      }
    }
  }
  const QuantumParams p1(1);
  const Labeling l110{{1, 1, 0}, 1};
  const double nsq = norm_squared(theta_graph(), l110, p1);
  c.require(std::abs(nsq - std::numbers::sqrt2) < 1e-10,
            "theta k=1 (1,1,0) norm != sqrt(2), got " + fmt(nsq));
  if (c.ok)
    c.note("all norms positive (min " + fmt(min_norm) + "), spot value sqrt(2) ok");
  return {2, "bs-norms", c.ok, c.detail.str()};
}

CriterionResult criterion_kz() {
  Check c;
  FourPointConfig config;
  config.labels = {SpinLabel{1}, SpinLabel{1}, SpinLabel{1}, SpinLabel{1}};
  config.tau = complexd(0.5, 0.5);
  const KzSystem system(config);
  const int m = system.subspace().dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);

  // contractible loop -> scalar multiple of the identity
  const auto loop = circle_path(complexd(0.5, 0.5), 0.1, 128);
  const Eigen::MatrixXcd t_loop = system.transport(loop, 20000);
  const complexd scalar = t_loop.trace() / static_cast<double>(m);
  const double flat_dev = (t_loop - scalar * id).norm();
  c.require(flat_dev < 1e-6, "contractible loop deviation " + fmt(flat_dev));

  // puncture loops: eigenvalues against the residue exponentials
  struct Probe {
    complexd center;
    const Eigen::MatrixXcd& residue;
  };
  const std::vector<Probe> probes = {{complexd(0, 0), system.residue_at_zero()},
                                     {complexd(1, 0), system.residue_at_one()},
                                     {complexd(-1, 0), system.residue_at_minus_one()}};
  for (const auto& probe : probes) {
    const auto small_loop = circle_path(probe.center, 0.25, 256);
    const Eigen::MatrixXcd mono = system.transport(small_loop, 200000);
    std::vector<complexd> expected;
    for (complexd ev : eigenvalues_of(probe.residue))
      expected.push_back(
          std::exp(complexd(0, 2 * std::numbers::pi) * config.coupling * ev));
    const double dist = spectrum_distance(eigenvalues_of(mono), expected);
    c.require(dist < 1e-5, "monodromy eigenvalue gap " + fmt(dist));
  }

  // reversibility
  std::vector<complexd> open_path = {complexd(0.5, 0.5), complexd(0.2, 0.7),
                                     complexd(-0.4, 0.6)};
  std::vector<complexd> reversed(open_path.rbegin(), open_path.rend());
  const Eigen::MatrixXcd fwd = system.transport(open_path, 20000);
  const Eigen::MatrixXcd bwd = system.transport(reversed, 20000);
  const double rev_dev = (fwd * bwd - id).norm();
  c.require(rev_dev < 1e-6, "reverse composition deviation " + fmt(rev_dev));

  if (c.ok)
    c.note("flatness " + fmt(flat_dev) + ", reversibility " + fmt(rev_dev));
  return {3, "kz-flatness-monodromy", c.ok, c.detail.str()};
}

CriterionResult criterion_siegel() {
  Check c;
  RandomStream rng(20240915);
  double worst_i2 = 0, worst_fd = 0, worst_inv = 0, worst_proj = 0;
  int oracle_hits = 0, oracle_total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const SiegelPoint zpt(random_symmetric(n, rng), random_spd(n, rng));

    const Eigen::MatrixXd big_i = complex_structure(zpt);
    worst_i2 = std::max(
        worst_i2,
        (big_i * big_i + Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm());

    Eigen::MatrixXd xdot = random_symmetric(n, rng);
    Eigen::MatrixXd ydot = random_symmetric(n, rng);
    xdot /= std::max(1.0, xdot.norm());
    ydot /= std::max(1.0, ydot.norm());
    const Eigen::MatrixXd di = complex_structure_derivative(zpt, xdot, ydot);
    const double h = 1e-5;
    const SiegelPoint plus(zpt.X + h * xdot, zpt.Y + h * ydot);
    const SiegelPoint minus(zpt.X - h * xdot, zpt.Y - h * ydot);
    const Eigen::MatrixXd fd =
        (complex_structure(plus) - complex_structure(minus)) / (2 * h);
    worst_fd = std::max(worst_fd, (di - fd).cwiseAbs().maxCoeff());

    const InverseDecomposition inv = inverse_decomposition(zpt);
    const Eigen::MatrixXcd recon =
        (inv.V.cast<complexd>() + complexd(0, 1) * inv.W.cast<complexd>()) * zpt.Z();
    worst_inv = std::max(
        worst_inv,
        (recon - Eigen::MatrixXcd::Identity(n, n)).norm());

    const FrameData frame = frame_and_projections(zpt);
    worst_proj = std::max(worst_proj, (frame.pi_t * frame.pi_t - frame.pi_t).norm());
    worst_proj = std::max(
        worst_proj, (frame.pi_prime * frame.pi_prime - frame.pi_prime).norm());
    worst_proj =
        std::max(worst_proj, (frame.pi_t * frame.pi_prime - frame.pi_t).norm());
    worst_proj = std::max(
        worst_proj, (frame.pi_prime * frame.pi_t - frame.pi_prime).norm());

    const TransversalityReport report = transversality(zpt);
    ++oracle_total;
    if (report.graph_transverse == oracle_graph_transverse(zpt.X, zpt.Y) &&
        report.totally_complex == oracle_totally_complex(zpt.X, zpt.Y))
      ++oracle_hits;
  }
  // degenerate frames probe the relaxed entry point
  {
    Eigen::MatrixXd x1(1, 1), y1(1, 1);
    x1 << 1.0;
    y1 << 0.0;
    const TransversalityReport r = transversality_relaxed(x1, y1);
    ++oracle_total;
    if (r.graph_transverse == oracle_graph_transverse(x1, y1) &&
        r.totally_complex == oracle_totally_complex(x1, y1) &&
        r.graph_transverse && !r.totally_complex)
      ++oracle_hits;
    Eigen::MatrixXd x2 = Eigen::MatrixXd::Zero(2, 2), y2 = Eigen::MatrixXd::Zero(2, 2);
    x2(0, 0) = 1.0;
    const TransversalityReport r2 = transversality_relaxed(x2, y2);
    ++oracle_total;
    if (r2.graph_transverse == oracle_graph_transverse(x2, y2) &&
        r2.totally_complex == oracle_totally_complex(x2, y2) &&
        !r2.graph_transverse && !r2.totally_complex)
      ++oracle_hits;
  }
  c.require(worst_i2 < 1e-9, "I^2+Id residual " + fmt(worst_i2));
  c.require(worst_fd < 1e-6, "finite-difference gap " + fmt(worst_fd));
  c.require(worst_inv < 1e-10, "inverse residual " + fmt(worst_inv));
  c.require(worst_proj < 1e-10, "projection residual " + fmt(worst_proj));
  c.require(oracle_hits == oracle_total, "transversality oracle disagreement");
  if (c.ok)
    c.note("I2 " + fmt(worst_i2) + ", fd " + fmt(worst_fd) + ", inv " +
           fmt(worst_inv) + ", proj " + fmt(worst_proj) + ", oracle " +
           std::to_string(oracle_hits) + "/" + std::to_string(oracle_total));
  return {4, "siegel-identities", c.ok, c.detail.str()};
}

CriterionResult criterion_degeneration() {
  Check c;
  Eigen::MatrixXcd zinf(2, 2);
  zinf << complexd(1.0, 0.4), complexd(0.2, -0.1), complexd(0.2, -0.1),
      complexd(-0.8, 0.9);
  Eigen::MatrixXcd cmat(2, 2);
  cmat << complexd(0.3, 0.1), complexd(-0.2, 0.25), complexd(-0.2, 0.25),
      complexd(0.15, -0.3);
  SiegelPath path;
  path.Z_infinity = zinf;
  path.remainder = [cmat](double t) -> Eigen::MatrixXcd {
    return cmat * std::pow(t, -3.0);
  };
  path.remainder_derivative = [cmat](double t) -> Eigen::MatrixXcd {
    return -3.0 * cmat * std::pow(t, -4.0);
  };
  path.t_min = 10.0;
  std::vector<double> grid;
  for (int m = 0; m <= 10; ++m) grid.push_back(10.0 * std::pow(2.0, m));
  const std::vector<double> residuals = degeneration_limit(path, grid);
  for (std::size_t i = 0; i + 1 < residuals.size(); ++i)
    c.require(residuals[i + 1] < residuals[i], "residuals not decreasing");
  const std::vector<double> at_target = degeneration_limit(path, {1e4});
  c.require(at_target[0] < 1e-4, "residual at t=1e4 is " + fmt(at_target[0]));
  if (c.ok)
    c.note("residual " + fmt(residuals.front()) + " -> " + fmt(residuals.back()) +
           ", at t=1e4: " + fmt(at_target[0]));
  return {5, "degeneration-limit", c.ok, c.detail.str()};
}

GeneratorFamily random_family(int d, RandomStream& rng) {
  GeneratorFamily fam;
  const Eigen::MatrixXcd a = random_complex(d, d, rng);
  Eigen::MatrixXcd herm = a * a.adjoint();
  herm /= std::max(1.0, operator_norm(herm));
  const Eigen::MatrixXcd raw = random_complex(d, d, rng);
  Eigen::MatrixXcd skew = 0.5 * (raw - raw.adjoint());
  skew /= std::max(1.0, operator_norm(skew));
  fam.P_infinity = herm + skew;
  Eigen::MatrixXcd cmat = random_complex(d, d, rng);
  cmat /= std::max(1.0, 2.0 * operator_norm(cmat));
  fam.delta = [cmat](double t) -> Eigen::MatrixXcd { return cmat / (t * t); };
  fam.bound_c = operator_norm(cmat);
  fam.alpha = -2.0;
  fam.t_min = 1.0;
  return fam;
}

CriterionResult criterion_volterra() {
  Check c;
  RandomStream rng(77001);
  double worst_gap = 0.0;
  bool bound_ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 6;
    const GeneratorFamily fam = random_family(d, rng);
    const double t0 = 1.0, t1 = 3.0;
    const Eigen::MatrixXcd series = dyson_transport(fam, t0, t1, 1e-9);
    const Eigen::MatrixXcd ode = ode_transport_tol(fam, t0, t1, 1e-9);
    worst_gap = std::max(worst_gap, (series - ode).norm());
    if (trial % 5 == 0) {
      const auto flags = bound_check(fam, t0, {1.5, 2.0, 4.0});
      for (bool f : flags) bound_ok = bound_ok && f;
    }
  }
  c.require(worst_gap < 1e-6, "series/ODE gap " + fmt(worst_gap));
  c.require(bound_ok, "norm bound violated");

  // scalar closed form
  GeneratorFamily scalar;
  scalar.P_infinity = Eigen::MatrixXcd::Identity(1, 1);
  scalar.delta = [](double t) -> Eigen::MatrixXcd {
    return Eigen::MatrixXcd::Identity(1, 1) / (t * t);
  };
  scalar.bound_c = 1.0;
  scalar.alpha = -2.0;
  scalar.t_min = 1.0;
  const double t0 = 1.0, t1 = 4.0;
  const complexd got = dyson_transport(scalar, t0, t1, 1e-10)(0, 0);
  const double want = std::exp(-(t1 - t0) - (1.0 / t0 - 1.0 / t1));
  c.require(std::abs(got - want) < 1e-8,
            "scalar closed form gap " + fmt(std::abs(got - want)));

  // kernel property of the limit
  GeneratorFamily kernel_fam;
  Eigen::MatrixXcd pinf = Eigen::MatrixXcd::Zero(2, 2);
  pinf(1, 1) = 1.0;
  kernel_fam.P_infinity = pinf;
  Eigen::MatrixXcd coupling(2, 2);
  coupling << 0.0, 0.5, 0.5, 0.0;
  kernel_fam.delta = [coupling](double t) -> Eigen::MatrixXcd {
    return coupling / (t * t);
  };
  kernel_fam.bound_c = 0.5;
  kernel_fam.alpha = -2.0;
  kernel_fam.t_min = 1.0;
  const LimitResult limit = limit_transport(kernel_fam, 1.0, 1e-5);
  c.require(limit.kernel_residual < 1e-4,
            "kernel residual " + fmt(limit.kernel_residual));
  if (c.ok)
    c.note("series/ODE " + fmt(worst_gap) + ", scalar " +
           fmt(std::abs(got - want)) + ", kernel " + fmt(limit.kernel_residual));
  return {6, "volterra-transport", c.ok, c.detail.str()};
}

CriterionResult criterion_character_varieties() {
  Check c;
  const SampleReport sphere = sample_sphere4(20240901, 100000);
  const SampleReport torus = sample_torus(20240902, 100000);
  c.require(sphere.max_residual < 1e-10,
            "four-holed-sphere residual " + fmt(sphere.max_residual));
  c.require(torus.max_residual < 1e-12,
            "one-holed-torus residual " + fmt(torus.max_residual));

  for (const auto& graph : {theta_graph(), dumbbell_graph()}) {
    for (int k = 1; k <= 6; ++k) {
      for (const Labeling& l : enumerate_labelings(graph, k)) {
        std::map<int, double> z;
        for (std::size_t i = 0; i < l.values.size(); ++i)
          z[graph.edge_ids()[i]] = static_cast<double>(l.values[i]) / k;
        if (!bs_domain_membership(graph, z)) {
          c.require(false, "rescaled labeling left the domain at k=" +
                               std::to_string(k));
          break;
        }
      }
    }
  }
  if (c.ok)
    c.note("sphere " + fmt(sphere.max_residual) + ", torus " +
           fmt(torus.max_residual) + ", all rescaled labelings inside");
  return {7, "character-varieties", c.ok, c.detail.str()};
}

CriterionResult criterion_abelian_heat() {
  Check c;
  double worst_heat = 0.0;
  for (int k = 1; k <= 5; ++k) {
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        const complexd tau(-0.4 + 0.2 * a, 0.5 + 0.375 * b);
        const ThetaParams params(k, tau);
        for (int zi = 0; zi < 16; ++zi) {
          const complexd z(-0.75 + 0.5 * (zi % 4), -0.6 + 0.4 * (zi / 4));
          worst_heat = std::max(worst_heat, heat_residual(zi % k, params, z));
        }
      }
    }
  }
  c.require(worst_heat < 1e-9, "heat residual " + fmt(worst_heat));

  std::vector<complexd> zgrid;
  for (int i = 0; i < 16; ++i)
    zgrid.emplace_back(-0.75 + 0.5 * (i % 4), -0.6 + 0.4 * (i / 4));
  double worst_evolve = 0.0;
  for (int k = 1; k <= 5; ++k) {
    for (int j = 0; j < k; ++j) {
      worst_evolve = std::max(
          worst_evolve,
          heat_evolve_check(j, k, complexd(0, 1), complexd(0, 2), zgrid));
      worst_evolve = std::max(
          worst_evolve, heat_evolve_check(j, k, complexd(0.1, 1.0),
                                          complexd(-0.3, 1.5), zgrid));
    }
  }
  c.require(worst_evolve < 1e-10, "evolution gap " + fmt(worst_evolve));
  if (c.ok) c.note("heat " + fmt(worst_heat) + ", evolve " + fmt(worst_evolve));
  return {8, "abelian-heat", c.ok, c.detail.str()};
}

CriterionResult criterion_toeplitz() {
  Check c;
  const SphereFunction height = registry_function("x3", -1);
  double worst_diag = 0.0;
  for (int k : {2, 6, 16}) {
    const FockBasis basis(k);
    const Eigen::MatrixXcd t = toeplitz_matrix(height, basis);
    for (int a = 0; a <= k; ++a) {
      const double want = static_cast<double>(k - 2 * a) / (k + 2);
      worst_diag = std::max(worst_diag, std::abs(t(a, a) - complexd(want, 0)));
    }
    Eigen::MatrixXcd off = t;
    off.diagonal().setZero();
    worst_diag = std::max(worst_diag, off.cwiseAbs().maxCoeff());
  }
  c.require(worst_diag < 1e-9, "diagonal closed-form gap " + fmt(worst_diag));

  const DecayReport report =
      multiplicativity_decay(height, height, {4, 8, 16, 32, 64});
  c.require(std::isfinite(report.slope), "slope undefined");
  c.require(report.slope > -1.3 && report.slope < -0.7,
            "slope " + fmt(report.slope) + " outside [-1.3, -0.7]");
  if (c.ok)
    c.note("diag " + fmt(worst_diag) + ", slope " + fmt(report.slope));
  return {9, "toeplitz-asymptotics", c.ok, c.detail.str()};
}

CriterionResult guard(CriterionResult (*fn)(), int index, const char* name) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {index, name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {
      guard(criterion_labeling_counts, 1, "labeling-counts"),
      guard(criterion_norms, 2, "bs-norms"),
      guard(criterion_kz, 3, "kz-flatness-monodromy"),
      guard(criterion_siegel, 4, "siegel-identities"),
      guard(criterion_degeneration, 5, "degeneration-limit"),
      guard(criterion_volterra, 6, "volterra-transport"),
      guard(criterion_character_varieties, 7, "character-varieties"),
      guard(criterion_abelian_heat, 8, "abelian-heat"),
      guard(criterion_toeplitz, 9, "toeplitz-asymptotics"),
  };
}

bool run_and_print(std::ostream& out) {
  bool all = true;
  for (const CriterionResult& r : run_all()) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.index << " " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    all = all && r.passed;
  }
  out << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
      << "\n";
  return all;
}

}  // namespace hitchinlab::acceptance
