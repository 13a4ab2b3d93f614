#include "hitchinlab/volterra_transport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hitchinlab {

namespace {

// e^{-s P} evaluated through a cached eigendecomposition; falls back to
// scaling-and-squaring when the eigenvector basis is ill conditioned.
class Propagator {
 public:
  explicit Propagator(const Eigen::MatrixXcd& p) : p_(p) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(p);
    if (es.info() == Eigen::Success) {
      values_ = es.eigenvalues();
      vectors_ = es.eigenvectors();
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(vectors_);
      if (lu.isInvertible()) {
        inverse_ = lu.inverse();
        const double cond = operator_norm(vectors_) * operator_norm(inverse_);
        diagonalizable_ = cond < 1e8;
      }
    }
  }

  Eigen::MatrixXcd exp_minus(double s) const {
    if (diagonalizable_) {
      Eigen::VectorXcd scale(values_.size());
      for (Eigen::Index i = 0; i < values_.size(); ++i)
        scale(i) = std::exp(-s * values_(i));
      return vectors_ * scale.asDiagonal() * inverse_;
    }
    return taylor_exp(-s * p_);
  }

 private:
  static Eigen::MatrixXcd taylor_exp(const Eigen::MatrixXcd& m) {
    const int d = static_cast<int>(m.rows());
    int squarings = 0;
    double norm = m.norm();
    while (norm > 0.5) {
      norm /= 2.0;
      ++squarings;
    }
    const Eigen::MatrixXcd a = m / std::pow(2.0, squarings);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 24; ++k) {
      term = term * a / static_cast<double>(k);
      sum += term;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
  }

  Eigen::MatrixXcd p_;
  Eigen::VectorXcd values_;
  Eigen::MatrixXcd vectors_, inverse_;
  bool diagonalizable_ = false;
};

// Chebyshev-Lobatto grid with barycentric interpolation of matrix samples.
struct ChebGrid {
  std::vector<double> xs;
  std::vector<double> ws;

  ChebGrid(double a, double b, int m) {
    xs.resize(m);
    ws.resize(m);
    for (int i = 0; i < m; ++i) {
      xs[i] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(std::numbers::pi * i / (m - 1));
      ws[i] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    ws.front() *= 0.5;
    ws.back() *= 0.5;
  }

  Eigen::MatrixXcd interpolate(const std::vector<Eigen::MatrixXcd>& values,
                               double x) const {
    const int m = static_cast<int>(xs.size());
    for (int i = 0; i < m; ++i)
      if (std::abs(x - xs[i]) < 1e-14) return values[i];
    Eigen::MatrixXcd num = Eigen::MatrixXcd::Zero(values[0].rows(), values[0].cols());
    double den = 0.0;
    for (int i = 0; i < m; ++i) {
      const double c = ws[i] / (x - xs[i]);
      num += c * values[i];
      den += c;
    }
    return num / den;
  }
};

double series_scale(const GeneratorFamily& fam, double t0, double t) {
  // integral of c s^alpha over [t0, t]
  return fam.bound_c * (std::pow(t, fam.alpha + 1) - std::pow(t0, fam.alpha + 1)) /
         (fam.alpha + 1);
}

}  // namespace

void GeneratorFamily::validate() const {
  if (P_infinity.rows() != P_infinity.cols())
    throw validation_error("GeneratorFamily: P_infinity not square");
  if (!delta) throw validation_error("GeneratorFamily: missing delta");
  if (!(alpha < -1.0))
    throw validation_error("GeneratorFamily: alpha must be < -1");
  if (bound_c < 0.0) throw validation_error("GeneratorFamily: bound_c < 0");
  if (t_min <= 0.0) throw validation_error("GeneratorFamily: t_min must be > 0");

  const Eigen::MatrixXcd herm = 0.5 * (P_infinity + P_infinity.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  if (es.eigenvalues()(0) < -1e-12 * std::max(1.0, herm.norm()))
    throw validation_error(
        "GeneratorFamily: Hermitian part of P_infinity must be PSD");

  for (int m = 0; m <= 10; ++m) {
    const double t = t_min * std::pow(2.0, m);
    const Eigen::MatrixXcd d = delta(t);
    if (d.rows() != P_infinity.rows() || d.cols() != P_infinity.cols())
      throw validation_error("GeneratorFamily: delta has wrong shape");
    if (operator_norm(d) > bound_c * std::pow(t, alpha) * (1.0 + 1e-9) + 1e-15)
      throw validation_error("GeneratorFamily: decay bound violated on sample grid");
  }
}

Eigen::MatrixXcd dyson_transport(const GeneratorFamily& fam, double t0, double t,
                                 double tol) {
  fam.validate();
  if (tol <= 0.0) throw validation_error("dyson_transport: tol must be > 0");
  if (t0 < fam.t_min || t < t0)
    throw validation_error("dyson_transport: need t >= t0 >= t_min");

  const int d = fam.dim();
  const Propagator prop(fam.P_infinity);
  if (t == t0) return Eigen::MatrixXcd::Identity(d, d);

  // truncation depth from the analytic bound (c q)^n / n!
  const double q = series_scale(fam, t0, t);
  int depth = 0;
  double bound = 1.0;
  while (depth < 256) {
    ++depth;
    bound *= q / depth;
    if (bound < tol) break;
  }
  if (bound >= tol)
    throw tolerance_error("dyson_transport: term bound did not reach tol");

  const int m = 48;
  const ChebGrid grid(t0, t, m);
  static const GaussLegendre gl(16);

  std::vector<Eigen::MatrixXcd> level(m);
  std::vector<Eigen::MatrixXcd> total(m);
  for (int i = 0; i < m; ++i) {
    level[i] = prop.exp_minus(grid.xs[i] - t0);
    total[i] = level[i];
  }
  for (int n = 1; n <= depth; ++n) {
    std::vector<Eigen::MatrixXcd> next(m);
    for (int i = 0; i < m; ++i) {
      const double x = grid.xs[i];
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
      if (x > t0) {
        for (std::size_t g = 0; g < gl.nodes.size(); ++g) {
          const double s = t0 + (x - t0) * 0.5 * (gl.nodes[g] + 1.0);
          const double w = 0.5 * (x - t0) * gl.weights[g];
          acc -= w * (prop.exp_minus(x - s) *
                      (fam.delta(s) * grid.interpolate(level, s)));
        }
      }
      next[i] = acc;
      total[i] += acc;
    }
    level = std::move(next);
  }
  // Chebyshev-Lobatto node 0 is the right endpoint t
  return total[0];
}

OdeResult ode_transport(const GeneratorFamily& fam, double t0, double t, int steps) {
  fam.validate();
  if (steps < 1) throw validation_error("ode_transport: steps must be >= 1");
  if (t0 < fam.t_min || t < t0)
    throw validation_error("ode_transport: need t >= t0 >= t_min");
  const int d = fam.dim();
  auto run = [&](int n) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(d, d);
    const double h = (t - t0) / n;
    auto rhs = [&](double s, const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd {
      return -((fam.P_infinity + fam.delta(s)) * x);
    };
    double s = t0;
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXcd k1 = rhs(s, e);
      const Eigen::MatrixXcd k2 = rhs(s + 0.5 * h, e + 0.5 * h * k1);
      const Eigen::MatrixXcd k3 = rhs(s + 0.5 * h, e + 0.5 * h * k2);
      const Eigen::MatrixXcd k4 = rhs(s + h, e + h * k3);
      e += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      s += h;
    }
    return e;
  };
  OdeResult out;
  out.E = run(steps);
  const Eigen::MatrixXcd coarse = run(std::max(1, steps / 2));
  out.halving_defect = (out.E - coarse).norm();
  return out;
}

Eigen::MatrixXcd ode_transport_tol(const GeneratorFamily& fam, double t0, double t,
                                   double tol) {
  if (tol <= 0.0) throw validation_error("ode_transport_tol: tol must be > 0");
  int steps = 64;
  for (int iter = 0; iter < 16; ++iter) {
    const OdeResult r = ode_transport(fam, t0, t, steps);
    if (r.halving_defect < tol) return r.E;
    steps *= 2;
  }
  throw tolerance_error("ode_transport_tol: step budget exceeded");
}

LimitResult limit_transport(const GeneratorFamily& fam, double t0, double tol) {
  fam.validate();
  if (tol <= 0.0) throw validation_error("limit_transport: tol must be > 0");
  if (t0 < fam.t_min)
    throw validation_error("limit_transport: t0 below t_min");

  const double pnorm = std::max(0.25, operator_norm(fam.P_infinity));
  auto segment = [&](double a, double b) {
    const int steps =
        std::max(64, static_cast<int>(std::ceil((b - a) * pnorm * 8.0)));
    return ode_transport(fam, a, b, steps).E;
  };

  double t = 2.0 * t0;
  Eigen::MatrixXcd e_prev = segment(t0, t);
  for (int doubling = 0; doubling < 40; ++doubling) {
    const Eigen::MatrixXcd e_next = segment(t, 2.0 * t) * e_prev;
    t *= 2.0;
    if ((e_next - e_prev).norm() < tol) {
      LimitResult out;
      out.E_infinity = e_next;
      out.kernel_residual = operator_norm(fam.P_infinity * e_next);
      out.final_time = t;
      if (out.kernel_residual >= 10.0 * tol)
        throw tolerance_error("limit_transport: kernel residual above 10 tol");
      return out;
    }
    e_prev = e_next;
  }
  throw tolerance_error("limit_transport: Cauchy criterion not met in 40 doublings");
}

std::vector<bool> bound_check(const GeneratorFamily& fam, double t0,
                              const std::vector<double>& t_grid) {
  fam.validate();
  std::vector<bool> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (t < t0) throw validation_error("bound_check: grid point below t0");
    const Eigen::MatrixXcd e = ode_transport_tol(fam, t0, t, 1e-10);
    const double rhs = std::exp(series_scale(fam, t0, t));
    out.push_back(operator_norm(e) <= rhs * (1.0 + 1e-12) + 1e-15);
  }
  return out;
}

double simplex_volume(int n, double t0, double t) {
  if (n < 0) throw validation_error("simplex_volume: n must be >= 0");
  if (t < t0) throw validation_error("simplex_volume: t < t0");
  double v = 1.0;
  for (int i = 1; i <= n; ++i) v *= (t - t0) / i;
  return v;
}

double mc_simplex_volume(int n, double t0, double t, long samples,
                         std::uint64_t seed) {
  if (n < 1) throw validation_error("mc_simplex_volume: n must be >= 1");
  if (samples < 1) throw validation_error("mc_simplex_volume: samples must be >= 1");
  RandomStream rng(seed);
  long hits = 0;
  std::vector<double> draw(n);
  for (long s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) draw[i] = t0 + (t - t0) * rng.uniform();
    bool ordered = true;
    for (int i = 0; i + 1 < n; ++i)
      if (draw[i] < draw[i + 1]) {
        ordered = false;
        break;
      }
    if (ordered) ++hits;
  }
  const double box = std::pow(t - t0, n);
  return box * static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace hitchinlab
