#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "hitchinlab/abelian_hitchin.hpp"
#include "hitchinlab/acceptance.hpp"
#include "hitchinlab/character_variety.hpp"
#include "hitchinlab/io.hpp"
#include "hitchinlab/kz_connection.hpp"
#include "hitchinlab/pants_graph.hpp"
#include "hitchinlab/quantum_algebra.hpp"
#include "hitchinlab/siegel_geometry.hpp"
#include "hitchinlab/toeplitz_cp1.hpp"
#include "hitchinlab/volterra_transport.hpp"

namespace hl = hitchinlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw hl::validation_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw hl::validation_error(std::string(what) + ": bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw hl::validation_error(std::string(what) + ": empty list");
  return out;
}

std::string fd(double v) { return hl::format_double(v); }

void run_labelings(const std::string& graph_path, int level, const std::string& out) {
  const hl::TrivalentGraph graph = hl::graph_from_json_file(graph_path);
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  std::vector<std::string> header;
  for (int id : graph.edge_ids()) header.push_back("edge_" + std::to_string(id));
  csv.row(header);
  for (const hl::Labeling& l : hl::enumerate_labelings(graph, level)) {
    std::vector<std::string> cells;
    for (int v : l.values) cells.push_back(std::to_string(v));
    csv.row(cells);
  }
}

void run_norms(const std::string& graph_path, int level, const std::string& out) {
  const hl::TrivalentGraph graph = hl::graph_from_json_file(graph_path);
  const hl::QuantumParams params(level);
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  std::vector<std::string> header;
  for (int id : graph.edge_ids()) header.push_back("edge_" + std::to_string(id));
  header.push_back("norm_squared");
  csv.row(header);
  for (const hl::Labeling& l : hl::enumerate_labelings(graph, level)) {
    std::vector<std::string> cells;
    for (int v : l.values) cells.push_back(std::to_string(v));
    cells.push_back(fd(hl::norm_squared(graph, l, params)));
    csv.row(cells);
  }
}

void run_verlinde(int gmin, int gmax, int kmin, int kmax, bool with_counts,
                  const std::string& out) {
  if (gmin < 2 || gmax < gmin || kmin < 0 || kmax < kmin)
    throw hl::validation_error("verlinde: bad genus/level range");
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  std::vector<std::string> header = {"genus", "level", "verlinde"};
  if (with_counts) header.push_back("chain_graph_count");
  csv.row(header);
  for (int g = gmin; g <= gmax; ++g) {
    for (int k = kmin; k <= kmax; ++k) {
      std::vector<std::string> cells = {
          std::to_string(g), std::to_string(k),
          std::to_string(std::lround(hl::verlinde_su2(g, k)))};
      if (with_counts)
        cells.push_back(std::to_string(
            hl::enumerate_labelings(hl::chain_graph(g), k).size()));
      csv.row(cells);
    }
  }
}

void run_kz_transport(const std::string& labels_text, const std::string& path_file,
                      int steps, double coupling, const std::string& out) {
  const std::vector<int> lambdas = parse_int_list(labels_text, "kz labels");
  if (lambdas.size() != 4)
    throw hl::validation_error("kz-transport: need exactly four labels");
  hl::FourPointConfig config;
  for (int i = 0; i < 4; ++i) {
    if (lambdas[i] < 0) throw hl::validation_error("kz-transport: negative label");
    config.labels[i] = hl::SpinLabel{lambdas[i]};
  }
  config.coupling = coupling;
  const std::vector<hl::complexd> path = hl::path_from_json_file(path_file);
  config.tau = path.empty() ? hl::complexd(0.5, 0.5) : path.front();
  const Eigen::MatrixXcd transported = hl::kz_transport(config, path, steps);
  Sink sink(out);
  sink.stream() << hl::complex_matrix_to_json_text(transported) << "\n";
}

void run_siegel_check(const std::string& input, const std::string& degeneration,
                      std::uint64_t seed, int count, int dim,
                      const std::string& out) {
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());

  if (!degeneration.empty()) {
    const hl::SiegelPathSpec spec = hl::siegel_path_from_json_file(degeneration);
    const std::vector<double> residuals =
        hl::degeneration_limit(spec.path, spec.t_grid);
    csv.row({"t", "residual"});
    for (std::size_t i = 0; i < spec.t_grid.size(); ++i)
      csv.row({fd(spec.t_grid[i]), fd(residuals[i])});
    return;
  }

  std::vector<hl::SiegelPoint> points;
  hl::RandomStream rng(seed);
  if (!input.empty()) {
    points.push_back(hl::siegel_point_from_json_file(input));
  } else {
    if (count < 1 || dim < 1)
      throw hl::validation_error("siegel-check: need count >= 1 and dim >= 1");
    for (int i = 0; i < count; ++i) {
      Eigen::MatrixXd x(dim, dim), a(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = r; c < dim; ++c) x(r, c) = x(c, r) = rng.gaussian();
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = rng.gaussian();
      points.emplace_back(
          x, Eigen::MatrixXd(a * a.transpose() +
                             0.5 * Eigen::MatrixXd::Identity(dim, dim)));
    }
  }

  csv.row({"index", "n", "i2_residual", "fd_residual", "inverse_residual",
           "projection_residual", "graph_transverse", "totally_complex"});
  double worst = 0.0;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const hl::SiegelPoint& zpt = points[idx];
    const int n = zpt.n;
    const Eigen::MatrixXd big_i = hl::complex_structure(zpt);
    const double i2 =
        (big_i * big_i + Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm();

    const Eigen::MatrixXd xdot = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd ydot = 0.5 * Eigen::MatrixXd::Identity(n, n);
    const double h = 1e-5;
    const Eigen::MatrixXd di = hl::complex_structure_derivative(zpt, xdot, ydot);
    const Eigen::MatrixXd fdm =
        (hl::complex_structure(hl::SiegelPoint(zpt.X + h * xdot, zpt.Y + h * ydot)) -
         hl::complex_structure(hl::SiegelPoint(zpt.X - h * xdot, zpt.Y - h * ydot))) /
        (2 * h);
    const double fd_res = (di - fdm).cwiseAbs().maxCoeff();

    const hl::InverseDecomposition inv = hl::inverse_decomposition(zpt);
    const double inv_res =
        ((inv.V.cast<hl::complexd>() +
          hl::complexd(0, 1) * inv.W.cast<hl::complexd>()) *
             zpt.Z() -
         Eigen::MatrixXcd::Identity(n, n))
            .norm();

    const hl::FrameData frame = hl::frame_and_projections(zpt);
    double proj = (frame.pi_t * frame.pi_t - frame.pi_t).norm();
    proj = std::max(proj, (frame.pi_t * frame.pi_prime - frame.pi_t).norm());
    proj = std::max(proj, (frame.pi_prime * frame.pi_t - frame.pi_prime).norm());

    const hl::TransversalityReport tr = hl::transversality(zpt);
    csv.row({std::to_string(idx), std::to_string(n), fd(i2), fd(fd_res),
             fd(inv_res), fd(proj), tr.graph_transverse ? "1" : "0",
             tr.totally_complex ? "1" : "0"});
    worst = std::max({worst, i2, inv_res, proj});
  }
  if (worst > 1e-8)
    throw hl::tolerance_error("siegel-check: identity residual above 1e-8");
}

void run_dyson(const std::string& family_file, double t0, double t1, double tol,
               int rows, const std::string& out) {
  const hl::GeneratorFamily fam = hl::family_from_json_file(family_file);
  if (rows < 1) throw hl::validation_error("dyson: need at least one row");
  if (!(t1 > t0)) throw hl::validation_error("dyson: need t1 > t0");
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  std::vector<std::string> header = {"t"};
  for (int r = 0; r < fam.dim(); ++r)
    for (int c = 0; c < fam.dim(); ++c) {
      header.push_back("re_" + std::to_string(r) + std::to_string(c));
      header.push_back("im_" + std::to_string(r) + std::to_string(c));
    }
  header.push_back("series_vs_ode");
  csv.row(header);
  for (int i = 1; i <= rows; ++i) {
    const double t = t0 + (t1 - t0) * i / rows;
    const Eigen::MatrixXcd series = hl::dyson_transport(fam, t0, t, tol);
    const Eigen::MatrixXcd ode = hl::ode_transport_tol(fam, t0, t, tol);
    std::vector<std::string> cells = {fd(t)};
    for (int r = 0; r < fam.dim(); ++r)
      for (int c = 0; c < fam.dim(); ++c) {
        cells.push_back(fd(series(r, c).real()));
        cells.push_back(fd(series(r, c).imag()));
      }
    cells.push_back(fd((series - ode).norm()));
    csv.row(cells);
  }
}

void run_charvar_sample(std::uint64_t seed, long draws, double tol,
                        const std::string& out) {
  const hl::SampleReport sphere = hl::sample_sphere4(seed, draws);
  const hl::SampleReport torus = hl::sample_torus(seed + 1, draws);
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  csv.row({"identity", "seed", "draws", "max_residual"});
  csv.row({"four_holed_sphere", std::to_string(sphere.seed),
           std::to_string(sphere.draws), fd(sphere.max_residual)});
  csv.row({"one_holed_torus", std::to_string(torus.seed),
           std::to_string(torus.draws), fd(torus.max_residual)});
  if (sphere.max_residual > tol || torus.max_residual > tol)
    throw hl::tolerance_error("charvar-sample: residual above tolerance");
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      throw hl::validation_error(std::string(what) + ": bad number '" + item + "'");
    }
  }
  return out;
}

void run_charvar_membership(const std::string& fiber_spec,
                            const std::string& graph_path,
                            const std::string& coords_spec, bool asymmetric,
                            const std::string& out) {
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  csv.row({"query", "member"});
  if (!fiber_spec.empty()) {
    const auto v = parse_double_list(fiber_spec, "charvar fiber");
    if (v.size() != 4)
      throw hl::validation_error("charvar fiber: expected x,y,z,c0");
    const bool member = hl::torus_fiber_membership(v[0], v[1], v[2], v[3]);
    csv.row({"torus_fiber", member ? "1" : "0"});
  }
  if (!coords_spec.empty()) {
    if (graph_path.empty())
      throw hl::validation_error("charvar domain query needs --graph");
    const hl::TrivalentGraph graph = hl::graph_from_json_file(graph_path);
    const auto v = parse_double_list(coords_spec, "charvar domain coords");
    if (v.size() != graph.edge_ids().size())
      throw hl::validation_error("charvar domain: one coordinate per edge");
    std::map<int, double> z;
    for (std::size_t i = 0; i < v.size(); ++i) z[graph.edge_ids()[i]] = v[i];
    const bool member = hl::bs_domain_membership(
        graph, z, asymmetric ? hl::SumBound::asymmetric : hl::SumBound::symmetric);
    csv.row({"moment_domain", member ? "1" : "0"});
  }
}

void run_theta_heat(int level, int grid, const std::string& out) {
  if (level < 1) throw hl::validation_error("theta-heat: level must be >= 1");
  if (grid < 2) throw hl::validation_error("theta-heat: grid must be >= 2");
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  csv.row({"k", "tau_re", "tau_im", "max_residual"});
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      const hl::complexd tau(-0.4 + 0.8 * a / (grid - 1),
                             0.5 + 1.5 * b / (grid - 1));
      const hl::ThetaParams params(level, tau);
      double worst = 0.0;
      for (int j = 0; j < level; ++j)
        for (int zi = 0; zi < 16; ++zi) {
          const hl::complexd z(-0.75 + 0.5 * (zi % 4), -0.6 + 0.4 * (zi / 4));
          worst = std::max(worst, hl::heat_residual(j, params, z));
        }
      csv.row({std::to_string(level), fd(tau.real()), fd(tau.imag()), fd(worst)});
      if (worst > 1e-9)
        throw hl::tolerance_error("theta-heat: residual above 1e-9");
    }
  }
}

hl::SphereFunction sphere_function_arg(const std::string& name,
                                       const std::string& json_path) {
  if (!json_path.empty())
    return hl::sphere_function_from_json_text(hl::read_text_file(json_path));
  // level-dependent registry entries are rejected here: the decay scan keeps
  // f and g fixed across levels
  return hl::registry_function(name, -1);
}

void run_toeplitz(const std::string& fname, const std::string& gname,
                  const std::string& fjson, const std::string& gjson,
                  const std::string& levels_text, const std::string& out) {
  const std::vector<int> levels = parse_int_list(levels_text, "toeplitz levels");
  const hl::SphereFunction f = sphere_function_arg(fname, fjson);
  const hl::SphereFunction g = sphere_function_arg(gname, gjson);
  const hl::DecayReport report = hl::multiplicativity_decay(f, g, levels);
  Sink sink(out);
  hl::CsvWriter csv(sink.stream());
  csv.row({"level", "defect"});
  for (std::size_t i = 0; i < report.levels.size(); ++i)
    csv.row({std::to_string(report.levels[i]), fd(report.defects[i])});
  csv.comment("slope " + fd(report.slope));
}

int dispatch(int argc, char** argv) {
  CLI::App app{"batch front end for the quantization toolkit"};
  app.require_subcommand(1);

  std::string graph_path, out, path_file, labels_text = "1,1,1,1";
  std::string family_file, input_file, degeneration_file;
  std::string fname = "x3", gname = "x3", fjson, gjson;
  std::string levels_text = "4,8,16,32,64", fiber_spec, coords_spec;
  int level = 1, steps = 10000, count = 20, dim = 3, grid = 5, rows = 8;
  int gmin = 2, gmax = 3, kmin = 1, kmax = 8;
  bool with_counts = false, asymmetric = false;
  double coupling = 1.0, t0 = 1.0, t1 = 4.0, tol = 1e-8;
  std::uint64_t seed = 0;
  long draws = 100000;

  auto* labelings = app.add_subcommand("labelings", "enumerate admissible labelings");
  labelings->add_option("--graph", graph_path, "graph JSON file")->required();
  labelings->add_option("--level", level, "level k")->required();
  labelings->add_option("--out", out, "output CSV path");

  auto* norms = app.add_subcommand("norms", "labeling norms");
  norms->add_option("--graph", graph_path)->required();
  norms->add_option("--level", level)->required();
  norms->add_option("--out", out);

  auto* verlinde = app.add_subcommand("verlinde", "dimension table");
  verlinde->add_option("--genus-min", gmin);
  verlinde->add_option("--genus-max", gmax);
  verlinde->add_option("--level-min", kmin);
  verlinde->add_option("--level-max", kmax);
  verlinde->add_flag("--counts", with_counts, "also enumerate chain-graph counts");
  verlinde->add_option("--out", out);

  auto* kz = app.add_subcommand("kz-transport", "parallel transport matrix");
  kz->add_option("--labels", labels_text, "four weights, e.g. 1,1,1,1");
  kz->add_option("--path", path_file, "path JSON file")->required();
  kz->add_option("--steps", steps);
  kz->add_option("--coupling", coupling);
  kz->add_option("--out", out);

  auto* siegel = app.add_subcommand("siegel-check", "identity residual report");
  siegel->add_option("--input", input_file, "point JSON file");
  siegel->add_option("--degeneration", degeneration_file, "family JSON file");
  siegel->add_option("--seed", seed);
  siegel->add_option("--count", count);
  siegel->add_option("--dim", dim);
  siegel->add_option("--out", out);

  auto* dyson = app.add_subcommand("dyson", "time-ordered transport table");
  dyson->add_option("--family", family_file)->required();
  dyson->add_option("--t0", t0);
  dyson->add_option("--t1", t1);
  dyson->add_option("--tol", tol);
  dyson->add_option("--rows", rows);
  dyson->add_option("--out", out);

  auto* charvar = app.add_subcommand("charvar-sample",
                                     "trace identity residuals and membership");
  charvar->add_option("--seed", seed);
  charvar->add_option("--draws", draws);
  charvar->add_option("--tol", tol);
  charvar->add_option("--fiber", fiber_spec, "x,y,z,c0 fiber membership query");
  charvar->add_option("--graph", graph_path, "graph for a domain query");
  charvar->add_option("--coords", coords_spec,
                      "edge coordinates in [0,1] for a domain query");
  charvar->add_flag("--asymmetric", asymmetric,
                    "use the asymmetric vertex sum bound");
  charvar->add_option("--out", out);

  auto* theta = app.add_subcommand("theta-heat", "heat equation residual table");
  theta->add_option("--level", level)->required();
  theta->add_option("--grid", grid);
  theta->add_option("--out", out);

  auto* toeplitz = app.add_subcommand("toeplitz", "multiplicativity decay table");
  toeplitz->add_option("--f", fname);
  toeplitz->add_option("--g", gname);
  toeplitz->add_option("--f-json", fjson, "Fourier-radial expansion JSON file");
  toeplitz->add_option("--g-json", gjson, "Fourier-radial expansion JSON file");
  toeplitz->add_option("--levels", levels_text);
  toeplitz->add_option("--out", out);

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  (void)accept;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (labelings->parsed()) run_labelings(graph_path, level, out);
  if (norms->parsed()) run_norms(graph_path, level, out);
  if (verlinde->parsed()) run_verlinde(gmin, gmax, kmin, kmax, with_counts, out);
  if (kz->parsed()) run_kz_transport(labels_text, path_file, steps, coupling, out);
  if (siegel->parsed()) {
    if (input_file.empty() && degeneration_file.empty() &&
        siegel->count("--seed") == 0)
      throw hl::validation_error("siegel-check: random mode needs --seed");
    run_siegel_check(input_file, degeneration_file, seed, count, dim, out);
  }
  if (dyson->parsed()) run_dyson(family_file, t0, t1, tol, rows, out);
  if (charvar->parsed()) {
    if (!fiber_spec.empty() || !coords_spec.empty()) {
      run_charvar_membership(fiber_spec, graph_path, coords_spec, asymmetric, out);
    } else {
      if (charvar->count("--seed") == 0)
        throw hl::validation_error("charvar-sample: sampling needs --seed");
      run_charvar_sample(seed, draws, tol, out);
    }
  }
  if (theta->parsed()) run_theta_heat(level, grid, out);
  if (toeplitz->parsed()) run_toeplitz(fname, gname, fjson, gjson, levels_text, out);
  if (accept->parsed()) {
    if (!hitchinlab::acceptance::run_and_print(std::cout)) return kExitTolerance;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const hl::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hl::tolerance_error& e) {
    std::cerr << "tolerance failure: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
