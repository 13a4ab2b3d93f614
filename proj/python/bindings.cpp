#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hitchinlab/abelian_hitchin.hpp"
#include "hitchinlab/character_variety.hpp"
#include "hitchinlab/io.hpp"
#include "hitchinlab/kz_connection.hpp"
#include "hitchinlab/pants_graph.hpp"
#include "hitchinlab/quantum_algebra.hpp"
#include "hitchinlab/siegel_geometry.hpp"
#include "hitchinlab/toeplitz_cp1.hpp"
#include "hitchinlab/volterra_transport.hpp"

namespace py = pybind11;
using namespace hitchinlab;

namespace {

std::array<SpinLabel, 4> to_labels(const std::vector<int>& lambdas) {
  if (lambdas.size() != 4)
    throw validation_error("need exactly four weights");
  std::array<SpinLabel, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = SpinLabel{lambdas[i]};
  return out;
}

GeneratorFamily power_family(const Eigen::MatrixXcd& p_infinity,
                             const Eigen::MatrixXcd& c, double alpha,
                             double t_min) {
  GeneratorFamily fam;
  fam.P_infinity = p_infinity;
  fam.delta = [c, alpha](double t) -> Eigen::MatrixXcd {
    return c * std::pow(t, alpha);
  };
  fam.bound_c = operator_norm(c);
  fam.alpha = alpha;
  fam.t_min = t_min;
  return fam;
}

SiegelPath power_path(const Eigen::MatrixXcd& z_infinity, const Eigen::MatrixXcd& c,
                      double exponent, double t_min) {
  SiegelPath path;
  path.Z_infinity = z_infinity;
  path.remainder = [c, exponent](double t) -> Eigen::MatrixXcd {
    return c * std::pow(t, exponent);
  };
  path.remainder_derivative = [c, exponent](double t) -> Eigen::MatrixXcd {
    return c * exponent * std::pow(t, exponent - 1.0);
  };
  path.t_min = t_min;
  return path;
}

}  // namespace

PYBIND11_MODULE(_hitchinlab, m) {
  m.doc() = "quantization toolkit: labeling combinatorics, quantum norms, "
            "KZ monodromy, Siegel calculus, time-ordered transport, trace "
            "identities, theta heat flow and Toeplitz operators";

  py::register_exception<validation_error>(m, "ValidationError",
                                           PyExc_ValueError);
  py::register_exception<tolerance_error>(m, "ToleranceError",
                                          PyExc_RuntimeError);

  py::class_<TrivalentGraph>(m, "TrivalentGraph")
      .def(py::init([](const std::vector<int>& vertices,
                       const std::vector<std::tuple<int, std::pair<int, int>,
                                                    std::pair<int, int>>>& edges) {
             std::vector<Edge> out;
             for (const auto& [id, a, b] : edges)
               out.push_back({id, {a.first, a.second}, {b.first, b.second}});
             return TrivalentGraph(vertices, out);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertices", &TrivalentGraph::vertices)
      .def_property_readonly("edge_ids", &TrivalentGraph::edge_ids)
      .def_property_readonly("genus", &TrivalentGraph::genus)
      .def("incident_edges", &TrivalentGraph::incident_edges)
      .def("to_json", &graph_to_json_text);

  m.def("graph_from_json", &graph_from_json_text);
  m.def("theta_graph", &theta_graph);
  m.def("dumbbell_graph", &dumbbell_graph);
  m.def("k4_graph", &k4_graph);
  m.def("chain_graph", &chain_graph);

  m.def("separating_edges", [](const TrivalentGraph& g) {
    const auto s = separating_edges(g);
    return std::vector<int>(s.begin(), s.end());
  });
  m.def("is_admissible_triple", &is_admissible_triple, py::arg("l1"),
        py::arg("l2"), py::arg("l3"), py::arg("k"));
  m.def("enumerate_labelings", [](const TrivalentGraph& g, int k) {
    std::vector<std::vector<int>> out;
    for (const Labeling& l : enumerate_labelings(g, k)) out.push_back(l.values);
    return out;
  });
  m.def("label_to_trace", &label_to_trace);
  m.def("verlinde_su2", &verlinde_su2);

  m.def("quantum_integer", [](int j, int k) {
    const QuantumInteger q = quantum_integer(j, QuantumParams(k));
    return py::make_tuple(q.qint, q.qfact, q.loop);
  });
  m.def("theta_symbol", [](int a, int b, int c, int k) {
    return theta_symbol(a, b, c, QuantumParams(k));
  });
  m.def("norm_squared",
        [](const TrivalentGraph& g, const std::vector<int>& values, int k) {
          return norm_squared(g, Labeling{values, k}, QuantumParams(k));
        });
  m.def("norm_table", [](const TrivalentGraph& g, int k) {
    std::map<std::vector<int>, double> out;
    for (const auto& [values, nsq] : build_norm_table(g, k).entries)
      out[values] = nsq;
    return out;
  });

  m.def("irrep_generators", [](int lambda) {
    const auto gens = irrep_generators(SpinLabel{lambda});
    return std::vector<Eigen::MatrixXcd>(gens.begin(), gens.end());
  });
  m.def("casimir_pair", [](int i, int j, const std::vector<int>& lambdas) {
    return casimir_pair(i, j, to_labels(lambdas));
  });
  m.def("invariant_subspace", [](const std::vector<int>& lambdas) {
    return invariant_subspace(to_labels(lambdas)).basis;
  });
  m.def(
      "kz_transport",
      [](const std::vector<int>& lambdas, const std::vector<complexd>& path,
         int steps, double coupling) {
        FourPointConfig config;
        config.labels = to_labels(lambdas);
        config.tau = path.empty() ? complexd(0.5, 0.5) : path.front();
        config.coupling = coupling;
        return kz_transport(config, path, steps);
      },
      py::arg("labels"), py::arg("path"), py::arg("steps") = 10000,
      py::arg("coupling") = 1.0);
  m.def("symbol_conjugacy_check", &symbol_conjugacy_check);

  m.def("complex_structure", [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    return complex_structure(SiegelPoint(x, y));
  });
  m.def("complex_structure_derivative",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
           const Eigen::MatrixXd& xdot, const Eigen::MatrixXd& ydot) {
          return complex_structure_derivative(SiegelPoint(x, y), xdot, ydot);
        });
  m.def("frame_and_projections",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
          const FrameData f = frame_and_projections(SiegelPoint(x, y));
          return py::make_tuple(f.omega_w, f.pi_t, f.pi_prime, f.cobasis_map);
        });
  m.def("inverse_decomposition",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
          const InverseDecomposition d = inverse_decomposition(SiegelPoint(x, y));
          return py::make_tuple(d.V, d.W);
        });
  m.def("transversality",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, bool relaxed) {
          const TransversalityReport r =
              relaxed ? transversality_relaxed(x, y)
                      : transversality(SiegelPoint(x, y));
          return py::make_tuple(r.graph_transverse, r.totally_complex);
        },
        py::arg("x"), py::arg("y"), py::arg("relaxed") = false);
  m.def("degeneration_residuals",
        [](const Eigen::MatrixXcd& z_infinity, const Eigen::MatrixXcd& c,
           double exponent, double t_min, const std::vector<double>& grid) {
          return degeneration_limit(power_path(z_infinity, c, exponent, t_min),
                                    grid);
        });

  m.def("dyson_transport",
        [](const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& c, double alpha,
           double t_min, double t0, double t, double tol) {
          return dyson_transport(power_family(p, c, alpha, t_min), t0, t, tol);
        },
        py::arg("p_infinity"), py::arg("c"), py::arg("alpha") = -2.0,
        py::arg("t_min") = 1.0, py::arg("t0") = 1.0, py::arg("t") = 4.0,
        py::arg("tol") = 1e-8);
  m.def("ode_transport",
        [](const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& c, double alpha,
           double t_min, double t0, double t, int steps) {
          const OdeResult r =
              ode_transport(power_family(p, c, alpha, t_min), t0, t, steps);
          return py::make_tuple(r.E, r.halving_defect);
        },
        py::arg("p_infinity"), py::arg("c"), py::arg("alpha") = -2.0,
        py::arg("t_min") = 1.0, py::arg("t0") = 1.0, py::arg("t") = 4.0,
        py::arg("steps") = 4096);
  m.def("limit_transport",
        [](const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& c, double alpha,
           double t_min, double t0, double tol) {
          const LimitResult r =
              limit_transport(power_family(p, c, alpha, t_min), t0, tol);
          return py::make_tuple(r.E_infinity, r.kernel_residual, r.final_time);
        },
        py::arg("p_infinity"), py::arg("c"), py::arg("alpha") = -2.0,
        py::arg("t_min") = 1.0, py::arg("t0") = 1.0, py::arg("tol") = 1e-5);
  m.def("simplex_volume", &simplex_volume);
  m.def("mc_simplex_volume", &mc_simplex_volume);

  m.def("sphere4_residual",
        [](double a, double b, double c, double d, double x, double y, double z) {
          return sphere4_residual(FourHoleTraces{a, b, c, d, x, y, z});
        });
  m.def("traces_from_representation",
        [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
           const Eigen::Matrix2cd& c) {
          const FourHoleTraces t = traces_from_representation(a, b, c);
          return py::make_tuple(t.a, t.b, t.c, t.d, t.x, t.y, t.z);
        });
  m.def("torus_residual", &torus_residual);
  m.def("torus_fiber_membership", &torus_fiber_membership);
  m.def("bs_domain_membership",
        [](const TrivalentGraph& g, const std::map<int, double>& z,
           bool symmetric) {
          return bs_domain_membership(
              g, z, symmetric ? SumBound::symmetric : SumBound::asymmetric);
        },
        py::arg("graph"), py::arg("z"), py::arg("symmetric") = true);
  m.def("sample_sphere4", [](std::uint64_t seed, long draws) {
    return sample_sphere4(seed, draws).max_residual;
  });
  m.def("sample_torus", [](std::uint64_t seed, long draws) {
    return sample_torus(seed, draws).max_residual;
  });

  m.def("theta_value", [](int j, int k, complexd tau, complexd z) {
    return theta_value(j, ThetaParams(k, tau), z);
  });
  m.def("heat_residual", [](int j, int k, complexd tau, complexd z) {
    return heat_residual(j, ThetaParams(k, tau), z);
  });
  m.def("heat_evolve_check", &heat_evolve_check);

  m.def("toeplitz_matrix", [](const std::string& name, int k) {
    return toeplitz_matrix(registry_function(name, k), FockBasis(k));
  });
  m.def("toeplitz_matrix_from_terms", [](const std::string& json_text, int k) {
    return toeplitz_matrix(sphere_function_from_json_text(json_text), FockBasis(k));
  });
  m.def("multiplicativity_decay",
        [](const std::string& f, const std::string& g, const std::vector<int>& levels) {
          const DecayReport r = multiplicativity_decay(registry_function(f, -1),
                                                       registry_function(g, -1),
                                                       levels);
          return py::make_tuple(r.defects, r.slope);
        });
  m.def("kernel_check", [](const std::string& name, int k, double tol) {
    return kernel_check(registry_function(name, k), FockBasis(k), tol);
  });

  m.attr("__version__") = kVersion;
}
