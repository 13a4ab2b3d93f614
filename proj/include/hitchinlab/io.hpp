#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hitchinlab/pants_graph.hpp"
#include "hitchinlab/siegel_geometry.hpp"
#include "hitchinlab/toeplitz_cp1.hpp"
#include "hitchinlab/volterra_transport.hpp"

namespace hitchinlab {

// Graph files: {"vertices": [ids], "edges": [{"id":, "a": [v, slot], "b": [v, slot]}]}
TrivalentGraph graph_from_json_text(const std::string& text);
TrivalentGraph graph_from_json_file(const std::string& path);
std::string graph_to_json_text(const TrivalentGraph& graph);

// Complex matrices as row-major nested arrays of [re, im] pairs.
Eigen::MatrixXcd complex_matrix_from_json_text(const std::string& text);
std::string complex_matrix_to_json_text(const Eigen::MatrixXcd& m);

// Paths as a list of [re, im] points.
std::vector<complexd> path_from_json_file(const std::string& path);

// Generator families:
// {"P_infinity": mat, "delta": {"type": "power", "C": mat, "alpha": a},
//  "t_min": t, "bound_c": c (optional, defaults to ||C||)}
GeneratorFamily family_from_json_file(const std::string& path);

// Real matrices as row-major nested arrays.
Eigen::MatrixXd real_matrix_from_json(const std::string& text);

// Siegel points: {"X": mat, "Y": mat}
SiegelPoint siegel_point_from_json_file(const std::string& path);

// Degenerating families:
// {"Z_infinity": mat, "remainder": {"type": "power", "C": mat, "exponent": e},
//  "t_min": t, "t_grid": [...]}
struct SiegelPathSpec {
  SiegelPath path;
  std::vector<double> t_grid;
};
SiegelPathSpec siegel_path_from_json_file(const std::string& path);

// Sphere functions: {"terms": [{"re":, "im":, "s":, "t":, "q":}]}
SphereFunction sphere_function_from_json_text(const std::string& text);

// CSV sink with the versioned "# hitchin-lab v..." header line.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out);
  void comment(const std::string& text);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

std::string read_text_file(const std::string& path);

}  // namespace hitchinlab
