#include "hitchinlab/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hitchinlab {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw validation_error(std::string(what) + ": malformed JSON");
  return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* key : known)
      if (it.key() == key) ok = true;
    if (!ok)
      throw validation_error(std::string(what) + ": unknown key '" + it.key() + "'");
  }
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw validation_error(std::string(what) + ": expected a matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw validation_error(std::string(what) + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& cell = j[r][c];
      if (cell.is_number()) {
        m(r, c) = complexd(cell.get<double>(), 0.0);
      } else if (cell.is_array() && cell.size() == 2) {
        m(r, c) = complexd(cell[0].get<double>(), cell[1].get<double>());
      } else {
        throw validation_error(std::string(what) +
                               ": matrix entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

}  // namespace

TrivalentGraph graph_from_json_text(const std::string& text) {
  const json j = parse(text, "graph");
  reject_unknown_keys(j, {"vertices", "edges"}, "graph");
  if (!j.contains("vertices") || !j.contains("edges"))
    throw validation_error("graph: need 'vertices' and 'edges'");
  std::vector<int> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(v.get<int>());
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    reject_unknown_keys(e, {"id", "a", "b"}, "graph edge");
    if (!e.contains("id") || !e.contains("a") || !e.contains("b"))
      throw validation_error("graph edge: need 'id', 'a', 'b'");
    auto end = [](const json& x) -> EdgeEnd {
      if (!x.is_array() || x.size() != 2)
        throw validation_error("graph edge endpoint: expected [vertex, slot]");
      return {x[0].get<int>(), x[1].get<int>()};
    };
    edges.push_back({e["id"].get<int>(), end(e["a"]), end(e["b"])});
  }
  return TrivalentGraph(std::move(vertices), std::move(edges));
}

TrivalentGraph graph_from_json_file(const std::string& path) {
  return graph_from_json_text(read_text_file(path));
}

std::string graph_to_json_text(const TrivalentGraph& graph) {
  json j;
  j["vertices"] = graph.vertices();
  j["edges"] = json::array();
  for (const Edge& e : graph.edges()) {
    j["edges"].push_back({{"id", e.id},
                          {"a", {e.a.vertex, e.a.slot}},
                          {"b", {e.b.vertex, e.b.slot}}});
  }
  return j.dump(2);
}

Eigen::MatrixXcd complex_matrix_from_json_text(const std::string& text) {
  return complex_matrix_from_json(parse(text, "matrix"), "matrix");
}

std::string complex_matrix_to_json_text(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows.dump();
}

std::vector<complexd> path_from_json_file(const std::string& path) {
  const json j = parse(read_text_file(path), "path");
  if (!j.is_array()) throw validation_error("path: expected a list of points");
  std::vector<complexd> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw validation_error("path: each point must be [re, im]");
    out.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return out;
}

GeneratorFamily family_from_json_file(const std::string& path) {
  const json j = parse(read_text_file(path), "family");
  reject_unknown_keys(j, {"P_infinity", "delta", "t_min", "bound_c"}, "family");
  if (!j.contains("P_infinity") || !j.contains("delta"))
    throw validation_error("family: need 'P_infinity' and 'delta'");
  GeneratorFamily fam;
  fam.P_infinity = complex_matrix_from_json(j["P_infinity"], "family P_infinity");
  const json& d = j["delta"];
  reject_unknown_keys(d, {"type", "C", "alpha"}, "family delta");
  if (d.value("type", "") != "power")
    throw validation_error("family delta: only {\"type\": \"power\"} is supported");
  const Eigen::MatrixXcd c = complex_matrix_from_json(d.at("C"), "family delta C");
  fam.alpha = d.at("alpha").get<double>();
  fam.delta = [c, alpha = fam.alpha](double t) -> Eigen::MatrixXcd {
    return c * std::pow(t, alpha);
  };
  fam.t_min = j.value("t_min", 1.0);
  fam.bound_c = j.contains("bound_c") ? j["bound_c"].get<double>()
                                      : operator_norm(c);
  fam.validate();
  return fam;
}

Eigen::MatrixXd real_matrix_from_json(const std::string& text) {
  const Eigen::MatrixXcd m = complex_matrix_from_json_text(text);
  if (m.imag().norm() != 0.0)
    throw validation_error("matrix: expected real entries");
  return m.real();
}

SiegelPoint siegel_point_from_json_file(const std::string& path) {
  const json j = parse(read_text_file(path), "siegel point");
  reject_unknown_keys(j, {"X", "Y"}, "siegel point");
  if (!j.contains("X") || !j.contains("Y"))
    throw validation_error("siegel point: need 'X' and 'Y'");
  const Eigen::MatrixXcd x = complex_matrix_from_json(j["X"], "siegel X");
  const Eigen::MatrixXcd y = complex_matrix_from_json(j["Y"], "siegel Y");
  if (x.imag().norm() != 0.0 || y.imag().norm() != 0.0)
    throw validation_error("siegel point: X and Y must be real");
  return SiegelPoint(x.real(), y.real());
}

SiegelPathSpec siegel_path_from_json_file(const std::string& path) {
  const json j = parse(read_text_file(path), "siegel path");
  reject_unknown_keys(j, {"Z_infinity", "remainder", "t_min", "t_grid"},
                      "siegel path");
  if (!j.contains("Z_infinity") || !j.contains("remainder") ||
      !j.contains("t_grid"))
    throw validation_error("siegel path: need 'Z_infinity', 'remainder', 't_grid'");
  SiegelPathSpec spec;
  spec.path.Z_infinity =
      complex_matrix_from_json(j["Z_infinity"], "siegel path Z_infinity");
  const json& r = j["remainder"];
  reject_unknown_keys(r, {"type", "C", "exponent"}, "siegel path remainder");
  if (r.value("type", "") != "power")
    throw validation_error("siegel path remainder: only type 'power' is supported");
  const Eigen::MatrixXcd c =
      complex_matrix_from_json(r.at("C"), "siegel path remainder C");
  const double exponent = r.at("exponent").get<double>();
  if (!(exponent < -1.0))
    throw validation_error("siegel path remainder: exponent must be < -1");
  spec.path.remainder = [c, exponent](double t) -> Eigen::MatrixXcd {
    return c * std::pow(t, exponent);
  };
  spec.path.remainder_derivative = [c, exponent](double t) -> Eigen::MatrixXcd {
    return c * exponent * std::pow(t, exponent - 1.0);
  };
  spec.path.t_min = j.value("t_min", 1.0);
  for (const auto& t : j["t_grid"]) spec.t_grid.push_back(t.get<double>());
  return spec;
}

SphereFunction sphere_function_from_json_text(const std::string& text) {
  const json j = parse(text, "sphere function");
  reject_unknown_keys(j, {"terms"}, "sphere function");
  if (!j.contains("terms"))
    throw validation_error("sphere function: need 'terms'");
  std::vector<SphereFunctionTerm> terms;
  for (const auto& t : j["terms"]) {
    reject_unknown_keys(t, {"re", "im", "s", "t", "q"}, "sphere function term");
    SphereFunctionTerm term;
    term.coeff = complexd(t.value("re", 0.0), t.value("im", 0.0));
    term.s = t.value("s", 0);
    term.t = t.value("t", 0);
    term.q = t.value("q", 0);
    terms.push_back(term);
  }
  return SphereFunction(std::move(terms));
}

CsvWriter::CsvWriter(std::ostream& out) : out_(out) {
  out_ << "# hitchin-lab v" << kVersion << "\n";
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ",";
    out_ << cells[i];
  }
  out_ << "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hitchinlab
