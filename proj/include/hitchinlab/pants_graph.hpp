#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "hitchinlab/common.hpp"

namespace hitchinlab {

struct EdgeEnd {
  int vertex;
  int slot;  // 0, 1 or 2
};

struct Edge {
  int id;
  EdgeEnd a;
  EdgeEnd b;
  bool is_loop() const { return a.vertex == b.vertex; }
};

// Dual graph of a pair-of-pants decomposition of a closed genus >= 2 surface:
// connected, every vertex has exactly three occupied slots, loops allowed.
class TrivalentGraph {
 public:
  TrivalentGraph(std::vector<int> vertices, std::vector<Edge> edges);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted by id
  const std::vector<int>& edge_ids() const { return edge_ids_; }

  int genus() const;  // |E| - |V| + 1

  // Incident edge ids at a vertex in slot order; a loop appears twice.
  std::array<int, 3> incident_edges(int vertex) const;

  int edge_index(int edge_id) const;  // position in edge_ids()

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> edge_ids_;
  std::map<int, std::array<int, 3>> incidence_;
};

// Small catalog used by tests and the CLI examples.
TrivalentGraph theta_graph();
TrivalentGraph dumbbell_graph();
TrivalentGraph k4_graph();
TrivalentGraph chain_graph(int genus);  // genus >= 2; chain_graph(2) == dumbbell

// Edge labels in [0, k], stored in edge_ids() order.
struct Labeling {
  std::vector<int> values;
  int level = 0;
};

// Bridges of the graph; loops are never bridges.
std::set<int> separating_edges(const TrivalentGraph& graph);

// Triangle inequality, level bound l1+l2+l3 <= 2k, and even total parity.
bool is_admissible_triple(int l1, int l2, int l3, int k);

// All labelings with even values on separating edges and admissible vertex
// triples, in lexicographic order of the edge_ids()-ordered value vectors.
std::vector<Labeling> enumerate_labelings(const TrivalentGraph& graph, int k);

double label_to_trace(int label, int k);  // 2 cos(pi l / k)

// Closed-surface SU(2) Verlinde number ((k+2)/2)^{g-1} sum_j sin(j pi/(k+2))^{2-2g}.
double verlinde_su2(int genus, int k);

}  // namespace hitchinlab
