#include "hitchinlab/pants_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace hitchinlab {

namespace {

constexpr int kNoEdge = -1;

}  // namespace

TrivalentGraph::TrivalentGraph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw validation_error("graph: no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw validation_error("graph: duplicate vertex id");

  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].id == edges_[i - 1].id)
      throw validation_error("graph: duplicate edge id");

  for (int v : vertices_) incidence_[v] = {kNoEdge, kNoEdge, kNoEdge};

  auto occupy = [&](const EdgeEnd& end, int edge_id) {
    auto it = incidence_.find(end.vertex);
    if (it == incidence_.end())
      throw validation_error("graph: edge endpoint at unknown vertex");
    if (end.slot < 0 || end.slot > 2)
      throw validation_error("graph: slot out of range");
    if (it->second[end.slot] != kNoEdge)
      throw validation_error("graph: slot occupied twice");
    it->second[end.slot] = edge_id;
  };
  for (const Edge& e : edges_) {
    if (e.is_loop() && e.a.slot == e.b.slot)
      throw validation_error("graph: loop must occupy two distinct slots");
    occupy(e.a, e.id);
    occupy(e.b, e.id);
  }
  for (const auto& [v, slots] : incidence_)
    for (int s = 0; s < 3; ++s)
      if (slots[s] == kNoEdge)
        throw validation_error("graph: vertex is not trivalent");

  // connectivity
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges_) {
    adj[e.a.vertex].push_back(e.b.vertex);
    adj[e.b.vertex].push_back(e.a.vertex);
  }
  std::set<int> seen;
  std::queue<int> frontier;
  frontier.push(vertices_.front());
  seen.insert(vertices_.front());
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : adj[v])
      if (seen.insert(w).second) frontier.push(w);
  }
  if (seen.size() != vertices_.size())
    throw validation_error("graph: not connected");

  if (2 * edges_.size() != 3 * vertices_.size())
    throw validation_error("graph: |E| != 3|V|/2");
  if (genus() < 2) throw validation_error("graph: genus must be >= 2");

  edge_ids_.reserve(edges_.size());
  for (const Edge& e : edges_) edge_ids_.push_back(e.id);
}

int TrivalentGraph::genus() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
}

std::array<int, 3> TrivalentGraph::incident_edges(int vertex) const {
  auto it = incidence_.find(vertex);
  if (it == incidence_.end()) throw validation_error("graph: unknown vertex");
  return it->second;
}

int TrivalentGraph::edge_index(int edge_id) const {
  auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), edge_id);
  if (it == edge_ids_.end() || *it != edge_id)
    throw validation_error("graph: unknown edge id");
  return static_cast<int>(it - edge_ids_.begin());
}

TrivalentGraph theta_graph() {
  return TrivalentGraph({0, 1}, {{0, {0, 0}, {1, 0}},
                                 {1, {0, 1}, {1, 1}},
                                 {2, {0, 2}, {1, 2}}});
}

TrivalentGraph dumbbell_graph() {
  return TrivalentGraph({0, 1}, {{0, {0, 0}, {0, 1}},
                                 {1, {0, 2}, {1, 2}},
                                 {2, {1, 0}, {1, 1}}});
}

TrivalentGraph k4_graph() {
  return TrivalentGraph({0, 1, 2, 3}, {{0, {0, 0}, {1, 0}},
                                       {1, {0, 1}, {2, 0}},
                                       {2, {0, 2}, {3, 0}},
                                       {3, {1, 1}, {2, 1}},
                                       {4, {1, 2}, {3, 1}},
                                       {5, {2, 2}, {3, 2}}});
}

TrivalentGraph chain_graph(int genus) {
  if (genus < 2) throw validation_error("chain_graph: genus must be >= 2");
  const int nv = 2 * genus - 2;
  std::vector<int> vertices(nv);
  for (int v = 0; v < nv; ++v) vertices[v] = v;
  std::vector<Edge> edges;
  int id = 0;
  edges.push_back({id++, {0, 0}, {0, 1}});  // loop at the left end
  // alternate single and double connections along the chain
  for (int v = 0; v + 1 < nv; ++v) {
    if (v % 2 == 0) {
      edges.push_back({id++, {v, 2}, {v + 1, 2}});
    } else {
      edges.push_back({id++, {v, 0}, {v + 1, 0}});
      edges.push_back({id++, {v, 1}, {v + 1, 1}});
    }
  }
  edges.push_back({id++, {nv - 1, 0}, {nv - 1, 1}});  // loop at the right end
  return TrivalentGraph(std::move(vertices), std::move(edges));
}

std::set<int> separating_edges(const TrivalentGraph& graph) {
  // Tarjan bridge search on the multigraph; parallel edges and loops are
  // never bridges because the twin edge (or the loop itself) closes a cycle.
  const auto& edges = graph.edges();
  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge idx)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.is_loop()) continue;
    adj[e.a.vertex].push_back({e.b.vertex, static_cast<int>(i)});
    adj[e.b.vertex].push_back({e.a.vertex, static_cast<int>(i)});
  }
  std::map<int, int> disc, low;
  std::set<int> bridges;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = ++timer;
    for (auto [w, ei] : adj[v]) {
      if (ei == parent_edge) continue;
      if (disc.count(w)) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        dfs(w, ei);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.insert(edges[ei].id);
      }
    }
  };
  for (int v : graph.vertices())
    if (!disc.count(v)) dfs(v, -1);
  return bridges;
}

bool is_admissible_triple(int l1, int l2, int l3, int k) {
  if (k < 0) throw validation_error("admissible: level must be >= 0");
  for (int l : {l1, l2, l3})
    if (l < 0 || l > k) throw validation_error("admissible: label out of [0, k]");
  if (std::abs(l1 - l2) > l3 || l3 > l1 + l2) return false;
  if (l1 + l2 + l3 > 2 * k) return false;
  return (l1 + l2 + l3) % 2 == 0;
}

std::vector<Labeling> enumerate_labelings(const TrivalentGraph& graph, int k) {
  if (k < 0) throw validation_error("enumerate_labelings: level must be >= 0");
  const auto& edges = graph.edges();
  const int ne = static_cast<int>(edges.size());
  const std::set<int> bridges = separating_edges(graph);

  // Assign edges in a DFS order over the graph so that vertex triples close
  // early and prune the search; output is sorted afterwards.
  std::vector<int> order;
  {
    std::set<int> placed;
    std::set<int> visited;
    std::function<void(int)> dfs = [&](int v) {
      visited.insert(v);
      for (int eid : graph.incident_edges(v)) {
        if (placed.insert(eid).second) order.push_back(graph.edge_index(eid));
      }
      for (int eid : graph.incident_edges(v)) {
        const Edge& e = edges[graph.edge_index(eid)];
        const int w = (e.a.vertex == v) ? e.b.vertex : e.a.vertex;
        if (!visited.count(w)) dfs(w);
      }
    };
    dfs(graph.vertices().front());
  }

  // per-vertex incident edge indices
  std::vector<std::array<int, 3>> vertex_edges;
  for (int v : graph.vertices()) {
    const auto inc = graph.incident_edges(v);
    vertex_edges.push_back({graph.edge_index(inc[0]), graph.edge_index(inc[1]),
                            graph.edge_index(inc[2])});
  }
  std::vector<int> rank(ne);  // edge index -> position in assignment order
  for (int pos = 0; pos < ne; ++pos) rank[order[pos]] = pos;

  std::vector<int> values(ne, -1);
  std::vector<Labeling> out;
  std::function<void(int)> assign = [&](int pos) {
    if (pos == ne) {
      out.push_back({values, k});
      return;
    }
    const int ei = order[pos];
    const bool even_only = bridges.count(edges[ei].id) > 0;
    for (int val = 0; val <= k; ++val) {
      if (even_only && val % 2 != 0) continue;
      values[ei] = val;
      bool ok = true;
      for (const auto& ve : vertex_edges) {
        if (ve[0] != ei && ve[1] != ei && ve[2] != ei) continue;
        // check only once all three incident edges are assigned
        if (rank[ve[0]] > pos || rank[ve[1]] > pos || rank[ve[2]] > pos) continue;
        if (!is_admissible_triple(values[ve[0]], values[ve[1]], values[ve[2]], k)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(pos + 1);
    }
    values[ei] = -1;
  };
  assign(0);

  std::sort(out.begin(), out.end(),
            [](const Labeling& x, const Labeling& y) { return x.values < y.values; });
  return out;
}

double label_to_trace(int label, int k) {
  if (k < 1) throw validation_error("label_to_trace: level must be >= 1");
  if (label < 0 || label > k)
    throw validation_error("label_to_trace: label out of [0, k]");
  return 2.0 * std::cos(std::numbers::pi * label / k);
}

double verlinde_su2(int genus, int k) {
  if (genus < 2) throw validation_error("verlinde_su2: genus must be >= 2");
  if (k < 0) throw validation_error("verlinde_su2: level must be >= 0");
  const int r = k + 2;
  double sum = 0.0;
  for (int j = 1; j <= k + 1; ++j)
    sum += std::pow(std::sin(j * std::numbers::pi / r), 2.0 - 2.0 * genus);
  return std::pow(r / 2.0, genus - 1) * sum;
}

}  // namespace hitchinlab
