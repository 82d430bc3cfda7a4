#include "disorient/dual_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace disorient {

DualGraph::DualGraph(int dim, Adjacency adjacency, std::size_t vertex_count, std::vector<Edge> edges)
    : dim_(dim), adjacency_(adjacency), vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("invalid dual edge");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  adjacency_list_.resize(vertex_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0 && edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw std::invalid_argument("dual graph must be simple");
    }
    adjacency_list_[edges_[i].u].push_back({edges_[i].v, i});
    adjacency_list_[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (auto& list : adjacency_list_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
}

std::size_t DualGraph::component_count() const {
  SpanningForest forest(*this);
  return static_cast<std::size_t>(std::count_if(forest.parent.begin(), forest.parent.end(),
                                                [](std::size_t p) { return p == SpanningForest::none; }));
}

DualGraph down_dual(const SimplicialComplex& k, int d) {
  if (d < 1 || d > k.dimension()) {
    throw std::out_of_range("down-dual dimension " + std::to_string(d) + " outside [1, " +
                            std::to_string(k.dimension()) + "]");
  }
  std::vector<DualGraph::Edge> edges;
  for (std::size_t f = 0; f < k.count(d - 1); ++f) {
    auto cof = k.coface_indices(d - 1, f);
    for (std::size_t a = 0; a < cof.size(); ++a) {
      for (std::size_t b = a + 1; b < cof.size(); ++b) edges.push_back({cof[a], cof[b], f});
    }
  }
  return DualGraph(d, Adjacency::down, k.count(d), std::move(edges));
}

DualGraph up_dual(const SimplicialComplex& k, int d) {
  if (d < 0 || d >= k.dimension()) {
    throw std::out_of_range("up-dual dimension " + std::to_string(d) + " outside [0, " +
                            std::to_string(k.dimension() - 1) + "]");
  }
  std::vector<DualGraph::Edge> edges;
  for (std::size_t c = 0; c < k.count(d + 1); ++c) {
    auto fs = k.face_indices(d + 1, c);
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) edges.push_back({fs[a], fs[b], c});
    }
  }
  return DualGraph(d, Adjacency::up, k.count(d), std::move(edges));
}

bool is_d_connected(const SimplicialComplex& k, int d) {
  if (k.count(d) == 0) throw std::out_of_range("level " + std::to_string(d) + " is empty");
  if (d == k.dimension()) return k.count(d) == 1;
  return up_dual(k, d).connected();
}

DualGraph line_graph(const SimplicialComplex& g) {
  if (g.dimension() != 1) throw std::invalid_argument("line_graph expects a 1-dimensional complex");
  return down_dual(g, 1);
}

SignedDualGraph signed_down_dual(const SimplicialComplex& k, const ReferenceOrientation& reference) {
  const int n = k.dimension();
  if (n < 1) throw std::invalid_argument("signed down-dual needs dimension >= 1");
  ReferenceOrientation ref = reference;
  if (ref.empty()) ref.assign(k.top_count(), Sign::plus());
  if (ref.size() != k.top_count()) {
    throw std::invalid_argument("reference orientation has " + std::to_string(ref.size()) +
                                " signs for " + std::to_string(k.top_count()) + " top simplices");
  }
  DualGraph g = down_dual(k, n);
  std::vector<Sign> coherence;
  coherence.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    const Simplex& face = k.simplex(n - 1, e.label);
    Sign su = induced_orientation({k.simplex(n, e.u), ref[e.u]}, face).sign;
    Sign sv = induced_orientation({k.simplex(n, e.v), ref[e.v]}, face).sign;
    coherence.push_back(-(su * sv));
  }
  return {std::move(g), std::move(coherence), std::move(ref)};
}

CycleClassification classify_cycle(const SignedDualGraph& g, std::vector<std::size_t> vertices,
                                   std::vector<std::size_t> edges) {
  if (vertices.size() != edges.size() || edges.size() < 3) {
    throw std::invalid_argument("a dual cycle needs matching vertex and edge lists of length >= 3");
  }
  CycleClassification c;
  c.length = edges.size();
  c.branching_exempt = true;
  const std::size_t label = g.graph.edge(edges.front()).label;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = g.graph.edge(edges[i]);
    std::size_t a = vertices[i];
    std::size_t b = vertices[(i + 1) % vertices.size()];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw std::invalid_argument("edge list does not follow the vertex sequence");
    }
    c.w_product *= g.w(edges[i]);
    if (e.label != label) c.branching_exempt = false;
  }
  c.twisted = !c.w_product.positive();
  c.vertices = std::move(vertices);
  c.edges = std::move(edges);
  return c;
}

SpanningForest::SpanningForest(const DualGraph& g, std::nullptr_t)
    : parent(g.vertex_count(), none),
      parent_edge(g.vertex_count(), none),
      depth(g.vertex_count(), 0),
      root(g.vertex_count(), none),
      tree_edge(g.edges().size(), false) {
  order.reserve(g.vertex_count());
}

SpanningForest::SpanningForest(const DualGraph& g) : SpanningForest(g, nullptr) {
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    if (root[r] != none) continue;
    root[r] = r;
    order.push_back(r);
    std::queue<std::size_t> q;
    q.push(r);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& inc : g.incident(u)) {
        if (root[inc.neighbor] != none) continue;
        root[inc.neighbor] = r;
        parent[inc.neighbor] = u;
        parent_edge[inc.neighbor] = inc.edge;
        depth[inc.neighbor] = depth[u] + 1;
        tree_edge[inc.edge] = true;
        order.push_back(inc.neighbor);
        q.push(inc.neighbor);
      }
    }
  }
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SpanningForest::cycle_through(
    const DualGraph& g, std::size_t edge) const {
  const auto& e = g.edge(edge);
  std::size_t a = e.u;
  std::size_t b = e.v;
  if (root[a] != root[b] || root[a] == none) throw std::invalid_argument("edge endpoints lie in different trees");

  std::vector<std::size_t> up_vertices, up_edges, down_vertices, down_edges;
  while (depth[a] > depth[b]) {
    up_vertices.push_back(a);
    up_edges.push_back(parent_edge[a]);
    a = parent[a];
  }
  while (depth[b] > depth[a]) {
    down_vertices.push_back(b);
    down_edges.push_back(parent_edge[b]);
    b = parent[b];
  }
  while (a != b) {
    up_vertices.push_back(a);
    up_edges.push_back(parent_edge[a]);
    a = parent[a];
    down_vertices.push_back(b);
    down_edges.push_back(parent_edge[b]);
    b = parent[b];
  }
  // Walk: e.u -> ... -> ancestor -> ... -> e.v, then back along `edge`.
  std::vector<std::size_t> vertices = up_vertices;
  std::vector<std::size_t> edges = up_edges;
  vertices.push_back(a);
  for (std::size_t i = down_vertices.size(); i-- > 0;) {
    edges.push_back(down_edges[i]);
    vertices.push_back(down_vertices[i]);
  }
  edges.push_back(edge);
  return {std::move(vertices), std::move(edges)};
}

std::vector<CycleClassification> fundamental_cycles(const SignedDualGraph& g) {
  SpanningForest forest(g.graph);
  std::vector<CycleClassification> out;
  for (std::size_t i = 0; i < g.graph.edges().size(); ++i) {
    if (forest.tree_edge[i]) continue;
    auto [vertices, edges] = forest.cycle_through(g.graph, i);
    out.push_back(classify_cycle(g, std::move(vertices), std::move(edges)));
  }
  return out;
}

}  // namespace disorient
