#include "disorient/disorient.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace disorient {

namespace {

GraphBipartiteness two_color(const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t n = adj.size();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n, none), depth(n, 0);
  GraphBipartiteness out;
  for (std::size_t r = 0; r < n; ++r) {
    if (color[r] >= 0) continue;
    color[r] = 0;
    std::queue<std::size_t> q;
    q.push(r);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          // Odd cycle: u up to the common ancestor, then down to v.
          std::vector<std::size_t> left, right;
          std::size_t a = u, b = v;
          while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
          while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
          while (a != b) {
            left.push_back(a);
            a = parent[a];
            right.push_back(b);
            b = parent[b];
          }
          left.push_back(a);
          for (std::size_t i = right.size(); i-- > 0;) left.push_back(right[i]);
          for (auto x : left) out.odd_cycle.push_back(static_cast<VertexId>(x));
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  for (std::size_t v = 0; v < n; ++v) {
    (color[v] == 0 ? out.partition.first : out.partition.second).push_back(static_cast<VertexId>(v));
  }
  return out;
}

}  // namespace

bool is_valid_disorientation(const SignedDualGraph& g, std::span<const Sign> assignment) {
  if (assignment.size() != g.graph.vertex_count()) return false;
  for (std::size_t i = 0; i < g.graph.edges().size(); ++i) {
    const auto& e = g.graph.edge(i);
    if (assignment[e.u] * assignment[e.v] != -g.w(i)) return false;
  }
  return true;
}

Verdict check_disorientable(const SimplicialComplex& k, const ReferenceOrientation& reference) {
  return check_disorientable(k, signed_down_dual(k, reference));
}

Verdict check_disorientable(const SimplicialComplex& k, const SignedDualGraph& g) {
  const DualGraph& graph = g.graph;
  const std::size_t m = graph.vertex_count();
  Verdict verdict;
  verdict.branching = branching_report(k);
  verdict.dual_components = graph.component_count();

  SpanningForest forest(graph, nullptr);
  std::vector<Sign> assignment(m, Sign::plus());
  for (std::size_t r = 0; r < m; ++r) {
    if (forest.root[r] != SpanningForest::none) continue;
    forest.root[r] = r;
    forest.order.push_back(r);
    std::queue<std::size_t> q;
    q.push(r);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& inc : graph.incident(u)) {
        const std::size_t v = inc.neighbor;
        const Sign required = assignment[u] * -g.w(inc.edge);
        if (forest.root[v] == SpanningForest::none) {
          forest.root[v] = r;
          forest.parent[v] = u;
          forest.parent_edge[v] = inc.edge;
          forest.depth[v] = forest.depth[u] + 1;
          forest.tree_edge[inc.edge] = true;
          forest.order.push_back(v);
          assignment[v] = required;
          q.push(v);
        } else if (assignment[v] != required) {
          auto [vertices, edges] = forest.cycle_through(graph, inc.edge);
          Obstruction ob;
          ob.cycle = classify_cycle(g, std::move(vertices), std::move(edges));
          ob.conflict_edge = inc.edge;
          ob.simplex_a = u;
          ob.simplex_b = v;
          ob.shared_face = graph.edge(inc.edge).label;
          verdict.outcome = std::move(ob);
          return verdict;
        }
      }
    }
  }
  verdict.outcome = Disorientation{std::move(assignment)};
  return verdict;
}

bool theorem1_verdict(std::span<const CycleClassification> cycles) {
  for (const auto& c : cycles) {
    if (c.violates_parity()) return false;
  }
  return true;
}

TopTwoColoring two_coloring(const Disorientation& d) {
  TopTwoColoring out;
  for (std::size_t i = 0; i < d.assignment.size(); ++i) {
    (d.assignment[i].positive() ? out.positive : out.negative).push_back(i);
  }
  return out;
}

GraphBipartiteness is_bipartite_combinatorial(const SimplicialComplex& g) {
  if (g.dimension() != 1) throw std::invalid_argument("is_bipartite_combinatorial expects a graph");
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& e : g.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return two_color(adj);
}

GraphBipartiteness is_bipartite_combinatorial(const DualGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const auto& inc : g.incident(v)) adj[v].push_back(inc.neighbor);
  }
  return two_color(adj);
}

BruteForceVerdict brute_force_disorientable(const SimplicialComplex& k, const ReferenceOrientation& reference,
                                            std::size_t cap) {
  const SignedDualGraph g = signed_down_dual(k, reference);
  const std::size_t m = g.graph.vertex_count();
  if (m > cap || m >= 63) {
    throw std::length_error(std::to_string(m) + " top simplices exceed the brute-force cap of " +
                            std::to_string(cap));
  }
  // Bit i of `mask` is set when simplex i gets -1; simplex 0 is the most
  // significant position so ascending masks are lexicographic with + first.
  struct Constraint {
    std::uint64_t bits;
    bool differ;
  };
  std::vector<Constraint> constraints;
  for (std::size_t i = 0; i < g.graph.edges().size(); ++i) {
    const auto& e = g.graph.edge(i);
    const std::uint64_t bu = std::uint64_t{1} << (m - 1 - e.u);
    const std::uint64_t bv = std::uint64_t{1} << (m - 1 - e.v);
    // a_u * a_v == -w: signs differ exactly when w == +1.
    constraints.push_back({bu | bv, g.w(i).positive()});
  }
  BruteForceVerdict out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++out.assignments_tried;
    bool ok = true;
    for (const auto& c : constraints) {
      const bool differ = std::popcount(mask & c.bits) == 1;
      if (differ != c.differ) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Disorientation d;
    d.assignment.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      d.assignment.push_back((mask >> (m - 1 - i)) & 1 ? Sign::minus() : Sign::plus());
    }
    out.disorientation = std::move(d);
    break;
  }
  return out;
}

}  // namespace disorient
