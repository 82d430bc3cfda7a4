#include "disorient/splitting.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "disorient/spectral.hpp"

namespace disorient {

namespace {

std::size_t top_cofaces_containing(const SimplicialComplex& k, const Simplex& s) {
  const auto& top = k.top_simplices();
  return static_cast<std::size_t>(
      std::count_if(top.begin(), top.end(), [&](const Simplex& t) { return t.contains(s); }));
}

VertexId opposite_vertex(const Simplex& s, const Simplex& face) {
  for (auto v : s) {
    if (!face.contains(v)) return v;
  }
  throw std::invalid_argument(face.to_string() + " is not a face of " + s.to_string());
}

constexpr std::size_t kPlanSize = 4;

struct RepairState {
  SimplicialComplex complex;
  SignedDualGraph graph;
  SplitStep step;  // the split that produced this state
};

// Z2 vectors over the fundamental cycles of the dual graph.
using Bits = std::vector<std::uint64_t>;

void toggle(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }

Bits& operator^=(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

Bits operator^(Bits a, const Bits& b) { return a ^= b; }

bool is_zero(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

struct SplitClass {
  Simplex edge;
  std::vector<std::size_t> cofaces;  // top simplex indices containing the edge
  Bits effect;                       // cycles whose violation the split toggles
};

// Subdividing {x, y} toggles the frustration of the dual edges leaving each
// top coface through its face opposite x. Choosing y instead differs by a
// switching, so the effect on cycle violations depends only on the edge.
std::vector<SplitClass> split_classes(const SimplicialComplex& k, const SignedDualGraph& g,
                                      const std::vector<CycleClassification>& cycles) {
  const std::size_t words = (cycles.size() + 63) / 64;
  std::vector<Bits> on_cycles(g.graph.edges().size(), Bits(words, 0));
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    for (auto e : cycles[j].edges) toggle(on_cycles[e], j);
  }
  const auto& top = k.top_simplices();
  std::vector<SplitClass> out;
  for (const auto& e : k.simplices(1)) {
    SplitClass c{e, {}, Bits(words, 0)};
    for (std::size_t t = 0; t < top.size(); ++t) {
      if (!top[t].contains(e)) continue;
      c.cofaces.push_back(t);
      const std::size_t face = k.require_index(top[t].without(e[0]));
      for (const auto& inc : g.graph.incident(t)) {
        if (g.graph.edge(inc.edge).label == face) c.effect ^= on_cycles[inc.edge];
      }
    }
    if (!c.cofaces.empty()) out.push_back(std::move(c));
  }
  // Cheapest splits first.
  std::stable_sort(out.begin(), out.end(),
                   [](const SplitClass& l, const SplitClass& r) { return l.cofaces.size() < r.cofaces.size(); });
  return out;
}

bool share_top(const SplitClass& a, const SplitClass& b) {
  return std::find_first_of(a.cofaces.begin(), a.cofaces.end(), b.cofaces.begin(), b.cofaces.end()) != a.cofaces.end();
}

// Up to kPlanSize splits, pairwise without a common top simplex, whose
// effects sum to the violation vector. Disjoint splits act independently, so
// after the first one the rest is again such a plan. Indices refer to
// `classes`, in preference order.
std::optional<std::vector<std::size_t>> plan_splits(const std::vector<SplitClass>& classes, const Bits& target) {
  const std::size_t n = classes.size();
  if (is_zero(target)) return std::vector<std::size_t>{};
  for (std::size_t i = 0; i < n; ++i) {
    if (classes[i].effect == target) return std::vector<std::size_t>{i};
  }
  auto disjoint = [&](std::initializer_list<std::size_t> ids) {
    for (auto i = ids.begin(); i != ids.end(); ++i) {
      for (auto j = std::next(i); j != ids.end(); ++j) {
        if (*i == *j || share_top(classes[*i], classes[*j])) return false;
      }
    }
    return true;
  };
  std::map<Bits, std::vector<std::size_t>> single;
  for (std::size_t i = 0; i < n; ++i) single[classes[i].effect].push_back(i);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = single.find(target ^ classes[i].effect);
    if (it == single.end()) continue;
    for (auto j : it->second) {
      if (disjoint({i, j})) return std::vector<std::size_t>{std::min(i, j), std::max(i, j)};
    }
  }
  std::map<Bits, std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!disjoint({i, j})) continue;
      const Bits sum = classes[i].effect ^ classes[j].effect;
      auto it = single.find(target ^ sum);
      if (it != single.end()) {
        for (auto l : it->second) {
          if (disjoint({i, j, l})) return std::vector<std::size_t>{i, j, l};
        }
      }
      pairs[sum].emplace_back(i, j);
    }
  }
  for (const auto& [sum, list] : pairs) {
    auto it = pairs.find(target ^ sum);
    if (it == pairs.end()) continue;
    for (auto [i, j] : list) {
      for (auto [l, m] : it->second) {
        if (disjoint({i, j, l, m})) return std::vector<std::size_t>{i, j, l, m};
      }
    }
  }
  return std::nullopt;
}

Bits violations(const std::vector<CycleClassification>& cycles) {
  Bits target((cycles.size() + 63) / 64, 0);
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    if (cycles[j].violates_parity()) toggle(target, j);
  }
  return target;
}

std::optional<std::vector<std::size_t>> plan_for(const SimplicialComplex& k, const SignedDualGraph& g,
                                                 std::vector<SplitClass>* classes_out = nullptr) {
  const auto cycles = fundamental_cycles(g);
  auto classes = split_classes(k, g, cycles);
  auto plan = plan_splits(classes, violations(cycles));
  if (classes_out) *classes_out = std::move(classes);
  return plan;
}

// Next edge to subdivide: the head of a disjoint plan when one exists.
// Otherwise the split whose result has the shortest plan, then the fewest
// violated basis cycles, then the fewest top cofaces.
Simplex planned_edge(const RepairState& s) {
  std::vector<SplitClass> classes;
  if (auto plan = plan_for(s.complex, s.graph, &classes); plan && !plan->empty()) {
    return classes[plan->front()].edge;
  }
  using Score = std::tuple<std::size_t, std::size_t, std::size_t, Simplex>;
  std::optional<Score> best;
  for (const auto& c : classes) {
    const SimplicialComplex next = subdivide_edge(s.complex, c.edge).first;
    const SignedDualGraph g = signed_down_dual(next);
    const auto plan = plan_for(next, g);
    const auto cycles = fundamental_cycles(g);
    const auto violated = static_cast<std::size_t>(std::count_if(
        cycles.begin(), cycles.end(), [](const CycleClassification& cy) { return cy.violates_parity(); }));
    Score score{plan ? plan->size() : kPlanSize + 1, violated, c.cofaces.size(), c.edge};
    if (!best || score < *best) best = score;
  }
  if (!best) throw std::logic_error("no edge to subdivide");
  return std::get<3>(*best);
}

RepairState split_along(const RepairState& s, const Simplex& e) {
  auto [next, step] = subdivide_edge(s.complex, e);
  SignedDualGraph g = signed_down_dual(next);
  return {std::move(next), std::move(g), std::move(step)};
}

}  // namespace

std::optional<Conflict> find_conflict(const SimplicialComplex& k) {
  const Verdict v = check_disorientable(k);
  if (v.disorientable()) return std::nullopt;
  const auto& ob = v.obstruction();
  const int n = k.dimension();
  return Conflict{k.simplex(n, ob.simplex_a), k.simplex(n, ob.simplex_b), k.simplex(n - 1, ob.shared_face)};
}

std::pair<SimplicialComplex, SplitStep> subdivide_edge(const SimplicialComplex& k, const Simplex& e) {
  if (e.dim() != 1 || !k.contains(e)) {
    throw std::invalid_argument("cannot subdivide " + e.to_string() + ": not an edge of the complex");
  }
  const VertexId a = e[0];
  const VertexId b = e[1];
  const auto m = static_cast<VertexId>(k.vertex_count());

  SplitStep step{e, m, {}};
  std::vector<Simplex> maximal;
  for (const auto& s : k.maximal_simplices()) {
    if (!s.contains(e)) {
      maximal.push_back(s);
      continue;
    }
    if (s.dim() == k.dimension()) step.affected_top_simplices.push_back(s);
    maximal.push_back(s.without(a).with(m));
    maximal.push_back(s.without(b).with(m));
  }
  std::sort(step.affected_top_simplices.begin(), step.affected_top_simplices.end());
  return {SimplicialComplex::from_maximal(maximal), std::move(step)};
}

Simplex choose_split_edge(const SimplicialComplex& k, const Simplex& a, const Simplex& face) {
  if (face.size() + 1 != a.size() || !a.contains(face)) {
    throw std::invalid_argument(face.to_string() + " is not a face of " + a.to_string());
  }
  const VertexId opposite = opposite_vertex(a, face);
  std::optional<Simplex> best;
  std::size_t best_count = 0;
  for (auto y : face) {
    Simplex e{opposite, y};
    std::size_t c = top_cofaces_containing(k, e);
    if (!best || c < best_count || (c == best_count && e < *best)) {
      best = e;
      best_count = c;
    }
  }
  return *best;
}

IterationCapExceeded::IterationCapExceeded(SimplicialComplex partial, SplitLog log)
    : std::runtime_error("iteration cap of " + std::to_string(log.iterations) +
                         " reached before the complex became disorientable"),
      partial_(std::move(partial)),
      log_(std::move(log)) {}

RepairResult make_disorientable(const SimplicialComplex& k, std::optional<std::size_t> max_iterations) {
  if (k.dimension() < 1) throw std::invalid_argument("repair needs dimension >= 1");
  const std::size_t cap = max_iterations.value_or(10 * k.top_count());
  if (cap < 1) throw std::invalid_argument("max_iterations must be at least 1");

  RepairState current{k, signed_down_dual(k), {}};
  SplitLog log;
  while (true) {
    Verdict v = check_disorientable(current.complex, current.graph);
    if (v.disorientable()) {
      return {std::move(current.complex), std::move(log), v.disorientation()};
    }
    if (log.iterations >= cap) throw IterationCapExceeded(std::move(current.complex), std::move(log));

    RepairState next = split_along(current, planned_edge(current));
    ++log.iterations;
    log.total_top_simplices_split += next.step.affected_top_simplices.size();
    log.steps.push_back(next.step);
    current = std::move(next);
  }
}

bool verify_topology_preserved(const SimplicialComplex& before, const SimplicialComplex& after) {
  return betti_numbers(before) == betti_numbers(after);
}

}  // namespace disorient
