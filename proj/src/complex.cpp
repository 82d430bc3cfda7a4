#include "disorient/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace disorient {

namespace {

void add_closure(const Simplex& s, std::vector<std::set<Simplex>>& levels) {
  const std::size_t n = s.size();
  if (levels.size() < n) levels.resize(n);
  // Every nonempty subset, by bitmask over sorted positions.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(s[i]);
    }
    levels[sub.size() - 1].insert(Simplex(std::move(sub)));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<VertexId>>& maximal) {
  std::vector<Simplex> simplices;
  simplices.reserve(maximal.size());
  for (const auto& list : maximal) simplices.emplace_back(list);
  return from_maximal(simplices);
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
  if (maximal.empty()) throw std::invalid_argument("a complex needs at least one simplex");
  std::vector<std::set<Simplex>> levels;
  for (const auto& s : maximal) {
    if (s.size() == 0) throw std::invalid_argument("empty simplex in input");
    if (s.size() > 20) throw std::invalid_argument("simplex dimension too large: " + s.to_string());
    add_closure(s, levels);
  }

  SimplicialComplex k;
  const std::size_t top = levels.size();
  k.levels_.resize(top);
  k.index_.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    k.levels_[d].assign(levels[d].begin(), levels[d].end());
    for (std::size_t i = 0; i < k.levels_[d].size(); ++i) k.index_[d].emplace(k.levels_[d][i], i);
  }

  for (std::size_t i = 0; i < k.levels_[0].size(); ++i) {
    if (k.levels_[0][i][0] != i) {
      throw std::invalid_argument("vertex ids must be dense in [0, n); missing id " + std::to_string(i));
    }
  }

  k.faces_.resize(top);
  k.cofaces_.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    k.faces_[d].resize(k.levels_[d].size());
    k.cofaces_[d].resize(k.levels_[d].size());
  }
  for (std::size_t d = 1; d < top; ++d) {
    for (std::size_t i = 0; i < k.levels_[d].size(); ++i) {
      for (const auto& f : faces(k.levels_[d][i])) {
        std::size_t fi = k.index_[d - 1].at(f);
        k.faces_[d][i].push_back(fi);
        k.cofaces_[d - 1][fi].push_back(i);
      }
    }
  }
  // Columns are visited in ascending order, so coface lists are already sorted.
  return k;
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return levels_[static_cast<std::size_t>(d)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  if (d < 0 || d > dimension()) {
    throw std::out_of_range("dimension " + std::to_string(d) + " outside [0, " +
                            std::to_string(dimension()) + "]");
  }
  return levels_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  int d = s.dim();
  if (d < 0 || d > dimension()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::require_index(const Simplex& s) const {
  auto i = index_of(s);
  if (!i) throw std::out_of_range("simplex " + s.to_string() + " is not in the complex");
  return *i;
}

std::span<const std::size_t> SimplicialComplex::face_indices(int d, std::size_t i) const {
  simplices(d);
  return faces_[static_cast<std::size_t>(d)].at(i);
}

std::span<const std::size_t> SimplicialComplex::coface_indices(int d, std::size_t i) const {
  simplices(d);
  return cofaces_[static_cast<std::size_t>(d)].at(i);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (std::size_t i = 0; i < count(d); ++i) {
      if (cofaces_[d][i].empty()) out.push_back(levels_[d][i]);
    }
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::lower_dimensional_maximal() const {
  std::vector<Simplex> out;
  for (auto& s : maximal_simplices()) {
    if (s.dim() < dimension()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Simplex> cofaces(const SimplicialComplex& k, const Simplex& s) {
  std::size_t i = k.require_index(s);
  std::vector<Simplex> out;
  for (auto c : k.coface_indices(s.dim(), i)) out.push_back(k.simplex(s.dim() + 1, c));
  return out;
}

std::size_t BranchingReport::branching_count() const {
  return static_cast<std::size_t>(
      std::count_if(faces.begin(), faces.end(), [](const FaceDegree& f) { return f.branching; }));
}

BranchingReport branching_report(const SimplicialComplex& k) {
  BranchingReport report;
  const int n = k.dimension();
  if (n < 1) return report;
  report.face_dimension = n - 1;
  for (std::size_t i = 0; i < k.count(n - 1); ++i) {
    std::size_t deg = k.degree(n - 1, i);
    report.faces.push_back({i, deg, deg > 2});
  }
  return report;
}

}  // namespace disorient
