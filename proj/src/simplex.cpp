#include "disorient/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace disorient {

Sign Sign::from_int(int value) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(value));
  }
  return Sign(value);
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw std::invalid_argument("a simplex needs at least one vertex");
  }
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("duplicate vertex id in simplex");
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

int Simplex::position_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

Simplex Simplex::without_position(std::size_t j) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != j) out.push_back(vertices_[i]);
  }
  if (out.empty()) throw std::invalid_argument("cannot remove the only vertex of a simplex");
  return Simplex(std::move(out), Trusted{});
}

Simplex Simplex::without(VertexId v) const {
  int j = position_of(v);
  if (j < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " not in " + to_string());
  return without_position(static_cast<std::size_t>(j));
}

Simplex Simplex::with(VertexId v) const {
  if (contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " already in " + to_string());
  std::vector<VertexId> out(vertices_);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return Simplex(std::move(out), Trusted{});
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << ']';
}

Sign permutation_sign(std::span<const VertexId> ordering) {
  // Parity via cycle decomposition of the sorting permutation.
  const std::size_t n = ordering.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ordering[a] < ordering[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (ordering[idx[i]] == ordering[idx[i - 1]]) {
      throw std::invalid_argument("ordering contains a duplicate vertex");
    }
  }
  std::vector<bool> seen(n, false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = idx[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Sign::plus() : Sign::minus();
}

OrientedSimplex OrientedSimplex::from_ordering(std::span<const VertexId> ordering) {
  Sign sign = permutation_sign(ordering);
  OrientedSimplex os{Simplex(std::vector<VertexId>(ordering.begin(), ordering.end())), sign};
  return os.canonical();
}

OrientedSimplex OrientedSimplex::canonical() const {
  if (simplex.dim() == 0) return {simplex, Sign::plus()};
  return *this;
}

std::vector<Simplex> faces(const Simplex& s) {
  if (s.dim() < 1) throw std::invalid_argument("a 0-simplex has no faces");
  std::vector<Simplex> out;
  out.reserve(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) out.push_back(s.without_position(j));
  return out;
}

OrientedSimplex induced_orientation(const OrientedSimplex& os, const Simplex& face) {
  const Simplex& s = os.simplex;
  if (face.size() + 1 != s.size() || !s.contains(face)) {
    throw std::invalid_argument(face.to_string() + " is not a face of " + s.to_string());
  }
  std::size_t j = 0;
  while (j < face.size() && face[j] == s[j]) ++j;
  // Vertices keep the raw (-1)^j sign; B_1 and graph head/tail need it.
  return {face, os.sign * omitted_position_sign(j)};
}

}  // namespace disorient
