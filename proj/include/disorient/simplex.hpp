#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace disorient {

using VertexId = std::uint32_t;

/// A relative orientation, +1 or -1. Multiplies like a group element.
class Sign {
public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  /// Throws std::invalid_argument unless value is +1 or -1.
  static Sign from_int(int value);

  constexpr int value() const { return value_; }
  constexpr bool positive() const { return value_ > 0; }

  constexpr Sign operator-() const { return Sign(-value_); }
  constexpr Sign operator*(Sign other) const { return Sign(value_ * other.value_); }
  constexpr Sign& operator*=(Sign other) {
    value_ *= other.value_;
    return *this;
  }
  constexpr bool operator==(const Sign&) const = default;

private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_ = 1;
};

/// A set of vertices stored in strictly increasing order.
class Simplex {
public:
  Simplex() = default;
  /// Sorts the input. Throws std::invalid_argument on an empty list or on
  /// repeated vertex ids.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(VertexId v) const;
  bool contains(const Simplex& other) const;
  /// Sorted position of v, or -1.
  int position_of(VertexId v) const;

  /// Copy with the vertex at sorted position j removed.
  Simplex without_position(std::size_t j) const;
  Simplex without(VertexId v) const;
  Simplex with(VertexId v) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

  std::string to_string() const;

private:
  struct Trusted {};
  Simplex(std::vector<VertexId> sorted, Trusted) : vertices_(std::move(sorted)) {}

  std::vector<VertexId> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// A simplex with an orientation relative to its sorted vertex order.
struct OrientedSimplex {
  Simplex simplex;
  Sign sign = Sign::plus();

  /// Builds the oriented simplex represented by an explicit vertex ordering.
  static OrientedSimplex from_ordering(std::span<const VertexId> ordering);

  /// Vertices have a single orientation, so 0-simplices are always +1.
  OrientedSimplex canonical() const;
  OrientedSimplex operator-() const { return {simplex, -sign}; }
  bool operator==(const OrientedSimplex&) const = default;
};

/// +1 if the ordering is an even permutation of its sorted order, -1 if odd.
/// Throws std::invalid_argument on duplicates.
Sign permutation_sign(std::span<const VertexId> ordering);

/// The d+1 codimension-one faces, in omitted-index order.
/// Throws std::invalid_argument for a 0-simplex.
std::vector<Simplex> faces(const Simplex& s);

/// Orientation that an oriented simplex induces on one of its faces:
/// the face omitting sorted position j carries sign (-1)^j times the parent.
OrientedSimplex induced_orientation(const OrientedSimplex& os, const Simplex& face);

/// (-1)^j for the face obtained by omitting the vertex at sorted position j.
inline Sign omitted_position_sign(std::size_t j) {
  return (j % 2 == 0) ? Sign::plus() : Sign::minus();
}

}  // namespace disorient

template <>
struct std::hash<disorient::Simplex> {
  std::size_t operator()(const disorient::Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
