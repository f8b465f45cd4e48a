#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distid/graph.hpp"

namespace distid {

/// Edge-count distance. Neighbors are at distance 1.
using Distance = std::uint32_t;

/// Distance between vertices of different components. Never covered by any
/// radius, including the infinite one.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// A radius in {0, 1, 2, ...} or infinity.
class Radius {
 public:
  static constexpr Radius finite(std::uint32_t r) { return Radius(r); }
  static constexpr Radius infinite() { return Radius(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return !is_infinite(); }
  /// Precondition: is_finite().
  constexpr std::uint32_t value() const { return value_; }

  /// True iff d <= r. Unreachable distances are never covered.
  constexpr bool covers(Distance d) const {
    return d != kUnreachable && (is_infinite() || d <= value_);
  }

  /// "inf" or the decimal value.
  std::string to_string() const;
  /// Accepts "inf", "infinity", "∞" or a non-negative integer.
  static Radius parse(std::string_view text);

  constexpr auto operator<=>(const Radius&) const = default;

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit Radius(std::uint32_t v) : value_(v) {}
  std::uint32_t value_;
};

/// All-pairs shortest-path distances of an unweighted graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

/// N_r[v] = {w : d(v,w) <= r}; the component of v when r is infinite.
VertexSet closed_ball(const DistanceMatrix& dm, Vertex v, Radius r);

/// Component id per vertex, numbered by smallest member.
std::vector<std::uint32_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS 2-coloring; nullopt when the graph has an odd cycle.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// d(v, X) = min over x in X of d(v, x).
Distance distance_to_set(const DistanceMatrix& dm, Vertex v, const VertexSet& x);

}  // namespace distid
