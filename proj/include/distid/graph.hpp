#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distid/vertex_set.hpp"

namespace distid {

/// Role of a vertex inside a constructed graph.
///
/// Reduction builders attach one label per vertex. Indices follow the
/// conventions of the constructions: elements and sets are 1-based, path
/// positions count from the element side.
struct RoleLabel {
  enum class Kind : std::uint8_t {
    Plain,
    GadgetVertex,    // copy_tag, local_name
    ElementVertex,   // i
    SetVertex,       // j
    SetTwinVertex,   // j
    PathVertex,      // i, j, k   (j == 0 for the shared per-element path)
    ApexVertex,
    ApexPathVertex,  // k
  };

  Kind kind = Kind::Plain;
  std::string copy_tag;
  std::string local_name;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  static RoleLabel plain() { return {}; }
  static RoleLabel gadget(std::string copy_tag, std::string local_name);
  static RoleLabel element(std::uint32_t i);
  static RoleLabel set(std::uint32_t j);
  static RoleLabel set_twin(std::uint32_t j);
  static RoleLabel path(std::uint32_t i, std::uint32_t j, std::uint32_t k);
  static RoleLabel apex();
  static RoleLabel apex_path(std::uint32_t k);

  /// Whitespace-free text form, e.g. `gadget:O3:u1`, `path:2:1:1`, `apex`.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed input.
  static RoleLabel parse(std::string_view text);

  friend bool operator==(const RoleLabel&, const RoleLabel&) = default;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..order()-1.
class Graph {
 public:
  Graph() = default;

  /// Validates simplicity: no loops, no duplicate edges, endpoints in range.
  /// When labels are given there must be exactly one per vertex.
  Graph(std::size_t order, std::vector<Edge> edges,
        std::optional<std::vector<RoleLabel>> labels = std::nullopt);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges with first < second, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  VertexSet open_neighborhood(Vertex v) const;

  bool has_labels() const { return labels_.has_value(); }
  const RoleLabel& label(Vertex v) const { return (*labels_)[v]; }
  const std::optional<std::vector<RoleLabel>>& labels() const { return labels_; }

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  /// The second component maps new ids to old ids.
  std::pair<Graph, std::vector<Vertex>> induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::optional<std::vector<RoleLabel>> labels_;
};

/// Incremental construction of a labeled Graph.
class GraphBuilder {
 public:
  Vertex add_vertex(RoleLabel label = RoleLabel::plain());
  void add_edge(Vertex u, Vertex v);
  std::size_t order() const { return labels_.size(); }
  Graph build() const;

 private:
  std::vector<RoleLabel> labels_;
  std::vector<Edge> edges_;
};

/// Pairs u < v with N(u) = N(v).
std::vector<Edge> open_twin_pairs(const Graph& g);

}  // namespace distid
