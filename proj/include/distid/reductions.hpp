#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distid/gadgets.hpp"
#include "distid/graph.hpp"
#include "distid/instances.hpp"
#include "distid/problems.hpp"
#include "distid/vertex_set.hpp"

namespace distid {

enum class ReductionKind : std::uint8_t { DistanceId, Apex, Compressed };

/// "distance-id", "apex", "compressed"
std::string to_string(ReductionKind k);
ReductionKind parse_reduction_kind(std::string_view text);

/// 1 + floor(log2 x), for x >= 1.
std::size_t bit_length(std::size_t x);

/// Whether the k-th bit (1 = most significant) of x written on `width`
/// bits is set.
bool bit_set(std::size_t x, std::size_t k, std::size_t width);

/// Bipartite incidence graph: v^Ω_i is vertex i-1, v^S_j is vertex n+j-1.
Graph build_associated_graph(const HittingSetInstance& inst);

struct ReductionArtifact {
  Graph graph;
  ReductionKind kind = ReductionKind::DistanceId;
  std::uint32_t r = 1;
  Gadget gadget;
  HittingSetInstance instance;
  std::size_t copies = 0;
  std::size_t offset = 0;  // |C| * copies
  /// False for n = 1, where lift and extract are not claimed to match optima.
  bool equivalence_tested = true;

  /// Vertex ids per gadget copy, in the gadget's own vertex order.
  std::vector<std::vector<Vertex>> copy_vertices;
  std::vector<std::string> copy_tags;  // "O<i>" / "S<j>"
  std::vector<Vertex> element_vertex;  // v^Ω_i at index i-1
  std::vector<Vertex> set_vertex;      // v^S_j at index j-1
  std::vector<Vertex> set_twin_vertex;
  /// L_i at index i-1: v^Ω_i and the path vertices hanging off it.
  std::vector<std::vector<Vertex>> element_locus;
  std::vector<Vertex> apex;  // the apex of Φ*, or the path a^0..a^{r-1} of Ψ
};

/// |V| bound of the construction for the artifact's parameters.
std::size_t vertex_bound(const ReductionArtifact& art);

/// Φ[H,B,r]: per-membership paths of r-1 vertices. Requires r >= 1.
ReductionArtifact build_distance_id_graph(const Gadget& gad, std::uint32_t r,
                                          const HittingSetInstance& inst);
/// Φ*[H,B]: Φ[H,B,1] plus an apex.
ReductionArtifact build_apex_graph(const Gadget& gad, const HittingSetInstance& inst);
/// Ψ[H,B,r]: copies shared through the binary representation of indices.
ReductionArtifact build_compressed_graph(const Gadget& gad, std::uint32_t r,
                                         const HittingSetInstance& inst);
/// Dispatch on kind; r is ignored for Apex.
ReductionArtifact build_reduction(ReductionKind kind, const Gadget& gad, std::uint32_t r,
                                  const HittingSetInstance& inst);

/// Throws std::invalid_argument unless the problem's claimed traits suit the
/// artifact: 1-layered for Apex and Compressed(1); r-local with radius r and
/// a local gadget for DistanceId(r) and Compressed(r).
void require_compatible(const ReductionArtifact& art, const IdentifyingProblem& p);

/// I = {v^Ω_i : i in hs} ∪ every copy of C. Throws std::invalid_argument
/// unless hs hits every set.
VertexSet lift_hitting_set(const ReductionArtifact& art,
                           std::span<const HittingSetInstance::Element> hs);

/// P = {i : I meets L_i} ∪ {min S_j : v^S_j or v̄^S_j in I}, sorted.
/// Throws std::invalid_argument when p does not suit the artifact or dis is
/// not a DIS of the artifact graph.
std::vector<HittingSetInstance::Element> extract_hitting_set(const ReductionArtifact& art,
                                                             const IdentifyingProblem& p,
                                                             const VertexSet& dis);

/// Elements 2x-1 (u_x) and 2x (ū_x) per variable; sets {u_x, ū_x} for
/// x = 1..vars, then one set per clause. Throws on an empty clause or a
/// literal outside 1..num_vars.
HittingSetInstance sat_to_hitting_set(const Cnf& cnf);

}  // namespace distid
