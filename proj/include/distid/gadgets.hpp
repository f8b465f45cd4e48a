#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distid/graph.hpp"
#include "distid/problems.hpp"
#include "distid/solver.hpp"
#include "distid/vertex_set.hpp"

namespace distid {

struct GadgetMeta {
  bool bipartite_single_ext = false;  // computed from the constructed extension
  bool planar_twin_ext = false;       // asserted by the construction, not verified
  bool local = false;
};

/// A gadget (H, B, C). Vertices of H carry labels `gadget:H:<name>`.
struct Gadget {
  std::string name;  // CLI form: "1layered", "local0:<r>", "ic:<r>"
  Graph h;
  VertexSet border;
  VertexSet code;
  GadgetMeta meta;
  /// r for local gadgets.
  std::optional<std::uint32_t> locality;
  /// Open twins of H that stay twins in every B-extension.
  std::vector<Edge> twin_pairs;
  /// Non-identity automorphisms of H fixing B setwise; each extends to any
  /// B-extension by fixing the outside vertices.
  std::vector<std::vector<Vertex>> symmetries;

  std::size_t order() const { return h.order(); }
  const std::string& local_name(Vertex v) const { return h.label(v).local_name; }
  /// Throws std::invalid_argument for an unknown name.
  Vertex vertex(std::string_view local_name) const;
};

Gadget gadget_1layered();
/// r >= 1; r = 1 is the special 8-vertex graph.
Gadget gadget_local_0layered(std::uint32_t r);
/// r >= 1.
Gadget gadget_r_ic(std::uint32_t r);
/// "1layered", "local0:<r>" or "ic:<r>".
Gadget parse_gadget(std::string_view text);

/// A B-extension. Vertices 0..|H|-1 are the gadget in its own order.
struct Extension {
  std::string name;
  Graph graph;
};

Graph b_single_extension(const Gadget& gad);
Graph b_twin_extension(const Gadget& gad);
/// H plus `extra` fresh vertices, each B-adjacent or not by a coin flip (at
/// least one is), with seeded edges among them; always connected.
Graph random_b_extension(const Gadget& gad, std::size_t extra, std::uint64_t seed);
/// Whether g is a B-extension of gad.h with H on the first |H| ids.
bool is_b_extension(const Gadget& gad, const Graph& g);

/// {single, twin, random_count random extensions}; the i-th random one has
/// 1 + (i mod max_extra) fresh vertices.
std::vector<Extension> standard_extension_family(const Gadget& gad, std::size_t random_count = 10,
                                                 std::size_t max_extra = 4,
                                                 std::uint64_t seed = 0x9a5e7);

enum class GadgetAxiom : std::uint8_t { Ph, Pb, Pd, Ps, Pl };
enum class Verdict : std::uint8_t { Pass, Fail, Unchecked, NotClaimed };

std::string to_string(GadgetAxiom a);  // "p_h" ...
std::string to_string(Verdict v);      // "pass", "fail", "unchecked", "not-claimed"

struct AxiomCounterexample {
  std::size_t extension = 0;  // index into the family
  std::string extension_name;
  std::vector<Vertex> vertices;  // the offending pair, vertex, or DIS
  std::string detail;
};

struct AxiomVerdict {
  GadgetAxiom axiom = GadgetAxiom::Ph;
  Verdict verdict = Verdict::Pass;
  std::optional<AxiomCounterexample> counterexample;  // present iff Fail
  std::string note;
};

struct AxiomReport {
  std::string gadget;
  std::string problem;
  std::vector<std::string> family;
  std::array<AxiomVerdict, 5> verdicts;
  std::uint64_t nodes = 0;

  const AxiomVerdict& operator[](GadgetAxiom a) const { return verdicts[static_cast<std::size_t>(a)]; }
  /// No Fail and no Unchecked.
  bool all_pass() const;
};

/// Checks p_h, p_b, p_d and p_s on every extension and p_l on (H, B, C).
///
/// p_s is checked twice: over every optimal DIS of the extension, and over
/// all DIS at once by minimising |S ∩ V_H| when every outside vertex is free.
/// A search that runs out of budget leaves p_s Unchecked.
AxiomReport check_gadget(const Gadget& gad, const IdentifyingProblem& p,
                         std::span<const Extension> family, std::uint64_t budget = kDefaultBudget);

}  // namespace distid
