#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distid/distance.hpp"
#include "distid/graph.hpp"
#include "distid/instances.hpp"
#include "distid/problems.hpp"
#include "distid/vertex_set.hpp"

namespace distid {

/// Where a hitting constraint came from.
struct ConstraintTag {
  enum class Kind : std::uint8_t { Dominate, Distinguish, Cover };
  Kind kind = Kind::Dominate;
  Vertex u = 0;  // dominated vertex, first vertex of the pair, or 1-based set index
  Vertex v = 0;  // second vertex of the pair

  /// "dominate(3)", "distinguish(1,4)", "cover(2)"
  std::string to_string() const;
  friend bool operator==(const ConstraintTag&, const ConstraintTag&) = default;
};

struct Constraint {
  ConstraintTag tag;
  VertexSet members;
};

/// A set C is a solution iff it intersects every constraint's members.
struct ConstraintFamily {
  std::size_t ground_size = 0;
  std::vector<Constraint> constraints;
};

/// One Dominate(v) constraint per vertex (members N_r[v]) and one
/// Distinguish(u, v) constraint per unordered pair (members: every w with
/// f[w](u, v)), in that order. A DIS is exactly a hitting set of the family.
ConstraintFamily build_constraints(const DistanceMatrix& dm, const IdentifyingProblem& p);
ConstraintFamily build_constraints(const Graph& g, const IdentifyingProblem& p);

struct DisViolation {
  enum class Kind : std::uint8_t { Undominated, Undistinguished };
  Kind kind = Kind::Undominated;
  Vertex u = 0;
  Vertex v = 0;

  std::string to_string() const;
};

struct DisCheck {
  bool valid = true;
  std::optional<DisViolation> violation;  // first violation, present iff !valid
  explicit operator bool() const { return valid; }
};

/// Whether c is an (f, r)-distance identifying set: c r-dominates every
/// vertex and f-distinguishes every unordered pair of distinct vertices.
DisCheck is_dis(const DistanceMatrix& dm, const IdentifyingProblem& p, const VertexSet& c);
DisCheck is_dis(const Graph& g, const IdentifyingProblem& p, const VertexSet& c);

enum class SolveStatus : std::uint8_t { Optimal, Infeasible, Aborted };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  /// Optimum for Optimal; size of the best solution found for Aborted.
  std::size_t k = 0;
  /// Lexicographically smallest optimum, or the incumbent when Aborted.
  VertexSet witness;
  /// Aborted runs may end without any solution at hand.
  bool has_witness = false;
  /// Infeasible: the first constraint with no members.
  std::optional<ConstraintTag> empty_constraint;
  std::uint64_t nodes = 0;
};

std::string to_string(SolveStatus s);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Exact minimum hitting set of the family by branch and bound.
///
/// Constraints are deduplicated and supersets discarded; the search
/// branches on an unhit constraint with fewest available members, forces
/// single-member constraints, and prunes with a greedy upper bound and a
/// disjoint-packing lower bound. The witness is the lexicographically
/// smallest optimum. `budget` caps node expansions.
SolveResult solve_family(const ConstraintFamily& family, std::uint64_t budget = kDefaultBudget);

struct Enumeration {
  bool complete = true;
  std::vector<VertexSet> sets;  // lexicographic order
  std::uint64_t nodes = 0;
};

/// Every hitting set of size exactly k, assuming k is the optimum of the
/// family (each optimum is then enumerated exactly once).
Enumeration enumerate_optimal(const ConstraintFamily& family, std::size_t k,
                              std::uint64_t budget = kDefaultBudget);

/// Greedy cover followed by reverse deletion; nullopt when some constraint
/// is empty.
std::optional<VertexSet> greedy_hitting_set(const ConstraintFamily& family);

/// Minimum (f, r)-distance identifying set.
SolveResult min_dis(const Graph& g, const IdentifyingProblem& p,
                    std::uint64_t budget = kDefaultBudget);

/// Greedy (f, r)-distance identifying set; nullopt when none exists.
std::optional<VertexSet> greedy_dis(const Graph& g, const IdentifyingProblem& p);

/// Constraint family of a Hitting Set instance over ground set {0..n-1};
/// ground element e-1 stands for instance element e.
ConstraintFamily hitting_set_constraints(const HittingSetInstance& inst);

/// Minimum hitting set; witness bit e-1 stands for element e.
SolveResult min_hitting_set(const HittingSetInstance& inst,
                            std::uint64_t budget = kDefaultBudget);

/// 1-based elements of a hitting-set witness.
std::vector<HittingSetInstance::Element> witness_elements(const VertexSet& witness);

}  // namespace distid
