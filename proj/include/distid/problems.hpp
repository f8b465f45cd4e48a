#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distid/distance.hpp"
#include "distid/graph.hpp"

namespace distid {

/// Distinguishing predicate f_G[w](u, v). Receives u < v.
using Predicate = std::function<bool(const DistanceMatrix&, Vertex w, Vertex u, Vertex v)>;

enum class ProblemFamily { IdentifyingCode, LocatingDominating, Resolving, Custom };

/// Properties a problem claims for its distinguishing predicate.
/// Local(i) bundles beta1(i) and beta2(i); Layered(i) is gamma(i).
enum class TraitClass { Distance, Local, Layered };

struct Trait {
  TraitClass cls = TraitClass::Distance;
  Radius index = Radius::finite(0);

  std::string to_string() const;
  friend bool operator==(const Trait&, const Trait&) = default;
};

/// The individual quantified statements a predicate may satisfy:
///   alpha     f false whenever d(u,w) = d(v,w)
///   beta1(i)  f true whenever exactly one of u, v lies within i of w
///   beta2(i)  f false whenever both lie beyond i
///   gamma(i)  f true whenever the nearer one is within i and distances differ
enum class Axiom { Alpha, Beta1, Beta2, Gamma };

struct AxiomQuery {
  Axiom axiom = Axiom::Alpha;
  Radius index = Radius::finite(0);

  /// "alpha", "beta1:2", "gamma:inf"
  std::string to_string() const;
  static AxiomQuery parse(std::string_view text);
  friend bool operator==(const AxiomQuery&, const AxiomQuery&) = default;
};

std::vector<AxiomQuery> axioms_of(const Trait& trait);

/// A distance identifying problem: radius of domination plus predicate.
class IdentifyingProblem {
 public:
  /// User-supplied predicate. Claimed traits are not trusted until checked.
  static IdentifyingProblem custom(std::string name, Radius radius, Predicate predicate,
                                   std::vector<Trait> claimed);

  const std::string& name() const { return name_; }
  Radius radius() const { return radius_; }
  ProblemFamily family() const { return family_; }
  const std::vector<Trait>& claimed_traits() const { return claimed_; }

  /// Claims Local(i) exactly.
  bool claims_local(Radius i) const;
  bool claims_distance() const;
  /// Claims Layered(j) for some j >= i.
  bool claims_layered(Radius i) const;

  /// f[w](u, v), evaluated through the unordered pair.
  bool distinguishes(const DistanceMatrix& dm, Vertex w, Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const Distance du = dm(u, w);
    const Distance dv = dm(v, w);
    switch (family_) {
      case ProblemFamily::IdentifyingCode:
        return radius_.covers(du) != radius_.covers(dv);
      case ProblemFamily::LocatingDominating:
        return w == u || w == v || radius_.covers(du) != radius_.covers(dv);
      case ProblemFamily::Resolving:
        return (radius_.covers(du) || radius_.covers(dv)) && du != dv;
      case ProblemFamily::Custom:
        return predicate_(dm, w, u, v);
    }
    return false;
  }

 private:
  friend IdentifyingProblem make_r_ic(Radius r);
  friend IdentifyingProblem make_r_ld(Radius r);
  friend IdentifyingProblem make_r_md(Radius r);

  IdentifyingProblem(std::string name, ProblemFamily family, Radius radius, Predicate predicate,
                     std::vector<Trait> claimed)
      : name_(std::move(name)),
        family_(family),
        radius_(radius),
        predicate_(std::move(predicate)),
        claimed_(std::move(claimed)) {}

  std::string name_;
  ProblemFamily family_;
  Radius radius_;
  Predicate predicate_;
  std::vector<Trait> claimed_;
};

/// r-identifying codes: w in N_r[u] Δ N_r[v]. Finite r >= 1 only.
IdentifyingProblem make_r_ic(Radius r);
/// r-locating-dominating sets: w in (N_r[u] Δ N_r[v]) ∪ {u, v}. Finite r >= 1 only.
IdentifyingProblem make_r_ld(Radius r);
/// r-resolving sets: w in N_r[u] ∪ N_r[v] and d(u,w) != d(v,w). r may be infinite.
IdentifyingProblem make_r_md(Radius r);

/// "ic:<r>", "ld:<r>", "md:<r>", "md:inf".
IdentifyingProblem parse_problem(std::string_view text);

struct Counterexample {
  std::size_t graph_index = 0;
  Graph graph;
  Vertex w = 0;
  Vertex u = 0;
  Vertex v = 0;
};

struct TraitReport {
  AxiomQuery axiom;
  bool holds = true;
  std::optional<Counterexample> counterexample;  // present iff !holds
};

/// Exhaustively tests the axiom over every (w, {u, v}) triple of every
/// corpus graph. Returns the first counterexample in corpus order.
TraitReport check_trait(const IdentifyingProblem& p, AxiomQuery axiom,
                        std::span<const Graph> corpus);

/// Checks every axiom implied by the problem's claimed traits; returns the
/// first failing report, or nullopt when all claims survive.
std::optional<TraitReport> verify_claims(const IdentifyingProblem& p,
                                         std::span<const Graph> corpus);

}  // namespace distid
