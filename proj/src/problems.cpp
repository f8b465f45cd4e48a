#include "distid/problems.hpp"

#include <stdexcept>

namespace distid {

std::string Trait::to_string() const {
  switch (cls) {
    case TraitClass::Distance: return "distance";
    case TraitClass::Local: return "local:" + index.to_string();
    case TraitClass::Layered: return "layered:" + index.to_string();
  }
  return "distance";
}

std::string AxiomQuery::to_string() const {
  switch (axiom) {
    case Axiom::Alpha: return "alpha";
    case Axiom::Beta1: return "beta1:" + index.to_string();
    case Axiom::Beta2: return "beta2:" + index.to_string();
    case Axiom::Gamma: return "gamma:" + index.to_string();
  }
  return "alpha";
}

AxiomQuery AxiomQuery::parse(std::string_view text) {
  if (text == "alpha") return {Axiom::Alpha, Radius::finite(0)};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("bad axiom '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const Radius index = Radius::parse(text.substr(colon + 1));
  if (head == "beta1") return {Axiom::Beta1, index};
  if (head == "beta2") return {Axiom::Beta2, index};
  if (head == "gamma") return {Axiom::Gamma, index};
  throw std::invalid_argument("bad axiom '" + std::string(text) + "'");
}

std::vector<AxiomQuery> axioms_of(const Trait& trait) {
  switch (trait.cls) {
    case TraitClass::Distance: return {{Axiom::Alpha, Radius::finite(0)}};
    case TraitClass::Local: return {{Axiom::Beta1, trait.index}, {Axiom::Beta2, trait.index}};
    case TraitClass::Layered: return {{Axiom::Gamma, trait.index}};
  }
  return {};
}

IdentifyingProblem IdentifyingProblem::custom(std::string name, Radius radius,
                                              Predicate predicate, std::vector<Trait> claimed) {
  if (!predicate) throw std::invalid_argument("custom problem needs a predicate");
  return IdentifyingProblem(std::move(name), ProblemFamily::Custom, radius, std::move(predicate),
                            std::move(claimed));
}

bool IdentifyingProblem::claims_distance() const {
  for (const auto& t : claimed_)
    if (t.cls == TraitClass::Distance) return true;
  return false;
}

bool IdentifyingProblem::claims_local(Radius i) const {
  for (const auto& t : claimed_)
    if (t.cls == TraitClass::Local && t.index == i) return true;
  return false;
}

bool IdentifyingProblem::claims_layered(Radius i) const {
  for (const auto& t : claimed_)
    if (t.cls == TraitClass::Layered && t.index >= i) return true;
  return false;
}

namespace {

void require_finite_positive(Radius r, const char* what) {
  if (r.is_infinite() || r.value() < 1)
    throw std::invalid_argument(std::string(what) + " needs a finite radius >= 1, got " +
                                r.to_string());
}

}  // namespace

IdentifyingProblem make_r_ic(Radius r) {
  require_finite_positive(r, "ic");
  return IdentifyingProblem("ic:" + r.to_string(), ProblemFamily::IdentifyingCode, r, {},
                            {{TraitClass::Distance, Radius::finite(0)}, {TraitClass::Local, r}});
}

IdentifyingProblem make_r_ld(Radius r) {
  require_finite_positive(r, "ld");
  const Radius layer = r.value() == 1 ? Radius::finite(1) : Radius::finite(0);
  return IdentifyingProblem("ld:" + r.to_string(), ProblemFamily::LocatingDominating, r, {},
                            {{TraitClass::Distance, Radius::finite(0)},
                             {TraitClass::Local, r},
                             {TraitClass::Layered, layer}});
}

IdentifyingProblem make_r_md(Radius r) {
  if (r.is_finite() && r.value() < 1)
    throw std::invalid_argument("md needs a radius >= 1 or inf, got " + r.to_string());
  return IdentifyingProblem("md:" + r.to_string(), ProblemFamily::Resolving, r, {},
                            {{TraitClass::Distance, Radius::finite(0)},
                             {TraitClass::Local, r},
                             {TraitClass::Layered, r}});
}

IdentifyingProblem parse_problem(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("bad problem '" + std::string(text) +
                                "', expected ic:<r>, ld:<r>, md:<r> or md:inf");
  const std::string_view head = text.substr(0, colon);
  const Radius r = Radius::parse(text.substr(colon + 1));
  if (head == "ic") return make_r_ic(r);
  if (head == "ld") return make_r_ld(r);
  if (head == "md") return make_r_md(r);
  throw std::invalid_argument("unknown problem family '" + std::string(head) + "'");
}

namespace {

/// Whether the triple violates the axiom. u < v.
bool violates(const IdentifyingProblem& p, AxiomQuery q, const DistanceMatrix& dm, Vertex w,
              Vertex u, Vertex v) {
  const Distance du = dm(u, w);
  const Distance dv = dm(v, w);
  const bool inside_u = q.index.covers(du);
  const bool inside_v = q.index.covers(dv);
  switch (q.axiom) {
    case Axiom::Alpha: return du == dv && p.distinguishes(dm, w, u, v);
    case Axiom::Beta1: return inside_u != inside_v && !p.distinguishes(dm, w, u, v);
    case Axiom::Beta2: return !inside_u && !inside_v && p.distinguishes(dm, w, u, v);
    case Axiom::Gamma:
      return (inside_u || inside_v) && du != dv && !p.distinguishes(dm, w, u, v);
  }
  return false;
}

}  // namespace

TraitReport check_trait(const IdentifyingProblem& p, AxiomQuery axiom,
                        std::span<const Graph> corpus) {
  TraitReport report{axiom, true, std::nullopt};
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    const DistanceMatrix dm(g);
    for (Vertex w = 0; w < g.order(); ++w)
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
          if (violates(p, axiom, dm, w, u, v)) {
            report.holds = false;
            report.counterexample = Counterexample{gi, g, w, u, v};
            return report;
          }
  }
  return report;
}

std::optional<TraitReport> verify_claims(const IdentifyingProblem& p,
                                         std::span<const Graph> corpus) {
  for (const auto& trait : p.claimed_traits())
    for (const auto& q : axioms_of(trait)) {
      TraitReport r = check_trait(p, q, corpus);
      if (!r.holds) return r;
    }
  return std::nullopt;
}

}  // namespace distid
