#include <stdexcept>

#include "distid/corpus.hpp"
#include "distid/problems.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace distid;

namespace {

const Radius R1 = Radius::finite(1);
const Radius R2 = Radius::finite(2);
const Radius Inf = Radius::infinite();

}  // namespace

TEST_CASE("r-IC predicate") {
  const DistanceMatrix p3(path_graph(3));
  // a in N_1[b] \ N_1[c]
  CHECK(make_r_ic(R1).distinguishes(p3, 0, 1, 2));
  const DistanceMatrix k2(path_graph(2));
  CHECK_FALSE(make_r_ic(R1).distinguishes(k2, 0, 0, 1));

  const Graph p4 = path_graph(4);
  const auto d = oracle::distances(p4);
  const bool expected = oracle::separates(oracle::Family::IC, 2, d, 0, 1, 2);
  CHECK_FALSE(expected);
  CHECK(make_r_ic(R2).distinguishes(DistanceMatrix(p4), 0, 1, 2) == expected);

  CHECK_THROWS_AS(make_r_ic(Inf), std::invalid_argument);
  CHECK_THROWS_AS(make_r_ic(Radius::finite(0)), std::invalid_argument);
}

TEST_CASE("r-LD predicate") {
  const DistanceMatrix p5(path_graph(5));
  for (Vertex v = 1; v < 5; ++v) CHECK(make_r_ld(R2).distinguishes(p5, 0, 0, v));
  const DistanceMatrix k2(path_graph(2));
  CHECK(make_r_ld(R1).distinguishes(k2, 0, 0, 1));

  const Graph p4 = path_graph(4);
  const bool expected = oracle::separates(oracle::Family::LD, 1, oracle::distances(p4), 0, 2, 3);
  CHECK_FALSE(expected);
  CHECK(make_r_ld(R1).distinguishes(DistanceMatrix(p4), 0, 2, 3) == expected);
  CHECK_THROWS_AS(make_r_ld(Inf), std::invalid_argument);
}

TEST_CASE("r-MD predicate") {
  const DistanceMatrix p3(path_graph(3));
  CHECK(make_r_md(Inf).distinguishes(p3, 0, 1, 2));
  CHECK_FALSE(make_r_md(Inf).distinguishes(p3, 1, 0, 2));  // equidistant

  const Graph p5 = path_graph(5);
  const bool expected = oracle::separates(oracle::Family::MD, 1, oracle::distances(p5), 0, 3, 4);
  CHECK_FALSE(expected);
  CHECK(make_r_md(R1).distinguishes(DistanceMatrix(p5), 0, 3, 4) == expected);

  // Across components the infinite radius still separates.
  const DistanceMatrix split(disjoint_union(path_graph(2), path_graph(1)));
  CHECK(make_r_md(Inf).distinguishes(split, 0, 1, 2));
}

TEST_CASE("built-in predicates match the brute-force criteria") {
  for (const auto& g : enumerate_small_graphs(7, 5, 120)) {
    const DistanceMatrix dm(g);
    const auto d = oracle::distances(g);
    for (int r : {1, 2, 3}) {
      const auto rr = Radius::finite(static_cast<std::uint32_t>(r));
      const auto ic = make_r_ic(rr);
      const auto ld = make_r_ld(rr);
      const auto md = make_r_md(rr);
      for (Vertex w = 0; w < g.order(); ++w)
        for (Vertex u = 0; u < g.order(); ++u)
          for (Vertex v = u + 1; v < g.order(); ++v) {
            const int W = static_cast<int>(w), U = static_cast<int>(u), V = static_cast<int>(v);
            CHECK(ic.distinguishes(dm, w, u, v) == oracle::separates(oracle::Family::IC, r, d, W, U, V));
            CHECK(ld.distinguishes(dm, w, u, v) == oracle::separates(oracle::Family::LD, r, d, W, U, V));
            CHECK(md.distinguishes(dm, w, u, v) == oracle::separates(oracle::Family::MD, r, d, W, U, V));
          }
    }
  }
}

TEST_CASE("parse_problem") {
  CHECK(parse_problem("ic:2").name() == "ic:2");
  CHECK(parse_problem("md:inf").radius().is_infinite());
  CHECK(parse_problem("ld:1").family() == ProblemFamily::LocatingDominating);
  CHECK_THROWS(parse_problem("ic:inf"));
  CHECK_THROWS(parse_problem("xx:1"));
  CHECK_THROWS(parse_problem("md"));
  CHECK_THROWS(parse_problem("md:0"));
}

TEST_CASE("claimed traits of the built-in problems") {
  CHECK(make_r_ic(R2).claims_local(R2));
  CHECK_FALSE(make_r_ic(R2).claims_layered(Radius::finite(0)));
  CHECK(make_r_ld(R1).claims_layered(R1));
  CHECK_FALSE(make_r_ld(R2).claims_layered(R1));
  CHECK(make_r_ld(R2).claims_layered(Radius::finite(0)));
  CHECK(make_r_md(R2).claims_layered(R1));
  CHECK(make_r_md(Inf).claims_layered(R1));
  CHECK(make_r_md(Inf).claims_local(Inf));
}

TEST_CASE("check_trait examples") {
  const auto corpus6 = enumerate_small_graphs(6, 21, 120);
  CHECK(check_trait(make_r_md(Inf), {Axiom::Alpha, Radius::finite(0)}, corpus6).holds);
  CHECK(check_trait(make_r_ld(R1), {Axiom::Gamma, R1}, corpus6).holds);

  const TraitReport ic = check_trait(make_r_ic(R1), {Axiom::Gamma, R1}, corpus6);
  CHECK_FALSE(ic.holds);
  REQUIRE(ic.counterexample);
  const auto& cx = *ic.counterexample;
  const DistanceMatrix dm(cx.graph);
  // The witness is nearer than 1 to one of the pair, at different distances, yet silent.
  CHECK(dm(cx.u, cx.w) != dm(cx.v, cx.w));
  CHECK(std::min(dm(cx.u, cx.w), dm(cx.v, cx.w)) <= 1);
  CHECK_FALSE(make_r_ic(R1).distinguishes(dm, cx.w, cx.u, cx.v));
}

TEST_CASE("axiom text form") {
  for (const auto& q : {AxiomQuery{Axiom::Alpha, Radius::finite(0)}, AxiomQuery{Axiom::Beta1, R2},
                        AxiomQuery{Axiom::Beta2, Inf}, AxiomQuery{Axiom::Gamma, R1}})
    CHECK(AxiomQuery::parse(q.to_string()) == q);
  CHECK_THROWS(AxiomQuery::parse("delta:1"));
}

TEST_CASE("traits over every graph with at most 5 vertices") {
  const auto corpus = all_graphs_up_to(5);
  const AxiomQuery alpha{Axiom::Alpha, Radius::finite(0)};
  for (std::uint32_t r = 1; r <= 3; ++r) {
    const Radius rr = Radius::finite(r);
    for (const auto& p : {make_r_ic(rr), make_r_ld(rr), make_r_md(rr)}) {
      CAPTURE(p.name());
      CHECK(check_trait(p, alpha, corpus).holds);
      CHECK(check_trait(p, {Axiom::Beta1, rr}, corpus).holds);
      CHECK(check_trait(p, {Axiom::Beta2, rr}, corpus).holds);
      CHECK(!verify_claims(p, corpus));
    }
    CHECK(check_trait(make_r_md(rr), {Axiom::Gamma, rr}, corpus).holds);
    CHECK(check_trait(make_r_md(rr), {Axiom::Gamma, R1}, corpus).holds);
  }
  CHECK(!verify_claims(make_r_md(Inf), corpus));
  CHECK(check_trait(make_r_ld(R1), {Axiom::Gamma, R1}, corpus).holds);
  CHECK_FALSE(check_trait(make_r_ld(R2), {Axiom::Gamma, R1}, corpus).holds);
}

TEST_CASE("predicates are symmetric in the pair") {
  for (const auto& g : enumerate_small_graphs(6, 2, 60)) {
    const DistanceMatrix dm(g);
    for (const auto& p : {make_r_ic(R1), make_r_ld(R2), make_r_md(Inf)})
      for (Vertex w = 0; w < g.order(); ++w)
        for (Vertex u = 0; u < g.order(); ++u)
          for (Vertex v = 0; v < g.order(); ++v)
            if (u != v) CHECK(p.distinguishes(dm, w, u, v) == p.distinguishes(dm, w, v, u));
  }
  // Even an order-sensitive user predicate is evaluated through the unordered pair.
  const auto skew = IdentifyingProblem::custom(
      "skew", R1, [](const DistanceMatrix&, Vertex w, Vertex u, Vertex) { return w == u; }, {});
  const DistanceMatrix p3(path_graph(3));
  CHECK(skew.distinguishes(p3, 0, 0, 2) == skew.distinguishes(p3, 0, 2, 0));
}

TEST_CASE("verify_claims rejects a false claim") {
  // "Always true" breaks alpha as soon as some vertex is equidistant from a pair.
  const auto liar = IdentifyingProblem::custom(
      "liar", R1, [](const DistanceMatrix&, Vertex, Vertex, Vertex) { return true; },
      {{TraitClass::Distance, Radius::finite(0)}});
  const auto corpus = all_graphs_up_to(3);
  const auto failure = verify_claims(liar, corpus);
  REQUIRE(failure);
  CHECK(failure->axiom.axiom == Axiom::Alpha);
  REQUIRE(failure->counterexample);
  CHECK(failure->counterexample->graph.order() >= 2);
  CHECK_THROWS(IdentifyingProblem::custom("null", R1, {}, {}));
}
