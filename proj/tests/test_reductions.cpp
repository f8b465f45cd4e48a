#include <algorithm>
#include <map>
#include <stdexcept>

#include "distid/corpus.hpp"
#include "distid/distance.hpp"
#include "distid/reductions.hpp"
#include "distid/solver.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace distid;
using Elements = std::vector<HittingSetInstance::Element>;

namespace {

std::map<RoleLabel::Kind, std::size_t> kind_counts(const Graph& g) {
  std::map<RoleLabel::Kind, std::size_t> out;
  for (Vertex v = 0; v < g.order(); ++v) ++out[g.label(v).kind];
  return out;
}

}  // namespace

TEST_CASE("bit helpers") {
  CHECK(bit_length(1) == 1);
  CHECK(bit_length(5) == 3);
  CHECK(bit_length(8) == 4);
  CHECK(bit_set(4, 1, 3));  // 100
  CHECK_FALSE(bit_set(4, 3, 3));
  CHECK(bit_set(1, 3, 3));
  for (std::size_t n = 1; n <= 64; ++n) {
    const std::size_t w = bit_length(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
      bool all_ones = true;
      for (std::size_t k = 1; k <= w; ++k) all_ones = all_ones && bit_set(i, k, w);
      CHECK_FALSE(all_ones);
    }
  }
}

TEST_CASE("associated graph") {
  const Graph g = build_associated_graph(worked_example_instance());
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 5);
  CHECK(is_bipartite(g));
  const Graph match = build_associated_graph(HittingSetInstance(3, {{1}, {2}, {3}}));
  CHECK(match.edge_count() == 3);
  for (Vertex v = 0; v < 6; ++v) CHECK(match.degree(v) == 1);
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(is_bipartite(build_associated_graph(random_instance(6, 5, 50, s))));
}

TEST_CASE("random planar instances") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t n = 1 + s % 8, m = 1 + (s / 8) % 6;
    const HittingSetInstance inst = random_planar_instance(n, m, s);
    CHECK(inst.universe_size() == n);
    CHECK(inst.set_count() == m);
    if (n + m >= 3) CHECK(inst.membership_count() <= 2 * (n + m) - 4);
  }
  CHECK(random_planar_instance(5, 4, 9) == random_planar_instance(5, 4, 9));
}

TEST_CASE("distance identifying graph on the worked example") {
  const auto inst = worked_example_instance();
  const ReductionArtifact art = build_distance_id_graph(gadget_local_0layered(2), 2, inst);
  CHECK(art.graph.order() == 73);
  CHECK(vertex_bound(art) == 84);
  CHECK(art.copies == 6);
  CHECK(art.offset == 30);
  CHECK(art.equivalence_tested);
  CHECK(is_bipartite(art.graph));
  CHECK(is_connected(art.graph));
  const auto counts = kind_counts(art.graph);
  CHECK(counts.at(RoleLabel::Kind::GadgetVertex) == 60);
  CHECK(counts.at(RoleLabel::Kind::ElementVertex) == 4);
  CHECK(counts.at(RoleLabel::Kind::SetVertex) == 2);
  CHECK(counts.at(RoleLabel::Kind::SetTwinVertex) == 2);
  CHECK(counts.at(RoleLabel::Kind::PathVertex) == 5);
  for (Vertex v = 0; v < art.graph.order(); ++v)
    if (art.graph.label(v).kind == RoleLabel::Kind::PathVertex) CHECK(art.graph.degree(v) == 2);

  const auto d = oracle::distances(art.graph);
  for (std::uint32_t j = 1; j <= 2; ++j)
    for (std::uint32_t i = 1; i <= 4; ++i) {
      const bool member = std::count(inst.set(j).begin(), inst.set(j).end(), i) > 0;
      const int to_set = d[art.element_vertex[i - 1]][art.set_vertex[j - 1]];
      const int to_twin = d[art.element_vertex[i - 1]][art.set_twin_vertex[j - 1]];
      if (member) {
        CHECK(to_set == 2);
        CHECK(to_twin > 2);
      } else {
        CHECK(to_set > 2);
        CHECK(to_twin > 2);
      }
    }

  const ReductionArtifact one = build_distance_id_graph(gadget_local_0layered(1), 1, inst);
  CHECK(kind_counts(one.graph).count(RoleLabel::Kind::PathVertex) == 0);
  for (std::uint32_t j = 1; j <= 2; ++j)
    for (auto i : inst.set(j)) CHECK(one.graph.adjacent(one.element_vertex[i - 1], one.set_vertex[j - 1]));
  CHECK_THROWS(build_distance_id_graph(gadget_local_0layered(1), 0, inst));
}

TEST_CASE("apex graph on the worked example") {
  const auto inst = worked_example_instance();
  const ReductionArtifact art = build_apex_graph(gadget_1layered(), inst);
  CHECK(art.graph.order() == 69);
  CHECK(vertex_bound(art) == 72);
  CHECK(art.offset == 30);
  REQUIRE(art.apex.size() == 1);
  const Vertex apex = art.apex.front();
  CHECK(art.graph.label(apex).kind == RoleLabel::Kind::ApexVertex);
  CHECK(art.graph.degree(apex) == 12);
  const auto d = oracle::distances(art.graph);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(d[apex][art.set_vertex[j]] <= 1);
    CHECK(d[apex][art.set_twin_vertex[j]] <= 1);
  }
  // v^Ω_i sees v^S_j and its twin at the same distance 3 when u_i is not in S_j.
  CHECK(d[art.element_vertex[2]][art.set_vertex[0]] == 3);
  CHECK(d[art.element_vertex[2]][art.set_twin_vertex[0]] == 3);
}

TEST_CASE("compressed graph on the worked example") {
  const auto inst = worked_example_instance();
  const Gadget gad = gadget_local_0layered(2);
  const ReductionArtifact art = build_compressed_graph(gad, 2, inst);
  CHECK(art.graph.order() == 64);
  CHECK(vertex_bound(art) == 64);
  CHECK(art.copies == 5);
  CHECK(art.offset == 25);
  CHECK(is_bipartite(art.graph));
  CHECK(is_connected(art.graph));
  REQUIRE(art.apex.size() == 2);
  const Vertex a0 = art.apex.front();
  for (std::size_t k = 0; k < 3; ++k)
    gad.border.for_each([&](Vertex b) { CHECK(art.graph.adjacent(a0, art.copy_vertices[k][b])); });
  for (std::size_t k = 3; k < 5; ++k)
    gad.border.for_each([&](Vertex b) { CHECK_FALSE(art.graph.adjacent(a0, art.copy_vertices[k][b])); });
  // u_3 = 011 over three bits: copies O2 and O3 only.
  const Vertex v3 = art.element_vertex[2];
  const Vertex b1 = gad.border.first().value();
  CHECK_FALSE(art.graph.adjacent(v3, art.copy_vertices[0][b1]));
  CHECK(art.graph.adjacent(v3, art.copy_vertices[1][b1]));
  CHECK(art.graph.adjacent(v3, art.copy_vertices[2][b1]));
  // S_1 = 01 over two bits: copy S2 only.
  CHECK_FALSE(art.graph.adjacent(art.set_vertex[0], art.copy_vertices[3][b1]));
  CHECK(art.graph.adjacent(art.set_vertex[0], art.copy_vertices[4][b1]));
  CHECK(art.element_locus[0].size() == 2);
  CHECK(art.copy_tags[3] == "S1");
  CHECK(art.graph.label(art.copy_vertices[3][0]).copy_tag == "S1");
}

TEST_CASE("label completeness") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto inst = random_planar_instance(1 + s % 5, 1 + s % 4, s);
    for (auto kind : {ReductionKind::DistanceId, ReductionKind::Apex, ReductionKind::Compressed}) {
      const auto art = build_reduction(kind, gadget_local_0layered(2), 2, inst);
      REQUIRE(art.graph.has_labels());
      std::size_t gadget_vertices = 0;
      for (Vertex v = 0; v < art.graph.order(); ++v)
        if (art.graph.label(v).kind == RoleLabel::Kind::GadgetVertex) ++gadget_vertices;
      CHECK(gadget_vertices == art.copies * 10);
      for (std::size_t c = 0; c < art.copies; ++c)
        for (Vertex local = 0; local < 10; ++local) {
          const auto& l = art.graph.label(art.copy_vertices[c][local]);
          CHECK(l.copy_tag == art.copy_tags[c]);
          CHECK(l.local_name == art.gadget.local_name(local));
        }
      for (std::size_t i = 0; i < inst.universe_size(); ++i)
        CHECK(art.graph.label(art.element_vertex[i]) == RoleLabel::element(static_cast<std::uint32_t>(i + 1)));
    }
  }
}

TEST_CASE("size bounds over random planar instances") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t n = 1 + s % 8, m = 1 + s % 6;
    const auto r = static_cast<std::uint32_t>(1 + s % 3);
    const auto inst = random_planar_instance(n, m, 1000 + s);
    for (const Gadget& gad : {gadget_local_0layered(r), gadget_r_ic(r), gadget_1layered()}) {
      const auto phi = build_distance_id_graph(gad, r, inst);
      CHECK(phi.graph.order() <= vertex_bound(phi));
      CHECK(phi.graph.order() ==
            (gad.order() + 1) * n + (gad.order() + 2) * m + (r - 1) * inst.membership_count());
      const auto star = build_apex_graph(gad, inst);
      CHECK(star.graph.order() <= vertex_bound(star));
      const auto psi = build_compressed_graph(gad, r, inst);
      CHECK(psi.graph.order() == vertex_bound(psi));
      CHECK(psi.copies == bit_length(n + 1) + bit_length(m));
      CHECK(is_bipartite(phi.graph) == gad.meta.bipartite_single_ext);
      CHECK(is_bipartite(psi.graph) == gad.meta.bipartite_single_ext);
      CHECK(is_connected(phi.graph));
      CHECK(is_connected(star.graph));
      CHECK(is_connected(psi.graph));
    }
  }
}

TEST_CASE("the distance identifying bound needs planar instances") {
  // Every element in every set: nm memberships outgrow 2(n+m)-4 paths.
  std::vector<Elements> sets(6, Elements{1, 2, 3, 4, 5, 6});
  const HittingSetInstance dense(6, sets);
  const auto art = build_distance_id_graph(gadget_local_0layered(3), 3, dense);
  CHECK(art.graph.order() > vertex_bound(art));
}

TEST_CASE("lift examples") {
  const auto inst = worked_example_instance();
  const Elements two{2};
  const auto apex = build_apex_graph(gadget_1layered(), inst);
  const VertexSet i1 = lift_hitting_set(apex, two);
  CHECK(i1.size() == 31);
  CHECK(is_dis(apex.graph, parse_problem("md:inf"), i1).valid);

  const auto psi = build_compressed_graph(gadget_local_0layered(2), 2, inst);
  const VertexSet i2 = lift_hitting_set(psi, two);
  CHECK(i2.size() == 26);
  CHECK(is_dis(psi.graph, parse_problem("md:2"), i2).valid);

  CHECK_THROWS_AS(lift_hitting_set(apex, Elements{}), std::invalid_argument);
  CHECK_THROWS_AS(lift_hitting_set(apex, Elements{1}), std::invalid_argument);
  CHECK_THROWS_AS(lift_hitting_set(apex, Elements{9}), std::invalid_argument);
}

TEST_CASE("extract examples") {
  const auto inst = worked_example_instance();
  const auto md = parse_problem("md:inf");
  const auto apex = build_apex_graph(gadget_1layered(), inst);
  const VertexSet lifted = lift_hitting_set(apex, Elements{2});
  CHECK(extract_hitting_set(apex, md, lifted) == Elements{2});

  // Swap b for bbar in the first copy: still a DIS, same extraction bound.
  VertexSet swapped = lifted;
  const auto& copy = apex.copy_vertices[0];
  swapped.erase(copy[apex.gadget.vertex("b")]);
  swapped.insert(copy[apex.gadget.vertex("bbar")]);
  REQUIRE(is_dis(apex.graph, md, swapped).valid);
  const Elements p = extract_hitting_set(apex, md, swapped);
  CHECK(inst.is_hitting_set(p));
  CHECK(p.size() <= swapped.size() - apex.offset);

  // A set vertex instead of the element vertex maps back through min S_j.
  const auto phi = build_distance_id_graph(gadget_local_0layered(2), 2, inst);
  const auto md2 = parse_problem("md:2");
  VertexSet alt = lift_hitting_set(phi, Elements{1, 3});
  alt.erase(phi.element_vertex[2]);
  alt.insert(phi.set_vertex[1]);
  REQUIRE(is_dis(phi.graph, md2, alt).valid);
  CHECK(extract_hitting_set(phi, md2, alt) == Elements{1, 2});

  VertexSet broken = lifted;
  broken.erase(apex.element_vertex[1]);
  CHECK_THROWS_AS(extract_hitting_set(apex, md, broken), std::invalid_argument);
}

TEST_CASE("compatibility gate") {
  const auto inst = worked_example_instance();
  const auto apex = build_apex_graph(gadget_1layered(), inst);
  CHECK_NOTHROW(require_compatible(apex, parse_problem("md:inf")));
  CHECK_NOTHROW(require_compatible(apex, parse_problem("ld:1")));
  CHECK_THROWS_AS(require_compatible(apex, parse_problem("ic:1")), std::invalid_argument);
  CHECK_THROWS_AS(require_compatible(apex, parse_problem("ld:2")), std::invalid_argument);

  const auto phi = build_distance_id_graph(gadget_local_0layered(2), 2, inst);
  CHECK_NOTHROW(require_compatible(phi, parse_problem("ld:2")));
  CHECK_THROWS(require_compatible(phi, parse_problem("md:1")));
  CHECK_THROWS(require_compatible(phi, parse_problem("md:inf")));
  CHECK_THROWS(require_compatible(build_distance_id_graph(gadget_1layered(), 1, inst),
                                  parse_problem("ld:1")));

  const auto psi1 = build_compressed_graph(gadget_1layered(), 1, inst);
  CHECK_NOTHROW(require_compatible(psi1, parse_problem("md:inf")));
  CHECK_THROWS(require_compatible(psi1, parse_problem("ic:1")));

  // Claims are verified before they are trusted.
  const auto liar = IdentifyingProblem::custom(
      "liar", Radius::finite(1), [](const DistanceMatrix&, Vertex, Vertex, Vertex) { return true; },
      {{TraitClass::Distance, Radius::finite(0)}, {TraitClass::Layered, Radius::finite(1)}});
  CHECK_THROWS_AS(require_compatible(apex, liar), std::invalid_argument);
  const auto no_alpha = IdentifyingProblem::custom(
      "layered-only", Radius::infinite(),
      [](const DistanceMatrix& dm, Vertex w, Vertex u, Vertex v) { return dm(u, w) != dm(v, w); },
      {{TraitClass::Layered, Radius::finite(1)}});
  CHECK_THROWS_AS(require_compatible(apex, no_alpha), std::invalid_argument);
}

TEST_CASE("round trip on small planar instances") {
  struct Setup {
    ReductionKind kind;
    Gadget gadget;
    std::uint32_t r;
    const char* problem;
  };
  const std::vector<Setup> setups = {
      {ReductionKind::Apex, gadget_1layered(), 1, "md:inf"},
      {ReductionKind::Apex, gadget_1layered(), 1, "ld:1"},
      {ReductionKind::DistanceId, gadget_local_0layered(2), 2, "md:2"},
      {ReductionKind::DistanceId, gadget_r_ic(1), 1, "ic:1"},
      {ReductionKind::Compressed, gadget_local_0layered(2), 2, "ld:2"},
      {ReductionKind::Compressed, gadget_1layered(), 1, "md:inf"},
      {ReductionKind::Compressed, gadget_r_ic(2), 2, "ic:2"},
  };
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto inst = random_planar_instance(2 + s % 4, 1 + s % 3, 77 + s);
    const SolveResult opt = min_hitting_set(inst);
    REQUIRE(opt.status == SolveStatus::Optimal);
    const Elements hs = witness_elements(opt.witness);
    for (const auto& st : setups) {
      CAPTURE(to_string(st.kind));
      CAPTURE(st.problem);
      const auto p = parse_problem(st.problem);
      const auto art = build_reduction(st.kind, st.gadget, st.r, inst);
      const VertexSet lifted = lift_hitting_set(art, hs);
      CHECK(lifted.size() == opt.k + art.offset);
      CHECK(is_dis(art.graph, p, lifted).valid);
      const Elements back = extract_hitting_set(art, p, lifted);
      CHECK(inst.is_hitting_set(back));
      CHECK(back.size() <= lifted.size() - art.offset);
      CHECK(back.size() == opt.k);
    }
  }
}

TEST_CASE("sat to hitting set") {
  const auto contradiction = sat_to_hitting_set(Cnf{1, {{1}, {-1}}});
  CHECK(contradiction.universe_size() == 2);
  CHECK(min_hitting_set(contradiction).k == 2);
  CHECK_FALSE(oracle::satisfiable(1, {{1}, {-1}}));

  const auto easy = sat_to_hitting_set(Cnf{2, {{1, 2}}});
  CHECK(easy.set_count() == 3);
  CHECK(min_hitting_set(easy).k == 2);
  CHECK(oracle::satisfiable(2, {{1, 2}}));

  const auto unused = sat_to_hitting_set(Cnf{3, {{1}}});
  CHECK(unused.set(3) == Elements{5, 6});
  CHECK(unused.set(4) == Elements{1});

  CHECK_THROWS(sat_to_hitting_set(Cnf{2, {{1}, {}}}));
  CHECK_THROWS(sat_to_hitting_set(Cnf{2, {{3}}}));
  CHECK_THROWS(sat_to_hitting_set(Cnf{0, {}}));
}

TEST_CASE("reduction kind names") {
  for (auto k : {ReductionKind::DistanceId, ReductionKind::Apex, ReductionKind::Compressed})
    CHECK(parse_reduction_kind(to_string(k)) == k);
  CHECK_THROWS(parse_reduction_kind("star"));
}
