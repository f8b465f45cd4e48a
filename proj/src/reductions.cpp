#include "distid/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "distid/corpus.hpp"
#include "distid/solver.hpp"

namespace distid {

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::DistanceId: return "distance-id";
    case ReductionKind::Apex: return "apex";
    case ReductionKind::Compressed: return "compressed";
  }
  return "?";
}

ReductionKind parse_reduction_kind(std::string_view text) {
  if (text == "distance-id") return ReductionKind::DistanceId;
  if (text == "apex") return ReductionKind::Apex;
  if (text == "compressed") return ReductionKind::Compressed;
  throw std::invalid_argument("unknown reduction kind: " + std::string(text));
}

std::size_t bit_length(std::size_t x) {
  if (x == 0) throw std::invalid_argument("bit_length of 0");
  return static_cast<std::size_t>(std::bit_width(x));
}

bool bit_set(std::size_t x, std::size_t k, std::size_t width) {
  return ((x >> (width - k)) & 1U) != 0;
}

Graph build_associated_graph(const HittingSetInstance& inst) {
  const std::size_t n = inst.universe_size();
  GraphBuilder gb;
  for (std::uint32_t i = 1; i <= n; ++i) gb.add_vertex(RoleLabel::element(i));
  for (std::uint32_t j = 1; j <= inst.set_count(); ++j) gb.add_vertex(RoleLabel::set(j));
  for (std::uint32_t j = 1; j <= inst.set_count(); ++j)
    for (auto i : inst.set(j)) gb.add_edge(i - 1, static_cast<Vertex>(n + j - 1));
  return gb.build();
}

namespace {

class Assembly {
 public:
  Assembly(const Gadget& gad, const HittingSetInstance& inst) : gad_(gad), inst_(inst) {}

  std::size_t add_copy(std::string tag) {
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < gad_.order(); ++v)
      ids.push_back(gb.add_vertex(RoleLabel::gadget(tag, gad_.local_name(v))));
    for (const auto& [u, v] : gad_.h.edges()) gb.add_edge(ids[u], ids[v]);
    copies.push_back(std::move(ids));
    tags.push_back(std::move(tag));
    return copies.size() - 1;
  }

  /// Makes x adjacent to the border of copy c.
  void attach(Vertex x, std::size_t c) {
    gad_.border.for_each([&](Vertex b) { gb.add_edge(x, copies[c][b]); });
  }

  ReductionArtifact finish(ReductionKind kind, std::uint32_t r) {
    ReductionArtifact art{.graph = gb.build(),
                          .kind = kind,
                          .r = r,
                          .gadget = gad_,
                          .instance = inst_,
                          .copies = copies.size(),
                          .offset = copies.size() * gad_.code.size(),
                          .equivalence_tested = true,
                          .copy_vertices = std::move(copies),
                          .copy_tags = std::move(tags),
                          .element_vertex = std::move(element_vertex),
                          .set_vertex = std::move(set_vertex),
                          .set_twin_vertex = std::move(set_twin_vertex),
                          .element_locus = std::move(element_locus),
                          .apex = std::move(apex)};
    return art;
  }

  GraphBuilder gb;
  std::vector<std::vector<Vertex>> copies;
  std::vector<std::string> tags;
  std::vector<Vertex> element_vertex, set_vertex, set_twin_vertex, apex;
  std::vector<std::vector<Vertex>> element_locus;

 private:
  const Gadget& gad_;
  const HittingSetInstance& inst_;
};

Assembly distance_id_assembly(const Gadget& gad, std::uint32_t r, const HittingSetInstance& inst) {
  if (r < 1) throw std::invalid_argument("reduction radius must be >= 1");
  const std::size_t n = inst.universe_size();
  const std::size_t m = inst.set_count();
  Assembly a(gad, inst);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::size_t c = a.add_copy("O" + std::to_string(i));
    const Vertex v = a.gb.add_vertex(RoleLabel::element(i));
    a.attach(v, c);
    a.element_vertex.push_back(v);
    a.element_locus.push_back({v});
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    const std::size_t c = a.add_copy("S" + std::to_string(j));
    const Vertex v = a.gb.add_vertex(RoleLabel::set(j));
    const Vertex t = a.gb.add_vertex(RoleLabel::set_twin(j));
    a.attach(v, c);
    a.attach(t, c);
    a.set_vertex.push_back(v);
    a.set_twin_vertex.push_back(t);
  }
  for (std::uint32_t j = 1; j <= m; ++j)
    for (auto i : inst.set(j)) {
      Vertex prev = a.element_vertex[i - 1];
      for (std::uint32_t k = 1; k < r; ++k) {
        const Vertex p = a.gb.add_vertex(RoleLabel::path(i, j, k));
        a.gb.add_edge(prev, p);
        a.element_locus[i - 1].push_back(p);
        prev = p;
      }
      a.gb.add_edge(prev, a.set_vertex[j - 1]);
    }
  return a;
}

}  // namespace

ReductionArtifact build_distance_id_graph(const Gadget& gad, std::uint32_t r,
                                          const HittingSetInstance& inst) {
  ReductionArtifact art = distance_id_assembly(gad, r, inst).finish(ReductionKind::DistanceId, r);
  art.equivalence_tested = inst.universe_size() > 1;
  return art;
}

ReductionArtifact build_apex_graph(const Gadget& gad, const HittingSetInstance& inst) {
  Assembly a = distance_id_assembly(gad, 1, inst);
  const Vertex apex = a.gb.add_vertex(RoleLabel::apex());
  for (std::size_t i = 0; i < inst.universe_size(); ++i) a.attach(apex, i);
  for (std::size_t j = 0; j < inst.set_count(); ++j) {
    a.gb.add_edge(apex, a.set_vertex[j]);
    a.gb.add_edge(apex, a.set_twin_vertex[j]);
  }
  a.apex.push_back(apex);
  ReductionArtifact art = a.finish(ReductionKind::Apex, 1);
  art.equivalence_tested = inst.universe_size() > 1;
  return art;
}

ReductionArtifact build_compressed_graph(const Gadget& gad, std::uint32_t r,
                                         const HittingSetInstance& inst) {
  if (r < 1) throw std::invalid_argument("reduction radius must be >= 1");
  const std::size_t n = inst.universe_size();
  const std::size_t m = inst.set_count();
  const std::size_t wide_o = bit_length(n + 1);
  const std::size_t wide_s = bit_length(m);
  Assembly a(gad, inst);
  for (std::size_t k = 1; k <= wide_o; ++k) a.add_copy("O" + std::to_string(k));
  for (std::size_t k = 1; k <= wide_s; ++k) a.add_copy("S" + std::to_string(k));

  std::vector<Vertex> path_end(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const Vertex l0 = a.gb.add_vertex(RoleLabel::element(i));
    a.element_vertex.push_back(l0);
    a.element_locus.push_back({l0});
    Vertex prev = l0;
    for (std::uint32_t k = 1; k < r; ++k) {
      const Vertex p = a.gb.add_vertex(RoleLabel::path(i, 0, k));
      a.gb.add_edge(prev, p);
      a.element_locus.back().push_back(p);
      prev = p;
    }
    path_end[i - 1] = prev;
    for (std::size_t k = 1; k <= wide_o; ++k)
      if (bit_set(i, k, wide_o)) a.attach(l0, k - 1);
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    const Vertex v = a.gb.add_vertex(RoleLabel::set(j));
    const Vertex t = a.gb.add_vertex(RoleLabel::set_twin(j));
    a.set_vertex.push_back(v);
    a.set_twin_vertex.push_back(t);
    for (std::size_t k = 1; k <= wide_s; ++k)
      if (bit_set(j, k, wide_s)) {
        a.attach(v, wide_o + k - 1);
        a.attach(t, wide_o + k - 1);
      }
  }
  for (std::uint32_t j = 1; j <= m; ++j)
    for (auto i : inst.set(j)) a.gb.add_edge(path_end[i - 1], a.set_vertex[j - 1]);

  for (std::uint32_t k = 0; k < r; ++k) {
    const Vertex p = a.gb.add_vertex(RoleLabel::apex_path(k));
    if (k > 0) a.gb.add_edge(a.apex.back(), p);
    a.apex.push_back(p);
  }
  for (std::size_t k = 0; k < wide_o; ++k) a.attach(a.apex.front(), k);
  for (std::size_t j = 0; j < m; ++j) {
    a.gb.add_edge(a.apex.back(), a.set_vertex[j]);
    a.gb.add_edge(a.apex.back(), a.set_twin_vertex[j]);
  }
  return a.finish(ReductionKind::Compressed, r);
}

ReductionArtifact build_reduction(ReductionKind kind, const Gadget& gad, std::uint32_t r,
                                  const HittingSetInstance& inst) {
  switch (kind) {
    case ReductionKind::DistanceId: return build_distance_id_graph(gad, r, inst);
    case ReductionKind::Apex: return build_apex_graph(gad, inst);
    case ReductionKind::Compressed: return build_compressed_graph(gad, r, inst);
  }
  throw std::invalid_argument("unknown reduction kind");
}

std::size_t vertex_bound(const ReductionArtifact& art) {
  const std::size_t h = art.gadget.order();
  const std::size_t n = art.instance.universe_size();
  const std::size_t m = art.instance.set_count();
  if (art.kind == ReductionKind::Compressed)
    return h * (bit_length(n + 1) + bit_length(m)) + art.r * (n + 1) + 2 * m;
  return (h + 2 * art.r) * (n + m);
}

void require_compatible(const ReductionArtifact& art, const IdentifyingProblem& p) {
  const Radius one = Radius::finite(1);
  const Radius r = Radius::finite(art.r);
  const bool layered = p.claims_layered(one);
  const bool local = p.claims_local(r) && p.radius() == r && art.gadget.meta.local;
  bool ok = false;
  std::string need;
  switch (art.kind) {
    case ReductionKind::Apex:
      ok = layered;
      need = "a 1-layered problem";
      break;
    case ReductionKind::DistanceId:
      ok = local;
      need = "an " + std::to_string(art.r) + "-local problem of radius " + std::to_string(art.r) +
             " and a local gadget";
      break;
    case ReductionKind::Compressed:
      ok = (art.r == 1 && layered) || local;
      need = art.r == 1 ? "a 1-layered problem, or a 1-local problem with a local gadget"
                        : "an " + std::to_string(art.r) + "-local problem of radius " +
                              std::to_string(art.r) + " and a local gadget";
      break;
  }
  if (!p.claims_distance()) {
    ok = false;
    need = "a distance identifying problem";
  }
  if (!ok)
    throw std::invalid_argument(to_string(art.kind) + " artifact needs " + need + "; got " +
                                p.name() + " with gadget " + art.gadget.name);
  static const std::vector<Graph> corpus = standard_corpus();
  if (const auto bad = verify_claims(p, corpus))
    throw std::invalid_argument("problem " + p.name() + " violates its claimed axiom " +
                                bad->axiom.to_string() + " on the standard corpus");
}

VertexSet lift_hitting_set(const ReductionArtifact& art,
                           std::span<const HittingSetInstance::Element> hs) {
  const std::size_t n = art.instance.universe_size();
  for (auto e : hs)
    if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " out of range");
  if (!art.instance.is_hitting_set(hs))
    throw std::invalid_argument("lift: the given elements do not hit every set");
  VertexSet out(art.graph.order());
  for (auto e : hs) out.insert(art.element_vertex[e - 1]);
  const auto code = art.gadget.code.to_vector();
  for (const auto& copy : art.copy_vertices)
    for (Vertex c : code) out.insert(copy[c]);
  return out;
}

std::vector<HittingSetInstance::Element> extract_hitting_set(const ReductionArtifact& art,
                                                             const IdentifyingProblem& p,
                                                             const VertexSet& dis) {
  require_compatible(art, p);
  if (dis.universe() != art.graph.order())
    throw std::invalid_argument("extract: vertex set does not match the artifact graph");
  const DisCheck check = is_dis(art.graph, p, dis);
  if (!check.valid)
    throw std::invalid_argument("extract: not a distance identifying set (" +
                                check.violation->to_string() + ")");
  const std::size_t n = art.instance.universe_size();
  std::vector<bool> picked(n + 1, false);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex v : art.element_locus[i])
      if (dis.contains(v)) picked[i + 1] = true;
  for (std::size_t j = 0; j < art.instance.set_count(); ++j)
    if (dis.contains(art.set_vertex[j]) || dis.contains(art.set_twin_vertex[j]))
      picked[art.instance.set(j + 1).front()] = true;
  std::vector<HittingSetInstance::Element> out;
  for (std::uint32_t e = 1; e <= n; ++e)
    if (picked[e]) out.push_back(e);
  return out;
}

HittingSetInstance sat_to_hitting_set(const Cnf& cnf) {
  if (cnf.num_vars == 0) throw std::invalid_argument("CNF needs at least one variable");
  std::vector<std::vector<HittingSetInstance::Element>> sets;
  for (std::uint32_t x = 1; x <= cnf.num_vars; ++x) sets.push_back({2 * x - 1, 2 * x});
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    const auto& clause = cnf.clauses[c];
    if (clause.empty()) throw std::invalid_argument("clause " + std::to_string(c + 1) + " is empty");
    std::vector<HittingSetInstance::Element> s;
    for (int lit : clause) {
      const auto x = static_cast<std::uint32_t>(std::abs(lit));
      if (lit == 0 || x > cnf.num_vars)
        throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
      s.push_back(lit > 0 ? 2 * x - 1 : 2 * x);
    }
    sets.push_back(std::move(s));
  }
  return HittingSetInstance(2 * cnf.num_vars, std::move(sets));
}

}  // namespace distid
