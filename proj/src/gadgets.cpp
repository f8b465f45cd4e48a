#include "distid/gadgets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "distid/corpus.hpp"
#include "distid/distance.hpp"

namespace distid {

namespace {

class Draft {
 public:
  Vertex add(const std::string& name) {
    if (ids_.count(name) != 0) throw std::logic_error("duplicate gadget vertex " + name);
    const Vertex v = builder_.add_vertex(RoleLabel::gadget("H", name));
    ids_.emplace(name, v);
    return v;
  }
  Vertex at(const std::string& name) const { return ids_.at(name); }
  void edge(const std::string& a, const std::string& b) { builder_.add_edge(at(a), at(b)); }
  void path(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i + 1 < names.size(); ++i) edge(names[i], names[i + 1]);
  }

  VertexSet set_of(const std::vector<std::string>& names) const {
    VertexSet s(builder_.order());
    for (const auto& n : names) s.insert(at(n));
    return s;
  }

  Gadget finish(std::string name, const std::vector<std::string>& border,
                const std::vector<std::string>& code,
                const std::vector<std::pair<std::string, std::string>>& twins,
                std::optional<std::uint32_t> locality) const {
    Gadget g{std::move(name), builder_.build(), set_of(border), set_of(code), {}, locality, {}, {}};
    for (const auto& [x, y] : twins) {
      const Vertex a = std::min(at(x), at(y));
      const Vertex b = std::max(at(x), at(y));
      g.twin_pairs.emplace_back(a, b);
      std::vector<Vertex> perm(g.order());
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::swap(perm[a], perm[b]);
      g.symmetries.push_back(std::move(perm));
    }
    g.meta.local = locality.has_value();
    g.meta.planar_twin_ext = true;
    g.meta.bipartite_single_ext = is_bipartite(b_single_extension(g));
    return g;
  }

 private:
  GraphBuilder builder_;
  std::map<std::string, Vertex> ids_;
};

std::string idx(const std::string& base, std::uint32_t i) { return base + std::to_string(i); }

// a^j_i
std::string sup(char base, std::uint32_t j, std::uint32_t i) {
  return std::string(1, base) + "^" + std::to_string(j) + "_" + std::to_string(i);
}

Graph extend(const Gadget& gad, std::size_t fresh, const std::vector<bool>& b_adjacent,
             const std::vector<Edge>& fresh_edges) {
  const std::size_t h = gad.order();
  std::vector<Edge> edges = gad.h.edges();
  std::vector<RoleLabel> labels = *gad.h.labels();
  const auto border = gad.border.to_vector();
  for (std::size_t f = 0; f < fresh; ++f) {
    const auto v = static_cast<Vertex>(h + f);
    labels.push_back(RoleLabel::plain());
    if (b_adjacent[f])
      for (Vertex b : border) edges.emplace_back(b, v);
  }
  for (const auto& [x, y] : fresh_edges)
    edges.emplace_back(static_cast<Vertex>(h + x), static_cast<Vertex>(h + y));
  return Graph(h + fresh, std::move(edges), std::move(labels));
}

}  // namespace

Vertex Gadget::vertex(std::string_view local) const {
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.label(v).local_name == local) return v;
  throw std::invalid_argument("gadget " + name + " has no vertex " + std::string(local));
}

Gadget gadget_1layered() {
  Draft d;
  for (const char* n : {"b", "bbar", "u1", "ubar1", "u2", "ubar2", "v1", "vbar1", "v2", "vbar2"})
    d.add(n);
  d.path({"u1", "u2", "ubar1", "ubar2", "u1"});
  d.path({"v1", "v2", "vbar1", "vbar2", "v1"});
  for (const char* x : {"b", "bbar"})
    for (const char* y : {"u1", "ubar1", "v1", "vbar1"}) d.edge(x, y);
  return d.finish("1layered", {"b", "bbar"}, {"b", "u1", "u2", "v1", "v2"},
                  {{"b", "bbar"}, {"u1", "ubar1"}, {"u2", "ubar2"}, {"v1", "vbar1"}, {"v2", "vbar2"}},
                  std::nullopt);
}

Gadget gadget_local_0layered(std::uint32_t r) {
  if (r < 1) throw std::invalid_argument("local0 gadget needs r >= 1");
  const std::uint32_t top = r == 1 ? 4 : 2 * r + 1;
  Draft d;
  for (std::uint32_t i = 1; i <= top; ++i) {
    d.add(idx("a", i));
    d.add(idx("b", i));
  }
  for (std::uint32_t i = 1; i < top; ++i)
    for (const char* x : {"a", "b"})
      for (const char* y : {"a", "b"}) d.edge(idx(x, i), idx(y, i + 1));
  std::vector<std::string> code;
  std::vector<std::pair<std::string, std::string>> twins;
  for (std::uint32_t i = 1; i <= top; ++i) {
    code.push_back(idx("a", i));
    twins.emplace_back(idx("a", i), idx("b", i));
  }
  return d.finish("local0:" + std::to_string(r), {"a1", "b1"}, code, twins, r);
}

Gadget gadget_r_ic(std::uint32_t r) {
  if (r < 1) throw std::invalid_argument("ic gadget needs r >= 1");
  Draft d;
  for (std::uint32_t i = 0; i <= r + 1; ++i) {
    d.add(idx("a", i));
    d.add(idx("b", i));
  }
  for (std::uint32_t j = 1; j <= 2; ++j)
    for (std::uint32_t i = 1; i <= r; ++i) {
      d.add(sup('a', j, i));
      d.add(sup('b', j, i));
    }
  std::vector<std::string> pa, pb;
  for (std::uint32_t i = 0; i <= r + 1; ++i) {
    pa.push_back(idx("a", i));
    pb.push_back(idx("b", i));
  }
  d.path(pa);
  d.path(pb);
  for (std::uint32_t j = 1; j <= 2; ++j) {
    // a^j_0 = b_0 and a^j_{r+1} = a_0
    std::vector<std::string> up{"b0"};
    for (std::uint32_t i = 1; i <= r; ++i) up.push_back(sup('a', j, i));
    up.push_back("a0");
    d.path(up);
    // b^j_{r+1} = b_0
    std::vector<std::string> low;
    for (std::uint32_t i = 1; i <= r; ++i) low.push_back(sup('b', j, i));
    low.push_back("b0");
    d.path(low);
  }
  std::vector<std::string> code{idx("a", r + 1), idx("b", r + 1), "a0", "b0"};
  for (std::uint32_t i = 1; i <= r; ++i) {
    code.push_back(sup('a', 1, i));
    code.push_back(sup('b', 1, i));
  }
  Gadget g = d.finish("ic:" + std::to_string(r), {sup('b', 1, 1), sup('b', 2, 1)}, code, {}, r);
  std::vector<Vertex> swap(g.order());
  std::iota(swap.begin(), swap.end(), Vertex{0});
  for (std::uint32_t i = 1; i <= r; ++i)
    for (char c : {'a', 'b'}) {
      const Vertex x = d.at(sup(c, 1, i));
      const Vertex y = d.at(sup(c, 2, i));
      swap[x] = y;
      swap[y] = x;
    }
  g.symmetries.push_back(std::move(swap));
  return g;
}

Gadget parse_gadget(std::string_view text) {
  if (text == "1layered") return gadget_1layered();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown gadget: " + std::string(text));
  const std::string family(text.substr(0, colon));
  const Radius r = Radius::parse(text.substr(colon + 1));
  if (r.is_infinite() || r.value() < 1)
    throw std::invalid_argument("gadget radius must be a positive integer: " + std::string(text));
  if (family == "local0") return gadget_local_0layered(r.value());
  if (family == "ic") return gadget_r_ic(r.value());
  throw std::invalid_argument("unknown gadget: " + std::string(text));
}

Graph b_single_extension(const Gadget& gad) { return extend(gad, 1, {true}, {}); }

Graph b_twin_extension(const Gadget& gad) { return extend(gad, 2, {true, true}, {}); }

Graph random_b_extension(const Gadget& gad, std::size_t extra, std::uint64_t seed) {
  if (extra < 1) throw std::invalid_argument("random_b_extension needs extra >= 1");
  std::mt19937_64 rng(seed);
  std::vector<bool> b_adjacent(extra);
  for (std::size_t f = 0; f < extra; ++f) b_adjacent[f] = draw(rng, 0, 1) == 1;
  if (std::none_of(b_adjacent.begin(), b_adjacent.end(), [](bool b) { return b; }))
    b_adjacent[draw(rng, 0, extra - 1)] = true;

  std::vector<Edge> edges;
  std::vector<std::size_t> comp(extra);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t x = 0; x < extra; ++x)
    for (std::size_t y = x + 1; y < extra; ++y)
      if (draw(rng, 0, 1) == 1) {
        edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
        comp[find(y)] = find(x);
      }
  // Every component must reach H through some B-adjacent vertex.
  auto anchored = [&](std::size_t root) {
    for (std::size_t f = 0; f < extra; ++f)
      if (b_adjacent[f] && find(f) == root) return true;
    return false;
  };
  for (std::size_t x = 0; x < extra; ++x) {
    if (find(x) != x || anchored(x)) continue;
    std::vector<std::size_t> targets;
    for (std::size_t f = 0; f < extra; ++f)
      if (b_adjacent[f]) targets.push_back(f);
    const std::size_t t = targets[draw(rng, 0, targets.size() - 1)];
    edges.emplace_back(static_cast<Vertex>(std::min(x, t)), static_cast<Vertex>(std::max(x, t)));
    comp[find(x)] = find(t);
  }
  return extend(gad, extra, b_adjacent, edges);
}

bool is_b_extension(const Gadget& gad, const Graph& g) {
  const std::size_t h = gad.order();
  if (g.order() < h || !is_connected(g)) return false;
  for (Vertex u = 0; u < h; ++u)
    for (Vertex v = u + 1; v < h; ++v)
      if (g.adjacent(u, v) != gad.h.adjacent(u, v)) return false;
  for (Vertex v = static_cast<Vertex>(h); v < g.order(); ++v) {
    VertexSet inside(h);
    for (Vertex w : g.neighbors(v))
      if (w < h) inside.insert(w);
    if (!inside.empty() && inside != gad.border) return false;
  }
  return true;
}

std::vector<Extension> standard_extension_family(const Gadget& gad, std::size_t random_count,
                                                 std::size_t max_extra, std::uint64_t seed) {
  if (max_extra < 1) throw std::invalid_argument("max_extra must be >= 1");
  std::vector<Extension> out;
  out.push_back({"single", b_single_extension(gad)});
  out.push_back({"twin", b_twin_extension(gad)});
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t extra = 1 + i % max_extra;
    out.push_back({"random" + std::to_string(i + 1) + "+" + std::to_string(extra),
                   random_b_extension(gad, extra, seed + i)});
  }
  return out;
}

std::string to_string(GadgetAxiom a) {
  switch (a) {
    case GadgetAxiom::Ph: return "p_h";
    case GadgetAxiom::Pb: return "p_b";
    case GadgetAxiom::Pd: return "p_d";
    case GadgetAxiom::Ps: return "p_s";
    case GadgetAxiom::Pl: return "p_l";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unchecked: return "unchecked";
    case Verdict::NotClaimed: return "not-claimed";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) {
    return v.verdict == Verdict::Fail || v.verdict == Verdict::Unchecked;
  });
}

namespace {

void fail(AxiomVerdict& v, std::size_t e, const Extension& ext, std::vector<Vertex> vertices,
          std::string detail) {
  if (v.verdict == Verdict::Fail) return;
  v.verdict = Verdict::Fail;
  v.counterexample = AxiomCounterexample{e, ext.name, std::move(vertices), std::move(detail)};
}

bool code_separates(const DistanceMatrix& dm, const IdentifyingProblem& p,
                    const std::vector<Vertex>& code, Vertex x, Vertex y) {
  return std::any_of(code.begin(), code.end(),
                     [&](Vertex c) { return p.distinguishes(dm, c, x, y); });
}

void check_ps(const Gadget& gad, const IdentifyingProblem& p, std::size_t e, const Extension& ext,
              std::uint64_t budget, AxiomVerdict& verdict, std::uint64_t& nodes) {
  const std::size_t h = gad.order();
  const std::size_t need = gad.code.size();
  const ConstraintFamily family = build_constraints(ext.graph, p);
  const SolveResult opt = solve_family(family, budget);
  nodes += opt.nodes;
  if (opt.status == SolveStatus::Infeasible) return;  // no DIS at all
  if (opt.status == SolveStatus::Aborted) {
    if (verdict.verdict == Verdict::Pass) verdict.verdict = Verdict::Unchecked;
    verdict.note = "budget exhausted on " + ext.name;
    return;
  }
  const Enumeration all = enumerate_optimal(family, opt.k, budget);
  nodes += all.nodes;
  for (const auto& s : all.sets) {
    VertexSet inside(ext.graph.order());
    for (Vertex v = 0; v < h; ++v)
      if (s.contains(v)) inside.insert(v);
    if (inside.size() < need) {
      fail(verdict, e, ext, s.to_vector(), "optimal DIS with " + std::to_string(inside.size()) +
                                               " gadget vertices");
      return;
    }
  }
  if (!all.complete) {
    if (verdict.verdict == Verdict::Pass) verdict.verdict = Verdict::Unchecked;
    verdict.note = "enumeration budget exhausted on " + ext.name;
    return;
  }

  // Outside vertices cost nothing: drop what they hit, then minimise inside H.
  ConstraintFamily inner;
  inner.ground_size = h;
  VertexSet outside(ext.graph.order());
  for (Vertex v = static_cast<Vertex>(h); v < ext.graph.order(); ++v) outside.insert(v);
  for (const auto& c : family.constraints) {
    if (c.members.intersects(outside)) continue;
    VertexSet m(h);
    c.members.for_each([&](Vertex v) { m.insert(v); });
    inner.constraints.push_back({c.tag, std::move(m)});
  }
  const SolveResult least = solve_family(inner, budget);
  nodes += least.nodes;
  if (least.status == SolveStatus::Aborted) {
    if (verdict.verdict == Verdict::Pass) verdict.verdict = Verdict::Unchecked;
    verdict.note = "budget exhausted on " + ext.name;
    return;
  }
  if (least.status == SolveStatus::Optimal && least.k < need) {
    std::vector<Vertex> s = least.witness.to_vector();
    outside.for_each([&](Vertex v) { s.push_back(v); });
    fail(verdict, e, ext, std::move(s),
         "DIS with " + std::to_string(least.k) + " gadget vertices");
  }
}

}  // namespace

AxiomReport check_gadget(const Gadget& gad, const IdentifyingProblem& p,
                         std::span<const Extension> family, std::uint64_t budget) {
  AxiomReport report;
  report.gadget = gad.name;
  report.problem = p.name();
  for (std::size_t a = 0; a < report.verdicts.size(); ++a)
    report.verdicts[a].axiom = static_cast<GadgetAxiom>(a);
  auto& ph = report.verdicts[0];
  auto& pb = report.verdicts[1];
  auto& pd = report.verdicts[2];
  auto& ps = report.verdicts[3];
  auto& pl = report.verdicts[4];

  const std::size_t h = gad.order();
  const std::vector<Vertex> code = gad.code.to_vector();
  const Radius r = p.radius();

  for (std::size_t e = 0; e < family.size(); ++e) {
    const Extension& ext = family[e];
    report.family.push_back(ext.name);
    if (!is_b_extension(gad, ext.graph))
      throw std::invalid_argument(ext.name + " is not a B-extension of " + gad.name);
    const Graph& g = ext.graph;
    const std::size_t n = g.order();
    const DistanceMatrix dm(g);

    for (Vertex x = 0; x < h && ph.verdict != Verdict::Fail; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (y == x || (y < h && y < x)) continue;
        if (!code_separates(dm, p, code, x, y)) {
          fail(ph, e, ext, {x, y}, "pair not distinguished by C");
          break;
        }
      }

    VertexSet nb(n);
    for (Vertex v = static_cast<Vertex>(h); v < n; ++v)
      if (g.adjacent(v, gad.border.first().value())) nb.insert(v);
    for (Vertex x = static_cast<Vertex>(h); x < n && pb.verdict != Verdict::Fail; ++x) {
      if (!nb.contains(x)) continue;
      for (Vertex y = static_cast<Vertex>(h); y < n; ++y)
        if (!nb.contains(y) && !code_separates(dm, p, code, x, y)) {
          fail(pb, e, ext, {x, y}, "pair not distinguished by C");
          break;
        }
    }

    VertexSet keep = nb;
    for (Vertex v = 0; v < h; ++v) keep.insert(v);
    const auto [sub, old_id] = g.induced(keep);
    const DistanceMatrix sdm(sub);
    for (Vertex v = 0; v < sub.order(); ++v) {
      // H keeps its ids in the induced subgraph.
      const bool dominated =
          std::any_of(code.begin(), code.end(), [&](Vertex c) { return r.covers(sdm(v, c)); });
      if (!dominated) {
        fail(pd, e, ext, {old_id[v]}, "vertex not dominated within G[V_H + N_B]");
        break;
      }
    }

    check_ps(gad, p, e, ext, budget, ps, report.nodes);
  }
  if (ps.verdict == Verdict::Pass)
    ps.note = "all optimal DIS enumerated; minimum |S ∩ V_H| over all DIS computed";

  if (!gad.meta.local) {
    pl.verdict = Verdict::NotClaimed;
  } else if (r.is_infinite()) {
    pl.verdict = Verdict::NotClaimed;
    pl.note = "local gadgets need a finite radius";
  } else {
    const DistanceMatrix hdm(gad.h);
    for (std::uint32_t k = 1; k <= r.value(); ++k) {
      const bool found = std::any_of(code.begin(), code.end(), [&](Vertex c) {
        return distance_to_set(hdm, c, gad.border) == k - 1;
      });
      if (!found) {
        pl.verdict = Verdict::Fail;
        pl.counterexample = AxiomCounterexample{0, "H", {}, "no code vertex at distance " +
                                                             std::to_string(k - 1) + " from B"};
        break;
      }
    }
  }
  return report;
}

}  // namespace distid
