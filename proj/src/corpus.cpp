#include "distid/corpus.hpp"

#include <stdexcept>

namespace distid {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), std::move(edges));
}

std::vector<Graph> enumerate_small_graphs(std::size_t max_n, std::uint64_t seed,
                                          std::size_t count) {
  if (max_n < 1 || max_n > 9) throw std::invalid_argument("max_n must lie in 1..9");
  std::vector<Graph> out;
  auto push = [&](Graph g) {
    if (out.size() < count) out.push_back(std::move(g));
  };
  for (std::size_t n = 1; n <= max_n; ++n) push(path_graph(n));
  for (std::size_t n = 3; n <= max_n; ++n) push(cycle_graph(n));
  for (std::size_t n = 4; n <= max_n; ++n) push(complete_graph(n));
  for (std::size_t n = 2; n <= max_n; ++n) push(disjoint_union(path_graph(n - 1), path_graph(1)));

  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(draw(rng, 1, max_n));
    const auto density = draw(rng, 15, 85);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (draw(rng, 0, 99) < density) edges.emplace_back(u, v);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

std::vector<Graph> all_graphs_up_to(std::size_t max_n) {
  if (max_n > 6) throw std::invalid_argument("exhaustive enumeration limited to 6 vertices");
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if ((mask >> b) & 1U) edges.push_back(slots[b]);
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

std::vector<Graph> standard_corpus() {
  std::vector<Graph> out = all_graphs_up_to(5);
  for (auto& g : enumerate_small_graphs(7, kStandardCorpusSeed, 200)) out.push_back(std::move(g));
  return out;
}

}  // namespace distid
