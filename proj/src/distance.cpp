#include "distid/distance.hpp"

#include <charconv>
#include <stdexcept>

namespace distid {

std::string Radius::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

Radius Radius::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "\xE2\x88\x9E") return infinite();
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v == kInfinite)
    throw std::invalid_argument("bad radius '" + std::string(text) + "'");
  return finite(v);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_, kUnreachable) {
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    Distance* row = &dist_[s * n_];
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
}

VertexSet closed_ball(const DistanceMatrix& dm, Vertex v, Radius r) {
  VertexSet ball(dm.order());
  for (Vertex w = 0; w < dm.order(); ++w)
    if (r.covers(dm(v, w))) ball.insert(w);
  return ball;
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.order(), kNone);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (comp[w] == kNone) {
          comp[w] = s;
          stack.push_back(w);
        }
    }
  }
  return comp;
}

bool is_connected(const Graph& g) {
  const auto comp = connected_components(g);
  for (auto c : comp)
    if (c != 0) return false;
  return true;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> color(g.order(), kNone);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != kNone) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == kNone) {
          color[w] = static_cast<std::uint8_t>(1 - color[u]);
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Distance distance_to_set(const DistanceMatrix& dm, Vertex v, const VertexSet& x) {
  Distance best = kUnreachable;
  x.for_each([&](Vertex w) {
    if (dm(v, w) < best) best = dm(v, w);
  });
  return best;
}

}  // namespace distid
