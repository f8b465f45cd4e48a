#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "distid/graph.hpp"

namespace distid {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Disjoint union; vertices of b are shifted by a.order(). Labels are dropped.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Deterministic test corpus.
///
/// The stream starts with the named families on at most max_n vertices
/// (paths, cycles, complete graphs, path plus an isolated vertex) and is
/// filled up to `count` graphs with random graphs drawn from `seed`.
/// Requires 1 <= max_n <= 9.
std::vector<Graph> enumerate_small_graphs(std::size_t max_n, std::uint64_t seed,
                                          std::size_t count);

/// Every labeled graph on 1..max_n vertices. Requires max_n <= 6.
std::vector<Graph> all_graphs_up_to(std::size_t max_n);

/// Uniform integer in [lo, hi] from raw engine output; platform independent
/// unlike std::uniform_int_distribution.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

inline constexpr std::uint64_t kStandardCorpusSeed = 0x5eed1d5;

/// Every labeled graph on at most 5 vertices followed by
/// enumerate_small_graphs(7, kStandardCorpusSeed, 200).
std::vector<Graph> standard_corpus();

}  // namespace distid
