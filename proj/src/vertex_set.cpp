#include "distid/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace distid {

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe));
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~Word{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0)
    s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

std::optional<Vertex> VertexSet::next(Vertex from) const {
  if (from >= universe_) return std::nullopt;
  std::size_t i = from / kWordBits;
  Word w = words_[i] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0)
      return static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    if (++i == words_.size()) return std::nullopt;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace distid
