#include "distid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace distid {

RoleLabel RoleLabel::gadget(std::string copy_tag, std::string local_name) {
  RoleLabel l;
  l.kind = Kind::GadgetVertex;
  l.copy_tag = std::move(copy_tag);
  l.local_name = std::move(local_name);
  return l;
}

RoleLabel RoleLabel::element(std::uint32_t i) {
  RoleLabel l;
  l.kind = Kind::ElementVertex;
  l.i = i;
  return l;
}

RoleLabel RoleLabel::set(std::uint32_t j) {
  RoleLabel l;
  l.kind = Kind::SetVertex;
  l.j = j;
  return l;
}

RoleLabel RoleLabel::set_twin(std::uint32_t j) {
  RoleLabel l;
  l.kind = Kind::SetTwinVertex;
  l.j = j;
  return l;
}

RoleLabel RoleLabel::path(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  RoleLabel l;
  l.kind = Kind::PathVertex;
  l.i = i;
  l.j = j;
  l.k = k;
  return l;
}

RoleLabel RoleLabel::apex() {
  RoleLabel l;
  l.kind = Kind::ApexVertex;
  return l;
}

RoleLabel RoleLabel::apex_path(std::uint32_t k) {
  RoleLabel l;
  l.kind = Kind::ApexPathVertex;
  l.k = k;
  return l;
}

std::string RoleLabel::to_string() const {
  using std::to_string;
  switch (kind) {
    case Kind::Plain: return "plain";
    case Kind::GadgetVertex: return "gadget:" + copy_tag + ":" + local_name;
    case Kind::ElementVertex: return "element:" + to_string(i);
    case Kind::SetVertex: return "set:" + to_string(j);
    case Kind::SetTwinVertex: return "settwin:" + to_string(j);
    case Kind::PathVertex:
      return "path:" + to_string(i) + ":" + to_string(j) + ":" + to_string(k);
    case Kind::ApexVertex: return "apex";
    case Kind::ApexPathVertex: return "apexpath:" + to_string(k);
  }
  return "plain";
}

namespace {

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(':', start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint32_t parse_index(std::string_view s, std::string_view whole) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad index '" + std::string(s) + "' in role '" +
                                std::string(whole) + "'");
  return value;
}

}  // namespace

RoleLabel RoleLabel::parse(std::string_view text) {
  const auto parts = split_colon(text);
  const std::string_view head = parts.front();
  auto want = [&](std::size_t n) {
    if (parts.size() != n)
      throw std::invalid_argument("malformed role '" + std::string(text) + "'");
  };
  if (head == "plain") {
    want(1);
    return plain();
  }
  if (head == "apex") {
    want(1);
    return apex();
  }
  if (head == "gadget") {
    want(3);
    if (parts[1].empty() || parts[2].empty())
      throw std::invalid_argument("malformed role '" + std::string(text) + "'");
    return gadget(std::string(parts[1]), std::string(parts[2]));
  }
  if (head == "element") {
    want(2);
    return element(parse_index(parts[1], text));
  }
  if (head == "set") {
    want(2);
    return set(parse_index(parts[1], text));
  }
  if (head == "settwin") {
    want(2);
    return set_twin(parse_index(parts[1], text));
  }
  if (head == "path") {
    want(4);
    return path(parse_index(parts[1], text), parse_index(parts[2], text),
                parse_index(parts[3], text));
  }
  if (head == "apexpath") {
    want(2);
    return apex_path(parse_index(parts[1], text));
  }
  throw std::invalid_argument("unknown role '" + std::string(text) + "'");
}

Graph::Graph(std::size_t order, std::vector<Edge> edges,
             std::optional<std::vector<RoleLabel>> labels)
    : adjacency_(order), labels_(std::move(labels)) {
  if (labels_ && labels_->size() != order)
    throw std::invalid_argument("label map must cover all " + std::to_string(order) +
                                " vertices, got " + std::to_string(labels_->size()));
  for (auto& [u, v] : edges) {
    if (u >= order || v >= order)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has endpoint outside 0.." + std::to_string(order) + "-1");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  for (const auto& [u, v] : edges) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  edges_ = std::move(edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet Graph::open_neighborhood(Vertex v) const {
  VertexSet s(order());
  for (Vertex w : adjacency_[v]) s.insert(w);
  return s;
}

std::pair<Graph, std::vector<Vertex>> Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> old_of_new = keep.to_vector();
  std::vector<Vertex> new_of_old(order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < old_of_new.size(); ++i)
    new_of_old[old_of_new[i]] = static_cast<Vertex>(i);
  std::vector<Edge> sub;
  for (const auto& [u, v] : edges_)
    if (keep.contains(u) && keep.contains(v)) sub.emplace_back(new_of_old[u], new_of_old[v]);
  std::optional<std::vector<RoleLabel>> sub_labels;
  if (labels_) {
    sub_labels.emplace();
    for (Vertex v : old_of_new) sub_labels->push_back((*labels_)[v]);
  }
  return {Graph(old_of_new.size(), std::move(sub), std::move(sub_labels)), std::move(old_of_new)};
}

Vertex GraphBuilder::add_vertex(RoleLabel label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

Graph GraphBuilder::build() const { return Graph(labels_.size(), edges_, labels_); }

std::vector<Edge> open_twin_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto nu = g.neighbors(u);
      const auto nv = g.neighbors(v);
      if (std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) pairs.emplace_back(u, v);
    }
  return pairs;
}

}  // namespace distid
