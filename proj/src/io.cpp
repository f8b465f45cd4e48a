#include "distid/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace distid {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

/// Non-empty lines split on blanks; `comment` starts a comment anywhere.
std::vector<Line> tokenize(std::string_view text, char comment) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto c = line.find(comment); c != std::string_view::npos) line = line.substr(0, c);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return v;
}

std::int64_t to_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return v;
}

void expect_header(const std::vector<Line>& lines, std::string_view tag, std::size_t arity,
                   const char* usage) {
  if (lines.empty()) throw ParseError(0, std::string("empty input, expected `") + usage + "`");
  const Line& h = lines.front();
  if (h.tokens.front() != tag || h.tokens.size() != arity)
    throw ParseError(h.number, std::string("expected header `") + usage + "`");
}

Vertex vertex_index(std::string_view tok, std::size_t line, std::size_t n) {
  const std::uint64_t v = to_uint(tok, line, "vertex");
  if (v >= n)
    throw ParseError(line, "vertex index " + std::to_string(v) + " out of range 0.." +
                               std::to_string(n == 0 ? 0 : n - 1));
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text, '#');
  expect_header(lines, "g", 3, "g <n> <m>");
  const std::size_t header = lines.front().number;
  const auto n = static_cast<std::size_t>(to_uint(lines.front().tokens[1], header, "n"));
  const auto m = static_cast<std::size_t>(to_uint(lines.front().tokens[2], header, "m"));
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::optional<RoleLabel>> labels(n);
  bool any_label = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens.front() == "label") {
      if (l.tokens.size() != 3) throw ParseError(l.number, "expected `label <v> <role>`");
      const Vertex v = vertex_index(l.tokens[1], l.number, n);
      if (labels[v]) throw ParseError(l.number, "vertex " + std::to_string(v) + " labeled twice");
      try {
        labels[v] = RoleLabel::parse(l.tokens[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(l.number, e.what());
      }
      any_label = true;
      continue;
    }
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected `<u> <v>`");
    const Vertex u = vertex_index(l.tokens[0], l.number, n);
    const Vertex v = vertex_index(l.tokens[1], l.number, n);
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second)
      throw ParseError(l.number, "duplicate edge " + std::to_string(e.first) + " " +
                                     std::to_string(e.second));
    edges.push_back(e);
  }
  if (edges.size() != m)
    throw ParseError(header, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  if (!any_label) return Graph(n, std::move(edges));
  std::vector<RoleLabel> all;
  for (std::size_t v = 0; v < n; ++v) {
    if (!labels[v]) throw ParseError(0, "vertex " + std::to_string(v) + " has no label");
    all.push_back(*labels[v]);
  }
  return Graph(n, std::move(edges), std::move(all));
}

std::string format_graph(const Graph& g) {
  std::string out = "g " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  if (g.has_labels())
    for (Vertex v = 0; v < g.order(); ++v)
      out += "label " + std::to_string(v) + " " + g.label(v).to_string() + "\n";
  return out;
}

HittingSetInstance parse_hs(std::string_view text) {
  const auto lines = tokenize(text, '#');
  expect_header(lines, "hs", 3, "hs <n> <m>");
  const std::size_t header = lines.front().number;
  const auto n = static_cast<std::size_t>(to_uint(lines.front().tokens[1], header, "n"));
  const auto m = static_cast<std::size_t>(to_uint(lines.front().tokens[2], header, "m"));
  if (lines.size() - 1 != m)
    throw ParseError(header, "header announces " + std::to_string(m) + " sets, found " +
                                 std::to_string(lines.size() - 1));
  std::vector<std::vector<HittingSetInstance::Element>> sets;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::vector<HittingSetInstance::Element> s;
    for (auto tok : lines[k].tokens) {
      const std::uint64_t e = to_uint(tok, lines[k].number, "element");
      if (e < 1 || e > n)
        throw ParseError(lines[k].number, "element index " + std::to_string(e) +
                                              " out of range 1.." + std::to_string(n));
      s.push_back(static_cast<HittingSetInstance::Element>(e));
    }
    sets.push_back(std::move(s));
  }
  try {
    return HittingSetInstance(n, std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_hs(const HittingSetInstance& inst) {
  std::string out =
      "hs " + std::to_string(inst.universe_size()) + " " + std::to_string(inst.set_count()) + "\n";
  for (const auto& s : inst.sets()) {
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + std::to_string(s[k]);
    out += "\n";
  }
  return out;
}

Cnf parse_cnf(std::string_view text) {
  // DIMACS comments are whole lines starting with `c`; `%` ends the data.
  std::string cleaned;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const auto first = line.find_first_not_of(" \t\r");
    const bool comment = first != std::string_view::npos && line[first] == 'c';
    if (first != std::string_view::npos && line[first] == '%') break;
    cleaned.append(comment ? std::string_view() : line);
    cleaned.push_back('\n');
    pos = end + 1;
  }
  const auto lines = tokenize(cleaned, '\0');
  if (lines.empty() || lines.front().tokens.front() != "p")
    throw ParseError(lines.empty() ? 0 : lines.front().number, "expected `p cnf <vars> <clauses>`");
  const Line& h = lines.front();
  if (h.tokens.size() != 4 || h.tokens[1] != "cnf")
    throw ParseError(h.number, "expected `p cnf <vars> <clauses>`");
  Cnf cnf;
  cnf.num_vars = static_cast<std::uint32_t>(to_uint(h.tokens[2], h.number, "variable count"));
  const auto declared = static_cast<std::size_t>(to_uint(h.tokens[3], h.number, "clause count"));
  std::vector<int> current;
  std::size_t last_line = h.number;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    last_line = lines[k].number;
    for (auto tok : lines[k].tokens) {
      const std::int64_t lit = to_int(tok, lines[k].number, "literal");
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::uint64_t>(lit < 0 ? -lit : lit) > cnf.num_vars)
        throw ParseError(lines[k].number, "literal " + std::to_string(lit) +
                                              " names a variable outside 1.." +
                                              std::to_string(cnf.num_vars));
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!current.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared)
    throw ParseError(h.number, "header announces " + std::to_string(declared) +
                                   " clauses, found " + std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string format_cnf(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& c : cnf.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

std::vector<std::uint32_t> parse_id_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  for (const auto& l : tokenize(text, '#'))
    for (auto tok : l.tokens) {
      const std::uint64_t v = to_uint(tok, l.number, "index");
      if (v > UINT32_MAX) throw ParseError(l.number, "index " + std::string(tok) + " too large");
      out.push_back(static_cast<std::uint32_t>(v));
    }
  return out;
}

Manifest make_manifest(const ReductionArtifact& art) {
  return Manifest{to_string(art.kind),
                  art.r,
                  art.gadget.name,
                  art.gadget.code.size(),
                  art.copies,
                  art.offset,
                  art.graph.order(),
                  art.instance.universe_size(),
                  art.instance.set_count(),
                  art.equivalence_tested,
                  instance_digest(art.instance)};
}

std::string format_manifest(const Manifest& m) {
  std::ostringstream out;
  out << "kind " << m.kind << "\n"
      << "r " << m.r << "\n"
      << "gadget " << m.gadget << "\n"
      << "code_size " << m.code_size << "\n"
      << "copies " << m.copies << "\n"
      << "offset " << m.offset << "\n"
      << "vertices " << m.vertices << "\n"
      << "n " << m.n << "\n"
      << "m " << m.m << "\n"
      << "equivalence_tested " << (m.equivalence_tested ? "true" : "false") << "\n"
      << "digest " << m.digest << "\n";
  return out.str();
}

Manifest parse_manifest(std::string_view text) {
  static const std::vector<std::string> keys = {"kind",     "r", "gadget", "code_size",
                                                "copies",   "offset", "vertices", "n",
                                                "m",        "equivalence_tested", "digest"};
  std::map<std::string, std::pair<std::string, std::size_t>> values;
  for (const auto& l : tokenize(text, '#')) {
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected `<key> <value>`");
    const std::string key(l.tokens[0]);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(l.number, "unknown manifest key '" + key + "'");
    if (!values.emplace(key, std::pair{std::string(l.tokens[1]), l.number}).second)
      throw ParseError(l.number, "duplicate manifest key '" + key + "'");
  }
  for (const auto& k : keys)
    if (values.count(k) == 0) throw ParseError(0, "manifest lacks key '" + k + "'");
  auto num = [&](const std::string& k) {
    const auto& [v, line] = values.at(k);
    return static_cast<std::size_t>(to_uint(v, line, k.c_str()));
  };
  Manifest m;
  m.kind = values.at("kind").first;
  parse_reduction_kind(m.kind);
  m.r = static_cast<std::uint32_t>(num("r"));
  m.gadget = values.at("gadget").first;
  m.code_size = num("code_size");
  m.copies = num("copies");
  m.offset = num("offset");
  m.vertices = num("vertices");
  m.n = num("n");
  m.m = num("m");
  const auto& [flag, flag_line] = values.at("equivalence_tested");
  if (flag != "true" && flag != "false")
    throw ParseError(flag_line, "equivalence_tested must be true or false");
  m.equivalence_tested = flag == "true";
  m.digest = values.at("digest").first;
  return m;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string instance_digest(const HittingSetInstance& inst) { return fnv1a_hex(format_hs(inst)); }

std::string format_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (g.has_labels()) out += " [label=\"" + g.label(v).to_string() + "\"]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace distid
