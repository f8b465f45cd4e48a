#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distid/graph.hpp"
#include "distid/instances.hpp"
#include "distid/reductions.hpp"

namespace distid {

/// Malformed input; line() is 1-based, 0 when the problem is the whole file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph: `g <n> <m>`, m lines `<u> <v>` (0-based), then `label <v> <role>`.
Graph parse_graph(std::string_view text);
/// Canonical form: sorted edges, labels in vertex order, LF endings.
std::string format_graph(const Graph& g);

// Hitting set: `hs <n> <m>`, then m lines of 1-based elements.
HittingSetInstance parse_hs(std::string_view text);
std::string format_hs(const HittingSetInstance& inst);

// DIMACS CNF: `c` comments, `p cnf <vars> <clauses>`, 0-terminated clauses.
Cnf parse_cnf(std::string_view text);
std::string format_cnf(const Cnf& cnf);

/// Whitespace-separated non-negative integers, `#` comments.
std::vector<std::uint32_t> parse_id_list(std::string_view text);

struct Manifest {
  std::string kind;
  std::uint32_t r = 1;
  std::string gadget;
  std::size_t code_size = 0;
  std::size_t copies = 0;
  std::size_t offset = 0;
  std::size_t vertices = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool equivalence_tested = true;
  std::string digest;  // instance_digest of the source instance

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

Manifest make_manifest(const ReductionArtifact& art);
/// `key value` lines in a fixed order.
std::string format_manifest(const Manifest& m);
Manifest parse_manifest(std::string_view text);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);
/// fnv1a_hex of format_hs(inst).
std::string instance_digest(const HittingSetInstance& inst);

/// Plain structural DOT dump; labels become node names' `label` attribute.
std::string format_dot(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace distid
