#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace distid {

/// Hitting Set instance: universe {1..n} and a family of non-empty subsets
/// whose union covers the universe. Elements are 1-based throughout.
class HittingSetInstance {
 public:
  using Element = std::uint32_t;

  /// Sorts and deduplicates each set. Throws std::invalid_argument when a
  /// set is empty, an element is out of range, or an element is uncovered.
  HittingSetInstance(std::size_t universe_size, std::vector<std::vector<Element>> sets);

  std::size_t universe_size() const { return n_; }
  std::size_t set_count() const { return sets_.size(); }
  /// Set S_j for j in 1..m.
  const std::vector<Element>& set(std::size_t j) const { return sets_.at(j - 1); }
  const std::vector<std::vector<Element>>& sets() const { return sets_; }
  /// Total number of (element, set) incidences.
  std::size_t membership_count() const;

  bool is_hitting_set(std::span<const Element> elements) const;

  friend bool operator==(const HittingSetInstance&, const HittingSetInstance&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<Element>> sets_;
};

/// Formula in conjunctive normal form, DIMACS literal convention.
struct Cnf {
  std::uint32_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Random instance whose incidence graph is outerplanar: elements and sets
/// sit on a circle and memberships are non-crossing chords. Every element
/// and every set gets at least one membership, and the incidence graph is
/// connected. Requires n, m >= 1.
HittingSetInstance random_planar_instance(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random instance with membership probability `percent`, patched so every
/// element is covered and every set is non-empty. Not planar in general.
HittingSetInstance random_instance(std::size_t n, std::size_t m, unsigned percent,
                                   std::uint64_t seed);

/// Universe {1,2,3,4} with sets {1,2} and {2,3,4}.
HittingSetInstance worked_example_instance();

}  // namespace distid
