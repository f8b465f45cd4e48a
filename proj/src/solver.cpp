#include "distid/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace distid {

std::string ConstraintTag::to_string() const {
  switch (kind) {
    case Kind::Dominate: return "dominate(" + std::to_string(u) + ")";
    case Kind::Distinguish:
      return "distinguish(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Kind::Cover: return "cover(" + std::to_string(u) + ")";
  }
  return "?";
}

std::string DisViolation::to_string() const {
  if (kind == Kind::Undominated) return "undominated " + std::to_string(u);
  return "undistinguished " + std::to_string(u) + " " + std::to_string(v);
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Aborted: return "aborted";
  }
  return "?";
}

ConstraintFamily build_constraints(const DistanceMatrix& dm, const IdentifyingProblem& p) {
  const std::size_t n = dm.order();
  ConstraintFamily family{n, {}};
  family.constraints.reserve(n + n * (n - (n > 0 ? 1 : 0)) / 2);
  for (Vertex v = 0; v < n; ++v)
    family.constraints.push_back(
        {{ConstraintTag::Kind::Dominate, v, 0}, closed_ball(dm, v, p.radius())});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet members(n);
      for (Vertex w = 0; w < n; ++w)
        if (p.distinguishes(dm, w, u, v)) members.insert(w);
      family.constraints.push_back({{ConstraintTag::Kind::Distinguish, u, v}, std::move(members)});
    }
  return family;
}

ConstraintFamily build_constraints(const Graph& g, const IdentifyingProblem& p) {
  return build_constraints(DistanceMatrix(g), p);
}

DisCheck is_dis(const DistanceMatrix& dm, const IdentifyingProblem& p, const VertexSet& c) {
  const std::size_t n = dm.order();
  if (c.universe() != n) throw std::invalid_argument("is_dis: vertex set universe differs from graph order");
  const std::vector<Vertex> code = c.to_vector();
  const Radius r = p.radius();
  for (Vertex v = 0; v < n; ++v) {
    const bool dominated =
        std::any_of(code.begin(), code.end(), [&](Vertex w) { return r.covers(dm(v, w)); });
    if (!dominated) return {false, DisViolation{DisViolation::Kind::Undominated, v, 0}};
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool separated = std::any_of(code.begin(), code.end(),
                                         [&](Vertex w) { return p.distinguishes(dm, w, u, v); });
      if (!separated) return {false, DisViolation{DisViolation::Kind::Undistinguished, u, v}};
    }
  return {true, std::nullopt};
}

DisCheck is_dis(const Graph& g, const IdentifyingProblem& p, const VertexSet& c) {
  return is_dis(DistanceMatrix(g), p, c);
}

namespace {

/// Deduplicated, superset-free constraint list sorted by size.
std::vector<VertexSet> reduce_constraints(const ConstraintFamily& family) {
  std::vector<VertexSet> sets;
  sets.reserve(family.constraints.size());
  for (const auto& c : family.constraints) sets.push_back(c.members);
  std::vector<std::size_t> sizes(sets.size());
  std::vector<std::vector<Vertex>> keys(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    sizes[i] = sets[i].size();
    keys[i] = sets[i].to_vector();
  }
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return keys[a] < keys[b];
  });
  std::vector<VertexSet> kept;
  for (std::size_t idx : order) {
    const VertexSet& s = sets[idx];
    const bool subsumed = std::any_of(kept.begin(), kept.end(),
                                      [&](const VertexSet& k) { return k.is_subset_of(s); });
    if (!subsumed) kept.push_back(s);
  }
  return kept;
}

/// Branch-and-bound over a reduced constraint list.
class Engine {
 public:
  Engine(std::size_t ground, std::vector<VertexSet> constraints, std::uint64_t budget)
      : ground_(ground), cons_(std::move(constraints)), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

  /// Smallest hitting set strictly smaller than `bound`, if any.
  std::optional<VertexSet> minimize(std::size_t bound) {
    mode_ = Mode::Minimize;
    best_size_ = bound;
    best_.reset();
    search(VertexSet(ground_), VertexSet(ground_), 0);
    return best_;
  }

  /// Whether some hitting set of size <= limit contains `forced` and avoids
  /// `excluded`.
  bool feasible(const VertexSet& forced, const VertexSet& excluded, std::size_t limit) {
    mode_ = Mode::Decide;
    best_size_ = limit + 1;
    best_.reset();
    search(forced, excluded, forced.size());
    return best_.has_value();
  }

  std::vector<VertexSet> enumerate(std::size_t k) {
    mode_ = Mode::Enumerate;
    best_size_ = k + 1;
    found_.clear();
    search(VertexSet(ground_), VertexSet(ground_), 0);
    return found_;
  }

 private:
  enum class Mode { Minimize, Decide, Enumerate };

  bool done() const { return aborted_ || (mode_ == Mode::Decide && best_.has_value()); }

  void search(VertexSet chosen, VertexSet excluded, std::size_t count) {
    if (done()) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    // Unit propagation; also locates the branching constraint.
    const VertexSet* branch = nullptr;
    VertexSet branch_avail;
    std::vector<const VertexSet*> open;
    bool changed = true;
    while (changed) {
      changed = false;
      branch = nullptr;
      open.clear();
      std::size_t branch_size = 0;
      for (const auto& c : cons_) {
        if (c.intersects(chosen)) continue;
        VertexSet avail = c - excluded;
        const std::size_t sz = avail.size();
        if (sz == 0) return;
        if (sz == 1) {
          chosen.insert(*avail.first());
          ++count;
          changed = true;
          break;
        }
        open.push_back(&c);
        if (branch == nullptr || sz < branch_size) {
          branch = &c;
          branch_size = sz;
          branch_avail = std::move(avail);
        }
      }
      if (count >= best_size_) return;
    }
    if (branch == nullptr) {
      record(chosen, count);
      return;
    }
    // Pairwise disjoint open constraints each need their own member.
    std::size_t lower = 0;
    VertexSet used(ground_);
    for (const VertexSet* c : open) {
      VertexSet avail = *c - excluded;
      if (!avail.intersects(used)) {
        ++lower;
        used |= avail;
      }
    }
    if (count + lower >= best_size_) return;

    for (auto e = branch_avail.first(); e; e = branch_avail.next(*e + 1)) {
      if (done() || count + 1 >= best_size_) return;
      VertexSet next = chosen;
      next.insert(*e);
      search(std::move(next), excluded, count + 1);
      excluded.insert(*e);
    }
  }

  void record(const VertexSet& chosen, std::size_t count) {
    switch (mode_) {
      case Mode::Minimize:
      case Mode::Decide:
        best_ = chosen;
        best_size_ = count;
        break;
      case Mode::Enumerate:
        if (count + 1 == best_size_) found_.push_back(chosen);
        break;
    }
  }

  std::size_t ground_;
  std::vector<VertexSet> cons_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  Mode mode_ = Mode::Minimize;
  std::size_t best_size_ = 0;
  std::optional<VertexSet> best_;
  std::vector<VertexSet> found_;
};

std::optional<ConstraintTag> first_empty(const ConstraintFamily& family) {
  for (const auto& c : family.constraints)
    if (c.members.empty()) return c.tag;
  return std::nullopt;
}

/// Lexicographically smallest hitting set of size k, built one member at a
/// time: the next member is the smallest vertex that still admits a
/// completion of size k using only larger vertices.
std::optional<VertexSet> canonical_optimum(Engine& engine, std::size_t ground, std::size_t k) {
  VertexSet prefix(ground);
  VertexSet below(ground);  // vertices skipped so far
  Vertex lo = 0;
  for (std::size_t step = 0; step < k; ++step) {
    bool placed = false;
    for (Vertex v = lo; v < ground; ++v) {
      VertexSet forced = prefix;
      forced.insert(v);
      if (engine.feasible(forced, below, k)) {
        prefix = std::move(forced);
        lo = v + 1;
        placed = true;
        break;
      }
      if (engine.aborted()) return std::nullopt;
      below.insert(v);
    }
    if (!placed) return std::nullopt;
  }
  return prefix;
}

}  // namespace

std::optional<VertexSet> greedy_hitting_set(const ConstraintFamily& family) {
  if (first_empty(family)) return std::nullopt;
  const std::size_t n = family.ground_size;
  VertexSet chosen(n);
  std::vector<const VertexSet*> open;
  for (const auto& c : family.constraints) open.push_back(&c.members);
  while (!open.empty()) {
    std::vector<std::size_t> score(n, 0);
    for (const VertexSet* c : open) c->for_each([&](Vertex w) { ++score[w]; });
    const auto best = static_cast<Vertex>(
        std::max_element(score.begin(), score.end()) - score.begin());
    chosen.insert(best);
    std::erase_if(open, [&](const VertexSet* c) { return c->contains(best); });
  }
  // Reverse deletion of redundant members, largest id first.
  auto members = chosen.to_vector();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    VertexSet without = chosen;
    without.erase(*it);
    const bool still = std::all_of(family.constraints.begin(), family.constraints.end(),
                                   [&](const Constraint& c) { return c.members.intersects(without); });
    if (still) chosen = std::move(without);
  }
  return chosen;
}

SolveResult solve_family(const ConstraintFamily& family, std::uint64_t budget) {
  SolveResult result;
  result.witness = VertexSet(family.ground_size);
  if (auto tag = first_empty(family)) {
    result.status = SolveStatus::Infeasible;
    result.empty_constraint = tag;
    return result;
  }
  const VertexSet greedy = *greedy_hitting_set(family);
  Engine engine(family.ground_size, reduce_constraints(family), budget);

  VertexSet incumbent = greedy;
  if (auto better = engine.minimize(greedy.size())) incumbent = std::move(*better);
  result.nodes = engine.nodes();
  result.k = incumbent.size();
  result.witness = incumbent;
  result.has_witness = true;
  if (engine.aborted()) {
    result.status = SolveStatus::Aborted;
    return result;
  }
  auto canonical = canonical_optimum(engine, family.ground_size, result.k);
  result.nodes = engine.nodes();
  if (!canonical) {
    result.status = SolveStatus::Aborted;
    return result;
  }
  result.status = SolveStatus::Optimal;
  result.witness = std::move(*canonical);
  return result;
}

Enumeration enumerate_optimal(const ConstraintFamily& family, std::size_t k,
                              std::uint64_t budget) {
  Enumeration out;
  if (first_empty(family)) return out;
  Engine engine(family.ground_size, reduce_constraints(family), budget);
  out.sets = engine.enumerate(k);
  out.nodes = engine.nodes();
  out.complete = !engine.aborted();
  std::sort(out.sets.begin(), out.sets.end(), lex_less);
  return out;
}

SolveResult min_dis(const Graph& g, const IdentifyingProblem& p, std::uint64_t budget) {
  return solve_family(build_constraints(g, p), budget);
}

std::optional<VertexSet> greedy_dis(const Graph& g, const IdentifyingProblem& p) {
  return greedy_hitting_set(build_constraints(g, p));
}

ConstraintFamily hitting_set_constraints(const HittingSetInstance& inst) {
  ConstraintFamily family{inst.universe_size(), {}};
  for (std::size_t j = 1; j <= inst.set_count(); ++j) {
    VertexSet members(inst.universe_size());
    for (auto e : inst.set(j)) members.insert(e - 1);
    family.constraints.push_back(
        {{ConstraintTag::Kind::Cover, static_cast<Vertex>(j), 0}, std::move(members)});
  }
  return family;
}

SolveResult min_hitting_set(const HittingSetInstance& inst, std::uint64_t budget) {
  return solve_family(hitting_set_constraints(inst), budget);
}

std::vector<HittingSetInstance::Element> witness_elements(const VertexSet& witness) {
  std::vector<HittingSetInstance::Element> out;
  witness.for_each([&](Vertex v) { out.push_back(v + 1); });
  return out;
}

}  // namespace distid
