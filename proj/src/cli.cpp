#include "distid/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "distid/corpus.hpp"
#include "distid/gadgets.hpp"
#include "distid/io.hpp"
#include "distid/problems.hpp"
#include "distid/reductions.hpp"
#include "distid/solver.hpp"

namespace distid {

namespace {

inline constexpr std::uint64_t kDefaultExtensionSeed = 0x9a5e7;

struct Options {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultExtensionSeed;
  std::string problem;
  std::string graph;
  std::string hs;
  std::string cnf;
  std::string set;
  std::string kind;
  std::string gadget;
  std::uint32_t r = 1;
  std::string out;
  std::string dot;
  std::string axiom;
  std::size_t random = 10;
  std::size_t max_extra = 4;
  std::size_t corpus_random = 0;
  bool exact = false;
  bool solve = false;
};

template <class Range>
std::string join(const Range& items) {
  std::string s;
  for (const auto& x : items) {
    s += ' ';
    s += std::to_string(x);
  }
  return s;
}

std::string edges_text(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) s += (s.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
  return s.empty() ? "none" : s;
}

/// Vertex ids from the `--set` file, checked against the graph order.
VertexSet read_vertex_set(const std::string& path, std::size_t n) {
  VertexSet s(n);
  for (std::uint32_t v : parse_id_list(read_text_file(path))) {
    if (v >= n)
      throw ParseError(0, path + ": vertex index " + std::to_string(v) + " out of range 0.." +
                              std::to_string(n - 1));
    s.insert(v);
  }
  return s;
}

ReductionArtifact load_artifact(const Options& o) {
  const auto inst = parse_hs(read_text_file(o.hs));
  return build_reduction(parse_reduction_kind(o.kind), parse_gadget(o.gadget), o.r, inst);
}

int report_status(std::ostream& out, const SolveResult& res) {
  out << "status " << to_string(res.status) << "\n";
  if (res.status == SolveStatus::Infeasible) {
    if (res.empty_constraint) out << "empty_constraint " << res.empty_constraint->to_string() << "\n";
    return kExitNegative;
  }
  out << "k " << res.k << "\n";
  if (res.has_witness) out << "witness" << join(res.witness.to_vector()) << "\n";
  out << "nodes " << res.nodes << "\n";
  return res.status == SolveStatus::Aborted ? kExitAborted : kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto p = parse_problem(o.problem);
  const Graph g = parse_graph(read_text_file(o.graph));
  out << "problem " << p.name() << "\n" << "vertices " << g.order() << "\n";
  const SolveResult res = min_dis(g, p, o.budget);
  const int code = report_status(out, res);
  if (!o.out.empty() && res.has_witness) write_text_file(o.out, join(res.witness.to_vector()).substr(1) + "\n");
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto p = parse_problem(o.problem);
  const Graph g = parse_graph(read_text_file(o.graph));
  const VertexSet s = read_vertex_set(o.set, g.order());
  const DisCheck check = is_dis(g, p, s);
  out << "problem " << p.name() << "\n" << "size " << s.size() << "\n";
  out << "valid " << (check.valid ? "true" : "false") << "\n";
  if (!check.valid) out << "violation " << check.violation->to_string() << "\n";
  return check.valid ? kExitOk : kExitNegative;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const ReductionArtifact art = load_artifact(o);
  if (!o.problem.empty()) require_compatible(art, parse_problem(o.problem));
  const Manifest m = make_manifest(art);
  out << format_manifest(m);
  out << "edges " << art.graph.edge_count() << "\n";
  out << "bound " << vertex_bound(art) << "\n";
  if (!o.out.empty()) {
    write_text_file(o.out + ".g", format_graph(art.graph));
    write_text_file(o.out + ".manifest", format_manifest(m));
  }
  if (!o.dot.empty()) write_text_file(o.dot, format_dot(art.graph));
  return kExitOk;
}

int cmd_lift(const Options& o, std::ostream& out) {
  const ReductionArtifact art = load_artifact(o);
  std::vector<HittingSetInstance::Element> hs;
  for (std::uint32_t e : parse_id_list(read_text_file(o.set))) {
    if (e < 1 || e > art.instance.universe_size())
      throw ParseError(0, o.set + ": element index " + std::to_string(e) + " out of range 1.." +
                              std::to_string(art.instance.universe_size()));
    hs.push_back(e);
  }
  const VertexSet lifted = lift_hitting_set(art, hs);
  out << "offset " << art.offset << "\n" << "lift_size " << lifted.size() << "\n";
  if (!o.problem.empty()) {
    const auto p = parse_problem(o.problem);
    require_compatible(art, p);
    out << "lift_valid " << (is_dis(art.graph, p, lifted).valid ? "true" : "false") << "\n";
  }
  out << "dis" << join(lifted.to_vector()) << "\n";
  if (!o.out.empty()) write_text_file(o.out, join(lifted.to_vector()).substr(1) + "\n");
  return kExitOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const ReductionArtifact art = load_artifact(o);
  const auto p = parse_problem(o.problem);
  const VertexSet dis = read_vertex_set(o.set, art.graph.order());
  const auto hs = extract_hitting_set(art, p, dis);
  const bool hits = art.instance.is_hitting_set(hs);
  out << "dis_size " << dis.size() << "\n" << "offset " << art.offset << "\n";
  out << "extract_size " << hs.size() << "\n";
  out << "extract_valid " << (hits ? "true" : "false") << "\n";
  out << "size_bound_ok " << (hs.size() + art.offset <= dis.size() ? "true" : "false") << "\n";
  out << "hitting_set" << join(hs) << "\n";
  return hits ? kExitOk : kExitNegative;
}

int cmd_gadget_check(const Options& o, std::ostream& out) {
  const Gadget gad = parse_gadget(o.gadget);
  const auto p = parse_problem(o.problem);
  const auto family = standard_extension_family(gad, o.random, o.max_extra, o.seed);
  const AxiomReport rep = check_gadget(gad, p, family, o.budget);
  out << "gadget " << rep.gadget << "\n" << "problem " << rep.problem << "\n";
  out << "order " << gad.order() << "\n" << "code_size " << gad.code.size() << "\n";
  out << "extensions " << family.size() << "\n";
  bool failed = false;
  bool unchecked = false;
  for (const auto& v : rep.verdicts) {
    out << to_string(v.axiom) << " " << to_string(v.verdict) << "\n";
    failed |= v.verdict == Verdict::Fail;
    unchecked |= v.verdict == Verdict::Unchecked;
    if (v.counterexample)
      out << "counterexample " << to_string(v.axiom) << " extension=" << v.counterexample->extension_name
          << " vertices=" << join(v.counterexample->vertices).substr(v.counterexample->vertices.empty() ? 0 : 1)
          << "\n";
  }
  out << "nodes " << rep.nodes << "\n";
  return failed ? kExitNegative : unchecked ? kExitAborted : kExitOk;
}

int cmd_trait_check(const Options& o, std::ostream& out) {
  const auto p = parse_problem(o.problem);
  std::vector<Graph> corpus = standard_corpus();
  if (o.corpus_random > 0) {
    auto extra = enumerate_small_graphs(7, o.seed, o.corpus_random);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  }
  std::vector<AxiomQuery> queries;
  if (!o.axiom.empty()) {
    queries.push_back(AxiomQuery::parse(o.axiom));
  } else {
    for (const auto& t : p.claimed_traits())
      for (const auto& q : axioms_of(t)) queries.push_back(q);
  }
  out << "problem " << p.name() << "\n";
  std::string claims;
  for (const auto& t : p.claimed_traits()) claims += " " + t.to_string();
  out << "claims" << claims << "\n";
  out << "corpus " << corpus.size() << "\n";
  bool all = true;
  for (const auto& q : queries) {
    const TraitReport rep = check_trait(p, q, corpus);
    out << q.to_string() << " " << (rep.holds ? "holds" : "fails") << "\n";
    if (rep.counterexample) {
      const auto& c = *rep.counterexample;
      out << "counterexample " << q.to_string() << " graph=" << c.graph_index << " n=" << c.graph.order()
          << " edges=" << edges_text(c.graph) << " w=" << c.w << " u=" << c.u << " v=" << c.v << "\n";
    }
    all &= rep.holds;
  }
  return all ? kExitOk : kExitNegative;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  const ReductionArtifact art = load_artifact(o);
  const auto p = parse_problem(o.problem);
  require_compatible(art, p);
  out << "kind " << to_string(art.kind) << "\n" << "gadget " << art.gadget.name << "\n";
  out << "problem " << p.name() << "\n" << "vertices " << art.graph.order() << "\n";
  out << "offset " << art.offset << "\n";
  out << "equivalence_tested " << (art.equivalence_tested ? "true" : "false") << "\n";

  const SolveResult hs = min_hitting_set(art.instance, o.budget);
  if (hs.status != SolveStatus::Optimal) {
    out << "hs_status " << to_string(hs.status) << "\n";
    return hs.status == SolveStatus::Aborted ? kExitAborted : kExitNegative;
  }
  const auto elements = witness_elements(hs.witness);
  out << "hs_opt " << hs.k << "\n" << "hs_witness" << join(elements) << "\n";

  const VertexSet lifted = lift_hitting_set(art, elements);
  const bool lift_valid = is_dis(art.graph, p, lifted).valid;
  out << "lift_size " << lifted.size() << "\n";
  out << "lift_expected " << hs.k + art.offset << "\n";
  out << "lift_valid " << (lift_valid ? "true" : "false") << "\n";
  bool ok = lift_valid && lifted.size() == hs.k + art.offset;
  if (lift_valid) {
    const auto back = extract_hitting_set(art, p, lifted);
    const bool hits = art.instance.is_hitting_set(back);
    out << "extract_size " << back.size() << "\n";
    out << "extract_valid " << (hits ? "true" : "false") << "\n";
    ok = ok && hits && back.size() + art.offset <= lifted.size();
  }
  int code = kExitOk;
  if (o.exact) {
    const SolveResult dis = min_dis(art.graph, p, o.budget);
    out << "dis_status " << to_string(dis.status) << "\n";
    if (dis.status == SolveStatus::Optimal) {
      out << "dis_opt " << dis.k << "\n";
      ok = ok && dis.k == hs.k + art.offset;
    } else if (dis.status == SolveStatus::Aborted) {
      code = kExitAborted;
    } else {
      ok = false;
    }
  }
  out << "verdict " << (ok ? "ok" : "violated") << "\n";
  return ok ? code : kExitNegative;
}

int cmd_sat2hs(const Options& o, std::ostream& out) {
  const Cnf cnf = parse_cnf(read_text_file(o.cnf));
  const auto inst = sat_to_hitting_set(cnf);
  out << "vars " << cnf.num_vars << "\n" << "clauses " << cnf.clauses.size() << "\n";
  out << "n " << inst.universe_size() << "\n" << "m " << inst.set_count() << "\n";
  out << "digest " << instance_digest(inst) << "\n";
  if (!o.out.empty()) write_text_file(o.out, format_hs(inst));
  if (!o.solve) return kExitOk;
  const SolveResult res = min_hitting_set(inst, o.budget);
  out << "status " << to_string(res.status) << "\n";
  if (res.status != SolveStatus::Optimal) return kExitAborted;
  out << "k " << res.k << "\n";
  out << "satisfiable " << (res.k == cnf.num_vars ? "true" : "false") << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance identifying sets: exact solver, gadgets and hardness reductions", "distid"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "Node budget of every exact search")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed of randomized extension families and corpora")->capture_default_str();

  auto problem = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--problem", o.problem, "ic:<r>, ld:<r>, md:<r> or md:inf");
    if (required) opt->required();
  };
  auto reduction = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "distance-id, apex or compressed")->required();
    c->add_option("--gadget", o.gadget, "1layered, local0:<r> or ic:<r>")->required();
    c->add_option("--r", o.r, "Radius of the construction (ignored by apex)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    c->add_option("--hs", o.hs, "Hitting Set instance file")->required()->check(CLI::ExistingFile);
  };

  auto* solve = app.add_subcommand("solve", "Minimum distance identifying set of a graph");
  problem(solve, true);
  solve->add_option("--graph", o.graph, "Graph file")->required()->check(CLI::ExistingFile);
  solve->add_option("--out", o.out, "Write the witness vertex ids here");

  auto* verify = app.add_subcommand("verify", "Check a vertex set against a problem");
  problem(verify, true);
  verify->add_option("--graph", o.graph, "Graph file")->required()->check(CLI::ExistingFile);
  verify->add_option("--set", o.set, "File of vertex ids")->required()->check(CLI::ExistingFile);

  auto* reduce = app.add_subcommand("reduce", "Build a reduction graph and its manifest");
  reduction(reduce);
  problem(reduce, false);
  reduce->add_option("--out", o.out, "Write <out>.g and <out>.manifest");
  reduce->add_option("--dot", o.dot, "Write a DOT dump of the graph");

  auto* lift = app.add_subcommand("lift", "Lift a hitting set to a vertex set of the reduction");
  reduction(lift);
  problem(lift, false);
  lift->add_option("--set", o.set, "File of 1-based elements")->required()->check(CLI::ExistingFile);
  lift->add_option("--out", o.out, "Write the lifted vertex ids here");

  auto* extract = app.add_subcommand("extract", "Recover a hitting set from a DIS of the reduction");
  reduction(extract);
  problem(extract, true);
  extract->add_option("--set", o.set, "File of vertex ids")->required()->check(CLI::ExistingFile);

  auto* gcheck = app.add_subcommand("gadget-check", "Check the gadget axioms over an extension family");
  gcheck->add_option("--gadget", o.gadget, "1layered, local0:<r> or ic:<r>")->required();
  problem(gcheck, true);
  gcheck->add_option("--random", o.random, "Random extensions in the family")->capture_default_str();
  gcheck->add_option("--max-extra", o.max_extra, "Largest number of extra vertices")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* tcheck = app.add_subcommand("trait-check", "Test axioms exhaustively over the corpus");
  problem(tcheck, true);
  tcheck->add_option("--axiom", o.axiom, "alpha, beta1:<i>, beta2:<i> or gamma:<i>; default: every claim");
  tcheck->add_option("--random", o.corpus_random, "Seeded random graphs appended to the corpus")
      ->capture_default_str();

  auto* rt = app.add_subcommand("roundtrip", "Solve, lift, verify and extract on one instance");
  reduction(rt);
  problem(rt, true);
  rt->add_flag("--exact", o.exact, "Also solve the reduction graph exactly");

  auto* sat = app.add_subcommand("sat2hs", "Translate a DIMACS CNF into a Hitting Set instance");
  sat->add_option("--cnf", o.cnf, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  sat->add_option("--out", o.out, "Write the instance here");
  sat->add_flag("--solve", o.solve, "Solve the instance and decide satisfiability");

  std::vector<const char*> argv{"distid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*lift) return cmd_lift(o, out);
    if (*extract) return cmd_extract(o, out);
    if (*gcheck) return cmd_gadget_check(o, out);
    if (*tcheck) return cmd_trait_check(o, out);
    if (*rt) return cmd_roundtrip(o, out);
    if (*sat) return cmd_sat2hs(o, out);
  } catch (const std::exception& e) {
    err << "distid: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace distid
