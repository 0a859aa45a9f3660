#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hampow/acceptance.hpp"
#include "hampow/error.hpp"
#include "hampow/euler.hpp"
#include "hampow/families.hpp"
#include "hampow/power.hpp"
#include "hampow/report.hpp"
#include "hampow/theorem.hpp"

using namespace hampow;

namespace {

enum Exit : int { kOk = 0, kInvalidInput = 2, kViolation = 3, kBudget = 4 };

struct Options {
  std::string in;
  std::string format;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t cycle_cap = kDefaultCycleCap;
  std::uint64_t circuit_budget = kDefaultCircuitBudget;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t cycles = 0;
  double density = 0;
  std::size_t limit = 10'000;
  std::string roles_path;
  std::string trace_path;
  std::string checks;
  bool no_exact = false;
};

Digraph load(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return read_edge_list_file(path);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  return f;
}

bool records(const Options& o) { return o.format == "records"; }

void emit_graph(const Options& o, const Digraph& g, const std::vector<std::string>& comments = {}) {
  if (o.format == "dot") write_dot(std::cout, g);
  else write_edge_list(std::cout, g, comments);
}

Record vertices_record(const std::vector<Vertex>& vs) { return Record(vs); }

Record walks_record(const std::vector<Walk>& walks) {
  Record out = Record::array();
  for (const auto& w : walks) out.push_back(vertices_record(w.vertices));
  return out;
}

void emit(const Options& o, const Record& rec) {
  if (records(o)) write_records(std::cout, {rec});
  else write_record_table(std::cout, rec);
}

int emit_bound(const Options& o, const BoundReport& r) {
  if (records(o)) write_records(std::cout, {to_record(r)});
  else write_bound_table(std::cout, {r});
  return r.holds ? kOk : kViolation;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return kOk;
    case Verdict::kFalse: return kViolation;
    case Verdict::kIndeterminate: return kBudget;
  }
  return kBudget;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExhausted:
    case ErrorCode::kGenerationFailed:
      return kBudget;
    default:
      return kInvalidInput;
  }
}

// Subcommand actions.

int gen_gk(const Options& o) {
  const auto gk = generate_gk(o.k);
  if (!o.roles_path.empty()) {
    auto f = open_out(o.roles_path);
    write_roles(f, gk.roles);
  }
  if (o.format == "dot") write_gk_dot(std::cout, gk);
  else write_edge_list(std::cout, gk.graph, corpus_comments("gk", "k=" + std::to_string(o.k), std::nullopt));
  return kOk;
}

int gen_random_eulerian(const Options& o) {
  const auto g = random_eulerian(o.n, o.cycles, o.seed);
  emit_graph(o, g,
             corpus_comments("random-eulerian", "n=" + std::to_string(o.n) + " cycles=" + std::to_string(o.cycles), o.seed));
  return kOk;
}

int gen_random_dag(const Options& o) {
  const auto g = random_dag(o.n, o.density, o.seed);
  std::ostringstream params;
  params << "n=" << o.n << " density=" << o.density;
  emit_graph(o, g, corpus_comments("random-dag", params.str(), o.seed));
  return kOk;
}

int check_eulerian(const Options& o) {
  const auto g = load(o.in);
  const bool ok = is_eulerian(g);
  Record rec;
  rec["check"] = "eulerian";
  rec["n"] = g.vertex_count();
  rec["m"] = g.edge_count();
  rec["balanced"] = is_balanced(g);
  rec["strongly_connected"] = is_strongly_connected(g);
  rec["verdict"] = ok;
  emit(o, rec);
  return ok ? kOk : kViolation;
}

int check_minimal(const Options& o) {
  const auto g = load(o.in);
  const auto r = is_minimally_eulerian(g, o.cycle_cap);
  Record rec;
  rec["check"] = "minimal";
  rec["n"] = g.vertex_count();
  rec["m"] = g.edge_count();
  rec["verdict"] = std::string(to_string(r.verdict));
  rec["witness"] = r.witness ? vertices_record(r.witness->vertices) : Record(nullptr);
  rec["cycles_examined"] = r.cycles_examined;
  emit(o, rec);
  return verdict_exit(r.verdict);
}

int reduce(const Options& o) {
  const auto g = load(o.in);
  const auto r = reduce_to_minimally_eulerian(g, o.cycle_cap);
  if (!o.trace_path.empty()) {
    auto f = open_out(o.trace_path);
    write_walks(f, r.trace);
  }
  if (records(o)) {
    Record rec;
    rec["command"] = "reduce";
    rec["n"] = g.vertex_count();
    rec["m_before"] = g.edge_count();
    rec["m_after"] = r.graph.edge_count();
    rec["removed"] = walks_record(r.trace);
    write_records(std::cout, {rec});
  } else {
    emit_graph(o, r.graph);
  }
  return kOk;
}

int decompose_cmd(const Options& o) {
  const auto g = load(o.in);
  const auto d = decompose(g);
  if (records(o)) {
    Record rec;
    rec["command"] = "decompose";
    rec["p_sharp"] = p_sharp(g);
    rec["dipaths"] = walks_record(d.dipaths);
    rec["dicycles"] = walks_record(d.dicycles);
    write_records(std::cout, {rec});
  } else {
    write_decomposition(std::cout, d);
  }
  return kOk;
}

int power_cmd(const Options& o) {
  emit_graph(o, power(load(o.in), o.k));
  return kOk;
}

int exponent_cmd(const Options& o) {
  const auto g = load(o.in);
  if (g.vertex_count() < 2 || !is_strongly_connected(g)) {
    throw Error(ErrorCode::kInvalidArgument, "the exponent needs a strongly connected digraph on at least 2 vertices");
  }
  try {
    const auto r = ham_exponent(g, o.node_budget);
    if (records(o)) {
      Record rec;
      rec["command"] = "exponent";
      rec["n"] = g.vertex_count();
      rec["m"] = g.edge_count();
      rec["h"] = r->h;
      rec["cycle"] = vertices_record(r->certificate.cycle);
      Record hops = Record::array();
      for (const auto& hop : r->certificate.hops) hops.push_back(vertices_record(hop));
      rec["hops"] = hops;
      rec["verified"] = verify_certificate(g, r->certificate);
      write_records(std::cout, {rec});
    } else {
      std::cout << "h=" << r->h << '\n';
      write_certificate(std::cout, r->certificate);
    }
    return kOk;
  } catch (const ExponentBudgetExhausted& e) {
    Record rec;
    rec["command"] = "exponent";
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    rec["h"] = nullptr;
    rec["bracket"] = {e.lo(), e.hi()};
    emit(o, rec);
    return kBudget;
  }
}

int thm21_search(const Options& o) {
  const auto g = load(o.in);
  const auto r = lexmin_decomposition(g, o.circuit_budget);
  const auto bound = check_thm21(g, r.decomposition);
  if (records(o)) {
    Record rec;
    rec["command"] = "thm21-search";
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    rec["exact"] = r.exact;
    rec["circuits"] = r.circuits;
    rec["ordering"] = vertices_record(r.decomposition.ordering);
    Record paths = Record::array();
    for (const auto& p : r.decomposition.paths) paths.push_back(vertices_record(p));
    rec["paths"] = paths;
    rec["lengths"] = r.decomposition.lengths_descending();
    rec["vertex_simple"] = r.decomposition.all_vertex_simple();
    write_records(std::cout, {rec, to_record(bound)});
  } else {
    std::cout << "exact: " << (r.exact ? "yes" : "no") << " (" << r.circuits << " circuits)\n";
    std::cout << "ordering:";
    for (Vertex v : r.decomposition.ordering) std::cout << ' ' << v;
    std::cout << '\n';
    for (const auto& p : r.decomposition.paths) std::cout << format_walk(Walk{WalkKind::kDipath, p}) << '\n';
    write_bound_table(std::cout, {bound});
  }
  return bound.holds ? kOk : kViolation;
}

int bounds_prop12(const Options& o) { return emit_bound(o, check_prop12(load(o.in))); }

int bounds_prop13(const Options& o) {
  const auto g = load(o.in);
  const auto minimal = is_minimally_eulerian(g, o.cycle_cap);
  if (minimal.verdict == Verdict::kIndeterminate) {
    throw Error(ErrorCode::kBudgetExhausted, "minimality undecided within the cycle cap");
  }
  if (minimal.verdict == Verdict::kFalse) {
    throw Error(ErrorCode::kNotMinimallyEulerian, "input is not minimally Eulerian");
  }
  return emit_bound(o, prop13_bound(g.vertex_count(), g.edge_count()));
}

int bounds_threshold(const Options& o) {
  const auto scan = threshold_scan(o.limit);
  emit(o, to_record(scan));
  return scan.violations.empty() ? kOk : kViolation;
}

int certify(const Options& o) {
  const auto c = certify_gk(o.k, o.node_budget, o.cycle_cap, !o.no_exact);
  emit(o, to_record(c));
  if (!c.claims_hold()) return kViolation;
  return c.exact == ExactStatus::kIndeterminate ? kBudget : kOk;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream in(s);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

int batch_acceptance(const Options& o, bool checks_given) {
  AcceptanceOptions opts;
  opts.seed = o.seed;
  opts.cycle_cap = o.cycle_cap;
  opts.circuit_budget = o.circuit_budget;
  opts.node_budget = o.node_budget;
  const auto ids = checks_given ? split_ids(o.checks) : acceptance_check_ids();
  const auto report = run_batch(ids, opts);
  if (records(o)) write_records(std::cout, batch_records(report));
  else write_batch_table(std::cout, report);
  return report.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian powers of Eulerian digraphs"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto input = [&](CLI::App* cmd) { cmd->add_option("--in", o.in, "edge-list file, - for stdin")->required(); };
  // Each subcommand sets its own default format once it is selected.
  auto format = [&](CLI::App* cmd, std::vector<std::string> choices, std::string def) {
    cmd->add_option("--format", o.format, "output format: " + CLI::detail::join(choices, "|") + " (default " + def + ")")
        ->check(CLI::IsMember(choices));
    cmd->preparse_callback([&o, def](std::size_t) { o.format = def; });
  };
  auto node_budget = [&](CLI::App* cmd) {
    cmd->add_option("--node-budget", o.node_budget, "Hamiltonicity node expansions per test")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto cycle_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cycle-cap", o.cycle_cap, "dicycle enumeration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto circuit_budget = [&](CLI::App* cmd) {
    cmd->add_option("--circuit-budget", o.circuit_budget, "Euler circuit search budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto on = [&](CLI::App* cmd, std::function<int(const Options&)> fn) {
    cmd->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
  };

  auto* gen = app.add_subcommand("gen", "generate a digraph")->require_subcommand(1);
  {
    auto* cmd = gen->add_subcommand("gk", "the lower-bound family G_k");
    cmd->add_option("--k", o.k, "family parameter, at least 4")->required();
    cmd->add_option("--roles", o.roles_path, "also write one u/v role per vertex to this file");
    format(cmd, {"edges", "dot"}, "edges");
    on(cmd, gen_gk);
  }
  {
    auto* cmd = gen->add_subcommand("random-eulerian", "union of random dicycles");
    cmd->add_option("--n", o.n)->required();
    cmd->add_option("--cycles", o.cycles)->required();
    cmd->add_option("--seed", o.seed)->required();
    format(cmd, {"edges", "dot"}, "edges");
    on(cmd, gen_random_eulerian);
  }
  {
    auto* cmd = gen->add_subcommand("random-dag", "random acyclic digraph");
    cmd->add_option("--n", o.n)->required();
    cmd->add_option("--density", o.density)->required()->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", o.seed)->required();
    format(cmd, {"edges", "dot"}, "edges");
    on(cmd, gen_random_dag);
  }

  auto* check = app.add_subcommand("check", "decide a predicate")->require_subcommand(1);
  {
    auto* cmd = check->add_subcommand("eulerian", "balanced and strongly connected");
    input(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, check_eulerian);
  }
  {
    auto* cmd = check->add_subcommand("minimal", "no dicycle can be removed keeping the graph connected");
    input(cmd);
    cycle_cap(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, check_minimal);
  }
  {
    auto* cmd = app.add_subcommand("reduce", "remove dicycles until minimally Eulerian");
    input(cmd);
    cycle_cap(cmd);
    cmd->add_option("--trace", o.trace_path, "write the removed dicycles to this file");
    format(cmd, {"edges", "dot", "records"}, "edges");
    on(cmd, reduce);
  }
  {
    auto* cmd = app.add_subcommand("decompose", "p# dipaths plus dicycles");
    input(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, decompose_cmd);
  }
  {
    auto* cmd = app.add_subcommand("power", "the k-th power");
    input(cmd);
    cmd->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    format(cmd, {"edges", "dot"}, "edges");
    on(cmd, power_cmd);
  }
  {
    auto* cmd = app.add_subcommand("exponent", "least k with a Hamiltonian k-th power");
    input(cmd);
    node_budget(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, exponent_cmd);
  }
  auto* thm21 = app.add_subcommand("thm21", "cyclic path decompositions")->require_subcommand(1);
  {
    auto* cmd = thm21->add_subcommand("search", "lexicographically smallest path decomposition");
    input(cmd);
    circuit_budget(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, thm21_search);
  }
  auto* bounds = app.add_subcommand("bounds", "evaluate an edge or exponent bound")->require_subcommand(1);
  {
    auto* cmd = bounds->add_subcommand("prop12", "edge bound for acyclic digraphs");
    input(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, bounds_prop12);
  }
  {
    auto* cmd = bounds->add_subcommand("prop13", "edge bound for minimally Eulerian digraphs");
    input(cmd);
    cycle_cap(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, bounds_prop13);
  }
  {
    auto* cmd = bounds->add_subcommand("threshold", "scan f(n) >= n-1");
    cmd->add_option("--limit", o.limit)->capture_default_str();
    format(cmd, {"table", "records"}, "table");
    on(cmd, bounds_threshold);
  }
  auto* cert = app.add_subcommand("certify", "check a family's stated properties")->require_subcommand(1);
  {
    auto* cmd = cert->add_subcommand("gk", "certify G_k");
    cmd->add_option("--k", o.k)->required();
    cmd->add_flag("--no-exact", o.no_exact, "skip the exact exponent");
    node_budget(cmd);
    cycle_cap(cmd);
    format(cmd, {"table", "records"}, "table");
    on(cmd, certify);
  }
  auto* batch = app.add_subcommand("batch", "run check suites")->require_subcommand(1);
  CLI::Option* checks_opt = nullptr;
  {
    auto* cmd = batch->add_subcommand("acceptance", "the acceptance suite");
    cmd->add_option("--seed", o.seed, "corpus seed")->required();
    checks_opt = cmd->add_option("--checks", o.checks, "comma-separated check ids (empty: none)");
    cycle_cap(cmd);
    circuit_budget(cmd);
    cmd->preparse_callback([&o](std::size_t) {
      o.format = "table";
      o.node_budget = AcceptanceOptions{}.node_budget;
      o.circuit_budget = AcceptanceOptions{}.circuit_budget;
    });
    cmd->add_option("--node-budget", o.node_budget, "Hamiltonicity node expansions per test")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "records"}));
    cmd->callback([&] { action = [&] { return batch_acceptance(o, checks_opt->count() > 0); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}
