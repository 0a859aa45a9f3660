#include "hampow/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "hampow/error.hpp"
#include "hampow/families.hpp"
#include "hampow/power.hpp"
#include "hampow/theorem.hpp"

namespace hampow {

std::size_t BatchReport::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

std::size_t BatchReport::failed() const { return results.size() - passed(); }

namespace {

// Independent sub-seed for the i-th member of a corpus.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  Rng rng(seed ^ (stream * 0x9E3779B97F4A7C15ULL) ^ (index * 0xBF58476D1CE4E5B9ULL));
  return rng.below(std::numeric_limits<std::uint64_t>::max());
}

struct Tally {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++violations;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

CheckResult finish(std::string id, std::string title, const Tally& t, std::string detail) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.cases = t.cases;
  r.violations = t.violations;
  r.passed = t.violations == 0 && t.cases > 0;
  r.detail = t.first_failure.empty() ? std::move(detail) : detail + "; first failure: " + t.first_failure;
  return r;
}

std::string describe_cert(const GkCertificate& c) {
  std::ostringstream s;
  s << "n=" << c.params.n << " m=" << c.params.m << " minimal=" << to_string(c.minimally_eulerian)
    << " min_v_dist=" << c.min_v_distance << " ceil(k/2)+1=" << c.half_k_claim << " floor(sqrt(n)/2)+1=" << c.sqrt_claim
    << " lower_bound=" << c.lower_bound << " exact=" << to_string(c.exact);
  if (c.exponent) s << " h=" << *c.exponent << " certificate=" << (c.certificate_verified ? "verified" : "REJECTED");
  else s << " bracket=[" << c.bracket_lo << "," << c.bracket_hi << "]";
  return s.str();
}

CheckResult check_g4(const AcceptanceOptions& o) {
  Tally t;
  const auto gk = generate_gk(4);
  t.expect(gk.graph.vertex_count() == 19 && gk.graph.edge_count() == 46, "G_4 is not 19 vertices / 46 edges");
  const auto c = certify_gk(4, o.node_budget, o.cycle_cap, true);
  t.expect(c.minimally_eulerian == Verdict::kTrue, "G_4 not certified minimally Eulerian");
  t.expect(c.v_degrees_unit, "some v-vertex lacks degrees (1,1)");
  t.expect(c.min_v_distance == 3 && c.half_k_claim == 3 && c.sqrt_claim == 3 && c.distance_claim == 3,
           "v-distance claims differ from 3");
  t.expect(c.pigeonhole && c.lower_bound >= 3, "lower bound h >= 3 not certified");
  t.expect(c.exact == ExactStatus::kComputed && c.exponent.has_value(), "exact exponent not computed");
  t.expect(c.certificate_verified, "exponent certificate rejected");
  t.expect(c.exponent && *c.exponent >= c.lower_bound, "exact exponent below the lower bound");
  t.expect(c.claims_hold(), "certificate record reports a failed claim");
  return finish("01-g4-certificate", "G_4 extremal certificate", t, describe_cert(c));
}

CheckResult check_g5(const AcceptanceOptions& o) {
  Tally t;
  const auto c = certify_gk(5, o.node_budget, o.cycle_cap, true);
  t.expect(c.params.n == 29 && c.params.m == 85 && c.counts_match, "G_5 is not 29 vertices / 85 edges");
  t.expect(c.min_v_distance == 4 && c.half_k_claim == 4 && c.distance_claim == 4, "min v-distance differs from 4");
  t.expect(c.pigeonhole && c.lower_bound >= 4, "lower bound h >= 4 not certified");
  t.expect(c.minimally_eulerian == Verdict::kTrue && c.v_degrees_unit, "G_5 structural claim failed");
  t.expect(c.exact != ExactStatus::kComputed || (c.certificate_verified && *c.exponent >= 4),
           "exact attempt contradicts the lower bound");
  return finish("02-g5-lower-bound", "G_5 lower bound", t, describe_cert(c));
}

CheckResult check_prop12_suite(const AcceptanceOptions& o) {
  Tally t;
  std::size_t exhaustive = 0;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    std::vector<Edge> edges;
    std::uint32_t bit = 0;
    for (Vertex u = 0; u < 4; ++u) {
      for (Vertex v = 0; v < 4; ++v) {
        if (u == v) continue;
        if (mask & (1u << bit)) edges.emplace_back(u, v);
        ++bit;
      }
    }
    const auto g = Digraph::build(4, edges);
    if (!is_acyclic(g)) continue;
    ++exhaustive;
    t.expect(check_prop12(g).holds, "4-vertex mask " + std::to_string(mask));
  }
  const auto dags = dag_corpus(o.seed, 1002);
  for (std::size_t i = 0; i < dags.size(); ++i) {
    t.expect(check_prop12(dags[i]).holds, "random DAG #" + std::to_string(i));
  }
  return finish("03-prop12", "Acyclic size bound", t,
                std::to_string(exhaustive) + " acyclic 4-vertex digraphs, " + std::to_string(dags.size()) +
                    " random DAGs (n<=40, densities 0.1/0.3/0.7)");
}

std::vector<Reduction> reduced_corpus(const AcceptanceOptions& o) {
  std::vector<Reduction> out;
  for (const auto& g : eulerian_corpus(o.seed, 200)) out.push_back(reduce_to_minimally_eulerian(g, o.cycle_cap));
  return out;
}

CheckResult check_prop13_suite(const AcceptanceOptions& o) {
  Tally t;
  const auto graphs = eulerian_corpus(o.seed, 200);
  std::size_t removed = 0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto red = reduce_to_minimally_eulerian(graphs[i], o.cycle_cap);
    removed += red.trace.size();
    largest = std::max(largest, red.graph.edge_count());
    const auto minimal = is_minimally_eulerian(red.graph, o.cycle_cap);
    t.expect(minimal.verdict == Verdict::kTrue, "reduced graph #" + std::to_string(i) + " not minimally Eulerian");
    t.expect(prop13_bound(red.graph.vertex_count(), red.graph.edge_count()).holds,
             "minimal size bound fails on #" + std::to_string(i));
  }
  return finish("04-prop13", "Minimally Eulerian size bound", t,
                std::to_string(graphs.size()) + " random Eulerian digraphs (n<=20) reduced, " + std::to_string(removed) +
                    " dicycles removed, largest minimal m=" + std::to_string(largest));
}

CheckResult check_decomposition_suite(const AcceptanceOptions& o) {
  std::vector<Digraph> corpus = dag_corpus(o.seed, 300);
  for (auto& g : eulerian_corpus(o.seed, 200)) {
    corpus.push_back(g);
    corpus.push_back(reduce_to_minimally_eulerian(g, o.cycle_cap).graph);
  }
  for (auto& g : strongly_connected_corpus(o.seed, 200)) corpus.push_back(std::move(g));
  corpus.push_back(generate_gk(4).graph);
  corpus.push_back(generate_gk(5).graph);
  return check_decomposition_counts(corpus, [](const Digraph& g) { return p_sharp(g); });
}

bool subset_of(const Digraph& a, const Digraph& b) {
  for (const auto& [u, v] : a.edges()) {
    if (!b.has_edge(u, v)) return false;
  }
  return true;
}

CheckResult check_power_suite(const AcceptanceOptions& o) {
  Tally t;
  const auto graphs = strongly_connected_corpus(o.seed, 200);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const std::string tag = " on #" + std::to_string(i);
    t.expect(power(g, 1) == g, "G^1 != G" + tag);
    std::vector<Digraph> powers{g};
    for (std::size_t k = 2; k <= 9; ++k) powers.push_back(power(g, k));
    for (std::size_t k = 1; k <= 5; ++k) {
      t.expect(subset_of(powers[k - 1], powers[k]), "A(G^" + std::to_string(k) + ") not nested" + tag);
    }
    for (std::size_t a = 1; a <= 3; ++a) {
      for (std::size_t b = 1; b <= 3; ++b) {
        t.expect(power(powers[a - 1], b) == powers[a * b - 1],
                 "(G^" + std::to_string(a) + ")^" + std::to_string(b) + " != G^" + std::to_string(a * b) + tag);
      }
    }
  }
  return finish("06-power-laws", "Power laws", t, std::to_string(graphs.size()) + " strongly connected digraphs, n<=12");
}

CheckResult check_exponent_suite(const AcceptanceOptions& o) {
  Tally t;
  const auto graphs = strongly_connected_corpus(o.seed, 120);
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const std::string tag = " on #" + std::to_string(i);
    const auto h = ham_exponent(g, kDefaultNodeBudget);
    if (g.vertex_count() < 2) continue;
    t.expect(h.has_value(), "no exponent" + tag);
    if (!h) continue;
    ++histogram[h->h];
    t.expect(h->h == linear_scan_exponent(g), "binary search disagrees with linear scan" + tag);
    t.expect(verify_certificate(g, h->certificate), "certificate rejected" + tag);
    t.expect(h->h <= g.vertex_count() - 1, "h > n-1" + tag);
    if (is_hamiltonian(g).verdict == Verdict::kTrue) t.expect(h->h == 1, "Hamiltonian but h != 1" + tag);
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    const auto cycle = Digraph::build(n, edges);
    const auto h = ham_exponent(cycle);
    t.expect(h && h->h == 1 && verify_certificate(cycle, h->certificate), "h(C_" + std::to_string(n) + ") != 1");
  }
  std::ostringstream detail;
  detail << graphs.size() << " random strongly connected digraphs (n<=12) + cycles C_3..C_12; exponent histogram:";
  for (const auto& [h, count] : histogram) detail << ' ' << h << ':' << count;
  return finish("07-exponent-oracle", "Exponent oracle equivalence", t, detail.str());
}

CheckResult check_thm21_suite(const AcceptanceOptions& o) {
  Tally t;
  std::size_t instances = 0;
  std::size_t exact = 0;
  std::size_t oracle_skipped = 0;
  std::size_t non_simple = 0;
  for (const auto& red : reduced_corpus(o)) {
    const Digraph& g = red.graph;
    if (g.vertex_count() > 9) continue;
    ++instances;
    const std::string tag = " (n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
    const auto best = lexmin_decomposition(g, o.circuit_budget);
    if (best.exact) ++exact;
    if (!best.decomposition.all_vertex_simple()) ++non_simple;
    const auto defect = decomposition_defect(g, best.decomposition);
    t.expect(!defect, "invalid decomposition" + tag + ": " + defect.value_or(""));
    if (defect) continue;
    const Walk circuit = concatenate(best.decomposition);
    t.expect(is_valid_walk(g, circuit), "concatenation is not an Euler circuit" + tag);
    t.expect(check_thm21(g, best.decomposition).holds, "path length bound fails" + tag);

    const auto reselected = occurrence_select(g, circuit);
    t.expect(!decomposition_defect(g, reselected.decomposition), "occurrence_select round trip invalid" + tag);
    t.expect(reselected.decomposition.lengths_descending() == best.decomposition.lengths_descending(),
             "re-selection on the best circuit changed the length vector" + tag);

    for (const Walk& c : {circuit, euler_circuit(g)}) {
      const auto selection = occurrence_select(g, c);
      const auto oracle = exhaustive_best_lengths(c, g.vertex_count(), 20'000'000);
      if (oracle.empty()) {
        ++oracle_skipped;
        continue;
      }
      t.expect(selection.exact && selection.decomposition.lengths_descending() == oracle,
               "exact selection differs from exhaustive enumeration" + tag);
    }
  }
  return finish("08-thm21-structure", "Decomposition structure at tiny scale", t,
                std::to_string(instances) + " minimally Eulerian instances with n<=9, " + std::to_string(exact) +
                    " searched exhaustively, " + std::to_string(non_simple) + " best decompositions with a repeated vertex, " +
                    std::to_string(oracle_skipped) + " oracle comparisons skipped");
}

CheckResult check_threshold(const AcceptanceOptions&) {
  Tally t;
  const auto scan = threshold_scan(10'000);
  for (std::size_t n = 2; n <= kThresholdClaim; ++n) t.expect(f_bound(n) >= n - 1, "f_bound(" + std::to_string(n) + ") < n-1");
  t.expect(scan.violations.empty(), "scan reports violations");
  t.expect(scan.first_failure.has_value(), "no failure found below 10000");
  return finish("09-threshold", "Threshold reproduction", t,
                "f_bound(n) >= n-1 on [2," + std::to_string(kThresholdClaim) + "]; first n with f_bound(n) < n-1: " +
                    (scan.first_failure ? std::to_string(*scan.first_failure) : std::string("none")));
}

using CheckFn = CheckResult (*)(const AcceptanceOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"01-g4-certificate", check_g4},
      {"02-g5-lower-bound", check_g5},
      {"03-prop12", check_prop12_suite},
      {"04-prop13", check_prop13_suite},
      {"05-decomposition-count", check_decomposition_suite},
      {"06-power-laws", check_power_suite},
      {"07-exponent-oracle", check_exponent_suite},
      {"08-thm21-structure", check_thm21_suite},
      {"09-threshold", check_threshold},
  };
  return checks;
}

}  // namespace

std::vector<std::string> acceptance_check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

CheckResult run_acceptance_check(const std::string& id, const AcceptanceOptions& options) {
  for (const auto& [known, fn] : registry()) {
    if (known != id) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = fn(options);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown acceptance check \"" + id + "\"");
}

BatchReport run_batch(const std::vector<std::string>& ids, const AcceptanceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<CheckResult>> pending;
  for (const auto& id : ids) {
    pending.push_back(std::async(std::launch::async, [&options, id] {
      try {
        return run_acceptance_check(id, options);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInvalidArgument) throw;
        CheckResult r;
        r.id = id;
        r.title = "aborted";
        r.violations = 1;
        r.detail = e.what();
        return r;
      }
    }));
  }
  BatchReport report;
  for (auto& f : pending) report.results.push_back(f.get());
  std::sort(report.results.begin(), report.results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Record> batch_records(const BatchReport& report) {
  std::vector<Record> out;
  for (const auto& r : report.results) {
    Record rec;
    rec["check"] = r.id;
    rec["title"] = r.title;
    rec["passed"] = r.passed;
    rec["cases"] = r.cases;
    rec["violations"] = r.violations;
    rec["detail"] = r.detail;
    out.push_back(std::move(rec));
  }
  Record total;
  total["check"] = "aggregate";
  total["passed"] = report.passed();
  total["failed"] = report.failed();
  out.push_back(std::move(total));
  return out;
}

void write_batch_table(std::ostream& out, const BatchReport& report) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1);
  for (const auto& r : report.results) {
    s << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(26) << r.id << std::right << std::setw(8)
      << r.cases << " cases " << std::setw(4) << r.violations << " violations " << std::setw(10) << r.elapsed_ms
      << " ms  " << r.detail << '\n';
  }
  s << "aggregate: " << report.passed() << " passed, " << report.failed() << " failed, " << report.elapsed_ms
    << " ms wall-clock\n";
  out << s.str();
}

std::vector<Digraph> eulerian_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<Digraph> out;
  Rng shape(derive_seed(seed, 1, 0));
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const auto n = static_cast<std::size_t>(shape.between(3, 20));
    const std::size_t cycles = std::max<std::size_t>(1, n / 2) + static_cast<std::size_t>(shape.below(2));
    try {
      out.push_back(random_eulerian(n, cycles, derive_seed(seed, 2, i)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGenerationFailed) throw;
    }
  }
  return out;
}

std::vector<Digraph> dag_corpus(std::uint64_t seed, std::size_t count) {
  static constexpr double kDensities[] = {0.1, 0.3, 0.7};
  std::vector<Digraph> out;
  Rng shape(derive_seed(seed, 3, 0));
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(shape.between(1, 40));
    out.push_back(random_dag(n, kDensities[i % 3], derive_seed(seed, 4, i)));
  }
  return out;
}

std::vector<Digraph> strongly_connected_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<Digraph> out;
  Rng shape(derive_seed(seed, 5, 0));
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(shape.between(2, 12));
    const auto extra = static_cast<std::size_t>(shape.below(n + 1));
    out.push_back(random_strongly_connected(n, extra, derive_seed(seed, 6, i)));
  }
  return out;
}

CheckResult check_decomposition_counts(const std::vector<Digraph>& corpus, const PSharpFn& count_fn) {
  Tally t;
  std::size_t eulerian = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    const std::string tag = " on #" + std::to_string(i);
    const auto d = decompose(g);
    t.expect(d.dipaths.size() == count_fn(g), "dipath count != p_sharp" + tag);
    std::vector<const Walk*> all;
    bool walks_valid = true;
    for (const auto& w : d.dipaths) {
      all.push_back(&w);
      walks_valid = walks_valid && is_valid_walk(g, w);
    }
    for (const auto& w : d.dicycles) {
      all.push_back(&w);
      walks_valid = walks_valid && is_valid_walk(g, w);
    }
    t.expect(walks_valid, "invalid dipath or dicycle" + tag);
    t.expect(covers_edges_exactly(g, all), "edge multiset not preserved" + tag);
    if (is_eulerian(g)) {
      ++eulerian;
      const auto circuit = euler_circuit(g);
      t.expect(is_valid_walk(g, circuit) && circuit.length() == g.edge_count(), "Euler circuit incomplete" + tag);
    }
  }
  return finish("05-decomposition-count", "Decomposition count oracle", t,
                std::to_string(corpus.size()) + " corpus digraphs, " + std::to_string(eulerian) + " Eulerian");
}

std::size_t linear_scan_exponent(const Digraph& g) {
  for (std::size_t k = 1; k < g.vertex_count(); ++k) {
    if (is_hamiltonian(power(g, k)).verdict == Verdict::kTrue) return k;
  }
  return 0;
}

std::vector<std::size_t> exhaustive_best_lengths(const Walk& circuit, std::size_t n, std::uint64_t limit) {
  const std::size_t m = circuit.length();
  std::vector<std::vector<std::size_t>> occ(n);
  for (std::size_t p = 0; p < m; ++p) occ[circuit.vertices[p]].push_back(p);
  std::uint64_t combos = 1;
  for (const auto& o : occ) {
    if (o.empty()) return {};
    combos *= o.size();
    if (combos > limit) return {};
  }
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::size_t> best;
  while (true) {
    std::vector<std::size_t> positions;
    for (std::size_t v = 0; v < n; ++v) positions.push_back(occ[v][choice[v]]);
    std::sort(positions.begin(), positions.end());
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < n; ++i) {
      lengths.push_back((i + 1 < n ? positions[i + 1] : positions[0] + m) - positions[i]);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    if (best.empty() || lengths < best) best = lengths;
    std::size_t v = 0;
    while (v < n && ++choice[v] == occ[v].size()) choice[v++] = 0;
    if (v == n) break;
  }
  return best;
}

}  // namespace hampow
