#include "hampow/theorem.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hampow/error.hpp"

namespace hampow {

namespace {

__extension__ typedef unsigned __int128 Wide;

bool near_integer(long double x, long double tolerance) {
  const long double frac = x - std::floor(x);
  return frac < tolerance || frac > 1.0L - tolerance;
}

}  // namespace

std::uint64_t f_bound(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "f_bound needs n >= 1");
  if (n == 1) return 0;
  if (std::has_single_bit(n)) {
    const auto a = static_cast<std::uint64_t>(std::countr_zero(n));
    // sqrt(2^a) is an integer only for even a; odd a is irrational.
    if (a % 2 == 0) return a * a * (std::uint64_t{1} << (a / 2)) / 2;
  }
  const long double log2n = std::log2(static_cast<long double>(n));
  const long double value = 0.5L * std::sqrt(static_cast<long double>(n)) * log2n * log2n;
  if (!near_integer(value, 1e-6L)) return static_cast<std::uint64_t>(std::ceil(value));
  using boost::multiprecision::cpp_bin_float_100;
  const cpp_bin_float_100 big_n(n);
  const cpp_bin_float_100 lg = log(big_n) / log(cpp_bin_float_100(2));
  const cpp_bin_float_100 precise = sqrt(big_n) * lg * lg / 2;
  return static_cast<std::uint64_t>(ceil(precise));
}

ThresholdScan threshold_scan(std::size_t limit) {
  if (limit <= kThresholdClaim) {
    throw Error(ErrorCode::kInvalidArgument, "threshold scan limit must exceed " + std::to_string(kThresholdClaim));
  }
  ThresholdScan scan;
  scan.limit = limit;
  for (std::size_t n = 2; n <= limit; ++n) {
    if (f_bound(n) >= n - 1) continue;
    if (n <= kThresholdClaim) scan.violations.push_back(n);
    if (!scan.first_failure) scan.first_failure = n;
  }
  return scan;
}

std::string_view to_string(BoundName name) {
  switch (name) {
    case BoundName::kProp12: return "Prop1.2";
    case BoundName::kProp13: return "Prop1.3";
    case BoundName::kThm11: return "Thm1.1";
    case BoundName::kThm21Length: return "Thm2.1-len";
  }
  return "?";
}

std::optional<BoundName> bound_name_from_string(std::string_view s) {
  for (auto name : {BoundName::kProp12, BoundName::kProp13, BoundName::kThm11, BoundName::kThm21Length}) {
    if (to_string(name) == s) return name;
  }
  return std::nullopt;
}

BoundReport check_prop12(const Digraph& g) {
  if (!is_acyclic(g)) throw Error(ErrorCode::kNotAcyclic, "acyclic bound requires a digraph without dicycles");
  BoundReport r;
  r.name = BoundName::kProp12;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.p_sharp = p_sharp(g);
  r.lhs = static_cast<double>(r.m);
  r.rhs = std::sqrt(2.0 * static_cast<double>(*r.p_sharp)) * static_cast<double>(r.n);
  r.holds = Wide{r.m} * r.m <= Wide{2} * *r.p_sharp * r.n * r.n;
  return r;
}

BoundReport prop13_bound(std::size_t n, std::size_t m) {
  BoundReport r;
  r.name = BoundName::kProp13;
  r.n = n;
  r.m = m;
  r.lhs = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  r.rhs = n == 0 ? 0.0 : std::sqrt(2.0 * (nd - 1.0)) * nd + nd - 1.0;
  if (n == 0) {
    r.holds = m == 0;
  } else if (m < n - 1) {
    r.holds = true;
  } else {
    const Wide excess = m - (n - 1);
    r.holds = excess * excess <= Wide{2} * (n - 1) * n * n;
  }
  return r;
}

BoundReport check_prop13(const Digraph& g, std::size_t cap) {
  const auto minimal = is_minimally_eulerian(g, cap);
  if (minimal.verdict != Verdict::kTrue) {
    throw Error(ErrorCode::kNotMinimallyEulerian,
                "minimality is " + std::string(to_string(minimal.verdict)) + " (cap " + std::to_string(cap) + ")");
  }
  return prop13_bound(g.vertex_count(), g.edge_count());
}

BoundReport thm11_bound(std::size_t n, std::size_t m, std::size_t exponent) {
  BoundReport r;
  r.name = BoundName::kThm11;
  r.n = n;
  r.m = m;
  r.k = exponent;
  const auto bound = f_bound(std::max<std::size_t>(n, 1));
  r.lhs = static_cast<double>(exponent);
  r.rhs = static_cast<double>(bound);
  r.holds = exponent <= bound;
  return r;
}

std::size_t PathDecomposition::max_len() const {
  std::size_t best = 0;
  for (const auto& p : paths) best = std::max(best, p.empty() ? 0 : p.size() - 1);
  return best;
}

std::vector<std::size_t> PathDecomposition::lengths_descending() const {
  std::vector<std::size_t> lengths;
  for (const auto& p : paths) lengths.push_back(p.empty() ? 0 : p.size() - 1);
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool PathDecomposition::all_vertex_simple() const {
  for (const auto& p : paths) {
    std::set<Vertex> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return false;
  }
  return true;
}

bool lex_better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::string> decomposition_defect(const Digraph& g, const PathDecomposition& d) {
  const std::size_t n = g.vertex_count();
  if (d.ordering.size() != n) return "ordering does not have n entries";
  std::vector<bool> seen(n, false);
  for (Vertex v : d.ordering) {
    if (v >= n || seen[v]) return "ordering is not a permutation of the vertices";
    seen[v] = true;
  }
  if (d.paths.size() != n) return "decomposition does not have n paths";
  std::set<Edge> used;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = d.paths[i];
    if (p.empty()) return "path " + std::to_string(i) + " is empty";
    if (p.front() != d.ordering[i] || p.back() != d.ordering[(i + 1) % n]) {
      return "path " + std::to_string(i) + " does not chain ordering[i] to ordering[i+1]";
    }
    if (n > 1 && p.size() < 2) return "path " + std::to_string(i) + " has no edges";
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      const Edge e{p[j], p[j + 1]};
      if (e.first >= n || e.second >= n || !g.has_edge(e.first, e.second)) {
        return "path " + std::to_string(i) + " uses a non-edge";
      }
      if (!used.insert(e).second) return "edge used twice (path " + std::to_string(i) + ")";
    }
  }
  if (used.size() != g.edge_count()) return "paths do not cover every edge";
  return std::nullopt;
}

Walk concatenate(const PathDecomposition& d) {
  Walk w{WalkKind::kEulerCircuit, {}};
  if (d.ordering.empty()) return w;
  w.vertices.push_back(d.ordering.front());
  for (const auto& p : d.paths) {
    for (std::size_t j = 1; j < p.size(); ++j) w.vertices.push_back(p[j]);
  }
  return w;
}

PathDecomposition cut_circuit(const Walk& circuit, const std::vector<std::size_t>& positions) {
  PathDecomposition d;
  const std::size_t m = circuit.length();
  if (m == 0) {
    d.ordering = {circuit.vertices.front()};
    d.paths = {{circuit.vertices.front()}};
    return d;
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t from = positions[i];
    const std::size_t to = i + 1 < positions.size() ? positions[i + 1] : positions.front() + m;
    d.ordering.push_back(circuit.vertices[from]);
    std::vector<Vertex> path;
    for (std::size_t j = from; j <= to; ++j) path.push_back(circuit.vertices[j % m]);
    d.paths.push_back(std::move(path));
  }
  return d;
}

namespace {

struct Occurrences {
  std::vector<Vertex> seq;              // circuit without the closing vertex
  std::vector<std::size_t> last;        // last position of each vertex
  std::vector<std::size_t> first;       // first position of each vertex
  std::size_t n = 0;
};

Occurrences index_occurrences(const Walk& circuit, std::size_t n) {
  Occurrences occ;
  occ.n = n;
  occ.seq.assign(circuit.vertices.begin(), circuit.vertices.end() - 1);
  occ.last.assign(n, 0);
  occ.first.assign(n, occ.seq.size());
  for (std::size_t p = 0; p < occ.seq.size(); ++p) {
    occ.last[occ.seq[p]] = p;
    occ.first[occ.seq[p]] = std::min(occ.first[occ.seq[p]], p);
  }
  return occ;
}

std::vector<std::size_t> segment_lengths_desc(const std::vector<std::size_t>& positions, std::size_t m) {
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t next = i + 1 < positions.size() ? positions[i + 1] : positions.front() + m;
    lengths.push_back(next - positions[i]);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

// Depth-first search over "choose / skip" decisions in circuit order. The
// partial multiset of segment lengths can only grow elementwise, so a prefix
// that already compares worse than the incumbent is cut off.
class SelectionSearch {
 public:
  SelectionSearch(const Occurrences& occ, std::uint64_t budget)
      : occ_(occ), m_(occ.seq.size()), budget_(budget), chosen_(occ.n, false), hist_(m_ + 1, 0) {
    // Most even split: the lexicographic floor of every candidate.
    ideal_.assign(occ.n, m_ / occ.n);
    for (std::size_t i = 0; i < m_ % occ.n; ++i) ++ideal_[i];
  }

  void run() {
    unchosen_ = occ_.n;
    dfs(0);
  }

  bool exhausted() const { return exhausted_; }
  const std::vector<std::size_t>& best_positions() const { return best_positions_; }
  const std::vector<std::size_t>& best_lengths() const { return best_; }

 private:
  std::vector<std::size_t> histogram_desc() const {
    std::vector<std::size_t> out;
    for (std::size_t len = m_; len >= 1; --len) out.insert(out.end(), hist_[len], len);
    return out;
  }

  bool partial_worse() const {
    if (best_.empty()) return false;
    std::size_t i = 0;
    for (std::size_t len = m_; len >= 1; --len) {
      for (std::size_t c = 0; c < hist_[len]; ++c, ++i) {
        if (len > best_[i]) return true;
        if (len < best_[i]) return false;
      }
    }
    return false;
  }

  void dfs(std::size_t pos) {
    if (exhausted_ || done_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (unchosen_ == 0) {
      const std::size_t wrap = m_ - last_ + first_;
      ++hist_[wrap];
      auto lengths = histogram_desc();
      if (best_.empty() || lex_better(lengths, best_)) {
        best_ = std::move(lengths);
        best_positions_ = stack_;
        done_ = best_ == ideal_;
      }
      --hist_[wrap];
      return;
    }
    if (pos == m_) return;
    if (has_first_ && !best_.empty()) {
      if (pos - last_ > best_[0]) return;   // the next segment would be too long
      if (first_ + 1 > best_[0]) return;    // so would the closing one
    }
    const Vertex v = occ_.seq[pos];
    if (!chosen_[v]) {
      chosen_[v] = true;
      --unchosen_;
      stack_.push_back(pos);
      if (!has_first_) {
        has_first_ = true;
        first_ = last_ = pos;
        dfs(pos + 1);
        has_first_ = false;
      } else {
        const std::size_t gap = pos - last_;
        const std::size_t previous = last_;
        ++hist_[gap];
        last_ = pos;
        if (!partial_worse()) dfs(pos + 1);
        last_ = previous;
        --hist_[gap];
      }
      stack_.pop_back();
      ++unchosen_;
      chosen_[v] = false;
    }
    if (chosen_[v] || occ_.last[v] != pos) dfs(pos + 1);
  }

  const Occurrences& occ_;
  const std::size_t m_;
  const std::uint64_t budget_;
  std::vector<bool> chosen_;
  std::vector<std::size_t> hist_;
  std::vector<std::size_t> stack_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> best_positions_;
  std::vector<std::size_t> ideal_;
  std::size_t unchosen_ = 0;
  std::size_t first_ = 0;
  std::size_t last_ = 0;
  bool has_first_ = false;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool done_ = false;
};

std::optional<std::vector<std::size_t>> edf_sweep(const Occurrences& occ, std::size_t cap) {
  const std::size_t m = occ.seq.size();
  std::vector<bool> chosen(occ.n, false);
  std::vector<std::size_t> positions{0};
  chosen[occ.seq[0]] = true;
  std::size_t unchosen = occ.n - 1;
  std::size_t last = 0;
  while (unchosen > 0) {
    std::optional<std::size_t> pick;
    for (std::size_t p = last + 1; p <= std::min(last + cap, m - 1); ++p) {
      const Vertex v = occ.seq[p];
      if (chosen[v]) continue;
      // Earliest deadline first; for that vertex, its latest position in the window.
      if (!pick || occ.last[v] < occ.last[occ.seq[*pick]] || occ.seq[*pick] == v) pick = p;
    }
    if (!pick) return std::nullopt;
    for (Vertex v = 0; v < occ.n; ++v) {
      if (!chosen[v] && v != occ.seq[*pick] && occ.last[v] < *pick) return std::nullopt;
    }
    chosen[occ.seq[*pick]] = true;
    --unchosen;
    positions.push_back(*pick);
    last = *pick;
  }
  if (m - last > cap) return std::nullopt;
  return positions;
}

OccurrenceSelection select_on_circuit(const Walk& circuit, std::size_t n, std::uint64_t budget) {
  OccurrenceSelection result;
  if (circuit.length() == 0) {
    result.positions = {0};
    result.decomposition = cut_circuit(circuit, result.positions);
    return result;
  }
  const Occurrences occ = index_occurrences(circuit, n);
  SelectionSearch search(occ, budget);
  search.run();
  result.positions = search.best_positions();
  if (search.exhausted()) {
    result.exact = false;
    const auto greedy = greedy_positions(circuit, n);
    if (result.positions.empty() ||
        lex_better(segment_lengths_desc(greedy, occ.seq.size()), segment_lengths_desc(result.positions, occ.seq.size()))) {
      result.positions = greedy;
    }
  }
  result.decomposition = cut_circuit(circuit, result.positions);
  return result;
}

}  // namespace

std::vector<std::size_t> greedy_positions(const Walk& circuit, std::size_t n) {
  if (circuit.length() == 0) return {0};
  const Occurrences occ = index_occurrences(circuit, n);
  const std::size_t m = occ.seq.size();
  std::vector<std::size_t> fallback;
  for (Vertex v = 0; v < n; ++v) fallback.push_back(occ.first[v]);
  std::sort(fallback.begin(), fallback.end());
  std::size_t lo = (m + n - 1) / n;
  std::size_t hi = m;
  std::optional<std::vector<std::size_t>> best;
  while (lo <= hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto found = edf_sweep(occ, mid)) {
      best = std::move(found);
      if (mid == 0) break;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  if (!best || lex_better(segment_lengths_desc(fallback, m), segment_lengths_desc(*best, m))) return fallback;
  return *best;
}

OccurrenceSelection occurrence_select(const Digraph& g, const Walk& circuit, std::uint64_t budget) {
  Walk as_circuit = circuit;
  as_circuit.kind = WalkKind::kEulerCircuit;
  if (!is_valid_walk(g, as_circuit)) throw Error(ErrorCode::kNotEulerCircuit, "walk does not use every edge exactly once");
  std::vector<bool> present(g.vertex_count(), false);
  for (Vertex v : circuit.vertices) present[v] = true;
  if (std::find(present.begin(), present.end(), false) != present.end()) {
    throw Error(ErrorCode::kNotEulerCircuit, "circuit misses a vertex");
  }
  return select_on_circuit(as_circuit, g.vertex_count(), budget);
}

namespace {

class CircuitSearch {
 public:
  CircuitSearch(const Digraph& g, std::uint64_t budget, std::uint64_t selection_budget)
      : g_(g), budget_(budget), selection_budget_(selection_budget) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) used_.emplace_back(g.out_degree(v), false);
  }

  LexminResult run() {
    evaluate(euler_circuit(g_));
    if (g_.edge_count() > 0) {
      // Every cyclic circuit passes through 0's first out-edge exactly once.
      const Vertex first = g_.out_neighbors(0)[0];
      used_[0][0] = true;
      trail_ = {0, first};
      dfs(first, 1);
    }
    result_.exact = !exhausted_ && selections_exact_;
    result_.nodes = nodes_;
    return result_;
  }

 private:
  bool spent() const { return nodes_ + result_.circuits >= budget_; }

  void evaluate(const Walk& circuit) {
    ++result_.circuits;
    auto selection = select_on_circuit(circuit, g_.vertex_count(), selection_budget_);
    selections_exact_ = selections_exact_ && selection.exact;
    auto lengths = selection.decomposition.lengths_descending();
    if (best_.empty() || lex_better(lengths, best_)) {
      best_ = std::move(lengths);
      result_.decomposition = std::move(selection.decomposition);
    }
  }

  // The unused edges must all be reachable from the current vertex.
  bool residual_reachable(Vertex cur, std::size_t used_count) {
    std::vector<bool> seen(g_.vertex_count(), false);
    std::vector<Vertex> stack{cur};
    seen[cur] = true;
    std::size_t reached_edges = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const auto nbrs = g_.out_neighbors(u);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (used_[u][i]) continue;
        ++reached_edges;
        if (!seen[nbrs[i]]) {
          seen[nbrs[i]] = true;
          stack.push_back(nbrs[i]);
        }
      }
    }
    return reached_edges == g_.edge_count() - used_count;
  }

  void dfs(Vertex cur, std::size_t used_count) {
    if (exhausted_) return;
    if (spent()) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    if (used_count == g_.edge_count()) {
      evaluate({WalkKind::kEulerCircuit, trail_});
      return;
    }
    if (!residual_reachable(cur, used_count)) return;
    const auto nbrs = g_.out_neighbors(cur);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (used_[cur][i]) continue;
      used_[cur][i] = true;
      trail_.push_back(nbrs[i]);
      dfs(nbrs[i], used_count + 1);
      trail_.pop_back();
      used_[cur][i] = false;
      if (exhausted_) return;
    }
  }

  const Digraph& g_;
  const std::uint64_t budget_;
  const std::uint64_t selection_budget_;
  std::vector<std::vector<bool>> used_;
  std::vector<Vertex> trail_;
  std::vector<std::size_t> best_;
  LexminResult result_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool selections_exact_ = true;
};

}  // namespace

LexminResult lexmin_decomposition(const Digraph& g, std::uint64_t budget, std::uint64_t selection_budget) {
  if (!is_eulerian(g)) throw Error(ErrorCode::kNotEulerian, "decomposition search requires a connected Eulerian digraph");
  return CircuitSearch(g, budget, selection_budget).run();
}

BoundReport check_thm21(const Digraph& g, const PathDecomposition& d) {
  if (auto defect = decomposition_defect(g, d)) throw Error(ErrorCode::kInvalidDecomposition, *defect);
  BoundReport r;
  r.name = BoundName::kThm21Length;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.k = d.max_len();
  const auto bound = f_bound(std::max<std::size_t>(r.n, 1));
  r.lhs = static_cast<double>(d.max_len());
  r.rhs = static_cast<double>(bound);
  r.holds = d.max_len() <= bound;
  return r;
}

}  // namespace hampow
