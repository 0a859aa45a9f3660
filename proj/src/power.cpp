#include "hampow/power.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hampow {

Digraph power(const DistanceMatrix& dist, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "power exponent must be >= 1");
  const std::size_t n = dist.size();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && dist(u, v) <= k) edges.emplace_back(u, v);
    }
  }
  return Digraph::build(n, edges);
}

Digraph power(const Digraph& g, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "power exponent must be >= 1");
  return power(all_pairs_distances(g), k);
}

namespace {

// Cheap exact rejections shared by both engines.
bool obviously_not_hamiltonian(const Digraph& g) {
  if (g.vertex_count() < 2) return true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0 || g.in_degree(v) == 0) return true;
  }
  return !is_strongly_connected(g);
}

std::vector<Vertex> rotate_to_zero(std::vector<Vertex> cycle) {
  auto it = std::find(cycle.begin(), cycle.end(), Vertex{0});
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

HamiltonResult hamiltonian_dp(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kDpThreshold) throw Error(ErrorCode::kInvalidArgument, "subset DP limited to n <= 22");
  HamiltonResult result;
  if (obviously_not_hamiltonian(g)) return result;

  std::vector<std::uint32_t> out_mask(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.out_neighbors(v)) out_mask[v] |= 1u << w;
  }
  // ends[mask]: vertices v such that some dipath starting at 0 visits
  // exactly `mask` and ends at v.
  const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    std::uint32_t frontier = ends[mask];
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t next = out_mask[v] & ~mask;
      while (next != 0) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
    ++result.expansions;
  }
  std::uint32_t into_zero = 0;
  for (Vertex w : g.in_neighbors(0)) into_zero |= 1u << w;
  const std::uint32_t closing = ends[full] & into_zero;
  if (closing == 0) return result;

  std::vector<Vertex> reversed;
  Vertex v = static_cast<Vertex>(std::countr_zero(closing));
  std::uint32_t mask = full;
  while (mask != 1) {
    reversed.push_back(v);
    const std::uint32_t prev = mask ^ (1u << v);
    std::uint32_t preds = ends[prev];
    Vertex u = 0;
    bool found = false;
    while (preds != 0) {
      u = static_cast<Vertex>(std::countr_zero(preds));
      preds &= preds - 1;
      if (out_mask[u] & (1u << v)) {
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::kInvalidArgument, "subset DP reconstruction failed");
    v = u;
    mask = prev;
  }
  reversed.push_back(0);
  result.cycle.assign(reversed.rbegin(), reversed.rend());
  result.verdict = Verdict::kTrue;
  return result;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Digraph& g, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), budget_(budget), on_path_(n_, false) {}

  HamiltonResult solve() {
    HamiltonResult result;
    // Start where the choices are fewest.
    start_ = 0;
    for (Vertex v = 1; v < n_; ++v) {
      if (g_.out_degree(v) < g_.out_degree(start_)) start_ = v;
    }
    on_path_[start_] = true;
    path_.push_back(start_);
    remaining_ = n_ - 1;
    const bool found = extend(start_);
    result.expansions = expansions_;
    if (found) {
      result.verdict = Verdict::kTrue;
      result.cycle = rotate_to_zero(path_);
    } else {
      result.verdict = exhausted_ ? Verdict::kIndeterminate : Verdict::kFalse;
    }
    return result;
  }

 private:
  bool usable(Vertex w) const { return !on_path_[w]; }

  // Necessary conditions for completing the current path into a Hamilton
  // cycle. Fills `forced` with the next vertex when only one choice remains.
  bool feasible(Vertex cur, std::optional<Vertex>& forced) {
    bool closable = false;
    for (Vertex w : g_.in_neighbors(start_)) {
      if (usable(w)) {
        closable = true;
        break;
      }
    }
    if (!closable) return false;
    for (Vertex r = 0; r < n_; ++r) {
      if (on_path_[r]) continue;
      std::size_t in_count = 0;
      bool from_cur = false;
      for (Vertex w : g_.in_neighbors(r)) {
        if (w == cur) {
          from_cur = true;
          ++in_count;
        } else if (usable(w)) {
          ++in_count;
        }
      }
      if (in_count == 0) return false;
      bool has_out = false;
      for (Vertex w : g_.out_neighbors(r)) {
        if (usable(w) || w == start_) {
          has_out = true;
          break;
        }
      }
      if (!has_out) return false;
      if (in_count == 1 && from_cur) {
        if (forced && *forced != r) return false;
        forced = r;
      }
    }
    // Every unvisited vertex must be reachable from cur through unvisited ones.
    seen_.assign(n_, false);
    stack_.assign(1, cur);
    std::size_t reached = 0;
    while (!stack_.empty()) {
      const Vertex u = stack_.back();
      stack_.pop_back();
      for (Vertex w : g_.out_neighbors(u)) {
        if (usable(w) && !seen_[w]) {
          seen_[w] = true;
          ++reached;
          stack_.push_back(w);
        }
      }
    }
    return reached == remaining_;
  }

  std::size_t onward_options(Vertex w) const {
    std::size_t count = 0;
    for (Vertex x : g_.out_neighbors(w)) {
      if (usable(x)) ++count;
    }
    return count;
  }

  bool extend(Vertex cur) {
    if (expansions_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++expansions_;
    if (remaining_ == 0) return g_.has_edge(cur, start_);

    std::optional<Vertex> forced;
    if (!feasible(cur, forced)) return false;

    std::vector<std::pair<std::size_t, Vertex>> choices;
    if (forced) {
      choices.emplace_back(0, *forced);
    } else {
      for (Vertex w : g_.out_neighbors(cur)) {
        if (usable(w)) choices.emplace_back(onward_options(w), w);
      }
      std::sort(choices.begin(), choices.end());
    }
    for (const auto& [unused, w] : choices) {
      on_path_[w] = true;
      path_.push_back(w);
      --remaining_;
      if (extend(w)) return true;
      ++remaining_;
      path_.pop_back();
      on_path_[w] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const Digraph& g_;
  const std::size_t n_;
  const std::uint64_t budget_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  std::vector<bool> seen_;
  std::vector<Vertex> stack_;
  std::size_t remaining_ = 0;
  Vertex start_ = 0;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
};

}  // namespace

HamiltonResult hamiltonian_branch_and_bound(const Digraph& g, std::uint64_t budget) {
  if (obviously_not_hamiltonian(g)) return {};
  return BranchAndBound(g, budget).solve();
}

HamiltonResult is_hamiltonian(const Digraph& g, std::uint64_t budget) {
  if (g.vertex_count() <= kDpThreshold) return hamiltonian_dp(g);
  return hamiltonian_branch_and_bound(g, budget);
}

HamiltonCertificate make_certificate(const Digraph& base, const std::vector<Vertex>& cycle, std::size_t k) {
  HamiltonCertificate cert{k, cycle, {}};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex from = cycle[i];
    const Vertex to = cycle[(i + 1) % cycle.size()];
    auto hop = shortest_dipath(base, from, to);
    cert.hops.push_back(hop ? std::move(*hop) : std::vector<Vertex>{from, to});
  }
  return cert;
}

bool verify_certificate(const Digraph& g, const HamiltonCertificate& cert) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || cert.k == 0 || cert.cycle.size() != n || cert.hops.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : cert.cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& hop = cert.hops[i];
    if (hop.size() < 2 || hop.size() - 1 > cert.k) return false;
    if (hop.front() != cert.cycle[i] || hop.back() != cert.cycle[(i + 1) % n]) return false;
    Walk w{WalkKind::kDipath, hop};
    if (!is_valid_walk(g, w)) return false;
  }
  return true;
}

std::optional<ExponentResult> ham_exponent(const Digraph& g, std::uint64_t budget, std::size_t min_k) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !is_strongly_connected(g)) return std::nullopt;
  const DistanceMatrix dist = all_pairs_distances(g);
  ExponentResult result;
  std::size_t lo = std::clamp<std::size_t>(min_k, 1, n - 1);
  std::size_t hi = n - 1;
  std::vector<Vertex> cycle_at_hi;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto attempt = is_hamiltonian(power(dist, mid), budget);
    result.expansions += attempt.expansions;
    switch (attempt.verdict) {
      case Verdict::kTrue:
        hi = mid;
        cycle_at_hi = attempt.cycle;
        break;
      case Verdict::kFalse:
        lo = mid + 1;
        break;
      case Verdict::kIndeterminate:
        throw ExponentBudgetExhausted(lo, hi);
    }
  }
  if (cycle_at_hi.empty()) {
    if (hi == n - 1) {
      // G^(n-1) of a strongly connected digraph is complete.
      cycle_at_hi.resize(n);
      std::iota(cycle_at_hi.begin(), cycle_at_hi.end(), Vertex{0});
    } else {
      const auto attempt = is_hamiltonian(power(dist, hi), budget);
      result.expansions += attempt.expansions;
      if (attempt.verdict != Verdict::kTrue) throw ExponentBudgetExhausted(lo, n - 1);
      cycle_at_hi = attempt.cycle;
    }
  }
  result.h = hi;
  result.certificate = make_certificate(g, cycle_at_hi, hi);
  if (!verify_certificate(g, result.certificate)) {
    throw Error(ErrorCode::kInvalidArgument, "internal: exponent certificate failed verification");
  }
  return result;
}

void write_certificate(std::ostream& out, const HamiltonCertificate& cert) {
  out << "k=" << cert.k << '\n' << "cycle:";
  for (Vertex v : cert.cycle) out << ' ' << v;
  out << '\n';
  for (const auto& hop : cert.hops) {
    out << "hop:";
    for (Vertex v : hop) out << ' ' << v;
    out << '\n';
  }
}

namespace {

std::vector<Vertex> parse_vertex_list(const std::string& line, std::string_view prefix) {
  if (line.rfind(prefix, 0) != 0) throw Error(ErrorCode::kParse, "expected \"" + std::string(prefix) + "\" in \"" + line + "\"");
  std::istringstream in(line.substr(prefix.size()));
  std::vector<Vertex> result;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw Error(ErrorCode::kParse, "negative vertex in \"" + line + "\"");
    result.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof()) throw Error(ErrorCode::kParse, "bad vertex in \"" + line + "\"");
  return result;
}

}  // namespace

HamiltonCertificate read_certificate(std::istream& in) {
  HamiltonCertificate cert;
  std::string line;
  if (!std::getline(in, line) || line.rfind("k=", 0) != 0) throw Error(ErrorCode::kParse, "missing \"k=\" line");
  try {
    cert.k = std::stoul(line.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "bad k in \"" + line + "\"");
  }
  if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "missing \"cycle:\" line");
  cert.cycle = parse_vertex_list(line, "cycle:");
  while (std::getline(in, line)) {
    if (line.empty()) break;
    cert.hops.push_back(parse_vertex_list(line, "hop:"));
  }
  return cert;
}

}  // namespace hampow
