#include "hampow/euler.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>

#include "hampow/error.hpp"

namespace hampow {

std::vector<Edge> Walk::edges() const {
  std::vector<Edge> result;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) result.emplace_back(vertices[i], vertices[i + 1]);
  return result;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kIndeterminate: return "indeterminate";
  }
  return "?";
}

bool is_valid_walk(const Digraph& g, const Walk& w) {
  const std::size_t n = g.vertex_count();
  for (Vertex v : w.vertices) {
    if (v >= n) return false;
  }
  for (const auto& [u, v] : w.edges()) {
    if (!g.has_edge(u, v)) return false;
  }
  switch (w.kind) {
    case WalkKind::kDipath: {
      if (w.length() < 1) return false;
      std::vector<bool> seen(n, false);
      for (Vertex v : w.vertices) {
        if (seen[v]) return false;
        seen[v] = true;
      }
      return true;
    }
    case WalkKind::kDicycle: {
      if (w.length() < 2 || w.vertices.front() != w.vertices.back()) return false;
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        if (seen[w.vertices[i]]) return false;
        seen[w.vertices[i]] = true;
      }
      return true;
    }
    case WalkKind::kEulerCircuit: {
      if (w.vertices.empty() || w.vertices.front() != w.vertices.back()) return false;
      return covers_edges_exactly(g, {&w});
    }
  }
  return false;
}

bool covers_edges_exactly(const Digraph& g, const std::vector<const Walk*>& walks) {
  std::set<Edge> used;
  std::size_t total = 0;
  for (const Walk* w : walks) {
    for (const auto& e : w->edges()) {
      if (!g.has_edge(e.first, e.second) || !used.insert(e).second) return false;
      ++total;
    }
  }
  return total == g.edge_count();
}

bool is_eulerian(const Digraph& g) {
  return g.vertex_count() >= 1 && is_balanced(g) && is_strongly_connected(g);
}

Walk euler_circuit(const Digraph& g) {
  if (!is_eulerian(g)) throw Error(ErrorCode::kNotEulerian, "euler_circuit requires a connected balanced digraph");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{0};
  std::vector<Vertex> circuit;
  circuit.reserve(g.edge_count() + 1);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    if (next[v] < g.out_degree(v)) {
      stack.push_back(g.out_neighbors(v)[next[v]++]);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return {WalkKind::kEulerCircuit, std::move(circuit)};
}

namespace {

// Johnson's elementary-circuit search restricted to the strongly connected
// piece containing the start vertex.
class JohnsonSearch {
 public:
  JohnsonSearch(const Digraph& g, const std::function<bool(const Walk&)>& visit)
      : g_(g), visit_(visit), in_component_(g.vertex_count()), blocked_(g.vertex_count()),
        blocked_by_(g.vertex_count()) {}

  bool run(const std::vector<bool>& allowed) {
    const std::size_t n = g_.vertex_count();
    for (Vertex s = 0; s < n && !stopped_; ++s) {
      if (!allowed.empty() && !allowed[s]) continue;
      if (!mark_component(s, allowed)) continue;
      for (Vertex v = 0; v < n; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      start_ = s;
      circuit(s);
    }
    return !stopped_;
  }

 private:
  // Vertices >= s that are allowed, reachable from s and reaching s.
  bool mark_component(Vertex s, const std::vector<bool>& allowed) {
    const std::size_t n = g_.vertex_count();
    auto usable = [&](Vertex v) { return v >= s && (allowed.empty() || allowed[v]); };
    auto sweep = [&](bool forward) {
      std::vector<bool> seen(n, false);
      std::vector<Vertex> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : forward ? g_.out_neighbors(u) : g_.in_neighbors(u)) {
          if (usable(w) && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      return seen;
    };
    const auto fwd = sweep(true);
    const auto bwd = sweep(false);
    bool nontrivial = false;
    for (Vertex v = 0; v < n; ++v) {
      in_component_[v] = fwd[v] && bwd[v];
      if (in_component_[v] && v != s) nontrivial = true;
    }
    return nontrivial;
  }

  void unblock(Vertex u) {
    blocked_[u] = false;
    std::vector<Vertex> pending(blocked_by_[u].begin(), blocked_by_[u].end());
    blocked_by_[u].clear();
    for (Vertex w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(Vertex v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (Vertex w : g_.out_neighbors(v)) {
      if (stopped_) break;
      if (!in_component_[w]) continue;
      if (w == start_) {
        Walk cycle{WalkKind::kDicycle, path_};
        cycle.vertices.push_back(start_);
        if (!visit_(cycle)) stopped_ = true;
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (Vertex w : g_.out_neighbors(v)) {
        if (in_component_[w]) blocked_by_[w].insert(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const Digraph& g_;
  const std::function<bool(const Walk&)>& visit_;
  std::vector<bool> in_component_;
  std::vector<bool> blocked_;
  std::vector<std::set<Vertex>> blocked_by_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  bool stopped_ = false;
};

}  // namespace

bool for_each_dicycle(const Digraph& g, const std::vector<bool>& allowed,
                      const std::function<bool(const Walk&)>& visit) {
  JohnsonSearch search(g, visit);
  return search.run(allowed);
}

CycleEnumeration enumerate_dicycles(const Digraph& g, std::size_t cap) {
  CycleEnumeration result;
  result.complete = for_each_dicycle(g, {}, [&](const Walk& c) {
    if (result.cycles.size() == cap) return false;
    result.cycles.push_back(c);
    return true;
  });
  return result;
}

Digraph remove_dicycle(const Digraph& g, const Walk& cycle) {
  std::set<Edge> drop;
  for (const auto& e : cycle.edges()) {
    if (!g.has_edge(e.first, e.second)) {
      throw Error(ErrorCode::kEdgeMissing, "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    }
    drop.insert(e);
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!drop.contains(e)) kept.push_back(e);
  }
  return Digraph::build(g.vertex_count(), kept);
}

namespace {

std::vector<bool> candidate_vertices(const Digraph& g) {
  std::vector<bool> allowed(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) allowed[v] = g.out_degree(v) >= 2;
  return allowed;
}

bool removal_keeps_connected(const Digraph& g, const Walk& cycle) {
  return is_connected_eulerian_sense(remove_dicycle(g, cycle));
}

}  // namespace

MinimalityResult is_minimally_eulerian(const Digraph& g, std::size_t cap) {
  MinimalityResult result;
  if (!is_eulerian(g)) return result;
  if (g.vertex_count() <= 1) {
    result.verdict = Verdict::kTrue;
    return result;
  }
  bool capped = false;
  const bool complete = for_each_dicycle(g, candidate_vertices(g), [&](const Walk& c) {
    if (result.cycles_examined == cap) {
      capped = true;
      return false;
    }
    ++result.cycles_examined;
    if (removal_keeps_connected(g, c)) {
      result.witness = c;
      return false;
    }
    return true;
  });
  if (result.witness) {
    result.verdict = Verdict::kFalse;
  } else {
    result.verdict = (complete && !capped) ? Verdict::kTrue : Verdict::kIndeterminate;
  }
  return result;
}

Reduction reduce_to_minimally_eulerian(const Digraph& g, std::size_t cap) {
  if (!is_eulerian(g)) throw Error(ErrorCode::kNotEulerian, "reduction requires a connected Eulerian digraph");
  Reduction result{g, {}};
  while (true) {
    std::vector<Walk> candidates;
    const bool complete = for_each_dicycle(result.graph, candidate_vertices(result.graph), [&](const Walk& c) {
      if (candidates.size() == cap) return false;
      candidates.push_back(c);
      return true;
    });
    std::sort(candidates.begin(), candidates.end(), [](const Walk& a, const Walk& b) {
      if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
      return a.vertices < b.vertices;
    });
    auto removable = std::find_if(candidates.begin(), candidates.end(),
                                  [&](const Walk& c) { return removal_keeps_connected(result.graph, c); });
    if (removable == candidates.end()) {
      if (!complete) {
        throw Error(ErrorCode::kBudgetExhausted, "cycle enumeration hit cap " + std::to_string(cap) + " during reduction");
      }
      return result;
    }
    result.graph = remove_dicycle(result.graph, *removable);
    result.trace.push_back(std::move(*removable));
  }
}

std::vector<Edge> spanning_arborescence(const Digraph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw Error(ErrorCode::kVertexOutOfRange, "root " + std::to_string(root));
  std::vector<bool> seen(n, false);
  std::vector<Edge> tree;
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.out_neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        tree.emplace_back(u, w);
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) throw Error(ErrorCode::kUnreachable, "vertex " + std::to_string(v) + " from root " + std::to_string(root));
  }
  return tree;
}

namespace {

// Residual edge state for peeling: out-edges of each vertex are consumed in
// ascending order, so the consumed edges are always a prefix.
class Peeler {
 public:
  explicit Peeler(const Digraph& g) : g_(g), next_(g.vertex_count(), 0), position_(g.vertex_count(), kOffPath) {}

  bool has_unused(Vertex v) const { return next_[v] < g_.out_degree(v); }

  // Walks from `start` until stuck, splicing out every closed portion as a
  // dicycle. Returns the remaining open vertex-simple trail.
  std::vector<Vertex> walk(Vertex start, std::vector<Walk>& cycles) {
    std::vector<Vertex> path{start};
    position_[start] = 0;
    Vertex cur = start;
    while (has_unused(cur)) {
      const Vertex w = g_.out_neighbors(cur)[next_[cur]++];
      if (position_[w] != kOffPath) {
        Walk cycle{WalkKind::kDicycle, {path.begin() + static_cast<std::ptrdiff_t>(position_[w]), path.end()}};
        cycle.vertices.push_back(w);
        for (std::size_t i = position_[w] + 1; i < path.size(); ++i) position_[path[i]] = kOffPath;
        path.resize(position_[w] + 1);
        cycles.push_back(std::move(cycle));
      } else {
        position_[w] = path.size();
        path.push_back(w);
      }
      cur = w;
    }
    for (Vertex v : path) position_[v] = kOffPath;
    return path;
  }

 private:
  static constexpr std::size_t kOffPath = static_cast<std::size_t>(-1);
  const Digraph& g_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> position_;
};

}  // namespace

DecompOutcome decompose(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  DecompOutcome result;
  Peeler peeler(g);
  std::vector<long long> excess(n);
  for (Vertex v = 0; v < n; ++v) {
    excess[v] = static_cast<long long>(g.out_degree(v)) - static_cast<long long>(g.in_degree(v));
  }
  for (Vertex s = 0; s < n; ++s) {
    while (excess[s] > 0) {
      auto path = peeler.walk(s, result.dicycles);
      const Vertex t = path.back();
      --excess[s];
      ++excess[t];
      result.dipaths.push_back({WalkKind::kDipath, std::move(path)});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    while (peeler.has_unused(v)) {
      // Balanced residual: the walk can only get stuck back at v.
      peeler.walk(v, result.dicycles);
    }
  }
  return result;
}

namespace {

char walk_tag(WalkKind kind) {
  switch (kind) {
    case WalkKind::kDipath: return 'P';
    case WalkKind::kDicycle: return 'C';
    case WalkKind::kEulerCircuit: return 'E';
  }
  return '?';
}

}  // namespace

std::string format_walk(const Walk& w) {
  std::string out(1, walk_tag(w.kind));
  out += ':';
  for (Vertex v : w.vertices) {
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Walk parse_walk(const std::string& line) {
  if (line.size() < 2 || line[1] != ':') throw Error(ErrorCode::kParse, "walk line \"" + line + "\"");
  Walk w;
  switch (line[0]) {
    case 'P': w.kind = WalkKind::kDipath; break;
    case 'C': w.kind = WalkKind::kDicycle; break;
    case 'E': w.kind = WalkKind::kEulerCircuit; break;
    default: throw Error(ErrorCode::kParse, "unknown walk tag in \"" + line + "\"");
  }
  std::istringstream in(line.substr(2));
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw Error(ErrorCode::kParse, "negative vertex in \"" + line + "\"");
    w.vertices.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof()) throw Error(ErrorCode::kParse, "bad vertex in \"" + line + "\"");
  return w;
}

void write_walks(std::ostream& out, const std::vector<Walk>& walks) {
  for (const auto& w : walks) out << format_walk(w) << '\n';
}

void write_decomposition(std::ostream& out, const DecompOutcome& d) {
  write_walks(out, d.dipaths);
  write_walks(out, d.dicycles);
}

}  // namespace hampow
