#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hampow/digraph.hpp"

namespace hampow {

enum class WalkKind { kDipath, kDicycle, kEulerCircuit };

/// A vertex sequence whose consecutive pairs are edges of some host graph.
/// Closed walks (dicycles, Euler circuits) repeat the first vertex at the end.
struct Walk {
  WalkKind kind = WalkKind::kDipath;
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::vector<Edge> edges() const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Checks the invariants of `w.kind` against `g`: dipaths have distinct
/// vertices and length >= 1, dicycles close with distinct interior vertices
/// and length >= 2, Euler circuits close and use every edge exactly once.
bool is_valid_walk(const Digraph& g, const Walk& w);

enum class Verdict { kTrue, kFalse, kIndeterminate };
std::string_view to_string(Verdict v);

/// Balanced at every vertex and strongly connected (n >= 1).
bool is_eulerian(const Digraph& g);

/// Hierholzer from the smallest vertex, taking out-edges in ascending order.
Walk euler_circuit(const Digraph& g);

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

struct CycleEnumeration {
  std::vector<Walk> cycles;
  bool complete = true;
};

/// Johnson's algorithm. Each cycle starts (and ends) at its smallest vertex;
/// cycles come out grouped by that start vertex in ascending order.
/// `complete` is false iff more than `cap` cycles exist.
CycleEnumeration enumerate_dicycles(const Digraph& g, std::size_t cap = kDefaultCycleCap);

/// Visitor form. Only vertices with allowed[v] set take part (empty = all).
/// The visitor returns false to stop; the function returns true iff the
/// enumeration ran to the end.
bool for_each_dicycle(const Digraph& g, const std::vector<bool>& allowed,
                      const std::function<bool(const Walk&)>& visit);

/// G - C: same vertex set, the edges of `cycle` deleted. Throws kEdgeMissing.
Digraph remove_dicycle(const Digraph& g, const Walk& cycle);

struct MinimalityResult {
  Verdict verdict = Verdict::kFalse;
  /// A dicycle whose removal leaves the graph connected (verdict false on an
  /// Eulerian input).
  std::optional<Walk> witness;
  std::size_t cycles_examined = 0;
};

/// Exact when the candidate dicycles could all be examined within `cap`.
/// Only dicycles avoiding every vertex of outdegree 1 are candidates: removing
/// any other dicycle isolates that vertex.
MinimalityResult is_minimally_eulerian(const Digraph& g, std::size_t cap = kDefaultCycleCap);

struct Reduction {
  Digraph graph;
  std::vector<Walk> trace;
};

/// Removes spanning-connectivity-preserving dicycles until none remains,
/// always choosing the shortest removable one (ties: smallest vertex
/// sequence). Throws kNotEulerian, or kBudgetExhausted when a step's cycle
/// enumeration hits `cap` without finding a removable cycle.
Reduction reduce_to_minimally_eulerian(const Digraph& g, std::size_t cap = kDefaultCycleCap);

/// BFS arborescence rooted at `root`; n-1 edges in discovery order.
/// Throws kUnreachable naming the smallest unreachable vertex.
std::vector<Edge> spanning_arborescence(const Digraph& g, Vertex root);

struct DecompOutcome {
  std::vector<Walk> dipaths;
  std::vector<Walk> dicycles;
};

/// Edge-disjoint decomposition into exactly p_sharp(g) dipaths plus dicycles.
DecompOutcome decompose(const Digraph& g);

/// True iff the walks use every edge of `g` exactly once and nothing else.
bool covers_edges_exactly(const Digraph& g, const std::vector<const Walk*>& walks);

// Text form: "P: v0 ... vk" (dipath), "C: v0 ... v0" (dicycle),
// "E: v0 ... v0" (Euler circuit).
std::string format_walk(const Walk& w);
Walk parse_walk(const std::string& line);
void write_walks(std::ostream& out, const std::vector<Walk>& walks);
void write_decomposition(std::ostream& out, const DecompOutcome& d);

}  // namespace hampow
