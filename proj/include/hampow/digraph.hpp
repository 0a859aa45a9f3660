#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hampow {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple directed graph on the dense vertex set 0..n-1.
///
/// No self-loops, no parallel edges. Adjacency lists are kept sorted so that
/// every traversal in the library visits neighbors in ascending index order.
/// Instances are immutable once built.
class Digraph {
 public:
  Digraph() = default;

  /// Validates and builds. Throws Error with kSelfLoop, kDuplicateEdge or
  /// kVertexOutOfRange; repeated pairs are never collapsed silently.
  static Digraph build(std::size_t n, std::span<const Edge> edges);
  static Digraph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return out_adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_adj_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_adj_[v]; }
  std::size_t out_degree(Vertex v) const { return out_adj_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_adj_[v].size(); }

  // O(log d) lookup.
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges ordered by (tail, head).
  std::vector<Edge> edges() const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_adj_ == b.out_adj_; }

 private:
  std::vector<std::vector<Vertex>> out_adj_;
  std::vector<std::vector<Vertex>> in_adj_;
  std::size_t edge_count_ = 0;
};

struct DegreePair {
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

std::vector<DegreePair> degrees(const Digraph& g);

/// Half the total degree imbalance, sum_u |d+(u) - d-(u)| / 2.
std::size_t p_sharp(const Digraph& g);

bool is_balanced(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// Connectivity ignoring edge direction. Coincides with strong connectivity on
/// balanced digraphs. A graph with an isolated vertex and n >= 2 is not
/// connected.
bool is_connected_eulerian_sense(const Digraph& g);

/// Vertices reachable from `source` along directed edges (including source).
std::vector<bool> reachable_from(const Digraph& g, Vertex source);

bool is_acyclic(const Digraph& g);

/// Kahn's algorithm, always releasing the smallest ready vertex first.
/// Returns nullopt iff the graph has a dicycle.
std::optional<std::vector<Vertex>> topological_sort(const Digraph& g);

/// n x n shortest dipath lengths. Unreachable pairs hold kInfinity, which is
/// strictly greater than any finite distance; saturating_add keeps it there.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t kInfinity = 0xFFFFFFFFu;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kInfinity) {}

  std::size_t size() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kInfinity; }

  static std::uint32_t saturating_add(std::uint32_t a, std::uint32_t b) {
    if (a == kInfinity || b == kInfinity) return kInfinity;
    const std::uint64_t s = std::uint64_t{a} + b;
    return s >= kInfinity ? kInfinity : static_cast<std::uint32_t>(s);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

/// BFS distances from one source; kInfinity where unreachable.
std::vector<std::uint32_t> bfs_distances(const Digraph& g, Vertex source);

/// One BFS per vertex.
DistanceMatrix all_pairs_distances(const Digraph& g);

/// Shortest dipath from `from` to `to` as a vertex sequence, or nullopt.
std::optional<std::vector<Vertex>> shortest_dipath(const Digraph& g, Vertex from, Vertex to);

// Edge-list text format: a "n m" header line, then m lines "u v". Lines
// starting with '#' are comments and are skipped by the reader.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Digraph& g, std::span<const std::string> comments = {});

/// Graphviz rendering with vertices named by index.
void write_dot(std::ostream& out, const Digraph& g, const std::string& name = "G");

}  // namespace hampow
