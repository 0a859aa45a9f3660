#pragma once

#include <vector>

#include "doctest.h"
#include "hampow/digraph.hpp"
#include "hampow/error.hpp"
#include "hampow/families.hpp"

namespace hampow::fixtures {

inline Digraph triangle() { return Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Digraph single_edge() { return Digraph::build(2, {{0, 1}}); }

inline Digraph out_star() { return Digraph::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Two directed triangles sharing vertex 0.
inline Digraph figure_eight() { return Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

// Both orientations of every pair on three vertices.
inline Digraph complete3() { return Digraph::build(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}); }

inline Digraph directed_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Digraph::build(n, edges);
}

inline Digraph dipath(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Digraph::build(n, edges);
}

inline Digraph transitive_tournament(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Digraph::build(n, edges);
}

/// Connected Eulerian digraph on n >= 3 vertices, about n/2 dicycles.
inline Digraph eulerian(std::size_t n, std::uint64_t seed) {
  return random_eulerian(n, std::max<std::size_t>(1, n / 2), seed);
}

/// The code of the Error thrown by fn; fails the test if nothing is thrown.
inline ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kParse;
}

}  // namespace hampow::fixtures
