#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hampow/error.hpp"
#include "hampow/families.hpp"
#include "oracles.hpp"

using namespace hampow;
using hampow::fixtures::code_of;

TEST_CASE("build validates simplicity") {
  const auto tri = fixtures::triangle();
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.has_edge(2, 0));
  CHECK_FALSE(tri.has_edge(0, 2));

  CHECK(code_of([] { Digraph::build(2, {{0, 0}}); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([] { Digraph::build(2, {{0, 1}, {0, 1}}); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([] { Digraph::build(2, {{0, 2}}); }) == ErrorCode::kVertexOutOfRange);
  // Antiparallel edges are two distinct edges.
  CHECK(Digraph::build(2, {{0, 1}, {1, 0}}).edge_count() == 2);
}

TEST_CASE("G_4 builds with 46 edges") {
  const auto gk = generate_gk(4);
  CHECK(gk.graph.vertex_count() == 19);
  CHECK(gk.graph.edge_count() == 46);
}

TEST_CASE("degrees") {
  for (const auto& d : degrees(fixtures::triangle())) CHECK(d == DegreePair{1, 1});
  const auto e = degrees(fixtures::single_edge());
  CHECK(e[0] == DegreePair{0, 1});
  CHECK(e[1] == DegreePair{1, 0});
  const auto gk = generate_gk(4);
  for (Vertex v : gk.v_vertices()) CHECK(degrees(gk.graph)[v] == DegreePair{1, 1});
}

TEST_CASE("p_sharp") {
  CHECK(p_sharp(fixtures::directed_cycle(7)) == 0);
  for (std::size_t n = 2; n < 9; ++n) CHECK(p_sharp(fixtures::dipath(n)) == 1);
  CHECK(p_sharp(fixtures::out_star()) == 3);
  CHECK(p_sharp(fixtures::transitive_tournament(4)) == 4);
}

TEST_CASE("p_sharp is zero iff balanced, and invariant under relabeling") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(1, 9));
    const auto g = random_dag(n, rng.unit(), seed);
    const auto perm = rng.sample(n, n);
    std::vector<Edge> relabeled;
    for (const auto& [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
    const auto h = Digraph::build(n, relabeled);
    CHECK(p_sharp(g) == p_sharp(h));
    CHECK((p_sharp(g) == 0) == is_balanced(g));

    std::size_t out_sum = 0, in_sum = 0;
    for (const auto& d : degrees(g)) {
      out_sum += d.out;
      in_sum += d.in;
    }
    CHECK(out_sum == g.edge_count());
    CHECK(in_sum == g.edge_count());
  }
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(fixtures::triangle()));
  CHECK_FALSE(is_strongly_connected(fixtures::single_edge()));
  CHECK(is_strongly_connected(generate_gk(4).graph));
  CHECK(is_connected_eulerian_sense(fixtures::single_edge()));
  CHECK_FALSE(is_connected_eulerian_sense(Digraph::build(3, {{0, 1}, {1, 0}})));
}

TEST_CASE("weak and strong connectivity agree on balanced digraphs") {
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const auto g = oracle::from_mask(4, mask);
    if (!is_balanced(g)) continue;
    CHECK(is_connected_eulerian_sense(g) == is_strongly_connected(g));
  }
}

TEST_CASE("topological sort") {
  const auto dag = Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_acyclic(dag));
  CHECK(topological_sort(dag) == std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(is_acyclic(fixtures::triangle()));
  CHECK_FALSE(topological_sort(fixtures::triangle()).has_value());

  // u-vertices of G_4 alone: every edge goes to a higher index.
  const auto gk = generate_gk(4);
  std::vector<Edge> u_edges;
  for (const auto& [a, b] : gk.graph.edges()) {
    if (gk.roles[a] == Role::kU && gk.roles[b] == Role::kU) u_edges.emplace_back(a, b);
  }
  const auto u_only = Digraph::build(gk.params.ell - 1, u_edges);
  CHECK(is_acyclic(u_only));
}

TEST_CASE("topological order exists iff acyclic and sends edges forward") {
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const auto g = oracle::from_mask(4, mask);
    const auto order = topological_sort(g);
    CHECK(order.has_value() == oracle::all_dicycles(g).empty());
    if (!order) continue;
    std::vector<std::size_t> rank(4);
    for (std::size_t i = 0; i < 4; ++i) rank[(*order)[i]] = i;
    for (const auto& [u, v] : g.edges()) CHECK(rank[u] < rank[v]);
  }
}

TEST_CASE("all-pairs distances") {
  const auto tri = all_pairs_distances(fixtures::triangle());
  CHECK(tri(0, 2) == 2);
  CHECK(tri(2, 0) == 1);
  const auto e = all_pairs_distances(fixtures::single_edge());
  CHECK(e(1, 0) == DistanceMatrix::kInfinity);
  CHECK_FALSE(e.reachable(1, 0));
  CHECK(DistanceMatrix::saturating_add(DistanceMatrix::kInfinity, 3) == DistanceMatrix::kInfinity);

  const auto gk = generate_gk(4);
  const auto d = all_pairs_distances(gk.graph);
  const auto fw = oracle::floyd_warshall(gk.graph);
  CHECK(fw[gk.v(10)][gk.v(8)] == 3);
  CHECK(d(gk.v(10), gk.v(8)) == 3);
}

TEST_CASE("distances match Floyd-Warshall and obey the triangle inequality") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_strongly_connected(2 + seed % 10, seed % 7, seed);
    const auto d = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      CHECK(d(u, u) == 0);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(d(u, v) == fw[u][v]);
        if (g.has_edge(u, v)) CHECK(d(u, v) == 1);
        for (Vertex w = 0; w < n; ++w) CHECK(d(u, w) <= DistanceMatrix::saturating_add(d(u, v), d(v, w)));
      }
    }
  }
}

TEST_CASE("shortest dipath") {
  const auto path = shortest_dipath(fixtures::triangle(), 0, 2);
  REQUIRE(path.has_value());
  CHECK(*path == std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(shortest_dipath(fixtures::single_edge(), 1, 0).has_value());
}

TEST_CASE("edge-list text format") {
  std::istringstream in("# a comment\n3 3\n0 1\n1 2\n2 0\n");
  CHECK(read_edge_list(in) == fixtures::triangle());

  std::ostringstream out;
  const std::vector<std::string> comments{"generator=test"};
  write_edge_list(out, fixtures::triangle(), comments);
  CHECK(out.str() == "# generator=test\n3 3\n0 1\n1 2\n2 0\n");

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return read_edge_list(s);
  };
  CHECK(code_of([&] { parse("2 1\n0 0\n"); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([&] { parse("2 2\n0 1\n0 1\n"); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([&] { parse("2 1\n0 5\n"); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([&] { parse("2 2\n0 1\n"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse("2 1\n0 1\n1 0\n"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse("x\n"); }) == ErrorCode::kParse);
}
