#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hampow/euler.hpp"
#include "hampow/families.hpp"
#include "hampow/theorem.hpp"
#include "oracles.hpp"

using namespace hampow;
using hampow::fixtures::code_of;

namespace {

std::set<std::vector<Vertex>> as_sequences(const std::vector<Walk>& cycles) {
  std::set<std::vector<Vertex>> out;
  for (const auto& c : cycles) out.emplace(c.vertices.begin(), c.vertices.end() - 1);
  return out;
}

std::vector<long long> balance(const Digraph& g) {
  std::vector<long long> b;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    b.push_back(static_cast<long long>(g.out_degree(v)) - static_cast<long long>(g.in_degree(v)));
  }
  return b;
}

}  // namespace

TEST_CASE("is_eulerian") {
  CHECK(is_eulerian(fixtures::triangle()));
  const auto two_triangles = Digraph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_eulerian(two_triangles));
  CHECK(is_eulerian(generate_gk(5).graph));
  CHECK_FALSE(is_eulerian(fixtures::single_edge()));
  CHECK(is_eulerian(Digraph::build(1, {})));
  CHECK_FALSE(is_eulerian(Digraph::build(2, {})));
}

TEST_CASE("euler_circuit") {
  CHECK(euler_circuit(fixtures::triangle()).vertices == std::vector<Vertex>{0, 1, 2, 0});

  const auto fig8 = fixtures::figure_eight();
  const auto c = euler_circuit(fig8);
  CHECK(c.length() == 6);
  CHECK(is_valid_walk(fig8, c));
  CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 0, 3, 4, 0});

  CHECK(code_of([] { euler_circuit(fixtures::single_edge()); }) == ErrorCode::kNotEulerian);
}

TEST_CASE("enumerate_dicycles") {
  const auto tri = enumerate_dicycles(fixtures::triangle());
  CHECK(tri.complete);
  REQUIRE(tri.cycles.size() == 1);
  CHECK(tri.cycles[0].vertices == std::vector<Vertex>{0, 1, 2, 0});

  const auto path = enumerate_dicycles(fixtures::dipath(3));
  CHECK(path.complete);
  CHECK(path.cycles.empty());

  const auto fig8 = enumerate_dicycles(fixtures::figure_eight());
  CHECK(fig8.cycles.size() == 2);
  CHECK(as_sequences(fig8.cycles) == oracle::all_dicycles(fixtures::figure_eight()));

  const auto capped = enumerate_dicycles(fixtures::complete3(), 2);
  CHECK_FALSE(capped.complete);
  CHECK(capped.cycles.size() == 2);
  // Exactly cap cycles present still counts as complete.
  CHECK(enumerate_dicycles(fixtures::figure_eight(), 2).complete);
}

TEST_CASE("enumerate_dicycles matches the subset oracle on every 4-vertex digraph") {
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const auto g = oracle::from_mask(4, mask);
    const auto found = enumerate_dicycles(g);
    REQUIRE(found.complete);
    CHECK(found.cycles.size() == as_sequences(found.cycles).size());
    CHECK(as_sequences(found.cycles) == oracle::all_dicycles(g));
    for (const auto& c : found.cycles) CHECK(is_valid_walk(g, c));
  }
}

TEST_CASE("remove_dicycle") {
  const auto tri = fixtures::triangle();
  const auto empty = remove_dicycle(tri, {WalkKind::kDicycle, {0, 1, 2, 0}});
  CHECK(empty.vertex_count() == 3);
  CHECK(empty.edge_count() == 0);

  const auto fig8 = remove_dicycle(fixtures::figure_eight(), {WalkKind::kDicycle, {0, 1, 2, 0}});
  CHECK(fig8.edge_count() == 3);
  CHECK_FALSE(is_connected_eulerian_sense(fig8));

  const auto gk = generate_gk(4);
  Walk through_v1;
  for (const auto& c : enumerate_dicycles(gk.graph).cycles) {
    if (std::find(c.vertices.begin(), c.vertices.end(), gk.v(1)) != c.vertices.end()) {
      through_v1 = c;
      break;
    }
  }
  REQUIRE_FALSE(through_v1.vertices.empty());
  const auto rest = remove_dicycle(gk.graph, through_v1);
  CHECK(rest.out_degree(gk.v(1)) == 0);
  CHECK(rest.in_degree(gk.v(1)) == 0);
  CHECK_FALSE(is_connected_eulerian_sense(rest));

  CHECK(code_of([&] { remove_dicycle(tri, {WalkKind::kDicycle, {0, 2, 1, 0}}); }) == ErrorCode::kEdgeMissing);
}

TEST_CASE("remove_dicycle preserves the balance vector") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = fixtures::eulerian(6 + seed % 8, seed);
    const auto before = balance(g);
    for (const auto& c : enumerate_dicycles(g, 50).cycles) CHECK(balance(remove_dicycle(g, c)) == before);
  }
}

TEST_CASE("is_minimally_eulerian") {
  CHECK(is_minimally_eulerian(fixtures::triangle()).verdict == Verdict::kTrue);
  const auto k3 = is_minimally_eulerian(fixtures::complete3());
  CHECK(k3.verdict == Verdict::kFalse);
  REQUIRE(k3.witness.has_value());
  CHECK(is_connected_eulerian_sense(remove_dicycle(fixtures::complete3(), *k3.witness)));
  CHECK(is_minimally_eulerian(generate_gk(4).graph).verdict == Verdict::kTrue);
  CHECK(is_minimally_eulerian(fixtures::figure_eight()).verdict == Verdict::kTrue);
  CHECK(is_minimally_eulerian(fixtures::single_edge()).verdict == Verdict::kFalse);
}

TEST_CASE("minimality agrees with checking every dicycle") {
  // Unpruned reference: all dicycles, each removal must disconnect.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = fixtures::eulerian(4 + seed % 7, seed);
    bool minimal = true;
    for (const auto& c : enumerate_dicycles(g).cycles) {
      if (is_connected_eulerian_sense(remove_dicycle(g, c))) minimal = false;
    }
    CHECK((is_minimally_eulerian(g).verdict == Verdict::kTrue) == minimal);
  }
}

TEST_CASE("minimality is indeterminate when the cap stops the search") {
  // Complete digraph on 5 vertices: every vertex has outdegree 4.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v)
      if (u != v) edges.emplace_back(u, v);
  const auto k5 = Digraph::build(5, edges);
  // Its first cycles are removable, so a witness is found before the cap.
  CHECK(is_minimally_eulerian(k5, 1).verdict == Verdict::kFalse);
  // A cap of zero examines nothing.
  CHECK(is_minimally_eulerian(k5, 0).verdict == Verdict::kIndeterminate);
}

TEST_CASE("reduce_to_minimally_eulerian") {
  const auto tri = reduce_to_minimally_eulerian(fixtures::triangle());
  CHECK(tri.graph == fixtures::triangle());
  CHECK(tri.trace.empty());

  // Shortest removable dicycle first: the 2-cycle 0-1-0, which leaves two
  // 2-cycles hanging off vertex 2.
  const auto k3 = reduce_to_minimally_eulerian(fixtures::complete3());
  REQUIRE(k3.trace.size() == 1);
  CHECK(k3.trace[0].vertices == std::vector<Vertex>{0, 1, 0});
  CHECK(k3.graph == Digraph::build(3, {{0, 2}, {2, 0}, {1, 2}, {2, 1}}));
  CHECK(is_minimally_eulerian(k3.graph).verdict == Verdict::kTrue);
  // Removing either triangle instead would have left the reverse triangle.
  CHECK(is_connected_eulerian_sense(remove_dicycle(fixtures::complete3(), {WalkKind::kDicycle, {0, 1, 2, 0}})));

  const auto fig8 = reduce_to_minimally_eulerian(fixtures::figure_eight());
  CHECK(fig8.graph == fixtures::figure_eight());
  CHECK(fig8.trace.empty());

  CHECK(code_of([] { reduce_to_minimally_eulerian(fixtures::single_edge()); }) == ErrorCode::kNotEulerian);
}

TEST_CASE("reduction trace reconstructs the input and keeps every step connected Eulerian") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = fixtures::eulerian(5 + seed % 10, seed);
    const auto red = reduce_to_minimally_eulerian(g);
    CHECK(is_minimally_eulerian(red.graph).verdict == Verdict::kTrue);
    std::multiset<Edge> rebuilt;
    for (const auto& e : red.graph.edges()) rebuilt.insert(e);
    Digraph step = g;
    for (const auto& c : red.trace) {
      for (const auto& e : c.edges()) rebuilt.insert(e);
      step = remove_dicycle(step, c);
      CHECK(is_eulerian(step));
    }
    const auto original = g.edges();
    CHECK(rebuilt == std::multiset<Edge>(original.begin(), original.end()));
    CHECK(step == red.graph);
    CHECK(prop13_bound(red.graph.vertex_count(), red.graph.edge_count()).holds);
  }
}

TEST_CASE("spanning_arborescence") {
  CHECK(spanning_arborescence(fixtures::triangle(), 0) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(spanning_arborescence(fixtures::figure_eight(), 0) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {3, 4}});
  CHECK(code_of([] { spanning_arborescence(fixtures::single_edge(), 1); }) == ErrorCode::kUnreachable);
}

TEST_CASE("decompose") {
  const auto tri = decompose(fixtures::triangle());
  CHECK(tri.dipaths.empty());
  CHECK(tri.dicycles.size() == 1);

  const auto star = decompose(fixtures::out_star());
  CHECK(star.dipaths.size() == 3);
  CHECK(star.dicycles.empty());
  for (const auto& p : star.dipaths) CHECK(p.length() == 1);

  const auto g = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 1}});
  const auto d = decompose(g);
  CHECK(d.dipaths.empty());
  REQUIRE(d.dicycles.size() == 2);
  CHECK(d.dicycles[0].vertices == std::vector<Vertex>{0, 1, 2, 0});
  CHECK(d.dicycles[1].vertices == std::vector<Vertex>{1, 3, 1});
}

TEST_CASE("decompose uses exactly p_sharp dipaths on every 4-vertex digraph") {
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const auto g = oracle::from_mask(4, mask);
    const auto d = decompose(g);
    CHECK(d.dipaths.size() == p_sharp(g));
    std::vector<const Walk*> all;
    for (const auto& w : d.dipaths) {
      CHECK(is_valid_walk(g, w));
      all.push_back(&w);
    }
    for (const auto& w : d.dicycles) {
      CHECK(is_valid_walk(g, w));
      all.push_back(&w);
    }
    CHECK(covers_edges_exactly(g, all));
  }
}

TEST_CASE("walk text round trip") {
  const auto d = decompose(Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}));
  std::ostringstream out;
  write_decomposition(out, d);
  CHECK(out.str() == "P: 3 4\nC: 0 1 2 0\n");
  std::istringstream in(out.str());
  std::string line;
  std::vector<Walk> parsed;
  while (std::getline(in, line)) parsed.push_back(parse_walk(line));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0] == d.dipaths[0]);
  CHECK(parsed[1] == d.dicycles[0]);
  CHECK(code_of([] { parse_walk("X: 1 2"); }) == ErrorCode::kParse);
}
