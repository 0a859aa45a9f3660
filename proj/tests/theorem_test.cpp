#include <cmath>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "hampow/acceptance.hpp"
#include "hampow/families.hpp"
#include "hampow/theorem.hpp"

using namespace hampow;
using hampow::fixtures::code_of;

namespace {

std::uint64_t f_oracle(std::size_t n) {
  const long double lg = std::log2(static_cast<long double>(n));
  return static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<long double>(n)) * lg * lg / 2));
}

}  // namespace

TEST_CASE("f_bound") {
  CHECK(f_bound(2) == 1);
  CHECK(f_bound(4) == 4);
  CHECK(f_bound(16) == 32);
  CHECK(f_bound(64) == 144);
  CHECK(f_bound(256) == 512);
  CHECK(f_bound(19) == f_oracle(19));
  CHECK(f_bound(6387) >= 6386);
  CHECK(f_bound(6388) < 6387);
  for (std::size_t n = 2; n < 3000; n += 7) CHECK(f_bound(n) == f_oracle(n));
  for (std::size_t n = 2; n < 5000; ++n) CHECK(f_bound(n) <= f_bound(n + 1));
}

TEST_CASE("threshold scan") {
  const auto scan = threshold_scan(7000);
  CHECK(scan.violations.empty());
  REQUIRE(scan.first_failure.has_value());
  CHECK(*scan.first_failure == kThresholdClaim + 1);
  CHECK(code_of([] { threshold_scan(100); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("bound names") {
  for (auto name : {BoundName::kProp12, BoundName::kProp13, BoundName::kThm11, BoundName::kThm21Length}) {
    CHECK(bound_name_from_string(to_string(name)) == name);
  }
  CHECK_FALSE(bound_name_from_string("nope").has_value());
}

TEST_CASE("acyclic edge bound") {
  const auto r = check_prop12(fixtures::transitive_tournament(4));
  CHECK(r.p_sharp == 4);
  CHECK(r.m == 6);
  CHECK(r.holds);
  CHECK(check_prop12(Digraph::build(3, {})).holds);
  CHECK(code_of([] { check_prop12(fixtures::triangle()); }) == ErrorCode::kNotAcyclic);

  // Tournaments are the densest acyclic digraphs; exact check m^2 <= 2 p# n^2.
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto t = fixtures::transitive_tournament(n);
    std::size_t imbalance = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const auto out = n - 1 - v, in = v;
      imbalance += out > in ? out - in : 0;
    }
    const auto rep = check_prop12(t);
    CHECK(rep.p_sharp == imbalance);
    CHECK(rep.holds == (rep.m * rep.m <= 2 * imbalance * n * n));
    CHECK(rep.holds);
  }
}

TEST_CASE("minimally Eulerian edge bound") {
  const auto tri = check_prop13(fixtures::triangle());
  CHECK(tri.holds);
  CHECK(tri.m == 3);

  const auto g4 = check_prop13(generate_gk(4).graph);
  CHECK(g4.n == 19);
  CHECK(g4.m == 46);
  CHECK(g4.lhs == doctest::Approx(46));
  CHECK(g4.rhs == doctest::Approx(132));
  CHECK(g4.holds);

  const auto g8 = check_prop13(generate_gk(8).graph);
  CHECK(g8.n == 71);
  CHECK(g8.m == 316);
  CHECK(g8.holds);

  CHECK(code_of([] { check_prop13(fixtures::complete3()); }) == ErrorCode::kNotMinimallyEulerian);
  CHECK(prop13_bound(1, 0).holds);
}

TEST_CASE("exponent bound") {
  const auto r = thm11_bound(19, 46, 3);
  CHECK(r.k == 3);
  CHECK(r.holds);
  CHECK_FALSE(thm11_bound(4, 6, 5).holds);
}

TEST_CASE("lexicographic order on length vectors") {
  CHECK(lex_better({2, 1, 1}, {3, 1, 0}));
  CHECK(lex_better({2, 2, 1}, {2, 2, 2}));
  CHECK_FALSE(lex_better({2, 1}, {2, 1}));
  CHECK_FALSE(lex_better({3}, {2}));
}

TEST_CASE("occurrence selection on small circuits") {
  const auto tri = fixtures::triangle();
  const auto t = occurrence_select(tri, euler_circuit(tri));
  CHECK(t.exact);
  CHECK(t.decomposition.lengths_descending() == std::vector<std::size_t>{1, 1, 1});
  CHECK_FALSE(decomposition_defect(tri, t.decomposition).has_value());

  const auto fig8 = fixtures::figure_eight();
  const auto f = occurrence_select(fig8, euler_circuit(fig8));
  CHECK(f.exact);
  CHECK(f.decomposition.max_len() == 2);
  CHECK(f.decomposition.lengths_descending() == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(f.positions.size() == 5);
  CHECK(std::is_sorted(f.positions.begin(), f.positions.end()));

  const auto cyc = fixtures::directed_cycle(9);
  CHECK(occurrence_select(cyc, euler_circuit(cyc)).decomposition.max_len() == 1);

  Walk not_circuit{WalkKind::kEulerCircuit, {0, 1, 2, 0}};
  CHECK(code_of([&] { occurrence_select(fig8, not_circuit); }) == ErrorCode::kNotEulerCircuit);
}

TEST_CASE("exact selection matches exhaustive enumeration") {
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const auto g = fixtures::eulerian(n, seed);
    const auto circuit = euler_circuit(g);
    const auto sel = occurrence_select(g, circuit);
    CHECK_FALSE(decomposition_defect(g, sel.decomposition).has_value());
    // Concatenating the paths gives back a rotation of the circuit.
    CHECK(concatenate(sel.decomposition).length() == g.edge_count());
    const auto lengths = sel.decomposition.lengths_descending();
    CHECK(std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}) == g.edge_count());

    const auto oracle = exhaustive_best_lengths(circuit, n, 1'000'000);
    if (oracle.empty()) continue;
    ++compared;
    CHECK(sel.exact);
    CHECK(lengths == oracle);

    // Greedy never beats the exact answer.
    const auto greedy = cut_circuit(circuit, greedy_positions(circuit, n));
    CHECK_FALSE(decomposition_defect(g, greedy).has_value());
    CHECK_FALSE(lex_better(greedy.lengths_descending(), lengths));
  }
  CHECK(compared > 100);
}

TEST_CASE("selection budget falls back to a valid cut") {
  const auto g = generate_gk(5).graph;
  const auto sel = occurrence_select(g, euler_circuit(g), 1);
  CHECK_FALSE(decomposition_defect(g, sel.decomposition).has_value());
}

TEST_CASE("lexmin decomposition") {
  const auto fig8 = lexmin_decomposition(fixtures::figure_eight());
  CHECK(fig8.exact);
  CHECK(fig8.decomposition.lengths_descending() == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(fig8.circuits >= 1);

  CHECK(code_of([] { lexmin_decomposition(fixtures::single_edge()); }) == ErrorCode::kNotEulerian);

  // A larger budget never gives a worse answer.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = fixtures::eulerian(7, seed);
    const auto small = lexmin_decomposition(g, 5);
    const auto large = lexmin_decomposition(g, 200'000);
    CHECK_FALSE(decomposition_defect(g, small.decomposition).has_value());
    CHECK_FALSE(lex_better(small.decomposition.lengths_descending(), large.decomposition.lengths_descending()));
    if (large.exact) {
      const auto r = check_thm21(g, large.decomposition);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("check_thm21 validates the decomposition") {
  const auto g = fixtures::figure_eight();
  auto d = lexmin_decomposition(g).decomposition;
  const auto r = check_thm21(g, d);
  CHECK(r.holds);
  CHECK(r.k == 2);

  auto swapped = d;
  std::swap(swapped.ordering[0], swapped.ordering[1]);
  CHECK(code_of([&] { check_thm21(g, swapped); }) == ErrorCode::kInvalidDecomposition);

  auto missing = d;
  missing.paths.pop_back();
  CHECK(code_of([&] { check_thm21(g, missing); }) == ErrorCode::kInvalidDecomposition);
}
