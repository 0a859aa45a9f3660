#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hampow/families.hpp"
#include "hampow/power.hpp"
#include "oracles.hpp"

using namespace hampow;
using hampow::fixtures::code_of;

TEST_CASE("power") {
  const auto g = fixtures::figure_eight();
  CHECK(power(g, 1) == g);
  CHECK(power(fixtures::triangle(), 2) == fixtures::complete3());
  CHECK(power(fixtures::dipath(3), 2) == Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(code_of([&] { power(g, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("powers nest and compose") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_strongly_connected(2 + seed % 11, seed % 5, seed);
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto lower = power(g, k);
      const auto upper = power(g, k + 1);
      for (const auto& [u, v] : lower.edges()) CHECK(upper.has_edge(u, v));
    }
    for (std::size_t a = 1; a <= 3; ++a)
      for (std::size_t b = 1; b <= 3; ++b) CHECK(power(power(g, a), b) == power(g, a * b));
  }
}

TEST_CASE("is_hamiltonian") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(is_hamiltonian(fixtures::directed_cycle(n)).verdict == Verdict::kTrue);
  CHECK(is_hamiltonian(fixtures::out_star()).verdict == Verdict::kFalse);
  CHECK(is_hamiltonian(fixtures::figure_eight()).verdict == Verdict::kFalse);
  const auto square = is_hamiltonian(power(fixtures::figure_eight(), 2));
  CHECK(square.verdict == Verdict::kTrue);
  CHECK(square.cycle.size() == 5);
  CHECK(is_hamiltonian(Digraph::build(1, {})).verdict == Verdict::kFalse);
}

TEST_CASE("subset DP and branch-and-bound agree with permutation search") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(2, 8));
    const auto g = seed % 2 ? random_strongly_connected(n, rng.below(n), seed)
                            : fixtures::eulerian(std::max<std::size_t>(n, 3), seed);
    const bool expected = oracle::hamiltonian_by_permutation(g);
    const auto dp = hamiltonian_dp(g);
    const auto bb = hamiltonian_branch_and_bound(g, kDefaultNodeBudget);
    CHECK((dp.verdict == Verdict::kTrue) == expected);
    CHECK((bb.verdict == Verdict::kTrue) == expected);
    for (const auto* r : {&dp, &bb}) {
      if (r->verdict != Verdict::kTrue) continue;
      REQUIRE(r->cycle.size() == g.vertex_count());
      CHECK(r->cycle.front() == 0);
      for (std::size_t i = 0; i < r->cycle.size(); ++i) {
        CHECK(g.has_edge(r->cycle[i], r->cycle[(i + 1) % r->cycle.size()]));
      }
    }
  }
}

TEST_CASE("branch-and-bound reports indeterminate when the budget runs out") {
  const auto gk = generate_gk(5);
  // G_5 squared is not Hamiltonian (v-vertices are 4 apart), and a handful of
  // expansions cannot prove it.
  const auto r = hamiltonian_branch_and_bound(power(gk.graph, 2), 10);
  CHECK(r.verdict == Verdict::kIndeterminate);
  CHECK(r.expansions == 10);
}

TEST_CASE("ham_exponent") {
  for (std::size_t n = 2; n <= 12; ++n) CHECK(ham_exponent(fixtures::directed_cycle(n))->h == 1);
  const auto fig8 = ham_exponent(fixtures::figure_eight());
  REQUIRE(fig8.has_value());
  CHECK(fig8->h == 2);
  CHECK(verify_certificate(fixtures::figure_eight(), fig8->certificate));
  CHECK_FALSE(ham_exponent(fixtures::single_edge()).has_value());
  CHECK_FALSE(ham_exponent(Digraph::build(1, {})).has_value());
}

TEST_CASE("ham_exponent surfaces budget exhaustion with a bracket") {
  const auto gk = generate_gk(5);
  try {
    ham_exponent(gk.graph, 10);
    FAIL("expected ExponentBudgetExhausted");
  } catch (const ExponentBudgetExhausted& e) {
    CHECK(e.code() == ErrorCode::kBudgetExhausted);
    CHECK(e.lo() >= 1);
    CHECK(e.hi() <= gk.params.n - 1);
    CHECK(e.lo() <= e.hi());
  }
}

TEST_CASE("binary search equals the linear scan, and Hamiltonian graphs have exponent 1") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = random_strongly_connected(2 + seed % 11, seed % 4, seed);
    const auto h = ham_exponent(g);
    REQUIRE(h.has_value());
    std::size_t linear = 0;
    for (std::size_t k = 1; k < g.vertex_count() && linear == 0; ++k) {
      if (oracle::hamiltonian_by_permutation(power(g, k))) linear = k;
    }
    CHECK(h->h == linear);
    CHECK(h->h <= g.vertex_count() - 1);
    CHECK(verify_certificate(g, h->certificate));
    if (oracle::hamiltonian_by_permutation(g)) CHECK(h->h == 1);
  }
}

TEST_CASE("verify_certificate") {
  const auto tri = fixtures::triangle();
  HamiltonCertificate good{1, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK(verify_certificate(tri, good));

  HamiltonCertificate short_hop{1, {0, 2, 1}, {{0, 2}, {2, 1}, {1, 0}}};
  CHECK_FALSE(verify_certificate(tri, short_hop));
  HamiltonCertificate too_long{1, {0, 2, 1}, {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}};
  CHECK_FALSE(verify_certificate(tri, too_long));
  too_long.k = 2;
  CHECK(verify_certificate(tri, too_long));

  HamiltonCertificate repeated{1, {0, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_FALSE(verify_certificate(tri, repeated));
}

TEST_CASE("G_4 exponent certificate") {
  const auto gk = generate_gk(4);
  const auto h = ham_exponent(gk.graph);
  REQUIRE(h.has_value());
  CHECK(h->h >= 3);
  CHECK(verify_certificate(gk.graph, h->certificate));
  // One below the exponent is not Hamiltonian.
  CHECK(is_hamiltonian(power(gk.graph, h->h - 1)).verdict == Verdict::kFalse);
}

TEST_CASE("certificate text round trip") {
  const auto h = ham_exponent(fixtures::figure_eight());
  REQUIRE(h.has_value());
  std::ostringstream out;
  write_certificate(out, h->certificate);
  CHECK(out.str().rfind("k=2\ncycle: ", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_certificate(in) == h->certificate);

  std::istringstream bad("k=x\n");
  CHECK(code_of([&] { read_certificate(bad); }) == ErrorCode::kParse);
}
