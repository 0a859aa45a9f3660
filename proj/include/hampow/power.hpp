#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hampow/digraph.hpp"
#include "hampow/error.hpp"
#include "hampow/euler.hpp"

namespace hampow {

/// k-th power: u -> v iff u != v and dist(u, v) <= k. Throws kInvalidArgument
/// for k == 0.
Digraph power(const Digraph& g, std::size_t k);
Digraph power(const DistanceMatrix& dist, std::size_t k);

/// Largest vertex count handled by the subset dynamic program.
inline constexpr std::size_t kDpThreshold = 22;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct HamiltonResult {
  Verdict verdict = Verdict::kFalse;
  /// Spanning dicycle as a vertex order starting at 0 (closing edge implied).
  std::vector<Vertex> cycle;
  std::uint64_t expansions = 0;
};

/// Exact subset DP for n <= kDpThreshold, branch-and-bound above it.
/// Indeterminate only when branch-and-bound runs out of `budget` node
/// expansions.
HamiltonResult is_hamiltonian(const Digraph& g, std::uint64_t budget = kDefaultNodeBudget);

// The two engines, exposed so they can be checked against each other.
HamiltonResult hamiltonian_dp(const Digraph& g);
HamiltonResult hamiltonian_branch_and_bound(const Digraph& g, std::uint64_t budget);

struct HamiltonCertificate {
  std::size_t k = 0;
  std::vector<Vertex> cycle;
  /// hops[i] is a dipath of the base graph from cycle[i] to cycle[i+1 mod n].
  std::vector<std::vector<Vertex>> hops;

  friend bool operator==(const HamiltonCertificate&, const HamiltonCertificate&) = default;
};

/// Rebuilds hops against the base graph with BFS shortest dipaths.
HamiltonCertificate make_certificate(const Digraph& base, const std::vector<Vertex>& cycle, std::size_t k);

bool verify_certificate(const Digraph& g, const HamiltonCertificate& cert);

struct ExponentResult {
  std::size_t h = 0;
  HamiltonCertificate certificate;
  std::uint64_t expansions = 0;
};

/// Raised when a Hamiltonicity test inside the exponent search is
/// indeterminate. [lo, hi] still brackets the exponent.
class ExponentBudgetExhausted : public Error {
 public:
  ExponentBudgetExhausted(std::size_t lo, std::size_t hi)
      : Error(ErrorCode::kBudgetExhausted,
              "exponent bracketed in [" + std::to_string(lo) + "," + std::to_string(hi) + "]"),
        lo_(lo), hi_(hi) {}
  std::size_t lo() const { return lo_; }
  std::size_t hi() const { return hi_; }

 private:
  std::size_t lo_;
  std::size_t hi_;
};

/// Least k with G^k Hamiltonian, by binary search over [min_k, n-1]. Returns
/// nullopt when G is not strongly connected or n < 2. Passing min_k > 1
/// asserts that G^(min_k - 1) is already known not to be Hamiltonian.
/// `budget` applies to each Hamiltonicity test separately.
std::optional<ExponentResult> ham_exponent(const Digraph& g, std::uint64_t budget = kDefaultNodeBudget,
                                           std::size_t min_k = 1);

// Text form: "k=<k>", "cycle: v0 ... v_{n-1}", then one "hop: u ... v" per
// cycle edge.
void write_certificate(std::ostream& out, const HamiltonCertificate& cert);
HamiltonCertificate read_certificate(std::istream& in);

}  // namespace hampow
