#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hampow/digraph.hpp"
#include "hampow/euler.hpp"
#include "hampow/power.hpp"

namespace hampow {

/// Seeded generator used by every corpus builder. The engine is the standard
/// mt19937_64, whose output sequence is fixed by the C++ standard; bounded
/// draws use rejection sampling on the raw 64-bit output so that corpora do
/// not depend on a standard library's distribution implementation.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/reject-mod";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  /// First `count` entries of a uniformly shuffled 0..n-1.
  std::vector<Vertex> sample(std::size_t n, std::size_t count);

 private:
  std::mt19937_64 engine_;
};

struct GkParams {
  std::size_t k = 0;
  std::size_t ell = 0;  // number of v-vertices, k(k+1)/2
  std::size_t n = 0;    // 2 ell - 1 = k^2 + k - 1
  std::size_t m = 0;    // k(k^2 + 2k - 1)/2

  /// Throws kParameterTooSmall for k < 4.
  static GkParams of(std::size_t k);
};

/// Smallest p with sum_{j=1..p} (k+1-j) >= i. Throws kIndexOutOfRange unless
/// 1 <= i <= k(k+1)/2.
std::size_t phi(std::size_t i, std::size_t k);

enum class Role { kU, kV };

/// G_k with u_1..u_{ell-1} at indices 0..ell-2 and v_1..v_ell at ell-1..2ell-2.
struct GkGraph {
  GkParams params;
  Digraph graph;
  std::vector<Role> roles;

  Vertex u(std::size_t i) const { return static_cast<Vertex>(i - 1); }
  Vertex v(std::size_t i) const { return static_cast<Vertex>(params.ell - 1 + i - 1); }
  std::vector<Vertex> v_vertices() const;
};

GkGraph generate_gk(std::size_t k);

enum class ExactStatus { kComputed, kIndeterminate, kSkipped };
std::string_view to_string(ExactStatus s);

struct GkCertificate {
  GkParams params;
  bool counts_match = false;
  Verdict minimally_eulerian = Verdict::kIndeterminate;
  bool v_degrees_unit = false;
  /// The u-vertices alone form an acyclic digraph, so every dicycle meets a v.
  bool u_subgraph_acyclic = false;
  std::uint32_t min_v_distance = 0;
  std::size_t distance_claim = 0;    // ceil((ell+1)/k)
  std::size_t half_k_claim = 0;      // ceil(k/2) + 1
  std::size_t sqrt_claim = 0;        // floor(sqrt(n)/2) + 1
  /// More v-vertices than half the cycle, so two must be adjacent.
  bool pigeonhole = false;
  std::size_t lower_bound = 0;
  ExactStatus exact = ExactStatus::kSkipped;
  std::optional<std::size_t> exponent;
  std::optional<HamiltonCertificate> certificate;
  bool certificate_verified = false;
  std::size_t bracket_lo = 0;
  std::size_t bracket_hi = 0;

  /// Every checked claim holds (the exact exponent may be missing).
  bool claims_hold() const;
};

/// Checks the family's stated properties and, if `attempt_exact`, the exact
/// exponent. Up to the DP size the exponent search starts from 1; above it
/// the search starts at the certified lower bound.
GkCertificate certify_gk(std::size_t k, std::uint64_t budget = kDefaultNodeBudget,
                         std::size_t cycle_cap = kDefaultCycleCap, bool attempt_exact = true);

inline constexpr std::size_t kEulerianRejectionCap = 10'000;

/// Union of `cycles` random dicycles (lengths uniform in [3, min(n,8)]),
/// resampled until simple and connected. Throws kGenerationFailed after
/// kEulerianRejectionCap rejections, kInvalidArgument for n < 3 or cycles 0.
Digraph random_eulerian(std::size_t n, std::size_t cycles, std::uint64_t seed);

/// Random vertex order; each forward pair kept with probability `density`.
Digraph random_dag(std::size_t n, double density, std::uint64_t seed);

/// Random out-tree plus one backward edge per non-root vertex (both along a
/// random order) plus up to `extra` random edges. Strongly connected.
Digraph random_strongly_connected(std::size_t n, std::size_t extra, std::uint64_t seed);

/// Comment lines recorded at the top of generated edge-list files.
std::vector<std::string> corpus_comments(const std::string& generator, const std::string& params,
                                         std::optional<std::uint64_t> seed);

void write_roles(std::ostream& out, const std::vector<Role>& roles);

/// u-vertices on a horizontal line, v-vertices along an arc above it.
void write_gk_dot(std::ostream& out, const GkGraph& gk);

}  // namespace hampow
