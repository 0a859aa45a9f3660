#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hampow/digraph.hpp"
#include "hampow/euler.hpp"

namespace hampow {

/// ceil(sqrt(n) * log2(n)^2 / 2), the power guaranteed to be Hamiltonian for
/// a connected n-vertex Eulerian digraph. Exact for powers of two; values
/// within 1e-6 of an integer are re-evaluated in 100-digit arithmetic.
std::uint64_t f_bound(std::size_t n);

/// log_{3/2} 2, the exponent of log2(n) in the refined path-length factor.
/// Reported only; the refined factor carries an unspecified o(1) term.
inline const double kRefinedLogExponent = std::log(2.0) / std::log(1.5);

/// Largest n for which f_bound(n) >= n - 1 is claimed to hold throughout.
inline constexpr std::size_t kThresholdClaim = 6387;

struct ThresholdScan {
  std::size_t limit = 0;
  /// n in [2, kThresholdClaim] with f_bound(n) < n - 1. Expected empty.
  std::vector<std::size_t> violations;
  /// Smallest n in [2, limit] with f_bound(n) < n - 1.
  std::optional<std::size_t> first_failure;
};

/// Requires limit > kThresholdClaim.
ThresholdScan threshold_scan(std::size_t limit);

enum class BoundName { kProp12, kProp13, kThm11, kThm21Length };
std::string_view to_string(BoundName name);
std::optional<BoundName> bound_name_from_string(std::string_view s);

/// One evaluated inequality lhs <= rhs. `holds` is decided in exact integer
/// arithmetic; lhs/rhs are for display.
struct BoundReport {
  BoundName name = BoundName::kProp12;
  std::size_t n = 0;
  std::size_t m = 0;
  /// p_sharp for the acyclic bound, the exponent or path length otherwise.
  std::optional<std::size_t> p_sharp;
  std::optional<std::size_t> k;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// m <= sqrt(2 p#) n for acyclic g, compared as m^2 <= 2 p# n^2.
/// Throws kNotAcyclic.
BoundReport check_prop12(const Digraph& g);

/// m <= sqrt(2(n-1)) n + n - 1 for minimally Eulerian g, compared as
/// (m-n+1)^2 <= 2(n-1)n^2. Throws kNotMinimallyEulerian when minimality is
/// false or undecided within `cap`.
BoundReport check_prop13(const Digraph& g, std::size_t cap = kDefaultCycleCap);

/// Same inequality without re-deciding minimality (caller vouches for it).
BoundReport prop13_bound(std::size_t n, std::size_t m);

/// h(g) <= f_bound(n) for a connected Eulerian g with known exponent h.
BoundReport thm11_bound(std::size_t n, std::size_t m, std::size_t exponent);

/// Cyclic vertex ordering with one dipath between each consecutive pair.
struct PathDecomposition {
  std::vector<Vertex> ordering;
  /// paths[i] runs from ordering[i] to ordering[(i+1) % n].
  std::vector<std::vector<Vertex>> paths;

  std::size_t max_len() const;
  /// Path lengths sorted in descending order, the lexicographic key.
  std::vector<std::size_t> lengths_descending() const;
  /// Whether every path also has pairwise distinct vertices.
  bool all_vertex_simple() const;

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

/// true iff a is strictly better than b: smaller descending length vector.
bool lex_better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Returns a description of the first violated invariant, or nullopt.
std::optional<std::string> decomposition_defect(const Digraph& g, const PathDecomposition& d);

/// Concatenation of the paths as a closed walk starting at ordering[0].
Walk concatenate(const PathDecomposition& d);

inline constexpr std::uint64_t kDefaultSelectionBudget = 10'000'000;

struct OccurrenceSelection {
  PathDecomposition decomposition;
  /// Positions (indices into the circuit without its closing vertex) of the
  /// chosen occurrence of each vertex, ascending.
  std::vector<std::size_t> positions;
  /// false when the branch-and-bound ran out of budget and the result may
  /// come from the greedy fallback.
  bool exact = true;
};

/// Picks one occurrence of every vertex along `circuit` so that cutting the
/// circuit there gives the lexicographically smallest descending vector of
/// segment lengths (so in particular the smallest maximum segment).
/// Throws kNotEulerCircuit if `circuit` is not an Euler circuit of g.
OccurrenceSelection occurrence_select(const Digraph& g, const Walk& circuit,
                                      std::uint64_t budget = kDefaultSelectionBudget);

/// Cuts `circuit` at the given ascending positions.
PathDecomposition cut_circuit(const Walk& circuit, const std::vector<std::size_t>& positions);

/// Greedy cut: binary search on the segment-length cap with an
/// earliest-deadline sweep. Always returns a valid cut.
std::vector<std::size_t> greedy_positions(const Walk& circuit, std::size_t n);

struct LexminResult {
  PathDecomposition decomposition;
  /// Circuit search finished and every per-circuit selection was exact.
  bool exact = false;
  std::uint64_t circuits = 0;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultCircuitBudget = 1'000'000;

/// Searches Euler circuits (each cyclic circuit once, out-edges in ascending
/// order) and keeps the lexicographically best occurrence selection.
/// `budget` counts circuit completions plus search nodes. Throws kNotEulerian.
LexminResult lexmin_decomposition(const Digraph& g, std::uint64_t budget = kDefaultCircuitBudget,
                                  std::uint64_t selection_budget = kDefaultSelectionBudget);

/// max path length <= f_bound(n). Throws kInvalidDecomposition naming the
/// violated invariant.
BoundReport check_thm21(const Digraph& g, const PathDecomposition& d);

}  // namespace hampow
