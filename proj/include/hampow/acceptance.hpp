#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hampow/digraph.hpp"
#include "hampow/euler.hpp"
#include "hampow/report.hpp"

namespace hampow {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  /// Per Hamiltonicity test, in node expansions (only the G_5 attempt needs it).
  std::uint64_t node_budget = 2'000'000;
  std::size_t cycle_cap = kDefaultCycleCap;
  std::uint64_t circuit_budget = 20'000;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string detail;
  double elapsed_ms = 0;
};

/// Check identifiers in canonical order ("01-g4-certificate", ...).
std::vector<std::string> acceptance_check_ids();

/// Throws kInvalidArgument for an unknown id.
CheckResult run_acceptance_check(const std::string& id, const AcceptanceOptions& options);

struct BatchReport {
  std::vector<CheckResult> results;  // sorted by id
  double elapsed_ms = 0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

/// Runs the given checks concurrently and reports them in id order.
BatchReport run_batch(const std::vector<std::string>& ids, const AcceptanceOptions& options);

/// Records without timings, so equal inputs give byte-identical streams.
std::vector<Record> batch_records(const BatchReport& report);
void write_batch_table(std::ostream& out, const BatchReport& report);

// Corpora, reproducible from the seed.
std::vector<Digraph> eulerian_corpus(std::uint64_t seed, std::size_t count);
std::vector<Digraph> dag_corpus(std::uint64_t seed, std::size_t count);
std::vector<Digraph> strongly_connected_corpus(std::uint64_t seed, std::size_t count);

using PSharpFn = std::function<std::size_t(const Digraph&)>;

/// Dipath count of decompose() against `count_fn`, edge coverage, and Euler
/// circuits on Eulerian members. The counting function is a parameter so
/// that a deliberately broken one can be shown to be caught.
CheckResult check_decomposition_counts(const std::vector<Digraph>& corpus, const PSharpFn& count_fn);

/// Least k with G^k Hamiltonian by trying k = 1, 2, ... in turn.
std::size_t linear_scan_exponent(const Digraph& g);

/// Lexicographically smallest descending segment-length vector over every
/// combination of occurrences, or empty if there are more than `limit`.
std::vector<std::size_t> exhaustive_best_lengths(const Walk& circuit, std::size_t n, std::uint64_t limit);

}  // namespace hampow
