#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nzi/bounds.hpp"
#include "nzi/graph.hpp"
#include "nzi/indices.hpp"

namespace nzi {

constexpr std::size_t kMaxSweepOrder = 7;
constexpr std::size_t kMaxSweepOrderOverride = 8;

/// Throws NTooLarge unless 1 <= n <= 7, or n == 8 with the override.
void check_sweep_order(std::size_t n, bool allow_n8);

bool mask_is_connected(std::size_t n, EdgeMask mask);

/// Lexicographic key of the adjacency bitstring: the first pair in graph6
/// order is the most significant bit.
EdgeMask bitstring_key(std::size_t n, EdgeMask mask);

/// Edge mask of the labeling with the lexicographically smallest adjacency
/// bitstring, minimized over all n! vertex permutations.
EdgeMask canonical_mask(std::size_t n, EdgeMask mask);

/// True when no relabeling yields a smaller bitstring. Stops at the first
/// smaller one, so rejecting non-canonical masks is usually quick.
bool is_canonical(std::size_t n, EdgeMask mask);

inline Graph canonical_form(const Graph& g) { return Graph::from_mask(g.order(), canonical_mask(g.order(), g.edge_mask())); }

/// Calls visit(mask) for every connected labeled graph on n vertices whose
/// mask lies in [lo, hi). With dedup only canonical masks are visited.
void for_each_connected_in_range(std::size_t n, EdgeMask lo, EdgeMask hi, bool dedup,
                                 const std::function<void(EdgeMask)>& visit);

/// Every connected labeled graph on n vertices (one per isomorphism class
/// with dedup). Errors: NTooLarge.
std::vector<Graph> enumerate_connected(std::size_t n, bool dedup, bool allow_n8 = false);

/// Connected graphs with exactly m edges, found by walking the masks of that
/// popcount. Trees are m = n - 1. Requires n <= 8.
void for_each_connected_with_edges(std::size_t n, std::size_t m, const std::function<void(EdgeMask)>& visit);

struct VerificationFailure {
  std::string graph;  // graph6
  std::size_t n = 0;
  EdgeMask mask = 0;
  std::string check;
  std::optional<double> alpha;
  double expected = 0.0;
  double got = 0.0;
  std::string detail;
};

bool operator<(const VerificationFailure& a, const VerificationFailure& b);

struct VerificationReport {
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::vector<double> alpha_set;
  std::uint64_t graphs_checked = 0;
  std::map<std::size_t, std::uint64_t> graphs_per_n;
  std::map<std::string, std::uint64_t> checks_run;
  // check name -> violated precondition -> count
  std::map<std::string, std::map<std::string, std::uint64_t>> skips;
  std::uint64_t failure_count = 0;
  std::vector<VerificationFailure> failures;  // sorted, capped at kMaxStoredFailures
  double elapsed_seconds = 0.0;

  static constexpr std::size_t kMaxStoredFailures = 1000;

  bool passed() const noexcept { return failure_count == 0; }
  std::uint64_t runs(const std::string& check) const;
  std::uint64_t skipped(const std::string& check) const;
  std::uint64_t failures_for(const std::string& check) const;

  // counts of failures per check, including ones beyond the stored cap
  std::map<std::string, std::uint64_t> failures_per_check;

  /// Associative, commutative fold of partial reports over the same n/alpha setup.
  void merge(const VerificationReport& other);
};

struct VerifyOptions {
  double rel_tol = 1e-9;
  unsigned jobs = 1;
  bool allow_n8 = false;
  bool dedup = false;  // one graph per isomorphism class instead of every labeling
};

/// Runs every identity, bound, and spectral check on every connected labeled
/// graph with n_min..n_max vertices. Errors: NTooLarge.
VerificationReport verify_all(std::size_t n_max, const std::vector<Alpha>& alphas, const VerifyOptions& opts = {},
                              std::size_t n_min = 1);

/// All checks for a single graph; used by verify_all and handy for replaying
/// a failure.
void verify_graph(const Graph& g, const std::vector<Alpha>& alphas, double rel_tol, VerificationReport& into);

/// Sign grid for both coefficient families, 1 <= p < q <= q_max.
void verify_lemma31_grid(std::int64_t q_max, const std::vector<Alpha>& alphas, VerificationReport& into);

struct ExtremalRecord {
  std::string graph;  // graph6 of the canonical representative
  BoundSource bound_source = BoundSource::Corollary33S;
  double alpha = 0.0;
  double bound = 0.0;
  double computed = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  // Whether the graph is in the equality family the bound states: support
  // {delta, Delta}, a path, the q/1/(n-q-1) histogram, or (spectral)
  // neighborhood-regular.
  bool structural_match = false;
};

bool is_path(const Graph& g);

/// Isomorphism-class representatives on n vertices whose bound is attained
/// (slack within tolerance), sorted by graph6. Errors: NTooLarge.
std::vector<ExtremalRecord> find_equality_graphs(std::size_t n, const Alpha& a, BoundSource source,
                                                 double rel_tol = 1e-9, bool allow_n8 = false);

}  // namespace nzi
