#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nzi {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

// Bit k of an edge mask stands for the k-th vertex pair in graph6 order:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
using EdgeMask = std::uint64_t;

constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

// Position of the pair {i, j}, i < j, in graph6 order.
constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept { return j * (j - 1) / 2 + i; }

/// Simple undirected graph on vertices 0..n-1. Immutable once built; neighbor
/// lists are kept sorted ascending.
class Graph {
 public:
  /// Validates the edge list: throws SelfLoop, DuplicateEdge, or
  /// NonContiguousIds (an id >= n, or n == 0).
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Builds from a pair bitmask. Requires n <= 11 so all pairs fit in 64 bits.
  static Graph from_mask(std::size_t n, EdgeMask mask);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Requires n <= 11.
  EdgeMask edge_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Parses "u v" lines with an optional leading "n <count>" header. Lines
/// starting with '#' and blank lines are ignored.
Graph parse_edge_list(std::string_view text);

/// Short-form graph6 (1 <= n <= 62). Trailing whitespace is ignored.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

bool is_connected(const Graph& g);

/// Unreachable pairs are reported as std::nullopt.
std::vector<std::vector<std::optional<std::size_t>>> all_pairs_distances(const Graph& g);

/// Largest shortest-path distance; std::nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const Graph& g);

}  // namespace nzi
