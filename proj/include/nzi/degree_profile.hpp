#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nzi/graph.hpp"

namespace nzi {

using Histogram = std::map<std::int64_t, std::int64_t>;

/// Every degree-like quantity of a graph, in exact integers.
///
/// nbr_deg[u] is the neighborhood degree: the sum of d(v) over neighbors v.
/// dist2_deg[u] sums d(w) over vertices w at shortest-path distance exactly 2.
struct DegreeProfile {
  std::int64_t n = 0;
  std::int64_t m = 0;

  std::vector<std::int64_t> deg;
  std::vector<std::int64_t> nbr_deg;
  std::vector<std::int64_t> dist2_deg;

  Histogram deg_hist;
  Histogram nbr_hist;
  Histogram dist2_hist;

  std::int64_t delta_min = 0;  // smallest neighborhood degree
  std::int64_t delta_max = 0;  // largest neighborhood degree
  std::int64_t d2_min = 0;
  std::int64_t d2_max = 0;

  std::int64_t m1 = 0;  // first Zagreb index

  /// Number of vertices with neighborhood degree i (zero when absent).
  std::int64_t nbr_count(std::int64_t i) const;
  std::int64_t dist2_count(std::int64_t i) const;
  std::int64_t deg_count(std::int64_t i) const;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace nzi
