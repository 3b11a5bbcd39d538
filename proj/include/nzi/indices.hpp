#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nzi/degree_profile.hpp"
#include "nzi/error.hpp"
#include "nzi/graph.hpp"

namespace nzi {

enum class Regime {
  Low,   // alpha < 0
  Mid,   // 0 < alpha < 1
  High,  // alpha > 1
};

std::string_view to_string(Regime r) noexcept;

/// Exponent of a general Zagreb-type index. Values within 1e-12 of 0 or 1
/// (and non-finite values) are rejected with ForbiddenAlpha.
class Alpha {
 public:
  static constexpr double kForbiddenRadius = 1e-12;

  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  Regime regime() const noexcept;

  /// 2 or 3 when the exponent is exactly that integer; these take an exact
  /// integer evaluation path.
  std::optional<int> exact_exponent() const noexcept;

  /// x^alpha. Throws ZeroBaseNegativeExponent for x == 0 with alpha < 0.
  double pow(std::int64_t x) const;

 private:
  double value_;
};

/// Sum of squared degrees.
std::int64_t first_zagreb(const Graph& g);

/// Sum of nbr_deg(u)^alpha.
double general_neighborhood_zagreb(const Graph& g, const Alpha& a);
double general_neighborhood_zagreb(const DegreeProfile& p, const Alpha& a);

/// Sum of dist2_deg(u)^alpha.
double two_distance_index(const Graph& g, const Alpha& a);
double two_distance_index(const DegreeProfile& p, const Alpha& a);

/// Reconstruction through the min/max slope s = (Delta^a - delta^a)/(Delta - delta)
/// plus per-degree correction terms. Requires delta != Delta.
double nm_via_theorem32_part1(const DegreeProfile& p, const Alpha& a);

/// Reconstruction through the unit slope (delta+1)^a - delta^a plus
/// corrections for degrees >= delta + 2. Requires delta != Delta.
double nm_via_theorem32_part2(const DegreeProfile& p, const Alpha& a);

/// Same two reconstructions for the 2-distance index, whose degree sum is
/// 2m(n-1) - M1 on diameter-2 graphs. part must be 1 or 2.
///
/// Errors: NotDiameterTwo, ZeroMinDist2Degree (d == 0), Dist2Regular (d == D).
double nm2_via_theorem42(const Graph& g, const DegreeProfile& p, const Alpha& a, int part);

/// The error nm2_via_theorem42 would raise for a graph of the given diameter.
std::optional<ErrorCode> theorem42_violation(std::optional<std::size_t> diam, const DegreeProfile& p);

/// 6n - 10 - 2*n2 - 2*n3, the first Zagreb index of a tree with maximum degree <= 4.
std::int64_t chemical_tree_m1(std::int64_t n, std::int64_t n2, std::int64_t n3);

/// (Delta^a - delta^a) / (Delta - delta) for the neighborhood degrees.
double slope_s(const DegreeProfile& p, const Alpha& a);

struct IndexReport {
  double direct = 0.0;
  double via_part1 = 0.0;
  double via_part2 = 0.0;
  double residual1 = 0.0;
  double residual2 = 0.0;
  double s_alpha = 0.0;
};

IndexReport index_report(const DegreeProfile& p, const Alpha& a);

/// Absolute comparison tolerance rel * max(1, |reference|).
double scaled_tolerance(double reference, double rel = 1e-9);

}  // namespace nzi
