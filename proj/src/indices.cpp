#include "nzi/indices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nzi/error.hpp"

namespace nzi {

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Low: return "LOW";
    case Regime::Mid: return "MID";
    case Regime::High: return "HIGH";
  }
  return "?";
}

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value) || std::abs(value) < kForbiddenRadius ||
      std::abs(value - 1.0) < kForbiddenRadius) {
    throw Error(ErrorCode::ForbiddenAlpha, "alpha must be finite and not 0 or 1, got " + std::to_string(value));
  }
}

Regime Alpha::regime() const noexcept {
  if (value_ < 0.0) return Regime::Low;
  if (value_ < 1.0) return Regime::Mid;
  return Regime::High;
}

std::optional<int> Alpha::exact_exponent() const noexcept {
  if (value_ == 2.0) return 2;
  if (value_ == 3.0) return 3;
  return std::nullopt;
}

double Alpha::pow(std::int64_t x) const {
  if (x == 0 && value_ < 0.0) {
    throw Error(ErrorCode::ZeroBaseNegativeExponent, "0^" + std::to_string(value_) + " is undefined");
  }
  if (auto k = exact_exponent()) {
    std::int64_t r = 1;
    for (int i = 0; i < *k; ++i) r *= x;
    return static_cast<double>(r);
  }
  return std::pow(static_cast<double>(x), value_);
}

double scaled_tolerance(double reference, double rel) { return rel * std::max(1.0, std::abs(reference)); }

namespace {

std::int64_t ipow(std::int64_t x, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Evaluates x^alpha in the scalar type of the current reconstruction.
template <class T>
struct Power;

template <>
struct Power<std::int64_t> {
  int k;
  std::int64_t operator()(std::int64_t x) const { return ipow(x, k); }
};

template <>
struct Power<double> {
  const Alpha* a;
  double operator()(std::int64_t x) const { return a->pow(x); }
};

// Both closed forms share one shape: given the vertex count n, the degree
// sum `total`, the extremes lo < hi and the histogram, rebuild sum(x^alpha)
// from a base line through lo plus corrections for the intermediate values.
template <class T>
T reconstruct_slope(const Power<T>& pw, std::int64_t n, std::int64_t total, std::int64_t lo, std::int64_t hi,
                    const Histogram& hist) {
  const T lo_pow = pw(lo);
  const T num = pw(hi) - lo_pow;
  const T span = static_cast<T>(hi - lo);
  // For integer exponents, hi - lo divides hi^k - lo^k exactly.
  const T s = num / span;
  T value = static_cast<T>(n) * lo_pow + static_cast<T>(total - n * lo) * s;
  for (auto it = hist.upper_bound(lo); it != hist.end() && it->first < hi; ++it) {
    const std::int64_t i = it->first - lo;
    value += static_cast<T>(it->second) * (pw(it->first) - lo_pow - static_cast<T>(i) * s);
  }
  return value;
}

template <class T>
T reconstruct_unit(const Power<T>& pw, std::int64_t n, std::int64_t total, std::int64_t lo, const Histogram& hist) {
  const T lo_pow = pw(lo);
  const T unit = pw(lo + 1) - lo_pow;
  T value = static_cast<T>(n) * lo_pow + static_cast<T>(total - n * lo) * unit;
  for (auto it = hist.lower_bound(lo + 2); it != hist.end(); ++it) {
    const std::int64_t i = it->first - lo;
    value += static_cast<T>(it->second) * (pw(it->first) - lo_pow - static_cast<T>(i) * unit);
  }
  return value;
}

double reconstruct(const Alpha& a, bool slope_form, std::int64_t n, std::int64_t total, std::int64_t lo,
                   std::int64_t hi, const Histogram& hist) {
  if (lo == 0 && a.value() < 0.0) {
    throw Error(ErrorCode::ZeroBaseNegativeExponent, "minimum degree value is 0");
  }
  if (auto k = a.exact_exponent()) {
    const Power<std::int64_t> pw{*k};
    return static_cast<double>(slope_form ? reconstruct_slope(pw, n, total, lo, hi, hist)
                                          : reconstruct_unit(pw, n, total, lo, hist));
  }
  const Power<double> pw{&a};
  return slope_form ? reconstruct_slope(pw, n, total, lo, hi, hist) : reconstruct_unit(pw, n, total, lo, hist);
}

void require_not_neighborhood_regular(const DegreeProfile& p) {
  if (p.delta_min == p.delta_max) {
    throw Error(ErrorCode::NeighborhoodRegular,
                "all neighborhood degrees equal " + std::to_string(p.delta_min));
  }
}

double power_sum(const std::vector<std::int64_t>& values, const Alpha& a) {
  if (auto k = a.exact_exponent()) {
    std::int64_t total = 0;
    for (auto x : values) total += ipow(x, *k);
    return static_cast<double>(total);
  }
  double total = 0.0;
  for (auto x : values) total += a.pow(x);
  return total;
}

}  // namespace

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    total += d * d;
  }
  return total;
}

double general_neighborhood_zagreb(const DegreeProfile& p, const Alpha& a) { return power_sum(p.nbr_deg, a); }

double general_neighborhood_zagreb(const Graph& g, const Alpha& a) {
  return general_neighborhood_zagreb(degree_profile(g), a);
}

double two_distance_index(const DegreeProfile& p, const Alpha& a) { return power_sum(p.dist2_deg, a); }

double two_distance_index(const Graph& g, const Alpha& a) { return two_distance_index(degree_profile(g), a); }

double nm_via_theorem32_part1(const DegreeProfile& p, const Alpha& a) {
  require_not_neighborhood_regular(p);
  return reconstruct(a, true, p.n, p.m1, p.delta_min, p.delta_max, p.nbr_hist);
}

double nm_via_theorem32_part2(const DegreeProfile& p, const Alpha& a) {
  require_not_neighborhood_regular(p);
  return reconstruct(a, false, p.n, p.m1, p.delta_min, p.delta_max, p.nbr_hist);
}

std::optional<ErrorCode> theorem42_violation(std::optional<std::size_t> diam, const DegreeProfile& p) {
  if (diam != std::optional<std::size_t>{2}) return ErrorCode::NotDiameterTwo;
  if (p.d2_min == 0) return ErrorCode::ZeroMinDist2Degree;
  if (p.d2_min == p.d2_max) return ErrorCode::Dist2Regular;
  return std::nullopt;
}

double nm2_via_theorem42(const Graph& g, const DegreeProfile& p, const Alpha& a, int part) {
  if (part != 1 && part != 2) throw std::invalid_argument("part must be 1 or 2");
  if (auto v = theorem42_violation(diameter(g), p)) {
    switch (*v) {
      case ErrorCode::NotDiameterTwo: throw Error(*v, "graph diameter is not 2");
      case ErrorCode::ZeroMinDist2Degree: throw Error(*v, "minimum 2-distance degree is 0");
      default: throw Error(*v, "all 2-distance degrees equal " + std::to_string(p.d2_min));
    }
  }
  const std::int64_t total = 2 * p.m * (p.n - 1) - p.m1;
  return reconstruct(a, part == 1, p.n, total, p.d2_min, p.d2_max, p.dist2_hist);
}

std::int64_t chemical_tree_m1(std::int64_t n, std::int64_t n2, std::int64_t n3) { return 6 * n - 10 - 2 * n2 - 2 * n3; }

double slope_s(const DegreeProfile& p, const Alpha& a) {
  require_not_neighborhood_regular(p);
  if (auto k = a.exact_exponent()) {
    return static_cast<double>((ipow(p.delta_max, *k) - ipow(p.delta_min, *k)) / (p.delta_max - p.delta_min));
  }
  return (a.pow(p.delta_max) - a.pow(p.delta_min)) / static_cast<double>(p.delta_max - p.delta_min);
}

IndexReport index_report(const DegreeProfile& p, const Alpha& a) {
  IndexReport r;
  r.direct = general_neighborhood_zagreb(p, a);
  r.via_part1 = nm_via_theorem32_part1(p, a);
  r.via_part2 = nm_via_theorem32_part2(p, a);
  r.residual1 = std::abs(r.via_part1 - r.direct);
  r.residual2 = std::abs(r.via_part2 - r.direct);
  r.s_alpha = slope_s(p, a);
  return r;
}

}  // namespace nzi
