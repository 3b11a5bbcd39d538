#include "nzi/bounds.hpp"

#include <cmath>
#include <string>

#include "nzi/error.hpp"

namespace nzi {

std::string_view to_string(Direction d) noexcept { return d == Direction::Upper ? "UPPER" : "LOWER"; }

std::string_view to_string(BoundSource s) noexcept {
  switch (s) {
    case BoundSource::Corollary33S: return "corollary33_s";
    case BoundSource::Corollary33Unit: return "corollary33_unit";
    case BoundSource::Theorem35: return "theorem35";
    case BoundSource::Theorem41: return "theorem41";
  }
  return "?";
}

BoundSource parse_bound_source(std::string_view name) {
  for (auto s : {BoundSource::Corollary33S, BoundSource::Corollary33Unit, BoundSource::Theorem35,
                 BoundSource::Theorem41}) {
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorCode::UnknownBoundSource, "'" + std::string(name) +
                                                 "' (expected corollary33_s, corollary33_unit, theorem35, theorem41)");
}

void finalize(BoundReport& r, double rel_tol) {
  r.slack = std::abs(r.computed - r.bound);
  r.tolerance = scaled_tolerance(r.computed, rel_tol);
  r.holds = r.direction == Direction::Upper ? r.computed <= r.bound + r.tolerance
                                            : r.computed >= r.bound - r.tolerance;
  r.tight = r.slack <= r.tolerance;
}

double lemma31_coeff_s(std::int64_t p, std::int64_t q, std::int64_t i, const Alpha& a) {
  if (p < 1 || q <= p) {
    throw Error(ErrorCode::OutOfRangeIndex, "need 1 <= p < q, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  }
  if (i < 1 || i > q - p - 1) {
    throw Error(ErrorCode::OutOfRangeIndex, "need 1 <= i <= q-p-1, got i=" + std::to_string(i));
  }
  const double slope = (a.pow(q) - a.pow(p)) / static_cast<double>(q - p);
  return a.pow(p + i) - a.pow(p) - static_cast<double>(i) * slope;
}

double lemma31_coeff_unit(std::int64_t p, std::int64_t i, const Alpha& a) {
  if (p < 1) throw Error(ErrorCode::OutOfRangeIndex, "need p >= 1, got p=" + std::to_string(p));
  if (i < 2) throw Error(ErrorCode::OutOfRangeIndex, "need i >= 2, got i=" + std::to_string(i));
  const double unit = a.pow(p + 1) - a.pow(p);
  return a.pow(p + i) - a.pow(p) - static_cast<double>(i) * unit;
}

int expected_sign_s(Regime r) noexcept { return r == Regime::Mid ? 1 : -1; }
int expected_sign_unit(Regime r) noexcept { return -expected_sign_s(r); }

namespace {

void require_not_regular(const DegreeProfile& p) {
  if (p.delta_min == p.delta_max) {
    throw Error(ErrorCode::NeighborhoodRegular, "all neighborhood degrees equal " + std::to_string(p.delta_min));
  }
}

// n delta^a + (M1 - n delta) s, the base line shared by the slope-s bounds.
double slope_baseline(const DegreeProfile& p, const Alpha& a, double s) {
  return static_cast<double>(p.n) * a.pow(p.delta_min) + static_cast<double>(p.m1 - p.n * p.delta_min) * s;
}

}  // namespace

BoundReport corollary33_bound_s(const DegreeProfile& p, const Alpha& a, double rel_tol) {
  require_not_regular(p);
  BoundReport r;
  r.source = BoundSource::Corollary33S;
  r.regime = a.regime();
  r.part = a.regime() == Regime::Mid ? 2 : 1;
  r.direction = a.regime() == Regime::Mid ? Direction::Lower : Direction::Upper;
  r.bound = slope_baseline(p, a, slope_s(p, a));
  r.computed = general_neighborhood_zagreb(p, a);
  r.equality = p.nbr_hist.size() == 2;
  finalize(r, rel_tol);
  return r;
}

BoundReport corollary33_bound_unit(const DegreeProfile& p, const Alpha& a, double rel_tol) {
  require_not_regular(p);
  const std::int64_t lo = p.delta_min;
  const std::int64_t hi = p.delta_max;
  const double lo_pow = a.pow(lo);
  const double unit = a.pow(lo + 1) - lo_pow;

  BoundReport r;
  r.source = BoundSource::Corollary33Unit;
  r.regime = a.regime();
  r.part = a.regime() == Regime::Mid ? 4 : 3;
  r.direction = a.regime() == Regime::Mid ? Direction::Upper : Direction::Lower;
  r.bound = static_cast<double>(p.n) * lo_pow + static_cast<double>(p.m1 - p.n * lo) * unit +
            static_cast<double>(p.nbr_count(hi)) * (a.pow(hi) - lo_pow - static_cast<double>(hi - lo) * unit);
  r.computed = general_neighborhood_zagreb(p, a);
  // Exact when every dropped correction term vanishes: no vertex has a
  // neighborhood degree strictly between delta + 1 and Delta.
  const auto first_dropped = p.nbr_hist.lower_bound(lo + 2);
  r.equality = first_dropped == p.nbr_hist.end() || first_dropped->first >= hi;
  finalize(r, rel_tol);
  return r;
}

std::optional<ErrorCode> theorem35_classify_violation(const DegreeProfile& p) {
  const std::int64_t gap = p.delta_max - p.delta_min;
  if (gap == 0) return ErrorCode::NeighborhoodRegular;
  if (gap < 2) return ErrorCode::GapTooSmall;
  if (p.m1 - p.n * p.delta_min < gap) return ErrorCode::NonPositiveQuotient;
  return std::nullopt;
}

std::optional<ErrorCode> theorem35_bound_violation(const DegreeProfile& p) {
  if (auto v = theorem35_classify_violation(p)) return v;
  const std::int64_t gap = p.delta_max - p.delta_min;
  const std::int64_t r = (p.m1 - p.n * p.delta_min) % gap;
  if (r == 0) return ErrorCode::RemainderZero;
  if (p.nbr_count(p.delta_min + r) == 0) return ErrorCode::UnoccupiedRemainderDegree;
  return std::nullopt;
}

CongruenceData theorem35_classify(const DegreeProfile& p) {
  require_not_regular(p);
  CongruenceData c;
  c.gap = p.delta_max - p.delta_min;
  c.excess = p.m1 - p.n * p.delta_min;
  if (auto v = theorem35_classify_violation(p)) {
    if (*v == ErrorCode::GapTooSmall) throw Error(*v, "Delta - delta = " + std::to_string(c.gap) + " < 2");
    throw Error(*v, "M1 - n*delta = " + std::to_string(c.excess) + " < Delta - delta = " + std::to_string(c.gap));
  }
  c.q = c.excess / c.gap;
  c.r = c.excess % c.gap;
  c.n_delta_max = p.nbr_count(p.delta_max);
  c.is_bi_degree_case = c.r == 0 && c.n_delta_max == c.q;
  c.part2_hypothesis = c.r >= 1 && c.n_delta_max == c.q;
  if (c.part2_hypothesis) {
    const std::int64_t pivot = p.delta_min + c.r;
    bool ok = p.nbr_count(pivot) <= 1;
    // Histograms store no zero counts, so any entry in (pivot, Delta) is a violation.
    const auto next = p.nbr_hist.upper_bound(pivot);
    if (next != p.nbr_hist.end() && next->first < p.delta_max) ok = false;
    c.part2_constraints_hold = ok;
  }
  return c;
}

BoundReport theorem35_bound(const DegreeProfile& p, const Alpha& a, double rel_tol) {
  const CongruenceData c = theorem35_classify(p);
  if (c.r == 0) throw Error(ErrorCode::RemainderZero, "M1 - n*delta is a multiple of Delta - delta");
  const std::int64_t pivot = p.delta_min + c.r;
  if (p.nbr_count(pivot) == 0) {
    throw Error(ErrorCode::UnoccupiedRemainderDegree, "no vertex has neighborhood degree " + std::to_string(pivot));
  }
  const double s = slope_s(p, a);

  BoundReport r;
  r.source = BoundSource::Theorem35;
  r.regime = a.regime();
  r.part = a.regime() == Regime::Mid ? 4 : 3;
  r.direction = a.regime() == Regime::Mid ? Direction::Lower : Direction::Upper;
  r.bound = slope_baseline(p, a, s) + a.pow(pivot) - a.pow(p.delta_min) - static_cast<double>(c.r) * s;
  r.computed = general_neighborhood_zagreb(p, a);
  r.equality = c.n_delta_max == c.q && p.nbr_count(pivot) == 1 && p.nbr_count(p.delta_min) == p.n - c.q - 1 &&
               p.nbr_hist.size() == 3;
  finalize(r, rel_tol);
  return r;
}

}  // namespace nzi
