#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nzi/degree_profile.hpp"
#include "nzi/error.hpp"
#include "nzi/indices.hpp"

namespace nzi {

enum class Direction { Upper, Lower };

enum class BoundSource {
  Corollary33S,     // slope-s bound: upper for alpha outside [0,1], lower inside
  Corollary33Unit,  // unit-slope bound: the opposite direction
  Theorem35,        // congruence-refined slope-s bound, needs r >= 1
  Theorem41,        // spectral radius lower bound
};

std::string_view to_string(Direction d) noexcept;
std::string_view to_string(BoundSource s) noexcept;

/// Parses "corollary33_s", "corollary33_unit", "theorem35", "theorem41".
/// Throws UnknownBoundSource otherwise.
BoundSource parse_bound_source(std::string_view name);

struct BoundReport {
  BoundSource source = BoundSource::Corollary33S;
  int part = 0;  // theorem part that applies for this exponent regime
  std::optional<Regime> regime;
  Direction direction = Direction::Upper;
  double bound = 0.0;
  double computed = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  // Structural equality criterion: the degree histogram is in the family for
  // which the bound is attained.
  bool equality = false;
  // Numerical equality: slack <= tolerance.
  bool tight = false;
};

/// Fills slack, tolerance, holds and tight from bound/computed/direction.
void finalize(BoundReport& r, double rel_tol);

/// (p+i)^a - p^a - i(q^a - p^a)/(q-p); requires 1 <= p < q, 1 <= i <= q-p-1.
double lemma31_coeff_s(std::int64_t p, std::int64_t q, std::int64_t i, const Alpha& a);

/// (p+i)^a - p^a - i((p+1)^a - p^a); requires p >= 1, i >= 2.
double lemma31_coeff_unit(std::int64_t p, std::int64_t i, const Alpha& a);

/// Sign the slope coefficients must carry: -1 outside [0,1], +1 inside.
int expected_sign_s(Regime r) noexcept;
/// Sign the unit coefficients must carry: +1 outside [0,1], -1 inside.
int expected_sign_unit(Regime r) noexcept;

BoundReport corollary33_bound_s(const DegreeProfile& p, const Alpha& a, double rel_tol = 1e-9);
BoundReport corollary33_bound_unit(const DegreeProfile& p, const Alpha& a, double rel_tol = 1e-9);

/// Euclidean division M1 - n*delta = q (Delta - delta) + r and the
/// histogram facts that follow from it.
struct CongruenceData {
  std::int64_t excess = 0;  // M1 - n*delta
  std::int64_t gap = 0;     // Delta - delta
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t n_delta_max = 0;
  // r == 0 and n_Delta == q: the histogram must be supported on {delta, Delta}.
  bool is_bi_degree_case = false;
  // r >= 1 and n_Delta == q.
  bool part2_hypothesis = false;
  // Evaluated only under part2_hypothesis: n_i == 0 for delta+r < i < Delta
  // and n_{delta+r} <= 1.
  std::optional<bool> part2_constraints_hold;
};

/// Errors: NeighborhoodRegular, GapTooSmall (Delta - delta < 2),
/// NonPositiveQuotient (M1 - n*delta < Delta - delta).
CongruenceData theorem35_classify(const DegreeProfile& p);

/// The error theorem35_classify / theorem35_bound would raise, if any.
std::optional<ErrorCode> theorem35_classify_violation(const DegreeProfile& p);
std::optional<ErrorCode> theorem35_bound_violation(const DegreeProfile& p);

/// Errors: those of theorem35_classify, RemainderZero, UnoccupiedRemainderDegree.
BoundReport theorem35_bound(const DegreeProfile& p, const Alpha& a, double rel_tol = 1e-9);

}  // namespace nzi
