#include <gtest/gtest.h>

#include <cmath>

#include "nzi/bounds.hpp"
#include "nzi/degree_profile.hpp"
#include "nzi/error.hpp"
#include "test_support.hpp"

using namespace nzi;
using namespace nzi::testing;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an nzi::Error";
  return ErrorCode::UnknownBoundSource;
}

DegreeProfile profile_of(std::size_t n, std::vector<Edge> e) { return degree_profile(Graph(n, e)); }

}  // namespace

TEST(Lemma31, FrozenValues) {
  // 50-digit reference values.
  EXPECT_NEAR(lemma31_coeff_s(2, 4, 1, Alpha(0.5)), 0.024944026382329769, 1e-15);
  EXPECT_NEAR(lemma31_coeff_unit(2, 2, Alpha(0.5)), -0.0498880527646595383, 1e-15);
  // (3)^2 - 4 - 1*(16-4)/2 = -1
  EXPECT_DOUBLE_EQ(lemma31_coeff_s(2, 4, 1, Alpha(2)), -1.0);
  // 16 - 4 - 2*(9-4) = 2
  EXPECT_DOUBLE_EQ(lemma31_coeff_unit(2, 2, Alpha(2)), 2.0);
}

TEST(Lemma31, RangeErrors) {
  EXPECT_EQ(code_of([] { lemma31_coeff_s(2, 4, 2, Alpha(2)); }), ErrorCode::OutOfRangeIndex);
  EXPECT_EQ(code_of([] { lemma31_coeff_s(2, 4, 0, Alpha(2)); }), ErrorCode::OutOfRangeIndex);
  EXPECT_EQ(code_of([] { lemma31_coeff_s(0, 4, 1, Alpha(2)); }), ErrorCode::OutOfRangeIndex);
  EXPECT_EQ(code_of([] { lemma31_coeff_s(4, 4, 1, Alpha(2)); }), ErrorCode::OutOfRangeIndex);
  EXPECT_EQ(code_of([] { lemma31_coeff_unit(2, 1, Alpha(2)); }), ErrorCode::OutOfRangeIndex);
  EXPECT_EQ(code_of([] { lemma31_coeff_unit(0, 2, Alpha(2)); }), ErrorCode::OutOfRangeIndex);
}

TEST(Lemma31, SignGrid) {
  for (double v : {-2.0, -1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0, 4.5}) {
    const Alpha a(v);
    const int ss = expected_sign_s(a.regime());
    const int su = expected_sign_unit(a.regime());
    EXPECT_EQ(ss, -su);
    for (std::int64_t q = 2; q <= 12; ++q)
      for (std::int64_t p = 1; p < q; ++p) {
        for (std::int64_t i = 1; i <= q - p - 1; ++i) ASSERT_GT(ss * lemma31_coeff_s(p, q, i, a), 0.0);
        for (std::int64_t i = 2; i <= q; ++i) ASSERT_GT(su * lemma31_coeff_unit(p, i, a), 0.0);
      }
  }
}

TEST(BoundSource, Names) {
  for (auto s : {BoundSource::Corollary33S, BoundSource::Corollary33Unit, BoundSource::Theorem35,
                 BoundSource::Theorem41})
    EXPECT_EQ(parse_bound_source(to_string(s)), s);
  EXPECT_EQ(code_of([] { parse_bound_source("theorem99"); }), ErrorCode::UnknownBoundSource);
}

TEST(Corollary33, Figure1) {
  const DegreeProfile p = degree_profile(figure1());
  const BoundReport s = corollary33_bound_s(p, Alpha(2));
  EXPECT_EQ(s.bound, 528.0);
  EXPECT_EQ(s.computed, 528.0);
  EXPECT_EQ(s.direction, Direction::Upper);
  EXPECT_EQ(s.part, 1);
  EXPECT_TRUE(s.holds);
  EXPECT_TRUE(s.equality);
  EXPECT_TRUE(s.tight);

  const BoundReport u = corollary33_bound_unit(p, Alpha(2));
  EXPECT_EQ(u.bound, 528.0);
  EXPECT_EQ(u.direction, Direction::Lower);
  EXPECT_TRUE(u.holds);
  EXPECT_TRUE(u.equality);
}

TEST(Corollary33, PathOnFive) {
  const DegreeProfile p = degree_profile(path_graph(5));
  const BoundReport s = corollary33_bound_s(p, Alpha(2));
  EXPECT_EQ(s.bound, 44.0);
  EXPECT_EQ(s.computed, 42.0);
  EXPECT_EQ(s.slack, 2.0);
  EXPECT_TRUE(s.holds);
  EXPECT_FALSE(s.equality);
  EXPECT_FALSE(s.tight);

  const BoundReport u = corollary33_bound_unit(p, Alpha(2));
  EXPECT_EQ(u.bound, 42.0);
  EXPECT_TRUE(u.equality);
  EXPECT_TRUE(u.tight);
}

TEST(Corollary33, DirectionsByRegime) {
  const DegreeProfile p = degree_profile(path_graph(5));
  EXPECT_EQ(corollary33_bound_s(p, Alpha(-1)).direction, Direction::Upper);
  EXPECT_EQ(corollary33_bound_s(p, Alpha(0.5)).direction, Direction::Lower);
  EXPECT_EQ(corollary33_bound_s(p, Alpha(0.5)).part, 2);
  EXPECT_EQ(corollary33_bound_unit(p, Alpha(-1)).direction, Direction::Lower);
  EXPECT_EQ(corollary33_bound_unit(p, Alpha(0.5)).direction, Direction::Upper);
  EXPECT_EQ(corollary33_bound_unit(p, Alpha(2)).part, 3);
  EXPECT_EQ(corollary33_bound_unit(p, Alpha(0.5)).part, 4);
}

TEST(Corollary33, PathOnFourUnitBound) {
  const BoundReport u = corollary33_bound_unit(degree_profile(path_graph(4)), Alpha(2));
  EXPECT_EQ(u.bound, 26.0);
  EXPECT_EQ(u.computed, 26.0);
}

TEST(Corollary33, RejectsNeighborhoodRegular) {
  const DegreeProfile p = degree_profile(cycle_graph(5));
  EXPECT_EQ(code_of([&] { corollary33_bound_s(p, Alpha(2)); }), ErrorCode::NeighborhoodRegular);
  EXPECT_EQ(code_of([&] { corollary33_bound_unit(p, Alpha(2)); }), ErrorCode::NeighborhoodRegular);
}

TEST(Theorem35, Figure2) {
  const DegreeProfile p = degree_profile(figure2());
  const CongruenceData c = theorem35_classify(p);
  EXPECT_EQ(c.excess, 7);
  EXPECT_EQ(c.gap, 2);
  EXPECT_EQ(c.q, 3);
  EXPECT_EQ(c.r, 1);
  EXPECT_EQ(c.n_delta_max, 3);
  EXPECT_TRUE(c.part2_hypothesis);
  EXPECT_EQ(c.part2_constraints_hold, true);

  const BoundReport b = theorem35_bound(p, Alpha(2));
  EXPECT_EQ(b.bound, 100.0);
  EXPECT_EQ(b.computed, 100.0);
  EXPECT_TRUE(b.holds);
  EXPECT_TRUE(b.equality);
}

TEST(Theorem35, ClassifyFigure1AndPath) {
  const CongruenceData f1 = theorem35_classify(degree_profile(figure1()));
  EXPECT_EQ(f1.q, 4);
  EXPECT_EQ(f1.r, 0);
  EXPECT_TRUE(f1.is_bi_degree_case);
  EXPECT_FALSE(f1.part2_constraints_hold.has_value());

  const CongruenceData p5 = theorem35_classify(degree_profile(path_graph(5)));
  EXPECT_EQ(p5.q, 2);
  EXPECT_EQ(p5.r, 0);
  EXPECT_EQ(p5.n_delta_max, 1);
  EXPECT_FALSE(p5.is_bi_degree_case);
}

TEST(Theorem35, NonExtremalGraph) {
  // neighborhood degrees 3,5,4,4,2,2: q = 2, r = 2
  const DegreeProfile p = profile_of(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}});
  const BoundReport b = theorem35_bound(p, Alpha(2));
  EXPECT_TRUE(b.holds);
  EXPECT_FALSE(b.equality);
  EXPECT_GT(b.slack, 0.0);
}

TEST(Theorem35, Preconditions) {
  EXPECT_EQ(code_of([] { theorem35_classify(degree_profile(complete_graph(4))); }),
            ErrorCode::NeighborhoodRegular);
  EXPECT_EQ(code_of([] { theorem35_classify(degree_profile(path_graph(4))); }), ErrorCode::GapTooSmall);
  EXPECT_EQ(code_of([] { theorem35_bound(degree_profile(figure1()), Alpha(2)); }), ErrorCode::RemainderZero);
  // neighborhood degrees 4,8,8,7,7: r = 1 but nothing sits at 5
  const DegreeProfile u = profile_of(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  EXPECT_EQ(theorem35_bound_violation(u), ErrorCode::UnoccupiedRemainderDegree);
  EXPECT_EQ(code_of([&] { theorem35_bound(u, Alpha(2)); }), ErrorCode::UnoccupiedRemainderDegree);
}

// Every connected graph on up to 6 vertices: each applicable bound holds in
// its stated direction against a std::pow direct sum, and equality (structural)
// agrees with tightness.
TEST(Bounds, ExhaustiveHoldAndEquality) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (EdgeMask mask = 0; mask < (EdgeMask{1} << pair_count(n)); ++mask) {
      const Graph g = Graph::from_mask(n, mask);
      if (!is_connected(g)) continue;
      const DegreeProfile p = degree_profile(g);
      if (p.delta_min == p.delta_max) continue;
      const auto nbr = oracle_nbr_degrees(adjacency_matrix(g));
      for (double v : {-1.0, 0.5, 2.0, 3.0}) {
        const Alpha a(v);
        double direct = 0.0;
        for (auto x : nbr) direct += std::pow(static_cast<double>(x), v);
        std::vector<BoundReport> rs{corollary33_bound_s(p, a), corollary33_bound_unit(p, a)};
        if (!theorem35_bound_violation(p)) rs.push_back(theorem35_bound(p, a));
        for (const auto& r : rs) {
          ASSERT_NEAR(r.computed, direct, scaled_tolerance(direct));
          ASSERT_TRUE(r.holds) << to_string(r.source) << " " << encode_graph6(g) << " " << v;
          ASSERT_EQ(r.equality, r.tight) << to_string(r.source) << " " << encode_graph6(g) << " " << v;
          const double signed_slack = r.direction == Direction::Upper ? r.bound - direct : direct - r.bound;
          ASSERT_GE(signed_slack, -scaled_tolerance(direct));
        }
      }
    }
  }
}
