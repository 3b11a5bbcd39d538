#include <gtest/gtest.h>

#include <cmath>

#include "nzi/degree_profile.hpp"
#include "nzi/error.hpp"
#include "nzi/indices.hpp"
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

double oracle_power_sum(const std::vector<std::int64_t>& xs, double a) {
  double s = 0.0;
  for (auto x : xs) s += std::pow(static_cast<double>(x), a);
  return s;
}

}  // namespace

TEST(Alpha, RejectsForbiddenValues) {
  for (double v : std::vector<double>{0.0, 1.0, 1e-13, 1.0 - 5e-13, NAN, INFINITY, -INFINITY})
    EXPECT_EQ(code_of([v] { Alpha a(v); }), ErrorCode::ForbiddenAlpha) << v;
  EXPECT_NO_THROW(Alpha(1e-11));
  EXPECT_NO_THROW(Alpha(1.0 + 1e-11));
}

TEST(Alpha, Regimes) {
  EXPECT_EQ(Alpha(-1).regime(), Regime::Low);
  EXPECT_EQ(Alpha(0.5).regime(), Regime::Mid);
  EXPECT_EQ(Alpha(2).regime(), Regime::High);
  EXPECT_EQ(to_string(Regime::Mid), "MID");
  EXPECT_EQ(Alpha(2).exact_exponent(), 2);
  EXPECT_EQ(Alpha(3).exact_exponent(), 3);
  EXPECT_EQ(Alpha(2.5).exact_exponent(), std::nullopt);
}

TEST(Alpha, Pow) {
  EXPECT_EQ(Alpha(3).pow(1000), 1e9);
  EXPECT_EQ(Alpha(0.5).pow(0), 0.0);
  EXPECT_DOUBLE_EQ(Alpha(-1).pow(4), 0.25);
  EXPECT_EQ(code_of([] { Alpha(-1).pow(0); }), ErrorCode::ZeroBaseNegativeExponent);
}

TEST(Indices, FirstZagreb) {
  EXPECT_EQ(first_zagreb(figure1()), 72);
  EXPECT_EQ(first_zagreb(figure2()), 22);
  EXPECT_EQ(first_zagreb(path_graph(5)), 14);
  EXPECT_EQ(first_zagreb(complete_graph(4)), 36);
}

TEST(Indices, NeighborhoodZagrebExamples) {
  // Figure 1: eight leaves at 4, four hubs at 10.
  EXPECT_EQ(general_neighborhood_zagreb(figure1(), Alpha(2)), 528.0);
  // P5 neighborhood degrees 2,3,4,3,2.
  EXPECT_EQ(general_neighborhood_zagreb(path_graph(5), Alpha(2)), 42.0);
  EXPECT_EQ(general_neighborhood_zagreb(path_graph(5), Alpha(3)), 134.0);
  // Figure 2 at 1/2: 3*sqrt(5) + 2 + sqrt(3).
  EXPECT_NEAR(general_neighborhood_zagreb(figure2(), Alpha(0.5)), 10.4402547400682463827, 1e-12);
  EXPECT_NEAR(general_neighborhood_zagreb(figure2(), Alpha(-1)), 1.0 / 3 + 0.25 + 0.6, 1e-15);
}

TEST(Indices, ZeroNeighborhoodDegreeWithNegativeAlpha) {
  const Graph g = parse_edge_list("n 3\n0 1");
  EXPECT_EQ(code_of([&] { general_neighborhood_zagreb(g, Alpha(-1)); }), ErrorCode::ZeroBaseNegativeExponent);
  EXPECT_EQ(general_neighborhood_zagreb(g, Alpha(2)), 2.0);
}

TEST(Indices, Theorem32Figure2) {
  const DegreeProfile p = degree_profile(figure2());
  for (double v : {-2.0, -1.0, 0.25, 0.5, 2.0, 3.0, 4.5}) {
    const Alpha a(v);
    const double direct = general_neighborhood_zagreb(p, a);
    EXPECT_NEAR(nm_via_theorem32_part1(p, a), direct, scaled_tolerance(direct)) << v;
    EXPECT_NEAR(nm_via_theorem32_part2(p, a), direct, scaled_tolerance(direct)) << v;
  }
  EXPECT_NEAR(slope_s(p, Alpha(2)), 8.0, 1e-15);
}

TEST(Indices, Theorem32RejectsNeighborhoodRegular) {
  const DegreeProfile p = degree_profile(complete_graph(4));
  EXPECT_EQ(code_of([&] { nm_via_theorem32_part1(p, Alpha(2)); }), ErrorCode::NeighborhoodRegular);
  EXPECT_EQ(code_of([&] { nm_via_theorem32_part2(p, Alpha(2)); }), ErrorCode::NeighborhoodRegular);
}

TEST(Indices, IndexReport) {
  const auto r = index_report(degree_profile(path_graph(5)), Alpha(2));
  EXPECT_EQ(r.direct, 42.0);
  EXPECT_EQ(r.via_part1, 42.0);
  EXPECT_EQ(r.via_part2, 42.0);
  EXPECT_EQ(r.residual1, 0.0);
  EXPECT_EQ(r.s_alpha, 6.0);
}

TEST(TwoDistance, CycleWithChord) {
  const Graph g = c5_chord();
  const DegreeProfile p = degree_profile(g);
  EXPECT_EQ(two_distance_index(g, Alpha(2)), 74.0);
  for (double v : {-1.0, 0.5, 2.0, 3.0}) {
    const Alpha a(v);
    const double direct = two_distance_index(p, a);
    EXPECT_NEAR(nm2_via_theorem42(g, p, a, 1), direct, scaled_tolerance(direct)) << v;
    EXPECT_NEAR(nm2_via_theorem42(g, p, a, 2), direct, scaled_tolerance(direct)) << v;
  }
}

TEST(TwoDistance, Preconditions) {
  auto err = [](const Graph& g) {
    return code_of([&] { nm2_via_theorem42(g, degree_profile(g), Alpha(2), 1); });
  };
  EXPECT_EQ(err(path_graph(5)), ErrorCode::NotDiameterTwo);
  EXPECT_EQ(err(complete_graph(4)), ErrorCode::NotDiameterTwo);
  EXPECT_EQ(err(paw()), ErrorCode::ZeroMinDist2Degree);
  EXPECT_EQ(err(cycle_graph(4)), ErrorCode::Dist2Regular);
  EXPECT_EQ(err(cycle_graph(5)), ErrorCode::Dist2Regular);
  EXPECT_EQ(theorem42_violation(std::size_t{2}, degree_profile(c5_chord())), std::nullopt);
}

TEST(ChemicalTree, Formula) {
  EXPECT_EQ(chemical_tree_m1(5, 3, 0), 14);  // P5
  EXPECT_EQ(chemical_tree_m1(5, 0, 0), 20);  // K1,4
  for (const char* f : {"trees/t9_spider.edges", "trees/t10_neopentyl.edges", "trees/t10_comb.edges"}) {
    const Graph g = parse_edge_list(read_file(fixture_path(f)));
    const DegreeProfile p = degree_profile(g);
    EXPECT_EQ(p.m1, chemical_tree_m1(p.n, p.deg_count(2), p.deg_count(3))) << f;
  }
}

// Exhaustive over labeled graphs with n <= 6 that are connected; the library
// reconstructions against std::pow sums over the matrix oracle's degrees.
TEST(Indices, ExhaustiveReconstructions) {
  const std::vector<double> alphas{-1.0, 0.5, 2.0, 3.0, -0.5, 4.5};
  for (std::size_t n = 2; n <= 6; ++n) {
    for (EdgeMask mask = 0; mask < (EdgeMask{1} << pair_count(n)); ++mask) {
      const Graph g = Graph::from_mask(n, mask);
      if (!is_connected(g)) continue;
      const auto mat = adjacency_matrix(g);
      const auto nbr = oracle_nbr_degrees(mat);
      const auto d2 = oracle_dist2_degrees(mat);
      const DegreeProfile p = degree_profile(g);
      const auto diam = diameter(g);
      for (double v : alphas) {
        const Alpha a(v);
        const double direct = oracle_power_sum(nbr, v);
        ASSERT_NEAR(general_neighborhood_zagreb(p, a), direct, scaled_tolerance(direct));
        if (p.delta_min != p.delta_max) {
          ASSERT_NEAR(nm_via_theorem32_part1(p, a), direct, scaled_tolerance(direct));
          ASSERT_NEAR(nm_via_theorem32_part2(p, a), direct, scaled_tolerance(direct));
        }
        if (!theorem42_violation(diam, p)) {
          const double direct2 = oracle_power_sum(d2, v);
          ASSERT_NEAR(nm2_via_theorem42(g, p, a, 1), direct2, scaled_tolerance(direct2));
          ASSERT_NEAR(nm2_via_theorem42(g, p, a, 2), direct2, scaled_tolerance(direct2));
        }
      }
    }
  }
}
