#include <gtest/gtest.h>

#include "octoplane/errors.hpp"
#include "octoplane/plane.hpp"
#include "octoplane/sampling.hpp"

using namespace octoplane;

namespace {
HyperNumber x(AlgebraKind a, std::size_t i) { return HyperNumber::basis(a, i - 1); }
}  // namespace

TEST(Plane, ChartDomains) {
  const auto O = AlgebraKind::Octonion, P = AlgebraKind::ParaOctonion;
  const HyperNumber z(O), zp(P);
  EXPECT_TRUE(chart_contains(PlaneKind::OH2, 1, z, z));
  EXPECT_FALSE(chart_contains(PlaneKind::OP11, 1, z, 2.0 * x(O, 1)));
  EXPECT_FALSE(chart_contains(PlaneKind::ParaOP2, 1, zp, 2.0 * x(P, 5)));
  EXPECT_TRUE(chart_contains(PlaneKind::OP2, 3, 5.0 * x(O, 1), 7.0 * x(O, 2)));
  EXPECT_THROW((void)chart_contains(PlaneKind::OP2, 0, z, z), UnknownChartError);
  EXPECT_THROW((void)chart_contains(PlaneKind::OP2, 1, zp, zp), KindMismatchError);
  EXPECT_THROW((void)make_point(PlaneKind::OH2, 1, x(O, 1), z), ChartDomainError);
}

TEST(Plane, TransitionExamples) {
  const auto O = AlgebraKind::Octonion;
  auto [u, v] = transition(PlaneKind::OP2, 2, 1, x(O, 2), x(O, 3));
  EXPECT_EQ(max_abs_diff(u, -x(O, 2)), 0.0);
  EXPECT_EQ(max_abs_diff(v, x(O, 4)), 0.0);
  auto [u1, v1] = transition(PlaneKind::OP2, 2, 1, x(O, 1), HyperNumber(O));
  EXPECT_EQ(max_abs_diff(u1, x(O, 1)), 0.0);
  EXPECT_EQ(v1.coeff_norm_sq(), 0.0);
  EXPECT_THROW((void)transition(PlaneKind::OP2, 2, 1, HyperNumber(O), x(O, 1)), OverlapError);
}

TEST(Plane, Normalize) {
  const auto O = AlgebraKind::Octonion, P = AlgebraKind::ParaOctonion;
  const HyperNumber one = x(O, 1), z(O);
  ChartPoint p = normalize(PlaneKind::OP2, {2.0 * one, z, z});
  EXPECT_EQ(p.chart, 1);
  EXPECT_EQ(p.u.coeff_norm_sq() + p.v.coeff_norm_sq(), 0.0);
  p = normalize(PlaneKind::OP2, {x(O, 2), x(O, 3), one});
  EXPECT_EQ(p.chart, 3);
  EXPECT_EQ(max_abs_diff(p.u, x(O, 2)), 0.0);
  const HyperNumber n = x(P, 2) + x(P, 6);
  p = normalize(PlaneKind::ParaOP2, {n, x(P, 1), HyperNumber(P)});
  EXPECT_EQ(p.chart, 2);
  EXPECT_EQ(max_abs_diff(p.u, n), 0.0);
  EXPECT_THROW((void)normalize(PlaneKind::OP2, {z, z, z}), NotRepresentableError);
}

TEST(Plane, Equality) {
  const auto O = AlgebraKind::Octonion;
  const ChartPoint a = normalize(PlaneKind::OP2, {x(O, 4), -x(O, 3), x(O, 2)});
  const ChartPoint b = normalize(PlaneKind::OP2, {x(O, 1), x(O, 2), x(O, 3)});
  EXPECT_TRUE(points_equal(a, b));
  EXPECT_TRUE(points_equal(a, a));
  EXPECT_FALSE(points_equal(origin(PlaneKind::OP2), make_point(PlaneKind::OP2, 1, x(O, 2), HyperNumber(O))));
}

TEST(Plane, RoundTripAndCharts) {
  Rng rng(3);
  for (PlaneKind k : kAllPlanes) {
    for (int s = 0; s < 50; ++s) {
      const ChartPoint p = random_overlap_point(k, 1, 2, rng);
      const ChartPoint q = to_chart(to_chart(p, 2), 1);
      EXPECT_LT(point_distance(p, q), 1e-12);
      EXPECT_TRUE(points_equal(p, to_chart(p, 2)));
    }
  }
}

TEST(Plane, BallPointsHaveDerivedCoordinates) {
  Rng rng(5);
  for (int s = 0; s < 50; ++s) {
    const ChartPoint p = random_point(PlaneKind::OH2, rng);
    ASSERT_EQ(p.chart, 1);
    if (p.u.coeff_norm_sq() > 1e-3) {
      const ChartPoint q = to_chart(p, 2);
      EXPECT_GT(norm_sq(q.u) - 1.0 - norm_sq(q.v), 0.0);
    }
  }
}
