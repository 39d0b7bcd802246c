#include <gtest/gtest.h>

#include <cmath>

#include "octoplane/errors.hpp"
#include "octoplane/isometry.hpp"
#include "octoplane/sampling.hpp"

using namespace octoplane;

TEST(Isometry, SwapExample) {
  Rng rng(1);
  const auto O = AlgebraKind::Octonion;
  const IsometryStep s = make_euclidean(PlaneKind::OP2, 1, 0.0, HyperNumber::real(O, 1.0));
  for (int k = 0; k < 20; ++k) {
    const ChartPoint p = random_overlap_point(PlaneKind::OP2, 1, 1, rng);
    const ChartPoint q = to_chart(apply_step(PlaneKind::OP2, s, p), 1);
    EXPECT_LT(max_abs_diff(q.u, p.v), 1e-12);
    EXPECT_LT(max_abs_diff(q.v, p.u), 1e-12);
  }
}

TEST(Isometry, RotationExample) {
  for (double t : {0.1, 0.9, -1.3}) {
    const ChartPoint q = to_chart(
        apply_step(PlaneKind::OP2, make_rotation(PlaneKind::OP2, t), origin(PlaneKind::OP2)), 1);
    EXPECT_NEAR(q.u[0], -std::tan(t), 1e-12);
    EXPECT_NEAR(q.u.coeff_norm_sq() - q.u[0] * q.u[0] + q.v.coeff_norm_sq(), 0.0, 1e-24);
  }
}

// Where the local formula applies (the point sits in the step's own chart), every
// rational extension must give the same image as the local map.
TEST(Isometry, ExtensionsAgreeWithLocalMap) {
  Rng rng(9);
  for (PlaneKind k : kAllPlanes) {
    int compared = 0;
    for (int s = 0; s < 200; ++s) {
      const IsometryStep step = random_step(k, rng);
      if (std::holds_alternative<Rotation>(step)) continue;
      const int chart = std::visit([](const auto& r) { return r.chart; }, step);
      ChartPoint p = random_point(k, rng);
      const auto home = try_chart(k, to_triple(p), chart);
      if (!home) continue;
      auto [u, v] = local_map(step, home->u, home->v);
      HomogeneousTriple t;
      t[chart - 1] = HyperNumber::real(algebra_of(k), 1.0);
      t[chart == 1 ? 1 : 0] = u;
      t[chart == 3 ? 1 : 2] = v;
      const auto want = try_chart(k, t, chart);
      if (!want) continue;
      for (const ChartPoint& img : extension_images(k, step, p)) {
        const auto same = try_chart(k, to_triple(img), chart);
        ASSERT_TRUE(same.has_value());
        const double scale = std::max(1.0, want->u.coeff_norm_sq() + want->v.coeff_norm_sq());
        EXPECT_LT(point_distance(*want, *same) / scale, 1e-9) << to_string(k);
        ++compared;
      }
    }
    EXPECT_GT(compared, 20) << to_string(k);
  }
}

TEST(Isometry, InvalidSteps) {
  const auto O = AlgebraKind::Octonion;
  const HyperNumber l = HyperNumber::real(O, 0.5);
  EXPECT_THROW((void)make_euclidean(PlaneKind::OP2, 1, 0.5, l), InvalidStepError);
  EXPECT_THROW((void)make_indefinite(PlaneKind::OP2, 1, std::sqrt(1.25), l), InvalidStepError);
  EXPECT_THROW((void)make_euclidean(PlaneKind::OP2, 4, 1.0, HyperNumber(O)), InvalidStepError);
  EXPECT_THROW((void)make_rotation(PlaneKind::OH2, 0.3), InvalidStepError);
  EXPECT_NO_THROW((void)make_indefinite(PlaneKind::OP11, 1, std::sqrt(1.25), l));
}

TEST(Isometry, HomogeneityExamples) {
  const auto O = AlgebraKind::Octonion;
  const HyperNumber z(O);
  EXPECT_TRUE(isometry_to(PlaneKind::OH2, origin(PlaneKind::OH2)).steps.empty());
  const double R = 0.5;
  const IsometryComposition c =
      isometry_to(PlaneKind::OH2, make_point(PlaneKind::OH2, 1, z, HyperNumber::real(O, R)));
  ASSERT_EQ(c.steps.size(), 1u);
  const auto& s = std::get<IndefiniteReflection>(c.steps[0]);
  EXPECT_NEAR(std::abs(s.r), std::cosh(std::atanh(R)), 1e-12);

  Rng rng(4);
  for (PlaneKind k : kAllPlanes) {
    for (int n = 0; n < 30; ++n) {
      const ChartPoint target = random_point(k, rng);
      const ChartPoint hit = apply(k, isometry_to(k, target), origin(k));
      EXPECT_TRUE(points_equal(hit, target, 1e-8)) << to_string(k);
    }
  }
}

TEST(Isometry, VerifyReportsSmallDeviation) {
  Rng rng(8);
  for (PlaneKind k : kAllPlanes) {
    std::vector<ChartPoint> pts;
    for (int n = 0; n < 10; ++n) pts.push_back(random_point(k, rng));
    const IsometryDeviation d = verify_isometry(k, {{random_step(k, rng)}}, pts);
    EXPECT_EQ(d.skipped, 0);
    EXPECT_LT(d.max_deviation, 1e-6);
    EXPECT_EQ(verify_isometry(k, {}, pts).max_deviation, 0.0);
  }
}
