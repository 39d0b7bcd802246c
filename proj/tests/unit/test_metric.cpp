#include <gtest/gtest.h>

#include "octoplane/errors.hpp"
#include "octoplane/metric.hpp"
#include "octoplane/sampling.hpp"

using namespace octoplane;

namespace {

// Quadratic form ds^2 = (alpha |du|^2 + beta |dv|^2 + cross Re[(u conj v)(dv conj du)]) / D^2
// as displayed for each plane and chart.
double ds2(PlaneKind k, int chart, const HyperNumber& u, const HyperNumber& v,
           const HyperNumber& du, const HyperNumber& dv) {
  const double nu = norm_sq(u), nv = norm_sq(v);
  double alpha = 0, beta = 0, cross = 0, d = 0;
  switch (k) {
    case PlaneKind::OP2:
    case PlaneKind::ParaOP2: alpha = 1 + nv, beta = 1 + nu, cross = -2, d = 1 + nu + nv; break;
    case PlaneKind::OP11:
      if (chart == 3) {
        alpha = nv - 1, beta = nu - 1, cross = -2, d = nu + nv - 1;
      } else {
        alpha = 1 - nv, beta = -(1 + nu), cross = 2, d = 1 + nu - nv;
      }
      break;
    case PlaneKind::OH2:
      if (chart == 1) {
        alpha = 1 - nv, beta = 1 - nu, cross = 2, d = 1 - nu - nv;
      } else {
        alpha = 1 + nv, beta = nu - 1, cross = -2, d = chart == 2 ? nu - 1 - nv : nu - nv - 1;
      }
      break;
  }
  const double re = real_part((u * conjugate(v)) * (dv * conjugate(du)));
  return (alpha * norm_sq(du) + beta * norm_sq(dv) + cross * re) / (d * d);
}

}  // namespace

TEST(Metric, MatchesDisplayedQuadraticForms) {
  Rng rng(11);
  for (PlaneKind k : kAllPlanes) {
    const AlgebraKind a = algebra_of(k);
    for (int chart = 1; chart <= 3; ++chart) {
      for (int s = 0; s < 40; ++s) {
        ChartPoint p;
        if (chart == 1) {
          p = to_chart(random_overlap_point(k, 1, 1, rng), 1);
        } else {
          p = to_chart(random_overlap_point(k, 1, chart, rng), chart);
        }
        const HyperNumber du = random_hyper(a, rng), dv = random_hyper(a, rng);
        const Vector16 d = to_vector(du, dv);
        const double got = d.dot(metric_matrix(p) * d);
        const double want = ds2(k, chart, p.u, p.v, du, dv);
        EXPECT_NEAR(got, want, 1e-11 * std::max(1.0, std::abs(want)))
            << to_string(k) << " chart " << chart;
      }
    }
  }
}

TEST(Metric, Examples) {
  const auto O = AlgebraKind::Octonion;
  const HyperNumber one = HyperNumber::real(O, 1.0), z(O);
  EXPECT_EQ((origin_metric(PlaneKind::OP2) - MetricMatrix::Identity()).cwiseAbs().maxCoeff(), 0.0);
  const MetricMatrix m = metric_matrix(PlaneKind::OP2, 1, one, z);
  EXPECT_DOUBLE_EQ(m(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(m(8, 8), 0.5);
  EXPECT_EQ((coupling_block(PlaneKind::OP2, one, one) + Matrix8::Identity()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(signature(origin_metric(PlaneKind::OP11)), (Signature{8, 8, 0}));
  EXPECT_EQ(signature(origin_metric(PlaneKind::ParaOP2)), (Signature{8, 8, 0}));
  EXPECT_THROW((void)metric_matrix(PlaneKind::OH2, 1, one, one), ChartDomainError);
}

TEST(Metric, PullbackIdentityIsZero) {
  Rng rng(2);
  const ChartPoint p = random_point(PlaneKind::OP2, rng);
  EXPECT_EQ(pullback_deviation(PlaneKind::OP2, p.chart, p.chart, p), 0.0);
}
