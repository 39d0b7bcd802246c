#include <gtest/gtest.h>

#include "octoplane/curvature.hpp"

using namespace octoplane;

namespace {

// Round sphere (sign +1) or hyperbolic plane (sign -1) of curvature sign in
// stereographic / Poincare coordinates: g = 4 / (1 + sign |x|^2)^2 I.
MetricField space_form(double sign) {
  return [sign](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    const double d = 1.0 + sign * x.squaredNorm();
    return (4.0 / (d * d)) * Eigen::MatrixXd::Identity(2, 2);
  };
}

}  // namespace

TEST(Curvature, SpaceFormsInTwoDimensions) {
  for (double sign : {1.0, -1.0}) {
    const MetricField g = space_form(sign);
    Eigen::VectorXd x(2);
    x << 0.3, -0.2;
    const Tensor4 r = riemann_at(g, x);
    const Eigen::MatrixXd m = g(x);
    const double want = sign * (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    EXPECT_NEAR(r(0, 1, 0, 1), want, 1e-6 * std::abs(want));
    EXPECT_NEAR(r(0, 1, 1, 0), -want, 1e-6 * std::abs(want));
  }
}

TEST(Curvature, ClosedFormExamples) {
  const auto O = AlgebraKind::Octonion;
  const HyperNumber one = HyperNumber::real(O, 1.0), z(O);
  const TangentVector e1 = frame_vector(O, 0), e2 = frame_vector(O, 1);
  const TangentVector a{one, z}, b{z, one};
  EXPECT_DOUBLE_EQ(riemann_closed_form(PlaneKind::OP2, e1, e2, e1, e2), 4.0);
  EXPECT_DOUBLE_EQ(riemann_closed_form(PlaneKind::OP2, a, b, a, b), 1.0);
  EXPECT_DOUBLE_EQ(riemann_closed_form(PlaneKind::OP11, a, b, a, b), -1.0);
  EXPECT_DOUBLE_EQ(riemann_closed_form(PlaneKind::OH2, e1, e2, e1, e2), -4.0);
  const auto P = AlgebraKind::ParaOctonion;
  EXPECT_DOUBLE_EQ(
      riemann_closed_form(PlaneKind::ParaOP2, frame_vector(P, 4), frame_vector(P, 5),
                          frame_vector(P, 4), frame_vector(P, 5)),
      4.0);
}

TEST(Curvature, OriginJets) {
  const JetTable j = second_jets_origin(PlaneKind::OP2);
  // d_{e2} d_{e2} g(e1,e1) and d_{f2} d_{f2} g(e1,e1).
  EXPECT_NEAR(j(0, 0, 1, 1), -4.0, 1e-6);
  EXPECT_NEAR(j(0, 0, 9, 9), -2.0, 1e-6);
  const JetTable h = second_jets_origin(PlaneKind::OP11);
  EXPECT_NEAR(h(0, 0, 9, 9), 2.0, 1e-6);
  EXPECT_LT(max_first_jet_origin(PlaneKind::OH2), 1e-7);
}

TEST(Curvature, NumericOriginMatchesClosedForm) {
  for (PlaneKind k : kAllPlanes) {
    const CurvatureTensor n = riemann_origin_numeric(k);
    const CurvatureTensor c = riemann_closed_form_table(k);
    double worst = 0.0;
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b)
        for (int cc = 0; cc < 16; ++cc)
          for (int d = 0; d < 16; ++d) worst = std::max(worst, std::abs(n(a, b, cc, d) - c(a, b, cc, d)));
    EXPECT_LT(worst, 1e-5) << to_string(k);
  }
}

TEST(Curvature, SpectrumAtOrigin) {
  const Vector16 v = Vector16::Unit(0);
  const std::vector<double> s = jacobi_spectrum_at_point(origin(PlaneKind::OH2), v);
  ASSERT_EQ(s.size(), 16u);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(s[i], -4.0, 1e-5);
  for (int i = 7; i < 15; ++i) EXPECT_NEAR(s[i], -1.0, 1e-5);
  EXPECT_NEAR(s[15], 0.0, 1e-5);
  EXPECT_EQ(component_name({0, 9, 0, 9}), "R(e1,f2,e1,f2)");
}
