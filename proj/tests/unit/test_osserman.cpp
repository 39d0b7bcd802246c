#include <gtest/gtest.h>

#include "octoplane/errors.hpp"
#include "octoplane/osserman.hpp"

using namespace octoplane;

// The closed-form operator against the index-raised numeric curvature at the origin.
TEST(Osserman, OperatorMatchesNumericCurvature) {
  Rng rng(21);
  for (PlaneKind k : kAllPlanes) {
    const CurvatureTensor r = riemann_origin_numeric(k);
    const Matrix16 g0 = origin_metric(k);
    for (int s = 0; s < 5; ++s) {
      const TangentVector v = random_unit_vector(k, rng);
      const Eigen::MatrixXd numeric = jacobi_matrix(r, g0, to_vector(v));
      EXPECT_LT((numeric - jacobi_operator(k, v).matrix).cwiseAbs().maxCoeff(), 1e-6)
          << to_string(k);
    }
  }
}

TEST(Osserman, BaseVectorSpectrum) {
  for (PlaneKind k : kAllPlanes) {
    const AlgebraKind a = algebra_of(k);
    const Matrix16 j = jacobi_operator(k, {HyperNumber::real(a, 1.0), HyperNumber(a)}).matrix;
    const EigenConstants c = eigen_constants(k);
    EXPECT_EQ(kernel_dimension(j), 1);
    EXPECT_EQ(kernel_dimension(j - c.lambda * Matrix16::Identity()), 7);
    EXPECT_EQ(kernel_dimension(j - c.mu * Matrix16::Identity()), 8);
  }
  EXPECT_EQ(eigen_constants(PlaneKind::OH2).lambda, -4.0);
}

TEST(Osserman, SpecialConditionsHold) {
  Rng rng(5);
  for (PlaneKind k : kAllPlanes) {
    std::vector<TangentVector> v;
    for (int s = 0; s < 20; ++s) v.push_back(random_unit_vector(k, rng));
    const OssermanReport r = check_special_osserman(k, v, 1e-8, rng);
    EXPECT_EQ(r.condition1_pass, 20);
    EXPECT_EQ(r.condition2_pass, 20);
    EXPECT_EQ(r.condition3_pass, 20);
    EXPECT_EQ(r.lambda_symmetry_pass, 20);
  }
}

TEST(Osserman, NullVectorRejected) {
  const auto P = AlgebraKind::ParaOctonion;
  const TangentVector n{HyperNumber::basis(P, 1) + HyperNumber::basis(P, 4), HyperNumber(P)};
  EXPECT_THROW((void)eigenspace_bases(PlaneKind::ParaOP2, n), NullVectorError);
}

TEST(Osserman, Witness) {
  const NonIsotropyWitness w = non_isotropy_witness();
  EXPECT_EQ(w.v_norm_sq, 0.0);
  EXPECT_EQ(w.w_norm_sq, 0.0);
  EXPECT_EQ(w.kernel_dimension, 8);
  EXPECT_LT(w.kernel_null_residual, 1e-10);
  EXPECT_LT(w.kernel_relation, 1e-10);
  EXPECT_LT(w.full_operator_on_kernel, 1e-10);
}
