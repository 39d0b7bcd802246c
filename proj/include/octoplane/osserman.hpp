#pragma once

// Jacobi operators x -> R(v,x)v at the origin and the special Osserman
// conditions.
//
// For unit v with eps = g(v,v) the spectrum is {0, lambda eps (7 times),
// mu eps (8 times)} with (lambda, mu) = (4, 1), and (-4, -1) on OH2 whose
// curvature is the negative of that of OP2.

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "octoplane/curvature.hpp"
#include "octoplane/sampling.hpp"

namespace octoplane {

struct JacobiOperator {
  TangentVector v;
  Matrix16 matrix;
};

/// Closed-form operator (c,d) -> (c',d').
JacobiOperator jacobi_operator(PlaneKind kind, const TangentVector& v);

/// g0^-1 K with K_xy = R(v,e_x,v,e_y) from the closed-form tensor.
Matrix16 jacobi_operator_from_form(PlaneKind kind, const TangentVector& v);

struct EigenConstants {
  double lambda;
  double mu;
};
EigenConstants eigen_constants(PlaneKind kind);

struct EigenspaceBases {
  std::vector<Vector16> lambda_basis;  // 7 vectors
  std::vector<Vector16> mu_basis;      // 8 vectors
};

/// Explicit eigenvectors for the eigenvalues lambda*eps and mu*eps.
/// Throws NullVectorError for null v.
EigenspaceBases eigenspace_bases(PlaneKind kind, const TangentVector& v);

/// Dimension of ker(m) using singular values at or below threshold.
int kernel_dimension(const Matrix16& m, double threshold = 1e-8);

/// Euclidean orthogonal projector onto the column span of the vectors.
Matrix16 projector(const std::vector<Vector16>& vectors);

struct OssermanReport {
  int samples = 0;
  int condition1_pass = 0;
  int condition2_pass = 0;
  int condition3_pass = 0;
  int lambda_symmetry_pass = 0;
  int dimension_pass = 0;
  double spectrum_error = 0.0;      // eigenvalues vs {0, lambda eps, mu eps}
  double imaginary_part = 0.0;
  double eigenvector_residual = 0.0;
  double condition2_distance = 0.0;
  double condition3_residual = 0.0;
  double lambda_symmetry_residual = 0.0;
  double form_consistency = 0.0;    // closed-form vs form-based operator
  double self_adjointness = 0.0;    // |g0 J - (g0 J)^T|
  double kills_v = 0.0;             // |J v|
  double scaling = 0.0;             // |J_{sv} - s^2 J_v|
};

OssermanReport check_special_osserman(PlaneKind kind, const std::vector<TangentVector>& samples,
                                      double tol, Rng& rng);

struct NonIsotropyWitness {
  double v_norm_sq = 0.0;
  double w_norm_sq = 0.0;
  double jacobi_e1_on_v = 0.0;       // |J_(1,0) v - 4 v|
  int kernel_dimension = 0;          // of the displayed map
  double kernel_relation = 0.0;      // max |x1 - l x2| over a kernel basis
  double kernel_null_residual = 0.0; // max |K^T g0 K|
  int full_kernel_dimension = 0;     // of the full operator J_w
  double full_operator_on_kernel = 0.0;
  double restriction_difference = 0.0;  // |(displayed map) - J_w| on the kernel
};

NonIsotropyWitness non_isotropy_witness();

}  // namespace octoplane
