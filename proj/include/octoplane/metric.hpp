#pragma once

// Metric components in the coordinate frame e_i = d/du_i, f_i = d/dv_i.
//
// Every chart of every plane carries a metric of the form
//
//   g(e_i,e_j) = delta_ij eps_i alpha / D^2
//   g(f_i,f_j) = delta_ij eps_i beta / D^2
//   g(e_i,f_j) = sigma <(u conj(v)) x_j, x_i> / D^2
//
// with (alpha, beta, sigma, D) depending on the plane and the chart.

#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "octoplane/plane.hpp"

namespace octoplane {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Matrix16 = Eigen::Matrix<double, 16, 16>;
using Vector16 = Eigen::Matrix<double, 16, 1>;
using MetricMatrix = Matrix16;
using CouplingBlock = Matrix8;

/// Tangent vector sum a_i e_i + sum b_i f_i.
struct TangentVector {
  HyperNumber a;
  HyperNumber b;
};

Vector16 to_vector(const HyperNumber& u, const HyperNumber& v);
Vector16 to_vector(const TangentVector& t);
TangentVector to_tangent(AlgebraKind kind, const Vector16& x);

/// diag(eps_1..eps_8).
Matrix8 sign_matrix(AlgebraKind kind);

/// Matrix of x -> w x; column j holds the coefficients of w x_j.
Matrix8 left_multiplication(const HyperNumber& w);

/// A_ij = -<(u conj(v)) x_j, x_i> for OP2, ParaOP2, OP11 and
/// A_ij = +<(u conj(v)) x_j, x_i> for OH2, without the conformal factor.
CouplingBlock coupling_block(PlaneKind kind, const HyperNumber& u, const HyperNumber& v);

struct ConformalData {
  double alpha;
  double beta;
  double sigma;
  double denominator;
};

/// Coefficients of the metric on the given chart at (u,v); throws
/// ChartDomainError outside the chart.
ConformalData conformal_data(PlaneKind kind, int chart, const HyperNumber& u,
                             const HyperNumber& v);

MetricMatrix metric_matrix(PlaneKind kind, int chart, const HyperNumber& u,
                           const HyperNumber& v);
MetricMatrix metric_matrix(const ChartPoint& p);

/// Metric at the origin [1,0,0].
MetricMatrix origin_metric(PlaneKind kind);

/// g at the origin applied to two tangent vectors.
double origin_inner(PlaneKind kind, const TangentVector& x, const TangentVector& y);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature& o) const {
    return positive == o.positive && negative == o.negative && zero == o.zero;
  }
};

/// Eigenvalue sign counts; |eigenvalue| <= 1e-9 * max|m_ij| counts as zero.
Signature signature(const MetricMatrix& m);

using ChartMap = std::function<Vector16(const Vector16&)>;

/// Central-difference Jacobian of f at x.
Matrix16 fd_jacobian(const ChartMap& f, const Vector16& x, double step);

inline constexpr double kDefaultFdStep = 1e-5;

/// max |J^T M_to(T p) J - M_from(p)| for the chart transition T at p.
double pullback_deviation(PlaneKind kind, int from_chart, int to_chart,
                          const ChartPoint& p, double step = kDefaultFdStep);

}  // namespace octoplane
