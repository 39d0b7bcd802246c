#include "octoplane/metric.hpp"

#include <cmath>
#include <string>

#include "octoplane/errors.hpp"

namespace octoplane {

Vector16 to_vector(const HyperNumber& u, const HyperNumber& v) {
  Vector16 x;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    x(i) = u[i];
    x(i + 8) = v[i];
  }
  return x;
}

Vector16 to_vector(const TangentVector& t) { return to_vector(t.a, t.b); }

TangentVector to_tangent(AlgebraKind kind, const Vector16& x) {
  TangentVector t{HyperNumber(kind), HyperNumber(kind)};
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    t.a[i] = x(i);
    t.b[i] = x(i + 8);
  }
  return t;
}

Matrix8 sign_matrix(AlgebraKind kind) {
  Matrix8 g = Matrix8::Zero();
  for (std::size_t i = 0; i < kAlgebraDim; ++i) g(i, i) = epsilon(kind, i);
  return g;
}

Matrix8 left_multiplication(const HyperNumber& w) {
  Matrix8 m;
  for (std::size_t j = 0; j < kAlgebraDim; ++j) {
    const HyperNumber col = w * HyperNumber::basis(w.kind(), j);
    for (std::size_t i = 0; i < kAlgebraDim; ++i) m(i, j) = col[i];
  }
  return m;
}

CouplingBlock coupling_block(PlaneKind kind, const HyperNumber& u, const HyperNumber& v) {
  const AlgebraKind a = algebra_of(kind);
  const Matrix8 gl = sign_matrix(a) * left_multiplication(u * conjugate(v));
  return kind == PlaneKind::OH2 ? gl : Matrix8(-gl);
}

ConformalData conformal_data(PlaneKind kind, int chart, const HyperNumber& u,
                             const HyperNumber& v) {
  if (!chart_contains(kind, chart, u, v)) {
    throw ChartDomainError(std::string("metric requested outside chart ") +
                           std::to_string(chart) + " of " + to_string(kind));
  }
  const double nu = norm_sq(u), nv = norm_sq(v);
  switch (kind) {
    case PlaneKind::OP2:
    case PlaneKind::ParaOP2:
      return {1.0 + nv, 1.0 + nu, -1.0, 1.0 + nu + nv};
    case PlaneKind::OP11:
      if (chart == 3) return {nv - 1.0, nu - 1.0, -1.0, nu + nv - 1.0};
      return {1.0 - nv, -(1.0 + nu), 1.0, 1.0 + nu - nv};
    case PlaneKind::OH2:
      if (chart == 1) return {1.0 - nv, 1.0 - nu, 1.0, 1.0 - nu - nv};
      if (chart == 2) return {1.0 + nv, nu - 1.0, -1.0, nu - 1.0 - nv};
      return {1.0 + nv, nu - 1.0, -1.0, nu - nv - 1.0};
  }
  return {};
}

MetricMatrix metric_matrix(PlaneKind kind, int chart, const HyperNumber& u,
                           const HyperNumber& v) {
  const ConformalData c = conformal_data(kind, chart, u, v);
  const AlgebraKind a = algebra_of(kind);
  const Matrix8 g = sign_matrix(a);
  const Matrix8 cross = c.sigma * g * left_multiplication(u * conjugate(v));
  MetricMatrix m;
  m.topLeftCorner<8, 8>() = c.alpha * g;
  m.bottomRightCorner<8, 8>() = c.beta * g;
  m.topRightCorner<8, 8>() = cross;
  m.bottomLeftCorner<8, 8>() = cross.transpose();
  return m / (c.denominator * c.denominator);
}

MetricMatrix metric_matrix(const ChartPoint& p) {
  return metric_matrix(p.kind, p.chart, p.u, p.v);
}

MetricMatrix origin_metric(PlaneKind kind) { return metric_matrix(origin(kind)); }

double origin_inner(PlaneKind kind, const TangentVector& x, const TangentVector& y) {
  return to_vector(x).dot(origin_metric(kind) * to_vector(y));
}

Signature signature(const MetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix16> es(m, Eigen::EigenvaluesOnly);
  const double threshold = 1e-9 * m.cwiseAbs().maxCoeff();
  Signature s;
  for (int i = 0; i < 16; ++i) {
    const double e = es.eigenvalues()(i);
    if (std::abs(e) <= threshold) {
      ++s.zero;
    } else if (e > 0) {
      ++s.positive;
    } else {
      ++s.negative;
    }
  }
  return s;
}

Matrix16 fd_jacobian(const ChartMap& f, const Vector16& x, double step) {
  Matrix16 j;
  for (int k = 0; k < 16; ++k) {
    Vector16 xp = x, xm = x;
    xp(k) += step;
    xm(k) -= step;
    j.col(k) = (f(xp) - f(xm)) / (2.0 * step);
  }
  return j;
}

double pullback_deviation(PlaneKind kind, int from_chart, int to_chart,
                          const ChartPoint& p, double step) {
  if (from_chart == to_chart) return 0.0;
  const ChartPoint q = p.chart == from_chart ? p : octoplane::to_chart(p, from_chart);
  const AlgebraKind a = algebra_of(kind);
  const auto [tu, tv] = transition(kind, from_chart, to_chart, q.u, q.v);
  const ChartMap t = [&](const Vector16& x) {
    const TangentVector uv = to_tangent(a, x);
    const auto [u2, v2] = transition(kind, from_chart, to_chart, uv.a, uv.b);
    return to_vector(u2, v2);
  };
  const Matrix16 j = fd_jacobian(t, to_vector(q.u, q.v), step);
  const Matrix16 pulled = j.transpose() * metric_matrix(kind, to_chart, tu, tv) * j;
  return (pulled - metric_matrix(kind, from_chart, q.u, q.v)).cwiseAbs().maxCoeff();
}

}  // namespace octoplane
