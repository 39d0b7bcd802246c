#include "octoplane/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "octoplane/errors.hpp"

namespace octoplane {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd second_difference(const MetricField& metric, const VectorXd& x, int k, int l,
                           double h) {
  const int n = static_cast<int>(x.size());
  auto at = [&](double sk, double sl) {
    VectorXd y = x;
    y(k) += sk;
    y(l) += sl;
    return metric(y);
  };
  if (k == l) {
    (void)n;
    return (at(h, 0) - 2.0 * metric(x) + at(-h, 0)) / (h * h);
  }
  return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
}

MatrixXd richardson_second(const MetricField& metric, const VectorXd& x, int k, int l,
                           double h) {
  const MatrixXd coarse = second_difference(metric, x, k, l, h);
  const MatrixXd fine = second_difference(metric, x, k, l, h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

MetricField chart_metric(PlaneKind kind, int chart) {
  const AlgebraKind a = algebra_of(kind);
  return [kind, chart, a](const VectorXd& x) -> MatrixXd {
    const TangentVector uv = to_tangent(a, x);
    return metric_matrix(kind, chart, uv.a, uv.b);
  };
}

double ip(const HyperNumber& a, const HyperNumber& b) { return inner_product(a, b); }

HyperNumber cmul(const HyperNumber& a, const HyperNumber& b) { return a * conjugate(b); }

}  // namespace

JetTable second_jets_origin(PlaneKind kind, double step) {
  const MetricField metric = chart_metric(kind, 1);
  const VectorXd zero = VectorXd::Zero(16);
  JetTable jets(16);
  for (int a = 0; a < 16; ++a) {
    for (int d = a; d < 16; ++d) {
      const MatrixXd dd = richardson_second(metric, zero, a, d, step);
      for (int b = 0; b < 16; ++b) {
        for (int c = 0; c < 16; ++c) {
          jets(b, c, a, d) = dd(b, c);
          jets(b, c, d, a) = dd(b, c);
        }
      }
    }
  }
  return jets;
}

double max_first_jet_origin(PlaneKind kind, double step) {
  const MetricField metric = chart_metric(kind, 1);
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    VectorXd p = VectorXd::Zero(16), m = VectorXd::Zero(16);
    p(k) = step;
    m(k) = -step;
    worst = std::max(worst, ((metric(p) - metric(m)) / (2.0 * step)).cwiseAbs().maxCoeff());
  }
  return worst;
}

CurvatureTensor riemann_from_jets(const JetTable& g) {
  const int n = g.dim();
  CurvatureTensor r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          r(a, b, c, d) = 0.5 * (g(b, c, a, d) + g(a, d, b, c) - g(a, c, b, d) - g(b, d, a, c));
  return r;
}

CurvatureTensor riemann_origin_numeric(PlaneKind kind, double step) {
  return riemann_from_jets(second_jets_origin(kind, step));
}

double riemann_closed_form(PlaneKind kind, const TangentVector& x, const TangentVector& y,
                           const TangentVector& z, const TangentVector& w) {
  const HyperNumber &a = x.a, &b = x.b, &c = y.a, &d = y.b;
  const HyperNumber &e = z.a, &f = z.b, &g = w.a, &h = w.b;
  const double diagonal = 4.0 * ip(a, e) * ip(c, g) - 4.0 * ip(c, e) * ip(a, g) +
                          4.0 * ip(b, f) * ip(d, h) - 4.0 * ip(d, f) * ip(b, h);
  const double mixed = -ip(cmul(e, d), cmul(g, b)) + ip(cmul(e, b), cmul(g, d)) -
                       ip(cmul(c, f), cmul(a, h)) + ip(cmul(a, f), cmul(c, h)) -
                       ip(cmul(a, d) - cmul(c, b), cmul(g, f) - cmul(e, h));
  switch (kind) {
    case PlaneKind::OP2:
    case PlaneKind::ParaOP2: return diagonal + mixed;
    case PlaneKind::OP11: return diagonal - mixed;
    case PlaneKind::OH2: return -(diagonal + mixed);
  }
  return 0.0;
}

TangentVector frame_vector(AlgebraKind kind, int index) {
  TangentVector t{HyperNumber(kind), HyperNumber(kind)};
  if (index < 8) {
    t.a[index] = 1.0;
  } else {
    t.b[index - 8] = 1.0;
  }
  return t;
}

CurvatureTensor riemann_closed_form_table(PlaneKind kind) {
  const AlgebraKind alg = algebra_of(kind);
  std::vector<TangentVector> basis;
  for (int i = 0; i < 16; ++i) basis.push_back(frame_vector(alg, i));
  CurvatureTensor r(16);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      for (int c = 0; c < 16; ++c)
        for (int d = 0; d < 16; ++d)
          r(a, b, c, d) = riemann_closed_form(kind, basis[a], basis[b], basis[c], basis[d]);
  return r;
}

std::string component_name(const std::array<int, 4>& idx) {
  std::string s = "R(";
  for (int k = 0; k < 4; ++k) {
    if (k) s += ',';
    s += idx[k] < 8 ? 'e' : 'f';
    s += std::to_string(idx[k] % 8 + 1);
  }
  return s + ")";
}

std::vector<ListedComponent> listed_components(PlaneKind kind) {
  const AlgebraKind alg = algebra_of(kind);
  auto x = [alg](int i) { return HyperNumber::basis(alg, i); };
  auto eps = [alg](int i) { return epsilon(alg, i); };
  // Overall sign of the whole tensor and extra sign of the mixed patterns.
  const double overall = kind == PlaneKind::OH2 ? -1.0 : 1.0;
  const double mixed = kind == PlaneKind::OP11 ? -1.0 : 1.0;
  constexpr int F = 8;

  std::vector<ListedComponent> out;
  auto add = [&](int a, int b, int c, int d, double v, const char* pattern) {
    out.push_back({{a, b, c, d}, overall * v, pattern});
  };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (i != j) {
        const double s = 4.0 * eps(i) * eps(j);
        add(i, j, i, j, s, "eeee");
        add(i, j, j, i, -s, "eeee");
        add(F + i, F + j, F + i, F + j, s, "ffff");
        add(F + i, F + j, F + j, F + i, -s, "ffff");
      }
      for (int k = 0; k < 8; ++k) {
        for (int l = 0; l < 8; ++l) {
          const double v3 = mixed * (-ip(cmul(x(i), x(l)), cmul(x(j), x(k))) +
                                     ip(cmul(x(j), x(l)), cmul(x(i), x(k))));
          if (i != j) {
            add(i, j, F + k, F + l, v3, "eeff");
            add(F + k, F + l, i, j, v3, "ffee");
          }
          const double v4 = mixed * ip(cmul(x(i), x(j)), cmul(x(k), x(l)));
          add(i, F + j, k, F + l, v4, "efef");
          add(F + i, j, F + k, l, v4, "fefe");
          add(i, F + j, F + l, k, -v4, "effe");
          add(F + i, j, l, F + k, -v4, "feef");
        }
      }
    }
  }
  return out;
}

MetricJets metric_jets(const MetricField& metric, const VectorXd& x, double second_step,
                       double first_step) {
  const int n = static_cast<int>(x.size());
  MetricJets j;
  j.g = metric(x);
  j.first.resize(n);
  j.second.assign(n, std::vector<MatrixXd>(n));
  for (int k = 0; k < n; ++k) {
    VectorXd p = x, m = x;
    p(k) += first_step;
    m(k) -= first_step;
    const MatrixXd coarse = (metric(p) - metric(m)) / (2.0 * first_step);
    p(k) = x(k) + first_step / 2.0;
    m(k) = x(k) - first_step / 2.0;
    const MatrixXd fine = (metric(p) - metric(m)) / first_step;
    j.first[k] = (4.0 * fine - coarse) / 3.0;
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      j.second[k][l] = richardson_second(metric, x, k, l, second_step);
      j.second[l][k] = j.second[k][l];
    }
  }
  return j;
}

std::vector<MatrixXd> christoffel(const MetricJets& jets) {
  const int n = static_cast<int>(jets.g.rows());
  const MatrixXd ginv = jets.g.inverse();
  // first_kind[c](a, b) = Gamma_{c,ab}
  std::vector<MatrixXd> first_kind(n, MatrixXd::Zero(n, n));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        first_kind[c](a, b) =
            0.5 * (jets.first[a](b, c) + jets.first[b](a, c) - jets.first[c](a, b));
  std::vector<MatrixXd> gamma(n, MatrixXd::Zero(n, n));
  for (int m = 0; m < n; ++m)
    for (int c = 0; c < n; ++c)
      if (ginv(m, c) != 0.0) gamma[m] += ginv(m, c) * first_kind[c];
  return gamma;
}

Tensor4 riemann_at(const MetricField& metric, const VectorXd& x, double second_step,
                   double first_step) {
  const MetricJets j = metric_jets(metric, x, second_step, first_step);
  const int n = static_cast<int>(x.size());
  const std::vector<MatrixXd> gamma = christoffel(j);
  // lowered[p](a, d) = g_np Gamma^n_ad
  std::vector<MatrixXd> lowered(n, MatrixXd::Zero(n, n));
  for (int p = 0; p < n; ++p)
    for (int m = 0; m < n; ++m)
      if (j.g(m, p) != 0.0) lowered[p] += j.g(m, p) * gamma[m];
  Tensor4 r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double v = 0.5 * (j.second[a][d](b, c) + j.second[b][c](a, d) -
                            j.second[b][d](a, c) - j.second[a][c](b, d));
          for (int p = 0; p < n; ++p) {
            v += gamma[p](b, c) * lowered[p](a, d) - gamma[p](b, d) * lowered[p](a, c);
          }
          r(a, b, c, d) = v;
        }
  return r;
}

MatrixXd jacobi_matrix(const Tensor4& r, const MatrixXd& g, const VectorXd& v) {
  const int n = r.dim();
  MatrixXd k = MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      double s = 0.0;
      for (int a = 0; a < n; ++a) {
        if (v(a) == 0.0) continue;
        for (int c = 0; c < n; ++c) s += v(a) * v(c) * r(a, x, c, y);
      }
      k(x, y) = s;
    }
  return g.partialPivLu().solve(k);
}

std::vector<double> jacobi_spectrum_at_point(const ChartPoint& p, const Vector16& v,
                                             double second_step) {
  const MatrixXd g = metric_matrix(p);
  const double gvv = v.dot(g * v);
  if (std::abs(gvv) <= 1e-12 * std::max(1.0, v.squaredNorm())) {
    throw NullVectorError("Jacobi operator requested for a null vector");
  }
  const VectorXd unit = v / std::sqrt(std::abs(gvv));
  const Tensor4 r = riemann_at(chart_metric(p.kind, p.chart), to_vector(p.u, p.v), second_step);
  const MatrixXd j = jacobi_matrix(r, g, unit);
  Eigen::EigenSolver<MatrixXd> es(j, false);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace octoplane
