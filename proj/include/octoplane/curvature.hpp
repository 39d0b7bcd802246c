#pragma once

// Curvature of the planes: second jets of the metric at the origin, the
// Riemann tensor assembled from them, the closed-form tensor at the origin,
// and a general-point finite-difference pipeline.
//
// Frame indices run over 0..15: e_1..e_8 are 0..7 and f_1..f_8 are 8..15.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "octoplane/metric.hpp"

namespace octoplane {

/// Dense rank-4 array over an n-dimensional index range.
class Tensor4 {
 public:
  explicit Tensor4(int n = 16) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}
  int dim() const { return n_; }
  double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
  }
  int n_;
  std::vector<double> data_;
};

/// jets(b, c, a, d) = d_a d_d g_bc, the notation g_{bc;ad}.
using JetTable = Tensor4;
using CurvatureTensor = Tensor4;

inline constexpr double kJetStep = 1e-3;
inline constexpr double kFirstJetStep = 1e-4;

/// Central second differences of the chart-1 metric at the origin, with one
/// Richardson level.
JetTable second_jets_origin(PlaneKind kind, double step = kJetStep);

/// Largest central first difference of any metric component at the origin.
double max_first_jet_origin(PlaneKind kind, double step = kFirstJetStep);

/// R_abcd = (g_{bc;ad} + g_{ad;bc} - g_{ac;bd} - g_{bd;ac}) / 2.
CurvatureTensor riemann_from_jets(const JetTable& jets);

CurvatureTensor riemann_origin_numeric(PlaneKind kind, double step = kJetStep);

/// Closed-form R((a,b),(c,d),(e,f),(g,h)) at the origin.
double riemann_closed_form(PlaneKind kind, const TangentVector& x, const TangentVector& y,
                           const TangentVector& z, const TangentVector& w);

/// Basis vector e_i (i < 8) or f_{i-8}.
TangentVector frame_vector(AlgebraKind kind, int index);

CurvatureTensor riemann_closed_form_table(PlaneKind kind);

/// A component named in the component lists, with its stated value.
struct ListedComponent {
  std::array<int, 4> indices;
  double value;
  std::string pattern;
};

/// Every possibly non-vanishing component at the origin; all others are 0.
std::vector<ListedComponent> listed_components(PlaneKind kind);

/// Names a component as in "R(e1,f2,e3,f4)".
std::string component_name(const std::array<int, 4>& idx);

// ---------------------------------------------------------------------------
// General-point pipeline for an arbitrary metric in coordinates.

using MetricField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

struct MetricJets {
  Eigen::MatrixXd g;
  std::vector<Eigen::MatrixXd> first;                // first[k] = d_k g
  std::vector<std::vector<Eigen::MatrixXd>> second;  // second[k][l] = d_k d_l g
};

MetricJets metric_jets(const MetricField& metric, const Eigen::VectorXd& x,
                       double second_step = kJetStep, double first_step = kFirstJetStep);

/// Christoffel symbols of the first kind contracted with g^-1:
/// gamma[n](b, c) = Gamma^n_bc.
std::vector<Eigen::MatrixXd> christoffel(const MetricJets& jets);

/// R_abcd including the quadratic Christoffel terms.
Tensor4 riemann_at(const MetricField& metric, const Eigen::VectorXd& x,
                   double second_step = kJetStep, double first_step = kFirstJetStep);

/// Matrix of x -> R(v,x)v with index raised by g: J = g^-1 K, K_xy = R(v,e_x,v,e_y).
Eigen::MatrixXd jacobi_matrix(const Tensor4& r, const Eigen::MatrixXd& g,
                              const Eigen::VectorXd& v);

/// Sorted real parts of the eigenvalues of the numerically assembled Jacobi
/// operator at a chart point. Throws NullVectorError if g(v,v) = 0.
std::vector<double> jacobi_spectrum_at_point(const ChartPoint& p, const Vector16& v,
                                             double second_step = kJetStep);

}  // namespace octoplane
