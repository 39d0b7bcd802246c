#include "octoplane/osserman.hpp"

#include <algorithm>
#include <cmath>

#include "octoplane/errors.hpp"

namespace octoplane {
namespace {

Vector16 vec(const HyperNumber& c, const HyperNumber& d) { return to_vector(c, d); }

// Basis of {c : <a,c> = 0}.
std::vector<HyperNumber> orthogonal_complement(const HyperNumber& a) {
  Eigen::Matrix<double, 1, 8> row;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) row(0, i) = epsilon(a.kind(), i) * a[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(row, Eigen::ComputeFullV);
  std::vector<HyperNumber> out;
  for (int k = 1; k < 8; ++k) {
    HyperNumber c(a.kind());
    for (int i = 0; i < 8; ++i) c[i] = svd.matrixV()(i, k);
    out.push_back(c);
  }
  return out;
}

double eps_of(PlaneKind kind, const Vector16& x) {
  return x.dot(origin_metric(kind) * x);
}

Vector16 unit(PlaneKind kind, const Vector16& x) {
  return x / std::sqrt(std::abs(eps_of(kind, x)));
}

// Unit vector in the span of the given vectors: the random combination
// with the largest |g(x,x)| / |x|^2 out of a fixed number of draws.
std::optional<Vector16> random_unit_in(PlaneKind kind, const std::vector<Vector16>& span,
                                       Rng& rng) {
  std::optional<Vector16> best;
  double best_ratio = 1e-6;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vector16 x = Vector16::Zero();
    for (const auto& s : span) x += rng.uniform(-1.0, 1.0) * s;
    const double ratio = std::abs(eps_of(kind, x)) / x.squaredNorm();
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = x;
    }
  }
  if (best) return unit(kind, *best);
  return std::nullopt;
}

double spectrum_error(const Matrix16& j, const std::vector<double>& expected,
                      double* imaginary) {
  Eigen::EigenSolver<Matrix16> es(j, false);
  std::vector<double> re;
  double im = 0.0;
  for (int i = 0; i < 16; ++i) {
    re.push_back(es.eigenvalues()(i).real());
    im = std::max(im, std::abs(es.eigenvalues()(i).imag()));
  }
  std::sort(re.begin(), re.end());
  double err = 0.0;
  for (int i = 0; i < 16; ++i) err = std::max(err, std::abs(re[i] - expected[i]));
  if (imaginary) *imaginary = im;
  return err;
}

std::vector<Vector16> lambda_space(PlaneKind kind, const Vector16& v) {
  const EigenspaceBases b = eigenspace_bases(kind, to_tangent(algebra_of(kind), v));
  std::vector<Vector16> out = b.lambda_basis;
  out.push_back(v);
  return out;
}

}  // namespace

EigenConstants eigen_constants(PlaneKind kind) {
  return kind == PlaneKind::OH2 ? EigenConstants{-4.0, -1.0} : EigenConstants{4.0, 1.0};
}

JacobiOperator jacobi_operator(PlaneKind kind, const TangentVector& v) {
  const AlgebraKind alg = algebra_of(kind);
  const HyperNumber &a = v.a, &b = v.b;
  const double na = norm_sq(a), nb = norm_sq(b);
  const HyperNumber abar_b = a * conjugate(b);
  const HyperNumber b_abar = b * conjugate(a);
  const bool op11 = kind == PlaneKind::OP11;
  const double sign = kind == PlaneKind::OH2 ? -1.0 : 1.0;
  JacobiOperator out{v, Matrix16::Zero()};
  for (int col = 0; col < 16; ++col) {
    const TangentVector x = frame_vector(alg, col);
    const HyperNumber &c = x.a, &d = x.b;
    HyperNumber c2(alg), d2(alg);
    if (op11) {
      const double g = inner_product(a, c) - inner_product(b, d);
      c2 = (4.0 * na - nb) * c - 3.0 * (abar_b * d) - 4.0 * g * a;
      d2 = (na - 4.0 * nb) * d + 3.0 * (b_abar * c) - 4.0 * g * b;
    } else {
      const double g = inner_product(a, c) + inner_product(b, d);
      c2 = (4.0 * na + nb) * c + 3.0 * (abar_b * d) - 4.0 * g * a;
      d2 = (na + 4.0 * nb) * d + 3.0 * (b_abar * c) - 4.0 * g * b;
    }
    out.matrix.col(col) = sign * vec(c2, d2);
  }
  return out;
}

Matrix16 jacobi_operator_from_form(PlaneKind kind, const TangentVector& v) {
  const AlgebraKind alg = algebra_of(kind);
  Matrix16 k;
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      k(x, y) = riemann_closed_form(kind, v, frame_vector(alg, x), v, frame_vector(alg, y));
    }
  }
  return origin_metric(kind).inverse() * k;
}

EigenspaceBases eigenspace_bases(PlaneKind kind, const TangentVector& v) {
  const double e = origin_inner(kind, v, v);
  const double size = v.a.coeff_norm_sq() + v.b.coeff_norm_sq();
  if (std::abs(e) <= 1e-12 * std::max(1.0, size)) {
    throw NullVectorError("eigenspaces requested for a null vector");
  }
  const AlgebraKind alg = algebra_of(kind);
  const HyperNumber &a = v.a, &b = v.b;
  const double na = norm_sq(a), nb = norm_sq(b);
  const HyperNumber ab = a * conjugate(b);
  const HyperNumber ba = b * conjugate(a);
  // The mu-space sign differs between the definite-form planes and OP11.
  const double mu_sign = kind == PlaneKind::OP11 ? 1.0 : -1.0;
  EigenspaceBases out;
  if (std::abs(na) >= std::abs(nb)) {
    for (const HyperNumber& c : orthogonal_complement(a)) {
      out.lambda_basis.push_back(vec(c, (ba * c) / na));
    }
    for (std::size_t j = 0; j < kAlgebraDim; ++j) {
      const HyperNumber d = HyperNumber::basis(alg, j);
      out.mu_basis.push_back(vec(mu_sign * (ab * d) / na, d));
    }
  } else {
    for (const HyperNumber& d : orthogonal_complement(b)) {
      out.lambda_basis.push_back(vec((ab * d) / nb, d));
    }
    for (std::size_t j = 0; j < kAlgebraDim; ++j) {
      const HyperNumber c = HyperNumber::basis(alg, j);
      out.mu_basis.push_back(vec(c, mu_sign * (ba * c) / nb));
    }
  }
  return out;
}

int kernel_dimension(const Matrix16& m, double threshold) {
  Eigen::JacobiSVD<Matrix16> svd(m);
  int n = 0;
  for (int i = 0; i < 16; ++i) {
    if (svd.singularValues()(i) <= threshold) ++n;
  }
  return n;
}

Matrix16 projector(const std::vector<Vector16>& vectors) {
  Eigen::MatrixXd m(16, static_cast<int>(vectors.size()));
  for (int i = 0; i < m.cols(); ++i) m.col(i) = vectors[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const double top = svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-10 * top) ++rank;
  }
  const Eigen::MatrixXd q = svd.matrixU().leftCols(rank);
  return q * q.transpose();
}

OssermanReport check_special_osserman(PlaneKind kind, const std::vector<TangentVector>& samples,
                                      double tol, Rng& rng) {
  const EigenConstants k = eigen_constants(kind);
  const Matrix16 g0 = origin_metric(kind);
  const Matrix16 id = Matrix16::Identity();
  OssermanReport rep;
  for (const TangentVector& tv : samples) {
    ++rep.samples;
    const Vector16 v = to_vector(tv);
    const double ev = eps_of(kind, v);
    const Matrix16 j = jacobi_operator(kind, tv).matrix;

    rep.form_consistency = std::max(
        rep.form_consistency, (j - jacobi_operator_from_form(kind, tv)).cwiseAbs().maxCoeff());
    const Matrix16 gj = g0 * j;
    rep.self_adjointness =
        std::max(rep.self_adjointness, (gj - gj.transpose()).cwiseAbs().maxCoeff());
    rep.kills_v = std::max(rep.kills_v, (j * v).cwiseAbs().maxCoeff());
    const double s = 1.7;
    const TangentVector sv = to_tangent(algebra_of(kind), s * v);
    rep.scaling = std::max(rep.scaling,
                           (jacobi_operator(kind, sv).matrix - s * s * j).cwiseAbs().maxCoeff());

    // Condition I.
    std::vector<double> expected(16);
    expected[0] = 0.0;
    for (int i = 1; i < 8; ++i) expected[i] = k.lambda * ev;
    for (int i = 8; i < 16; ++i) expected[i] = k.mu * ev;
    expected[0] = 0.0;
    std::sort(expected.begin(), expected.end());
    double im = 0.0;
    const double serr = spectrum_error(j, expected, &im);
    rep.spectrum_error = std::max(rep.spectrum_error, serr);
    rep.imaginary_part = std::max(rep.imaginary_part, im);
    const int dim_l = kernel_dimension(j - k.lambda * ev * id);
    const int dim_m = kernel_dimension(j - k.mu * ev * id);
    const int dim_0 = kernel_dimension(j);
    if (dim_l == 7 && dim_m == 8 && dim_0 == 1) ++rep.dimension_pass;

    const EigenspaceBases b = eigenspace_bases(kind, tv);
    double vec_res = 0.0;
    for (const auto& w : b.lambda_basis) {
      vec_res = std::max(vec_res, (j * w - k.lambda * ev * w).cwiseAbs().maxCoeff());
    }
    for (const auto& w : b.mu_basis) {
      vec_res = std::max(vec_res, (j * w - k.mu * ev * w).cwiseAbs().maxCoeff());
    }
    rep.eigenvector_residual = std::max(rep.eigenvector_residual, vec_res);
    if (serr <= tol && im <= tol && vec_res <= tol && dim_l == 7 && dim_m == 8 && dim_0 == 1) {
      ++rep.condition1_pass;
    }

    // Condition II.
    const std::vector<Vector16> ev_space = lambda_space(kind, v);
    const auto w2 = random_unit_in(kind, ev_space, rng);
    double dist = 0.0;
    if (w2) dist = (projector(ev_space) - projector(lambda_space(kind, *w2))).norm();
    rep.condition2_distance = std::max(rep.condition2_distance, dist);
    if (w2 && dist <= tol) ++rep.condition2_pass;

    // Condition III and its lambda analogue.
    auto symmetric = [&](const std::vector<Vector16>& space, double factor, double& worst) {
      const auto w = random_unit_in(kind, space, rng);
      if (!w) return false;
      const double ew = eps_of(kind, *w);
      const Matrix16 jw = jacobi_operator(kind, to_tangent(algebra_of(kind), *w)).matrix;
      const double r = (jw * v - factor * ew * v).cwiseAbs().maxCoeff();
      worst = std::max(worst, r);
      return r <= tol;
    };
    if (symmetric(b.mu_basis, k.mu, rep.condition3_residual)) ++rep.condition3_pass;
    if (symmetric(b.lambda_basis, k.lambda, rep.lambda_symmetry_residual)) ++rep.lambda_symmetry_pass;
  }
  return rep;
}

NonIsotropyWitness non_isotropy_witness() {
  const PlaneKind kind = PlaneKind::ParaOP2;
  const AlgebraKind alg = AlgebraKind::ParaOctonion;
  const HyperNumber one = HyperNumber::real(alg, 1.0);
  const HyperNumber i = HyperNumber::basis(alg, 1);
  const HyperNumber l = HyperNumber::basis(alg, 4);
  const HyperNumber zero(alg);
  const TangentVector v{i + l, zero};
  const TangentVector w{one, l};

  NonIsotropyWitness out;
  out.v_norm_sq = origin_inner(kind, v, v);
  out.w_norm_sq = origin_inner(kind, w, w);
  const Matrix16 je1 = jacobi_operator(kind, TangentVector{one, zero}).matrix;
  out.jacobi_e1_on_v = (je1 * to_vector(v) - 4.0 * to_vector(v)).cwiseAbs().maxCoeff();

  // Displayed map (x1,x2) -> (3x1 - 3 l x2, -3x2 + 3 l x1).
  Matrix16 m;
  for (int col = 0; col < 16; ++col) {
    const TangentVector x = frame_vector(alg, col);
    m.col(col) = to_vector(3.0 * x.a - 3.0 * (l * x.b), -3.0 * x.b + 3.0 * (l * x.a));
  }
  Eigen::JacobiSVD<Matrix16> svd(m, Eigen::ComputeFullV);
  std::vector<Vector16> kernel;
  for (int k = 0; k < 16; ++k) {
    if (svd.singularValues()(k) <= 1e-8) kernel.push_back(svd.matrixV().col(k));
  }
  out.kernel_dimension = static_cast<int>(kernel.size());
  const Matrix16 g0 = origin_metric(kind);
  const Matrix16 jw = jacobi_operator(kind, w).matrix;
  out.full_kernel_dimension = kernel_dimension(jw);
  for (const auto& x : kernel) {
    const TangentVector t = to_tangent(alg, x);
    out.kernel_relation = std::max(out.kernel_relation, max_abs_diff(t.a, l * t.b));
    for (const auto& y : kernel) {
      out.kernel_null_residual = std::max(out.kernel_null_residual, std::abs(x.dot(g0 * y)));
    }
    out.full_operator_on_kernel =
        std::max(out.full_operator_on_kernel, (jw * x).cwiseAbs().maxCoeff());
    out.restriction_difference =
        std::max(out.restriction_difference, ((m - jw) * x).cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace octoplane
