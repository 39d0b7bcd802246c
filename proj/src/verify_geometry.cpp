#include <cmath>
#include <set>
#include <vector>

#include "octoplane/errors.hpp"
#include "octoplane/isometry.hpp"
#include "octoplane/metric.hpp"
#include "verify_util.hpp"

namespace octoplane {
namespace {

using detail::max_abs;
using detail::Worst;

Signature expected_signature(PlaneKind kind) {
  if (kind == PlaneKind::ParaOP2 || kind == PlaneKind::OP11) return {8, 8, 0};
  return {16, 0, 0};
}

std::vector<std::pair<int, int>> overlap_pairs(PlaneKind kind) {
  std::vector<std::pair<int, int>> out;
  for (int from = 1; from <= 3; ++from) {
    for (int to = 1; to <= 3; ++to) {
      if (from == to) continue;
      if (kind == PlaneKind::OH2 && from != 1 && to != 1) continue;
      out.emplace_back(from, to);
    }
  }
  return out;
}

bool is_reflection(const IsometryStep& s) { return !std::holds_alternative<Rotation>(s); }

}  // namespace

SuiteReport verify_metric(PlaneKind kind, const VerifyConfig& cfg) {
  SuiteReport rep = detail::start("metric", kind, cfg);
  const AlgebraKind a = algebra_of(kind);
  Rng rng(suite_seed(cfg.seed, "metric", kind));
  const HyperNumber zero(a);
  const HyperNumber one = HyperNumber::real(a, 1.0);
  const Matrix8 G = sign_matrix(a);
  const Matrix8 I = Matrix8::Identity();

  {
    MetricMatrix want = MetricMatrix::Zero();
    switch (kind) {
      case PlaneKind::OP2:
      case PlaneKind::OH2: want.setIdentity(); break;
      case PlaneKind::ParaOP2:
        want.topLeftCorner<8, 8>() = G;
        want.bottomRightCorner<8, 8>() = G;
        break;
      case PlaneKind::OP11:
        want.topLeftCorner<8, 8>() = I;
        want.bottomRightCorner<8, 8>() = -I;
        break;
    }
    double r = max_abs(origin_metric(kind) - want);
    if (kind == PlaneKind::OP2) {
      MetricMatrix m = MetricMatrix::Zero();
      m.topLeftCorner<8, 8>() = 0.25 * I;
      m.bottomRightCorner<8, 8>() = 0.5 * I;
      r = std::max(r, max_abs(metric_matrix(kind, 1, one, zero) - m));
    }
    rep.add("metric_examples", "metric at the base point and at (1,0)", r, 1e-15, cfg);
  }
  {
    double r = std::max(max_abs(coupling_block(kind, zero, random_hyper(a, rng))),
                        max_abs(coupling_block(kind, random_hyper(a, rng), zero)));
    if (kind == PlaneKind::OP2) r = std::max(r, max_abs(coupling_block(kind, one, one) + I));
    rep.add("coupling_examples", "A vanishes when u or v does; A = -I at u = v = 1", r, 1e-15,
            cfg);
  }
  if (kind != PlaneKind::OP2) {
    const HyperNumber far = 2.0 * HyperNumber::basis(a, kind == PlaneKind::ParaOP2 ? 4 : 0);
    rep.add_count("outside_domain_rejected", "metric evaluation refuses points outside the chart",
                  detail::throws<ChartDomainError>([&] { (void)metric_matrix(kind, 1, zero, far); })
                      ? 0
                      : 1);
  }

  Worst coupling, coupling_t, symmetry, det_rel;
  int wrong_signature = 0;
  int not_positive = 0;
  std::set<std::tuple<int, int, int>> signatures;
  double min_det = std::numeric_limits<double>::infinity();
  for (int s = 0; s < cfg.samples; ++s) {
    const HyperNumber u = random_hyper(a, rng);
    const HyperNumber v = random_hyper(a, rng);
    const Matrix8 A = coupling_block(kind, u, v);
    const double nn = norm_sq(u) * norm_sq(v);
    const double scale = std::max(1.0, std::abs(nn));
    if (kind == PlaneKind::OP11) {
      coupling(max_abs(A * A.transpose() - nn * I) / scale);
      coupling_t(max_abs(A.transpose() * A - nn * I) / scale);
    } else {
      coupling(max_abs(A * G * A.transpose() - nn * G) / scale);
      coupling_t(max_abs(A.transpose() * G * A - nn * G) / scale);
    }

    const ChartPoint p = random_point(kind, rng);
    const MetricMatrix m = metric_matrix(p);
    symmetry(max_abs(m - m.transpose()));
    const Signature sig = signature(m);
    signatures.insert({sig.positive, sig.negative, sig.zero});
    if (!(sig == expected_signature(kind))) ++wrong_signature;
    if (kind == PlaneKind::OP2 || kind == PlaneKind::OH2) {
      Eigen::SelfAdjointEigenSolver<MetricMatrix> es(m);
      if (!(es.eigenvalues().minCoeff() > 0.0)) ++not_positive;
    }
    const double d = std::abs(m.determinant()) / std::pow(max_abs(m), 16);
    min_det = std::min(min_det, d);
  }
  rep.add("coupling_identity",
          kind == PlaneKind::OP11 ? "A A^T = |u|^2 |v|^2 I" : "A G A^T = |u|^2 |v|^2 G",
          coupling.value, 1e-10, cfg);
  rep.add("coupling_identity_transposed",
          kind == PlaneKind::OP11 ? "A^T A = |u|^2 |v|^2 I" : "A^T G A = |u|^2 |v|^2 G",
          coupling_t.value, 1e-10, cfg);
  rep.add("symmetry", "metric matrix is symmetric", symmetry.value, 1e-14, cfg);
  rep.add_count("signature",
                expected_signature(kind).negative == 0 ? "signature (16,0)" : "signature (8,8)",
                wrong_signature);
  rep.add_count("signature_constant", "one signature over all samples",
                static_cast<int>(signatures.size()) - 1);
  if (kind == PlaneKind::OP2 || kind == PlaneKind::OH2) {
    rep.add_count("positive_definite", "smallest eigenvalue is positive", not_positive);
  }
  rep.add_count("nondegenerate", "|det| of the scaled metric stays away from 0",
                min_det > 1e-12 ? 0 : 1);
  rep.details["min_scaled_det"] = round_residual(min_det);

  Worst pull;
  int evaluated = 0;
  for (auto [from, to] : overlap_pairs(kind)) {
    for (int s = 0; s < cfg.samples; ++s) {
      const ChartPoint p = random_overlap_point(kind, from, to, rng);
      pull(pullback_deviation(kind, from, to, p, cfg.fd_step));
      ++evaluated;
    }
  }
  rep.add("pullback", "chart transitions preserve the metric", pull.value, 1e-7, cfg);
  rep.details["pullback_samples"] = evaluated;
  {
    const ChartPoint p = random_point(kind, rng);
    rep.add("pullback_identity", "identity transition has zero deviation",
            pullback_deviation(kind, p.chart, p.chart, p, cfg.fd_step), 0.0, cfg);
  }
  return rep;
}

SuiteReport verify_isometry(PlaneKind kind, const VerifyConfig& cfg) {
  SuiteReport rep = detail::start("isometry", kind, cfg);
  const AlgebraKind a = algebra_of(kind);
  Rng rng(suite_seed(cfg.seed, "isometry", kind));
  const HyperNumber zero(a);
  const HyperNumber one = HyperNumber::real(a, 1.0);
  const int half = std::max(1, cfg.samples / 2);

  {
    Worst w;
    for (int s = 0; s < 10 * cfg.samples; ++s) {
      const IsometryStep step = random_step(kind, rng);
      if (!is_reflection(step)) continue;
      const bool euclid = std::holds_alternative<EuclideanReflection>(step);
      const HyperNumber u = random_hyper(a, rng);
      const HyperNumber v = random_hyper(a, rng);
      auto [u2, v2] = local_map(step, u, v);
      const double before = euclid ? norm_sq(u) + norm_sq(v) : norm_sq(u) - norm_sq(v);
      const double after = euclid ? norm_sq(u2) + norm_sq(v2) : norm_sq(u2) - norm_sq(v2);
      w(std::abs(after - before) / std::max(1.0, u.coeff_norm_sq() + v.coeff_norm_sq()));
    }
    rep.add("norm_conservation",
            "local reflections keep |u|^2 + |v|^2, or |u|^2 - |v|^2 for indefinite ones", w.value,
            1e-10, cfg);
  }

  {
    Worst w;
    int evaluated = 0;
    int skipped = 0;
    for (int s = 0; s < half; ++s) {
      IsometryComposition comp{{random_step(kind, rng)}};
      std::vector<ChartPoint> pts;
      for (int k = 0; k < half; ++k) pts.push_back(random_point(kind, rng));
      const IsometryDeviation d = verify_isometry(kind, comp, pts, cfg.fd_step);
      w(d.max_deviation);
      evaluated += d.evaluated;
      skipped += d.skipped;
    }
    rep.add("pullback", "reflections and rotations preserve the metric", w.value, 1e-6, cfg);
    rep.add_count("pullback_coverage", "every sample image is evaluated", skipped);
    rep.details["pullback_evaluated"] = evaluated;
  }
  {
    const std::vector<ChartPoint> pts = {random_point(kind, rng)};
    const IsometryDeviation d = verify_isometry(kind, IsometryComposition{}, pts, cfg.fd_step);
    rep.add("identity_deviation", "empty composition has zero deviation", d.max_deviation, 0.0,
            cfg);
  }

  {
    Worst w;
    for (int s = 0; s < 10 * cfg.samples;) {
      const IsometryStep step = random_step(kind, rng);
      if (!is_reflection(step)) continue;
      ++s;
      const ChartPoint p = random_point(kind, rng);
      const ChartPoint twice = apply_step(kind, step, apply_step(kind, step, p));
      w(point_distance(p, twice));
    }
    rep.add("involution", "every reflection squares to the identity", w.value, 1e-9, cfg);
  }

  {
    Worst w;
    int pairs = 0;
    for (int s = 0; s < cfg.samples;) {
      const IsometryStep step = random_step(kind, rng);
      if (!is_reflection(step)) continue;
      ++s;
      const ChartPoint p = random_point(kind, rng);
      const std::vector<ChartPoint> images = extension_images(kind, step, p);
      for (std::size_t i = 1; i < images.size(); ++i) {
        ++pairs;
        w(point_distance(images[0], images[i]) /
          std::max(1.0, images[0].u.coeff_norm_sq() + images[0].v.coeff_norm_sq()));
      }
    }
    rep.add("region_agreement", "extension formulas agree where several apply", w.value, 1e-9,
            cfg);
    rep.details["region_pairs"] = pairs;
  }

  if (kind == PlaneKind::OP2 || kind == PlaneKind::ParaOP2) {
    double r = 0.0;
    for (double t : {0.3, -0.7, 1.1, 2.5}) {
      const ChartPoint img = to_chart(apply_step(kind, make_rotation(kind, t), origin(kind)), 1);
      r = std::max({r, max_abs_diff(img.u, -std::tan(t) * one), max_abs_diff(img.v, zero)});
    }
    rep.add("rotation_example", "rotation by t takes [1,0,0] to [1,-tan t,0]", r, 1e-10, cfg);

    Worst swap;
    const IsometryStep s = make_euclidean(kind, 1, 0.0, one);
    for (int k = 0; k < 10; ++k) {
      const ChartPoint p = random_overlap_point(kind, 1, 1, rng);
      const ChartPoint q = to_chart(apply_step(kind, s, p), 1);
      swap(std::max(max_abs_diff(q.u, p.v), max_abs_diff(q.v, p.u)));
    }
    rep.add("swap_example", "r = 0, l = 1 on chart 1 is [1,u,v] -> [1,v,u]", swap.value, 1e-12,
            cfg);
  }

  if (kind == PlaneKind::OP2) {
    Worst w;
    for (int s = 0; s < cfg.samples;) {
      const IsometryStep step = random_step(kind, rng);
      const auto* e = std::get_if<EuclideanReflection>(&step);
      if (e == nullptr || e->chart != 1) continue;
      const ChartPoint p = random_overlap_point(kind, 2, 2, rng);
      const auto q = try_chart(kind, to_triple(apply_step(kind, step, p)), 2);
      if (!q) continue;
      ++s;
      const double d = norm_sq(e->r * one + e->lambda * p.v);
      const double want = (norm_sq(p.u) + 1.0 + norm_sq(p.v)) / d;
      const double got = norm_sq(q->u) + 1.0 + norm_sq(q->v);
      w(std::abs(got - want) / want);
    }
    rep.add("conformal_factor", "|x'|^2 + 1 + |z'|^2 = (|x|^2 + 1 + |z|^2) / |r + l z|^2",
            w.value, 1e-9, cfg);
  }

  if (kind == PlaneKind::OH2) {
    int outside = 0;
    for (int s = 0; s < 10 * cfg.samples; ++s) {
      const IsometryStep step = random_step(kind, rng);
      const ChartPoint q = apply_step(kind, step, random_point(kind, rng));
      if (q.chart != 1 || !(1.0 - norm_sq(q.u) - norm_sq(q.v) > 0.0)) ++outside;
    }
    rep.add_count("ball_preserved", "images of ball points stay in the ball", outside);

    const double R = 0.5;
    const double t = std::atanh(R);
    const IsometryComposition c = isometry_to(kind, make_point(kind, 1, zero, R * one));
    double r = c.steps.size() == 1 ? 0.0 : 1.0;
    if (r == 0.0) {
      const auto* ind = std::get_if<IndefiniteReflection>(&c.steps[0]);
      r = ind == nullptr ? 1.0
                         : std::max(std::abs(std::abs(ind->r) - std::cosh(t)),
                                    std::abs(std::sqrt(ind->lambda.coeff_norm_sq()) -
                                             std::sinh(t)));
    }
    rep.add("single_step_example", "(0,R) is reached by one reflection with r = cosh t", r,
            1e-12, cfg);
  }

  {
    rep.add_count("origin_empty", "the base point needs no steps",
                  isometry_to(kind, origin(kind)).steps.empty() ? 0 : 1);
    Worst w;
    int failures = 0;
    for (int s = 0; s < 2 * cfg.samples; ++s) {
      const ChartPoint target = random_point(kind, rng);
      try {
        const IsometryComposition c = isometry_to(kind, target);
        w(point_distance(target, apply(kind, c, origin(kind))));
      } catch (const Error&) {
        ++failures;
      }
    }
    rep.add("homogeneity", "constructed isometries move the base point onto the target",
            w.value, 1e-8, cfg);
    rep.add_count("homogeneity_constructed", "a composition exists for every target", failures);
  }
  return rep;
}

}  // namespace octoplane
