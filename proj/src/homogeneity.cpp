// Explicit compositions of reflections taking the origin to a given point.

#include <algorithm>
#include <cmath>
#include <limits>

#include "octoplane/errors.hpp"
#include "octoplane/isometry.hpp"

namespace octoplane {
namespace {

bool same_reflection(const IsometryStep& x, const IsometryStep& y) {
  auto eq = [](const auto& p, const auto& q) {
    return p.chart == q.chart && p.r == q.r && p.lambda.kind() == q.lambda.kind() &&
           p.lambda.coeffs() == q.lambda.coeffs();
  };
  if (const auto* a = std::get_if<EuclideanReflection>(&x)) {
    const auto* b = std::get_if<EuclideanReflection>(&y);
    return b && eq(*a, *b);
  }
  if (const auto* a = std::get_if<IndefiniteReflection>(&x)) {
    const auto* b = std::get_if<IndefiniteReflection>(&y);
    return b && eq(*a, *b);
  }
  return false;
}

// Removes adjacent pairs of identical reflections (each is an involution).
IsometryComposition simplify(IsometryComposition c) {
  std::vector<IsometryStep> out;
  for (auto& s : c.steps) {
    if (!out.empty() && same_reflection(out.back(), s)) {
      out.pop_back();
    } else {
      out.push_back(std::move(s));
    }
  }
  return {std::move(out)};
}

double norm(const HyperNumber& h) { return std::sqrt(norm_sq(h)); }

// Chain from [1,R,0] with R real to [1,a,b] on the definite planes.
void append_definite_tail(PlaneKind kind, const HyperNumber& a, const HyperNumber& b,
                          double big_r, std::vector<IsometryStep>& steps) {
  const AlgebraKind alg = algebra_of(kind);
  const HyperNumber one = HyperNumber::real(alg, 1.0);
  const double nb = norm(b);
  if (nb == 0.0) {
    steps.push_back(make_euclidean(kind, 1, 0.0, conjugate(a) / norm(a)));
    steps.push_back(make_euclidean(kind, 1, 0.0, one));
    return;
  }
  steps.push_back(make_euclidean(kind, 1, 0.0, -conjugate(b) / nb));
  steps.push_back(make_euclidean(kind, 1, nb / big_r, -(a * conjugate(b)) / (big_r * nb)));
}

IsometryComposition to_op2(const ChartPoint& t) {
  const double big_r = std::sqrt(norm_sq(t.u) + norm_sq(t.v));
  if (big_r == 0.0) return {};
  std::vector<IsometryStep> steps;
  steps.push_back(make_rotation(PlaneKind::OP2, -std::atan(big_r), 3));
  append_definite_tail(PlaneKind::OP2, t.u, t.v, big_r, steps);
  return simplify({steps});
}

IsometryComposition to_oh2(const ChartPoint& t) {
  const PlaneKind k = PlaneKind::OH2;
  const AlgebraKind alg = AlgebraKind::Octonion;
  const HyperNumber one = HyperNumber::real(alg, 1.0);
  const double na = norm(t.u), nb = norm(t.v);
  const double big_r = std::sqrt(na * na + nb * nb);
  if (big_r == 0.0) return {};
  const double s = std::atanh(big_r);
  std::vector<IsometryStep> steps;
  steps.push_back(make_indefinite(k, 2, std::cosh(s), HyperNumber::real(alg, std::sinh(s))));
  steps.push_back(make_euclidean(k, 1, 0.0, one));
  if (na == 0.0) {
    steps.push_back(make_euclidean(k, 1, 0.0, conjugate(t.v) / nb));
  } else {
    steps.push_back(make_euclidean(k, 1, 0.0, -conjugate(t.u) / na));
    steps.push_back(make_euclidean(k, 1, na / big_r, -(t.v * conjugate(t.u)) / (big_r * na)));
    steps.push_back(make_euclidean(k, 1, 0.0, one));
  }
  return simplify({steps});
}

IsometryComposition to_op11_inner(const HyperNumber& a, const HyperNumber& b) {
  const PlaneKind k = PlaneKind::OP11;
  const double na = norm(a);
  const double c = std::sqrt(1.0 - norm_sq(b));
  std::vector<IsometryStep> steps;
  const double t0 = std::atan(-na / c);
  const HyperNumber a0 = na == 0.0 ? HyperNumber::real(a.kind(), 1.0) : conjugate(a) / na;
  steps.push_back(make_euclidean(k, 3, std::cos(t0), std::sin(t0) * a0));
  if (!b.is_zero()) steps.push_back(make_indefinite(k, 2, 1.0 / c, conjugate(b) / c));
  return {steps};
}

IsometryComposition to_op11(const ChartPoint& t) {
  const PlaneKind k = PlaneKind::OP11;
  if (t.u.is_zero() && t.v.is_zero()) return {};
  if (norm_sq(t.v) < 0.5) return simplify(to_op11_inner(t.u, t.v));
  // Reduce |b| first with a Euclidean reflection fixing the chart-1 form.
  const double s = std::sqrt(1.0 + norm_sq(t.u));
  const EuclideanReflection pre = make_euclidean(k, 3, 1.0 / s, conjugate(t.u) / s);
  const ChartPoint reduced = to_chart(apply_step(k, pre, t), 1);
  IsometryComposition c = to_op11_inner(reduced.u, reduced.v);
  c.steps.push_back(pre);
  return simplify(c);
}

// ParaOP2: the origin is taken to [1,K,0] with |K|^2 = N = |p|^2 + |q|^2 and
// then to [1,p,q], which needs |q|^2 / N > 0.
std::optional<IsometryComposition> para_direct(const HyperNumber& a, const HyperNumber& b) {
  const PlaneKind k = PlaneKind::ParaOP2;
  const AlgebraKind alg = AlgebraKind::ParaOctonion;
  const double n = norm_sq(a) + norm_sq(b);
  const double scale = 1.0 + a.coeff_norm_sq() + b.coeff_norm_sq();
  if (std::abs(n) < 1e-3 * scale) return std::nullopt;
  const bool swap = !(norm_sq(b) * n > 0.0);
  const HyperNumber& p = swap ? b : a;
  const HyperNumber& q = swap ? a : b;
  const double ratio = norm_sq(q) / n;
  if (!(ratio > 1e-3)) return std::nullopt;

  std::vector<IsometryStep> steps;
  HyperNumber k0(alg);
  if (n > 0.0) {
    steps.push_back(make_rotation(k, -std::atan(std::sqrt(n)), 3));
    k0 = HyperNumber::real(alg, std::sqrt(n));
  } else {
    const double kappa = std::sqrt(-n);
    const HyperNumber l = HyperNumber::basis(alg, 4);
    const double s = std::atanh(kappa);
    steps.push_back(make_euclidean(k, 3, std::cosh(s), std::sinh(s) * l));
    steps.push_back(make_euclidean(k, 3, 1.0, HyperNumber(alg)));
    k0 = kappa * l;
  }
  const double r = std::sqrt(ratio);
  const HyperNumber w = -q / r;
  steps.push_back(make_euclidean(k, 1, 0.0, conjugate(w * inverse(k0))));
  steps.push_back(make_euclidean(k, 1, r, p * inverse(w)));
  if (swap) steps.push_back(make_euclidean(k, 1, 0.0, HyperNumber::real(alg, 1.0)));
  return IsometryComposition{steps};
}

double para_quality(const HyperNumber& a, const HyperNumber& b) {
  const double n = norm_sq(a) + norm_sq(b);
  const double scale = 1.0 + a.coeff_norm_sq() + b.coeff_norm_sq();
  const double q = std::max(norm_sq(a) * (n > 0 ? 1 : -1), norm_sq(b) * (n > 0 ? 1 : -1));
  return std::min(std::abs(n), q) / scale;
}

IsometryComposition to_para(const ChartPoint& t) {
  const PlaneKind k = PlaneKind::ParaOP2;
  if (t.u.is_zero() && t.v.is_zero()) return {};

  struct Option {
    double quality;
    std::vector<IsometryStep> pre;   // applied to the target
    std::vector<IsometryStep> post;  // appended to the composition
  };
  std::vector<Option> options;
  options.push_back({para_quality(t.u, t.v), {}, {}});
  constexpr int kGrid = 512;
  const double pi = std::acos(-1.0);
  for (int chart : {3, 2}) {
    for (int i = 1; i < kGrid; ++i) {
      const double angle = pi * i / kGrid;
      const Rotation rot{angle, chart};
      try {
        const auto image = try_chart(k, to_triple(apply_step(k, rot, t)), 1);
        if (!image) continue;
        options.push_back({para_quality(image->u, image->v), {rot}, {Rotation{-angle, chart}}});
      } catch (const Error&) {
      }
    }
  }
  std::stable_sort(options.begin(), options.end(),
                   [](const Option& x, const Option& y) { return x.quality > y.quality; });

  const ChartPoint o = origin(k);
  std::optional<IsometryComposition> best;
  double best_err = std::numeric_limits<double>::infinity();
  const std::size_t tries = std::min<std::size_t>(options.size(), 6);
  for (std::size_t i = 0; i < tries; ++i) {
    ChartPoint image = t;
    try {
      for (const auto& s : options[i].pre) image = apply_step(k, s, image);
      const auto in1 = try_chart(k, to_triple(image), 1);
      if (!in1) continue;
      auto c = para_direct(in1->u, in1->v);
      if (!c) continue;
      for (const auto& s : options[i].post) c->steps.push_back(s);
      const double err = point_distance(t, apply(k, *c, o));
      if (err < best_err) {
        best_err = err;
        best = simplify(*c);
      }
      if (err < 1e-12) break;
    } catch (const Error&) {
    }
  }
  if (!best) throw ExtensionError("no homogeneity construction found for the target");
  return *best;
}

}  // namespace

IsometryComposition isometry_to(PlaneKind kind, const ChartPoint& target) {
  const ChartPoint t = to_chart(target, 1);
  switch (kind) {
    case PlaneKind::OP2: return to_op2(t);
    case PlaneKind::ParaOP2: return to_para(t);
    case PlaneKind::OP11: return to_op11(t);
    case PlaneKind::OH2: return to_oh2(t);
  }
  return {};
}

}  // namespace octoplane
