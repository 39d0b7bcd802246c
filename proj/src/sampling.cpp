#include "octoplane/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "octoplane/errors.hpp"

namespace octoplane {
namespace {

constexpr int kMaxAttempts = 1000000;

double coefficient_scale(PlaneKind kind) { return kind == PlaneKind::OH2 ? 0.3 : 0.6; }

// Pivot size relative to the largest slot, as used for chart selection.
double pivot_ratio(const HomogeneousTriple& t, int chart) {
  double m = 0.0;
  for (const auto& s : t) m = std::max(m, s.coeff_norm_sq());
  return m == 0.0 ? 0.0 : std::abs(norm_sq(t[chart - 1])) / m;
}

bool well_inside(const ChartPoint& p, const HomogeneousTriple& t) {
  if (pivot_ratio(t, p.chart) < kSampleMargin) return false;
  const double d = conformal_data(p.kind, p.chart, p.u, p.v).denominator;
  return std::abs(d) >= kSampleMargin;
}

std::optional<ChartPoint> good_chart(PlaneKind kind, const HomogeneousTriple& t, int chart) {
  const auto p = try_chart(kind, t, chart);
  if (!p || !well_inside(*p, t)) return std::nullopt;
  return p;
}

HomogeneousTriple random_triple(PlaneKind kind, Rng& rng) {
  const AlgebraKind a = algebra_of(kind);
  const double s = coefficient_scale(kind);
  return {HyperNumber::real(a, 1.0), random_hyper(a, rng, s), random_hyper(a, rng, s)};
}

}  // namespace

HyperNumber random_hyper(AlgebraKind kind, Rng& rng, double scale) {
  HyperNumber h(kind);
  for (std::size_t i = 0; i < kAlgebraDim; ++i) h[i] = rng.uniform(-scale, scale);
  return h;
}

ChartPoint random_point(PlaneKind kind, Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const HomogeneousTriple t = random_triple(kind, rng);
    if (!good_chart(kind, t, 1)) continue;
    // OH2 points are kept in the ball.
    if (kind == PlaneKind::OH2) return *try_chart(kind, t, 1);
    const int chart = 1 + rng.index(3);
    if (auto p = good_chart(kind, t, chart)) return *p;
  }
  throw Error("random_point: sampling failed");
}

ChartPoint random_overlap_point(PlaneKind kind, int from_chart, int to_chart, Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const HomogeneousTriple t = random_triple(kind, rng);
    if (!good_chart(kind, t, 1)) continue;
    const auto p = good_chart(kind, t, from_chart);
    if (p && good_chart(kind, t, to_chart)) return *p;
  }
  throw Error("random_overlap_point: sampling failed");
}

IsometryStep random_step(PlaneKind kind, Rng& rng) {
  const AlgebraKind a = algebra_of(kind);
  const double pi = std::acos(-1.0);
  auto euclidean = [&](int chart) -> IsometryStep {
    if (a == AlgebraKind::Octonion) {
      HyperNumber n(a);
      do {
        n = random_hyper(a, rng);
      } while (norm_sq(n) < 0.01);
      n /= std::sqrt(norm_sq(n));
      const double theta = rng.uniform(-pi, pi);
      return make_euclidean(kind, chart, std::cos(theta), std::sin(theta) * n);
    }
    for (;;) {
      const HyperNumber l = random_hyper(a, rng, 0.5);
      const double n = norm_sq(l);
      if (n > 0.9) continue;
      const double r = std::sqrt(1.0 - n) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      return make_euclidean(kind, chart, r, l);
    }
  };
  auto indefinite = [&](int chart) -> IsometryStep {
    const HyperNumber l = random_hyper(a, rng, 0.4);
    const double r = std::sqrt(1.0 + norm_sq(l)) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    return make_indefinite(kind, chart, r, l);
  };
  switch (kind) {
    case PlaneKind::OP2:
    case PlaneKind::ParaOP2: {
      const int pick = rng.index(5);
      if (pick < 3) return euclidean(pick + 1);
      return make_rotation(kind, rng.uniform(-pi, pi), pick - 1);
    }
    case PlaneKind::OP11: {
      const int pick = rng.index(3);
      return pick < 2 ? indefinite(pick + 1) : euclidean(3);
    }
    case PlaneKind::OH2: {
      const int pick = rng.index(3);
      return pick == 0 ? euclidean(1) : indefinite(pick + 1);
    }
  }
  throw Error("random_step: unknown plane");
}

TangentVector random_unit_vector(PlaneKind kind, Rng& rng) {
  const AlgebraKind a = algebra_of(kind);
  for (;;) {
    TangentVector v{random_hyper(a, rng), random_hyper(a, rng)};
    const double e = origin_inner(kind, v, v);
    const double size = v.a.coeff_norm_sq() + v.b.coeff_norm_sq();
    if (std::abs(e) < 0.1 * size) continue;
    const double s = 1.0 / std::sqrt(std::abs(e));
    v.a *= s;
    v.b *= s;
    return v;
  }
}

}  // namespace octoplane
