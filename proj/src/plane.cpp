#include "octoplane/plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "octoplane/errors.hpp"

namespace octoplane {
namespace {

void require_chart(int chart) {
  if (chart < 1 || chart > 3) {
    throw UnknownChartError("chart index " + std::to_string(chart) +
                            " is not one of 1, 2, 3");
  }
}

void require_algebra(PlaneKind kind, const HyperNumber& h) {
  if (h.kind() != algebra_of(kind)) {
    throw KindMismatchError(std::string("coordinate of kind ") + to_string(h.kind()) +
                            " used on plane " + to_string(kind));
  }
}

// Positions of the two coordinate slots of a chart.
std::pair<int, int> free_slots(int chart) {
  switch (chart) {
    case 1: return {1, 2};
    case 2: return {0, 2};
    default: return {0, 1};
  }
}

double max_slot_size(const HomogeneousTriple& t) {
  double m = 0.0;
  for (const auto& s : t) m = std::max(m, s.coeff_norm_sq());
  return m;
}

// Relative size of the pivot: 0 for an unusable pivot, 1 for the dominant slot.
double pivot_quality(PlaneKind kind, const HomogeneousTriple& t, int chart) {
  const HyperNumber& p = t[chart - 1];
  const double n = norm_sq(p);
  const double scale = max_slot_size(t);
  if (scale == 0.0) return 0.0;
  if (kind == PlaneKind::ParaOP2) return n > 0.0 ? n / scale : 0.0;
  return std::abs(n) / scale;
}

}  // namespace

AlgebraKind algebra_of(PlaneKind kind) {
  return kind == PlaneKind::ParaOP2 ? AlgebraKind::ParaOctonion : AlgebraKind::Octonion;
}

const char* to_string(PlaneKind kind) {
  switch (kind) {
    case PlaneKind::OP2: return "op2";
    case PlaneKind::ParaOP2: return "para";
    case PlaneKind::OP11: return "op11";
    case PlaneKind::OH2: return "oh2";
  }
  return "?";
}

std::optional<PlaneKind> parse_plane(const std::string& name) {
  for (PlaneKind k : kAllPlanes) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

ChartPoint origin(PlaneKind kind) {
  const AlgebraKind a = algebra_of(kind);
  return ChartPoint{kind, 1, HyperNumber(a), HyperNumber(a)};
}

bool chart_contains(PlaneKind kind, int chart, const HyperNumber& u,
                    const HyperNumber& v) {
  require_chart(chart);
  require_algebra(kind, u);
  require_algebra(kind, v);
  const double nu = norm_sq(u), nv = norm_sq(v);
  switch (kind) {
    case PlaneKind::OP2:
      return true;
    case PlaneKind::ParaOP2:
      return 1.0 + nu + nv > 0.0;
    case PlaneKind::OP11:
      if (chart == 3) return nu + nv - 1.0 > 0.0;
      return 1.0 + nu - nv > 0.0;
    case PlaneKind::OH2:
      if (chart == 1) return nu + nv < 1.0;
      if (chart == 2) return nu - 1.0 - nv > 0.0;
      return nu - nv - 1.0 > 0.0;
  }
  return false;
}

ChartPoint make_point(PlaneKind kind, int chart, const HyperNumber& u,
                      const HyperNumber& v) {
  if (!chart_contains(kind, chart, u, v)) {
    throw ChartDomainError(std::string("point outside chart ") + std::to_string(chart) +
                           " of " + to_string(kind));
  }
  return ChartPoint{kind, chart, u, v};
}

HomogeneousTriple to_triple(const ChartPoint& p) {
  require_chart(p.chart);
  const HyperNumber one = HyperNumber::real(algebra_of(p.kind), 1.0);
  switch (p.chart) {
    case 1: return {one, p.u, p.v};
    case 2: return {p.u, one, p.v};
    default: return {p.u, p.v, one};
  }
}

std::optional<ChartPoint> try_chart(PlaneKind kind, const HomogeneousTriple& t,
                                    int chart) {
  require_chart(chart);
  const HyperNumber& pivot = t[chart - 1];
  const double n = norm_sq(pivot);
  if (std::abs(n) <= kNullTolerance) return std::nullopt;
  if (kind == PlaneKind::ParaOP2 && n <= 0.0) return std::nullopt;
  const HyperNumber inv = inverse(pivot);
  const auto [i, j] = free_slots(chart);
  const HyperNumber u = t[i] * inv;
  const HyperNumber v = t[j] * inv;
  if (!chart_contains(kind, chart, u, v)) return std::nullopt;
  return ChartPoint{kind, chart, u, v};
}

ChartPoint normalize(PlaneKind kind, const HomogeneousTriple& t) {
  if (kind != PlaneKind::OH2) {
    const HyperNumber one = HyperNumber::real(algebra_of(kind), 1.0);
    for (int c = 1; c <= 3; ++c) {
      if (t[c - 1].kind() != one.kind() || max_abs_diff(t[c - 1], one) != 0.0) continue;
      if (auto p = try_chart(kind, t, c)) return *p;
    }
  }
  for (int c = 1; c <= 3; ++c) {
    if (auto p = try_chart(kind, t, c)) return *p;
  }
  throw NotRepresentableError(std::string("triple has no chart representative on ") +
                              to_string(kind));
}

ChartPoint well_conditioned(PlaneKind kind, const HomogeneousTriple& t) {
  if (kind == PlaneKind::OH2) {
    if (auto p = try_chart(kind, t, 1)) return *p;
    throw NotRepresentableError("triple is not a point of the ball");
  }
  // Every OP11 point lies in chart 1 or 2; chart 3 is only a last resort.
  const int last = kind == PlaneKind::OP11 ? 2 : 3;
  std::optional<ChartPoint> best;
  double best_q = 0.0;
  for (int c = 1; c <= last; ++c) {
    const double q = pivot_quality(kind, t, c);
    if (q <= best_q) continue;
    if (auto p = try_chart(kind, t, c)) {
      best = p;
      best_q = q;
    }
  }
  if (best) return *best;
  return normalize(kind, t);
}

ChartPoint well_conditioned(const ChartPoint& p) {
  return well_conditioned(p.kind, to_triple(p));
}

std::pair<HyperNumber, HyperNumber> transition(PlaneKind kind, int from_chart,
                                               int to_chart, const HyperNumber& u,
                                               const HyperNumber& v) {
  require_chart(to_chart);
  if (!chart_contains(kind, from_chart, u, v)) {
    throw OverlapError("transition source lies outside chart " +
                       std::to_string(from_chart));
  }
  if (from_chart == to_chart) return {u, v};
  const auto p = try_chart(kind, to_triple(ChartPoint{kind, from_chart, u, v}), to_chart);
  if (!p) {
    throw OverlapError("point is outside the overlap of charts " +
                       std::to_string(from_chart) + " and " + std::to_string(to_chart));
  }
  return {p->u, p->v};
}

ChartPoint to_chart(const ChartPoint& p, int chart) {
  auto [u, v] = transition(p.kind, p.chart, chart, p.u, p.v);
  return ChartPoint{p.kind, chart, u, v};
}

double point_distance(const ChartPoint& p, const ChartPoint& q) {
  const auto qq = try_chart(q.kind, to_triple(q), p.chart);
  if (!qq) return std::numeric_limits<double>::infinity();
  return std::max(max_abs_diff(p.u, qq->u), max_abs_diff(p.v, qq->v));
}

bool points_equal(const ChartPoint& p, const ChartPoint& q, double tol) {
  if (p.kind != q.kind) return false;
  const HomogeneousTriple tp = to_triple(p), tq = to_triple(q);
  int chart = 0;
  double best = 0.0;
  for (int c = 1; c <= 3; ++c) {
    const double quality =
        std::min(pivot_quality(p.kind, tp, c), pivot_quality(q.kind, tq, c));
    if (quality > best) {
      best = quality;
      chart = c;
    }
  }
  if (chart == 0) return false;
  const auto a = try_chart(p.kind, tp, chart);
  const auto b = try_chart(q.kind, tq, chart);
  if (!a || !b) return false;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    const double su = std::max({1.0, std::abs(a->u[i]), std::abs(b->u[i])});
    const double sv = std::max({1.0, std::abs(a->v[i]), std::abs(b->v[i])});
    if (std::abs(a->u[i] - b->u[i]) > tol * su) return false;
    if (std::abs(a->v[i] - b->v[i]) > tol * sv) return false;
  }
  return true;
}

}  // namespace octoplane
