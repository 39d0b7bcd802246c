#pragma once

// Reduced homogeneous coordinates for the four plane geometries.
//
// A point is a class of triples [a,b,c] under right scaling
// [a,b,c] ~ [a l, b l, c l]. Chart k consists of triples whose k-th slot is 1;
// the chart coordinates (u,v) are the two remaining slots in order:
//
//   chart 1: [1,u,v]    chart 2: [u,1,v]    chart 3: [u,v,1]
//
// Domains (strict inequalities):
//   OP2      every chart, no restriction.
//   ParaOP2  every chart: 1 + |u|^2 + |v|^2 > 0; scaling by l requires |l|^2 > 0.
//   OP11     charts 1, 2: 1 + |u|^2 - |v|^2 > 0; derived chart 3: |u|^2 + |v|^2 - 1 > 0.
//   OH2      chart 1 (the ball): |u|^2 + |v|^2 < 1; derived chart 2:
//            |u|^2 - 1 - |v|^2 > 0; derived chart 3: |u|^2 - |v|^2 - 1 > 0.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "octoplane/cayley.hpp"

namespace octoplane {

enum class PlaneKind { OP2, ParaOP2, OP11, OH2 };

inline constexpr std::array<PlaneKind, 4> kAllPlanes = {
    PlaneKind::OP2, PlaneKind::ParaOP2, PlaneKind::OP11, PlaneKind::OH2};

AlgebraKind algebra_of(PlaneKind kind);
/// Short CLI name: op2, para, op11, oh2.
const char* to_string(PlaneKind kind);
std::optional<PlaneKind> parse_plane(const std::string& name);

using HomogeneousTriple = std::array<HyperNumber, 3>;

struct ChartPoint {
  PlaneKind kind = PlaneKind::OP2;
  int chart = 1;
  HyperNumber u{AlgebraKind::Octonion};
  HyperNumber v{AlgebraKind::Octonion};
};

/// Point with coordinates (0,0) in chart 1, i.e. [1,0,0].
ChartPoint origin(PlaneKind kind);

/// Strict domain inequality of the chart. Throws UnknownChartError for
/// chart indices outside 1..3 and KindMismatchError for a wrong algebra.
bool chart_contains(PlaneKind kind, int chart, const HyperNumber& u,
                    const HyperNumber& v);

/// Validating constructor; throws ChartDomainError.
ChartPoint make_point(PlaneKind kind, int chart, const HyperNumber& u,
                      const HyperNumber& v);

HomogeneousTriple to_triple(const ChartPoint& p);

/// Representative of the triple in the given chart: every slot is multiplied
/// on the right by the inverse of the pivot slot. Empty when the pivot is
/// not invertible, not an admissible scale (ParaOP2 needs |pivot|^2 > 0), or
/// the image violates the chart domain.
std::optional<ChartPoint> try_chart(PlaneKind kind, const HomogeneousTriple& t,
                                    int chart);

/// Canonical form. A triple that already has a slot equal to 1 stays in the
/// lowest such chart (OH2 excepted, which prefers the ball); otherwise the
/// lowest chart index with an admissible pivot whose image lies in the chart.
/// Throws NotRepresentableError.
ChartPoint normalize(PlaneKind kind, const HomogeneousTriple& t);

/// Representative whose pivot has the largest |norm_sq| among the admissible
/// charts. OH2 points are always returned in chart 1. Used between numerical
/// steps to keep coordinates well conditioned.
ChartPoint well_conditioned(PlaneKind kind, const HomogeneousTriple& t);
ChartPoint well_conditioned(const ChartPoint& p);

/// Rational transition between chart coordinates. Throws OverlapError when
/// the point is outside the overlap.
std::pair<HyperNumber, HyperNumber> transition(PlaneKind kind, int from_chart,
                                               int to_chart,
                                               const HyperNumber& u,
                                               const HyperNumber& v);

/// Same point expressed in another chart; throws OverlapError.
ChartPoint to_chart(const ChartPoint& p, int chart);

/// Componentwise tolerance applied after normalization, relative to
/// max(1, |coordinate|).
inline constexpr double kPointTolerance = 1e-9;

/// True iff the two points define the same class. Both are brought into the
/// common chart with the best-conditioned pivots and compared componentwise.
bool points_equal(const ChartPoint& p, const ChartPoint& q,
                  double tol = kPointTolerance);

/// Largest coordinate difference after bringing q into p's chart; infinity
/// if q has no representative there.
double point_distance(const ChartPoint& p, const ChartPoint& q);

}  // namespace octoplane
