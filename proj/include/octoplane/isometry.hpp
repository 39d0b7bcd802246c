#pragma once

// Reflections and rotations of the four planes and their global extensions.
//
// A reflection is given on a home chart h with coordinates (u,v):
//
//   Euclidean   (u,v) -> ( r u + l v,  conj(l) u - r v),   r^2 + |l|^2 = 1
//   Indefinite  (u,v) -> (-r u + l v, -conj(l) u + r v),   r^2 - |l|^2 = 1
//
// and is extended to the whole plane by rational formulas on the other
// charts. A rotation by t on chart h is the Euclidean reflection (1,0)
// applied after the Euclidean reflection (cos t, sin t) on the same chart.
//
// Admissible steps:
//   OP2, ParaOP2  Euclidean on charts 1..3, rotation on charts 2, 3
//   OP11          indefinite on charts 1, 2, Euclidean on chart 3
//   OH2           Euclidean on chart 1, indefinite on charts 2, 3

#include <string>
#include <variant>
#include <vector>

#include "octoplane/metric.hpp"
#include "octoplane/plane.hpp"

namespace octoplane {

struct EuclideanReflection {
  int chart = 1;
  double r = 1.0;
  HyperNumber lambda;
};

struct IndefiniteReflection {
  int chart = 1;
  double r = 1.0;
  HyperNumber lambda;
};

struct Rotation {
  double t = 0.0;
  int chart = 3;
};

using IsometryStep = std::variant<EuclideanReflection, IndefiniteReflection, Rotation>;

struct IsometryComposition {
  std::vector<IsometryStep> steps;
};

/// Normalization constraint tolerance, relative to max(1, r^2 + |l|^2_coeff).
inline constexpr double kStepConstraintTolerance = 1e-12;

/// Throws InvalidStepError if the step is not admissible on the plane or
/// violates its constraint.
void validate_step(PlaneKind kind, const IsometryStep& step);

EuclideanReflection make_euclidean(PlaneKind kind, int chart, double r,
                                   const HyperNumber& lambda);
IndefiniteReflection make_indefinite(PlaneKind kind, int chart, double r,
                                     const HyperNumber& lambda);
Rotation make_rotation(PlaneKind kind, double t, int chart = 3);

std::string describe(const IsometryStep& step);

/// Image of a point; the result is re-expressed in its best-conditioned chart.
ChartPoint apply_step(PlaneKind kind, const IsometryStep& step, const ChartPoint& p);

/// Applies the steps in order (steps[0] first).
/// Images of p under every admissible extension formula of a reflection, best
/// conditioned first. Where several formulas apply they must agree.
std::vector<ChartPoint> extension_images(PlaneKind kind, const IsometryStep& step,
                                         const ChartPoint& p);
ChartPoint apply(PlaneKind kind, const IsometryComposition& comp, const ChartPoint& p);

/// The local formula on the home chart, without extension.
std::pair<HyperNumber, HyperNumber> local_map(const IsometryStep& step,
                                              const HyperNumber& u,
                                              const HyperNumber& v);

struct IsometryDeviation {
  double max_deviation = 0.0;
  int evaluated = 0;
  int skipped = 0;  // samples whose image or stencil left every chart
};

/// For each sample p compares J^T M(F p) J with M(p), J the central-difference
/// Jacobian of the composed map in the charts of p and F(p).
IsometryDeviation verify_isometry(PlaneKind kind, const IsometryComposition& comp,
                                  const std::vector<ChartPoint>& samples,
                                  double step = kDefaultFdStep);

/// Composition taking the origin to the target.
IsometryComposition isometry_to(PlaneKind kind, const ChartPoint& target);

}  // namespace octoplane
