#pragma once

// Seeded sample generation. Uniform variates are formed from the raw 64-bit
// engine output so that sequences are identical across standard libraries.

#include <cstdint>
#include <random>

#include "octoplane/isometry.hpp"
#include "octoplane/metric.hpp"

namespace octoplane {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on [0,1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }
  int index(int n) { return static_cast<int>(uniform() * n); }

 private:
  std::mt19937_64 engine_;
};

/// Coefficients uniform on [-scale, scale].
HyperNumber random_hyper(AlgebraKind kind, Rng& rng, double scale = 1.0);

/// Margin kept from every chart boundary and from null pivots.
inline constexpr double kSampleMargin = 0.2;

/// Point of the plane away from chart boundaries, expressed in its
/// best-conditioned chart.
ChartPoint random_point(PlaneKind kind, Rng& rng);

/// Point given in from_chart that also lies in to_chart, both with margin.
ChartPoint random_overlap_point(PlaneKind kind, int from_chart, int to_chart, Rng& rng);

/// Random admissible reflection (or rotation on OP2 and ParaOP2).
IsometryStep random_step(PlaneKind kind, Rng& rng);

/// Tangent vector at the origin with g(v,v) = +1 or -1.
TangentVector random_unit_vector(PlaneKind kind, Rng& rng);

}  // namespace octoplane
