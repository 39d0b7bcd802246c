#include "octoplane/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "octoplane/errors.hpp"

namespace octoplane {
namespace {

struct Reflection {
  bool euclidean;
  int chart;
  double r;
  HyperNumber l;
};

bool euclidean_allowed(PlaneKind kind, int chart) {
  switch (kind) {
    case PlaneKind::OP2:
    case PlaneKind::ParaOP2: return chart >= 1 && chart <= 3;
    case PlaneKind::OP11: return chart == 3;
    case PlaneKind::OH2: return chart == 1;
  }
  return false;
}

bool indefinite_allowed(PlaneKind kind, int chart) {
  switch (kind) {
    case PlaneKind::OP2:
    case PlaneKind::ParaOP2: return false;
    case PlaneKind::OP11: return chart == 1 || chart == 2;
    case PlaneKind::OH2: return chart == 2 || chart == 3;
  }
  return false;
}

void check_constraint(PlaneKind kind, double r, const HyperNumber& l, double sign,
                      const char* what) {
  if (l.kind() != algebra_of(kind)) {
    throw InvalidStepError(std::string(what) + ": lambda has the wrong algebra for " +
                           to_string(kind));
  }
  const double value = r * r + sign * norm_sq(l);
  const double scale = std::max(1.0, r * r + l.coeff_norm_sq());
  if (!(std::abs(value - 1.0) <= kStepConstraintTolerance * scale)) {
    std::ostringstream os;
    os << what << ": normalization constraint violated (value " << value << ")";
    throw InvalidStepError(os.str());
  }
}

// Slot permutation taking home chart h to chart 1 with coordinate order kept.
HomogeneousTriple to_home_frame(int h, const HomogeneousTriple& t) {
  if (h == 2) return {t[1], t[0], t[2]};
  if (h == 3) return {t[2], t[0], t[1]};
  return t;
}

HomogeneousTriple from_home_frame(int h, const HomogeneousTriple& t) {
  if (h == 2) return {t[1], t[0], t[2]};
  if (h == 3) return {t[1], t[2], t[0]};
  return t;
}

std::pair<HyperNumber, HyperNumber> reflect_local(const Reflection& s, const HyperNumber& u,
                                                  const HyperNumber& v) {
  const HyperNumber lb = conjugate(s.l);
  if (s.euclidean) return {s.r * u + s.l * v, lb * u - s.r * v};
  return {-s.r * u + s.l * v, -(lb * u) + s.r * v};
}

struct Candidate {
  double quality;
  HomogeneousTriple image;
};

// Images of the triple (already in the home frame) under every extension
// formula whose denominator is admissible, scored by conditioning.
std::vector<Candidate> candidates(PlaneKind kind, const Reflection& s,
                                  const HomogeneousTriple& t) {
  const AlgebraKind a = algebra_of(kind);
  const HyperNumber one = HyperNumber::real(a, 1.0);
  const bool para = kind == PlaneKind::ParaOP2;
  const double r = s.r;
  const HyperNumber& l = s.l;
  const HyperNumber lb = conjugate(l);
  const double lscale = r * r + l.coeff_norm_sq();
  double scale = 0.0;
  for (const auto& x : t) scale = std::max(scale, x.coeff_norm_sq());

  auto usable = [&](double d, double size) {
    if (para ? d <= 0.0 : d == 0.0) return 0.0;
    return std::abs(d) / size;
  };

  std::vector<Candidate> out;
  for (int slot = 0; slot < 3; ++slot) {
    const double n = norm_sq(t[slot]);
    const double pq = usable(n, scale);
    if (pq < 1e-14 || std::abs(n) <= kNullTolerance * 1e-6) continue;
    const HyperNumber inv = inverse(t[slot]);
    HomogeneousTriple rep = {t[0] * inv, t[1] * inv, t[2] * inv};
    rep[slot] = one;

    if (slot == 0) {
      auto [u2, v2] = reflect_local(s, rep[1], rep[2]);
      out.push_back({pq, {one, u2, v2}});
      continue;
    }
    if (slot == 1) {
      const HyperNumber& x = rep[0];
      const HyperNumber& z = rep[2];
      const HyperNumber zb = conjugate(z);
      const double nz = norm_sq(z);
      const double size = lscale * (1.0 + z.coeff_norm_sq());
      if (s.euclidean) {
        const double d1 = norm_sq(r * one + l * z);
        if (const double q = usable(d1, size); q > 0.0) {
          const HyperNumber xp = (r * x + (x * zb) * lb) / d1;
          const HyperNumber zp = (r * lb + (lb * zb) * lb - (r * r) * z - (r * nz) * lb) / d1;
          out.push_back({pq * q, {xp, one, zp}});
        }
        const double d2 = norm_sq(lb - r * z);
        if (const double q = usable(d2, size); q > 0.0) {
          const HyperNumber xp = (x * l - r * (x * zb)) / d2;
          const HyperNumber yp = (r * l + (l * z) * l - (r * r) * zb - (r * nz) * l) / d2;
          out.push_back({pq * q, {xp, yp, one}});
        }
      } else {
        const double d1 = norm_sq(r * one - l * z);
        if (const double q = usable(d1, size); q > 0.0) {
          const HyperNumber xp = (-r * x + (x * zb) * lb) / d1;
          const HyperNumber zp = (r * lb - (lb * zb) * lb - (r * r) * z + (r * nz) * lb) / d1;
          out.push_back({pq * q, {xp, one, zp}});
        }
      }
      continue;
    }
    // slot == 2; the indefinite reflections are handled after re-pivoting.
    if (!s.euclidean) continue;
    const HyperNumber& x = rep[0];
    const HyperNumber& y = rep[1];
    const HyperNumber yb = conjugate(y);
    const double ny = norm_sq(y);
    const double size = lscale * (1.0 + y.coeff_norm_sq());
    const double d1 = norm_sq(r * y + l);
    if (const double q = usable(d1, size); q > 0.0) {
      const HyperNumber xp = (r * (x * yb) + x * lb) / d1;
      const HyperNumber zp = ((r * ny) * lb + (lb * y) * lb - (r * r) * yb - r * lb) / d1;
      out.push_back({pq * q, {xp, one, zp}});
    }
    const double d2 = norm_sq(lb * y - r * one);
    if (const double q = usable(d2, size); q > 0.0) {
      const HyperNumber xp = ((x * yb) * l - r * x) / d2;
      const HyperNumber yp = ((r * ny) * l + (l * yb) * l - (r * r) * y - r * l) / d2;
      out.push_back({pq * q, {xp, yp, one}});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& p, const Candidate& q) { return p.quality > q.quality; });
  return out;
}

ChartPoint apply_reflection(PlaneKind kind, const Reflection& s, const ChartPoint& p) {
  const HomogeneousTriple home = to_home_frame(s.chart, to_triple(p));
  for (const Candidate& c : candidates(kind, s, home)) {
    try {
      return well_conditioned(kind, from_home_frame(s.chart, c.image));
    } catch (const NotRepresentableError&) {
      continue;
    }
  }
  throw ExtensionError(std::string("no extension formula applies on ") + to_string(kind));
}

std::vector<Reflection> as_reflections(PlaneKind kind, const IsometryStep& step) {
  const AlgebraKind a = algebra_of(kind);
  if (const auto* e = std::get_if<EuclideanReflection>(&step)) {
    return {{true, e->chart, e->r, e->lambda}};
  }
  if (const auto* i = std::get_if<IndefiniteReflection>(&step)) {
    return {{false, i->chart, i->r, i->lambda}};
  }
  const auto& rot = std::get<Rotation>(step);
  return {{true, rot.chart, std::cos(rot.t), HyperNumber::real(a, std::sin(rot.t))},
          {true, rot.chart, 1.0, HyperNumber(a)}};
}

}  // namespace

void validate_step(PlaneKind kind, const IsometryStep& step) {
  if (const auto* e = std::get_if<EuclideanReflection>(&step)) {
    if (!euclidean_allowed(kind, e->chart)) {
      throw InvalidStepError(std::string("Euclidean reflection on chart ") +
                             std::to_string(e->chart) + " is not defined on " +
                             to_string(kind));
    }
    check_constraint(kind, e->r, e->lambda, 1.0, "Euclidean reflection");
  } else if (const auto* i = std::get_if<IndefiniteReflection>(&step)) {
    if (!indefinite_allowed(kind, i->chart)) {
      throw InvalidStepError(std::string("indefinite reflection on chart ") +
                             std::to_string(i->chart) + " is not defined on " +
                             to_string(kind));
    }
    check_constraint(kind, i->r, i->lambda, -1.0, "indefinite reflection");
  } else {
    const auto& rot = std::get<Rotation>(step);
    const bool ok = (kind == PlaneKind::OP2 || kind == PlaneKind::ParaOP2) &&
                    (rot.chart == 2 || rot.chart == 3);
    if (!ok) {
      throw InvalidStepError(std::string("rotation on chart ") + std::to_string(rot.chart) +
                             " is not defined on " + to_string(kind));
    }
    if (!std::isfinite(rot.t)) throw InvalidStepError("rotation angle is not finite");
  }
}

EuclideanReflection make_euclidean(PlaneKind kind, int chart, double r,
                                   const HyperNumber& lambda) {
  EuclideanReflection e{chart, r, lambda};
  validate_step(kind, e);
  return e;
}

IndefiniteReflection make_indefinite(PlaneKind kind, int chart, double r,
                                     const HyperNumber& lambda) {
  IndefiniteReflection i{chart, r, lambda};
  validate_step(kind, i);
  return i;
}

Rotation make_rotation(PlaneKind kind, double t, int chart) {
  Rotation rot{t, chart};
  validate_step(kind, rot);
  return rot;
}

std::string describe(const IsometryStep& step) {
  std::ostringstream os;
  os.precision(6);
  if (const auto* e = std::get_if<EuclideanReflection>(&step)) {
    os << "euclidean(chart " << e->chart << ", r " << e->r << ", lambda " << e->lambda << ")";
  } else if (const auto* i = std::get_if<IndefiniteReflection>(&step)) {
    os << "indefinite(chart " << i->chart << ", r " << i->r << ", lambda " << i->lambda << ")";
  } else {
    const auto& rot = std::get<Rotation>(step);
    os << "rotation(chart " << rot.chart << ", t " << rot.t << ")";
  }
  return os.str();
}

std::pair<HyperNumber, HyperNumber> local_map(const IsometryStep& step, const HyperNumber& u,
                                              const HyperNumber& v) {
  std::pair<HyperNumber, HyperNumber> uv{u, v};
  for (const Reflection& s : as_reflections(
           u.kind() == AlgebraKind::ParaOctonion ? PlaneKind::ParaOP2 : PlaneKind::OP2, step)) {
    uv = reflect_local(s, uv.first, uv.second);
  }
  return uv;
}

std::vector<ChartPoint> extension_images(PlaneKind kind, const IsometryStep& step,
                                         const ChartPoint& p) {
  validate_step(kind, step);
  if (std::holds_alternative<Rotation>(step)) {
    throw InvalidStepError("extension_images takes a single reflection");
  }
  const Reflection s = as_reflections(kind, step).front();
  std::vector<ChartPoint> out;
  for (const Candidate& c : candidates(kind, s, to_home_frame(s.chart, to_triple(p)))) {
    try {
      out.push_back(well_conditioned(kind, from_home_frame(s.chart, c.image)));
    } catch (const NotRepresentableError&) {
    }
  }
  return out;
}

ChartPoint apply_step(PlaneKind kind, const IsometryStep& step, const ChartPoint& p) {
  validate_step(kind, step);
  ChartPoint q = p;
  for (const Reflection& s : as_reflections(kind, step)) q = apply_reflection(kind, s, q);
  return q;
}

ChartPoint apply(PlaneKind kind, const IsometryComposition& comp, const ChartPoint& p) {
  ChartPoint q = p;
  for (const IsometryStep& s : comp.steps) q = apply_step(kind, s, q);
  return q;
}

IsometryDeviation verify_isometry(PlaneKind kind, const IsometryComposition& comp,
                                  const std::vector<ChartPoint>& samples, double step) {
  IsometryDeviation report;
  const AlgebraKind a = algebra_of(kind);
  for (const ChartPoint& p : samples) {
    if (comp.steps.empty()) {
      ++report.evaluated;
      continue;
    }
    try {
      const ChartPoint image = apply(kind, comp, p);
      const ChartMap f = [&](const Vector16& x) {
        const TangentVector uv = to_tangent(a, x);
        const ChartPoint q = apply(kind, comp, ChartPoint{kind, p.chart, uv.a, uv.b});
        const auto same = try_chart(kind, to_triple(q), image.chart);
        if (!same) throw NotRepresentableError("stencil image left the chart");
        return to_vector(same->u, same->v);
      };
      const Matrix16 j = fd_jacobian(f, to_vector(p.u, p.v), step);
      const Matrix16 pulled = j.transpose() * metric_matrix(image) * j;
      const double d = (pulled - metric_matrix(p)).cwiseAbs().maxCoeff();
      report.max_deviation = std::max(report.max_deviation, d);
      ++report.evaluated;
    } catch (const Error&) {
      ++report.skipped;
    }
  }
  return report;
}

}  // namespace octoplane
