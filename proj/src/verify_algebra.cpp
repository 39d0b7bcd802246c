#include <cmath>
#include <limits>
#include <vector>

#include "octoplane/errors.hpp"
#include "octoplane/plane.hpp"
#include "verify_util.hpp"

namespace octoplane {
namespace {

using detail::Worst;

HyperNumber pair(AlgebraKind a, std::array<double, 4> q1, std::array<double, 4> q2) {
  return HyperNumber::from_quaternions(a, q1, q2);
}

}  // namespace

SuiteReport verify_algebra(PlaneKind kind, const VerifyConfig& cfg) {
  SuiteReport rep = detail::start("algebra", kind, cfg);
  const AlgebraKind a = algebra_of(kind);
  const bool para = a == AlgebraKind::ParaOctonion;
  Rng rng(suite_seed(cfg.seed, "algebra", kind));
  const double tol = 1e-10;

  const HyperNumber one = HyperNumber::real(a, 1.0);
  const HyperNumber i0 = pair(a, {0, 1, 0, 0}, {0, 0, 0, 0});
  const HyperNumber j0 = pair(a, {0, 0, 1, 0}, {0, 0, 0, 0});
  const HyperNumber k0 = pair(a, {0, 0, 0, 1}, {0, 0, 0, 0});
  const HyperNumber l = pair(a, {0, 0, 0, 0}, {1, 0, 0, 0});
  const HyperNumber lk = pair(a, {0, 0, 0, 0}, {0, 0, 0, 1});

  rep.add("display_ij", "(i,0)(j,0) = (k,0)", max_abs_diff(i0 * j0, k0), tol, cfg);
  {
    const HyperNumber left = (i0 * j0) * l;
    const HyperNumber right = i0 * (j0 * l);
    const double r = std::max({max_abs_diff(left, lk), max_abs_diff(right, -lk),
                               max_abs_diff(associator(i0, j0, l), -2.0 * lk)});
    rep.add("display_associator", "((i,0)(j,0))(0,1) = (0,k), (i,0)((j,0)(0,1)) = (0,-k)",
            r, tol, cfg);
  }
  rep.add("square_of_l",
          para ? "(0,1)(0,1) = (1,0) in the split algebra" : "(0,1)(0,1) = (-1,0)",
          max_abs_diff(l * l, para ? one : -one), tol, cfg);
  {
    int bad = 0;
    for (std::size_t i = 0; i < kAlgebraDim; ++i) {
      for (std::size_t j = 0; j < kAlgebraDim; ++j) {
        const double want = i == j ? epsilon(a, i) : 0.0;
        if (inner_product(HyperNumber::basis(a, i), HyperNumber::basis(a, j)) != want) ++bad;
      }
    }
    rep.add_count("basis_orthonormal", "<x_i,x_j> = delta_ij eps_i", bad);
  }
  {
    double r = std::abs(norm_sq(one + HyperNumber::basis(a, 1)) - 2.0);
    r = std::max(r, max_abs_diff(conjugate(one), one));
    r = std::max(r, max_abs_diff(conjugate(i0), -i0));
    r = std::max(r, max_abs_diff(conjugate(l), -l));
    r = std::max(r, max_abs_diff(inverse(i0), -i0));
    r = std::max(r, max_abs_diff(inverse(l), para ? l : -l));
    r = std::max(r, std::abs(norm_sq(l) - (para ? -1.0 : 1.0)));
    rep.add("worked_examples", "conjugates, norms and inverses of basis elements", r, tol, cfg);
  }
  if (para) {
    const HyperNumber n = HyperNumber::basis(a, 1) + HyperNumber::basis(a, 5);
    const bool ok = detail::throws<NonInvertibleError>([&] { (void)inverse(n); });
    rep.add_count("null_not_invertible", "x2 + x6 is null and has no inverse", ok ? 0 : 1);
  }
  rep.add_count("kind_mismatch_rejected", "products across algebras are refused",
                detail::throws<KindMismatchError>([&] {
                  (void)(HyperNumber(AlgebraKind::Octonion) *
                         HyperNumber(AlgebraKind::ParaOctonion));
                })
                    ? 0
                    : 1);

  const StructureTable& table = structure_table(a);
  const int n = 100 * cfg.samples;
  Worst unit, composition, alternative, purity, re_comm, re_cyclic, moufang, adjoint, exchange,
      inner_re, table_product, inv, conj_anti, assoc_unit;
  for (int s = 0; s < n; ++s) {
    const HyperNumber x = random_hyper(a, rng);
    const HyperNumber y = random_hyper(a, rng);
    const HyperNumber z = random_hyper(a, rng);
    const HyperNumber w = random_hyper(a, rng);

    unit(max_abs_diff(one * x, x));
    unit(max_abs_diff(x * one, x));
    composition(std::abs(norm_sq(x * y) - norm_sq(x) * norm_sq(y)));

    const HyperNumber axyz = associator(x, y, z);
    alternative(max_abs_diff(axyz, -associator(y, x, z)));
    alternative(max_abs_diff(axyz, -associator(x, z, y)));
    alternative(max_abs_diff(axyz, -associator(z, y, x)));
    alternative(std::sqrt(associator(x, x, y).coeff_norm_sq()));
    alternative(std::sqrt(associator(x, y, y).coeff_norm_sq()));
    purity(std::abs(real_part(axyz)));
    assoc_unit(std::sqrt(associator(one, y, z).coeff_norm_sq()));

    re_comm(std::abs(real_part(x * y) - real_part(y * x)));
    re_cyclic(std::abs(re_triple(x, y, z) - re_triple(y, z, x)));
    re_cyclic(std::abs(re_triple(x, y, z) - re_triple(z, x, y)));
    re_cyclic(std::abs(re_triple(x, y, z) - real_part((x * y) * z)));

    const HyperNumber lhs = (x * y) * (z * x);
    moufang(max_abs_diff(lhs, (x * (y * z)) * x));
    moufang(max_abs_diff(lhs, x * ((y * z) * x)));

    adjoint(std::abs(inner_product(x * y, z) - inner_product(y, conjugate(x) * z)));
    adjoint(std::abs(inner_product(x * y, x * z) - norm_sq(x) * inner_product(y, z)));

    exchange(std::abs(inner_product(x * conjugate(y), z * conjugate(w)) +
                      inner_product(x * conjugate(w), z * conjugate(y)) -
                      2.0 * inner_product(x, z) * inner_product(y, w)));

    inner_re(std::abs(inner_product(x, y) - real_part(x * conjugate(y))));

    HyperNumber expanded(a);
    for (std::size_t p = 0; p < kAlgebraDim; ++p) {
      for (std::size_t q = 0; q < kAlgebraDim; ++q) {
        expanded += (x[p] * y[q]) * table[p][q];
      }
    }
    table_product(max_abs_diff(expanded, x * y));

    if (std::abs(norm_sq(x)) > 0.1) {
      const HyperNumber xi = inverse(x);
      inv(max_abs_diff(x * xi, one));
      inv(max_abs_diff(xi * x, one));
    }
    conj_anti(max_abs_diff(conjugate(x * y), conjugate(y) * conjugate(x)));
  }

  rep.add("unit", "1 a = a 1 = a", unit.value, tol, cfg);
  rep.add("composition", "|ab|^2 = |a|^2 |b|^2", composition.value, tol, cfg);
  rep.add("alternativity", "the associator is alternating", alternative.value, tol, cfg);
  rep.add("associator_unit", "[1,b,c] = 0", assoc_unit.value, tol, cfg);
  rep.add("associator_pure", "Re[a,b,c] = 0", purity.value, tol, cfg);
  rep.add("real_commutative", "Re[ab] = Re[ba]", re_comm.value, tol, cfg);
  rep.add("real_cyclic", "Re[abc] = Re[bca] = Re[cab], independent of bracketing",
          re_cyclic.value, tol, cfg);
  rep.add("moufang", "(ab)(ca) = a(bc)a", moufang.value, tol, cfg);
  rep.add("adjointness", "<ax,y> = <x,conj(a)y> and <ax,ay> = |a|^2 <x,y>", adjoint.value,
          tol, cfg);
  rep.add("exchange", "<a conj(b),c conj(d)> + <a conj(d),c conj(b)> = 2<a,c><b,d>",
          exchange.value, tol, cfg);
  rep.add("inner_product_real_part", "<a,b> = Re[a conj(b)]", inner_re.value, tol, cfg);
  rep.add("structure_table", "product agrees with the 8x8 structure table",
          table_product.value, tol, cfg);
  rep.add("inverse", "a a^-1 = a^-1 a = 1", inv.value, tol, cfg);
  rep.add("conjugate_antimultiplicative", "conj(ab) = conj(b) conj(a)", conj_anti.value, tol,
          cfg);
  rep.details["samples"] = n;
  return rep;
}

SuiteReport verify_plane(PlaneKind kind, const VerifyConfig& cfg) {
  SuiteReport rep = detail::start("plane", kind, cfg);
  const AlgebraKind a = algebra_of(kind);
  Rng rng(suite_seed(cfg.seed, "plane", kind));
  const HyperNumber zero(a);
  const HyperNumber one = HyperNumber::real(a, 1.0);
  auto x = [&](std::size_t i) { return HyperNumber::basis(a, i - 1); };

  {
    int bad = 0;
    if (!chart_contains(kind, 1, zero, zero)) ++bad;
    if (kind == PlaneKind::OP11 && chart_contains(kind, 1, zero, 2.0 * x(1))) ++bad;
    if (kind == PlaneKind::ParaOP2 && chart_contains(kind, 1, zero, 2.0 * x(5))) ++bad;
    if (kind == PlaneKind::OH2 && chart_contains(kind, 1, 0.8 * x(1), 0.8 * x(2))) ++bad;
    if (!detail::throws<UnknownChartError>([&] { (void)chart_contains(kind, 4, zero, zero); }))
      ++bad;
    rep.add_count("chart_domain_examples", "domain inequalities on sample coordinates", bad);
  }

  if (kind != PlaneKind::OH2) {
    double r = 0.0;
    auto [u1, v1] = transition(kind, 2, 1, one, zero);
    r = std::max({r, max_abs_diff(u1, one), max_abs_diff(v1, zero)});
    if (a == AlgebraKind::Octonion) {
      auto [u2, v2] = transition(kind, 2, 1, x(2), x(3));
      r = std::max({r, max_abs_diff(u2, -x(2)), max_abs_diff(v2, x(4))});
    }
    Worst w;
    for (int s = 0; s < 10; ++s) {
      const ChartPoint p = random_overlap_point(kind, 3, 1, rng);
      auto [u3, v3] = transition(kind, 3, 1, p.u, p.v);
      const HyperNumber ai = inverse(p.u);
      w(std::max(max_abs_diff(u3, p.v * ai), max_abs_diff(v3, ai)));
    }
    r = std::max(r, w.value);
    rep.add("transition_examples", "chart 2 to 1 is (a^-1, b a^-1); chart 3 to 1 is (b a^-1, a^-1)",
            r, 1e-12, cfg);
  }

  {
    Worst w;
    int evaluated = 0;
    for (int from = 1; from <= 3; ++from) {
      for (int to = 1; to <= 3; ++to) {
        if (from == to) continue;
        if (kind == PlaneKind::OH2 && from != 1 && to != 1) continue;
        for (int s = 0; s < cfg.samples; ++s) {
          const ChartPoint p = random_overlap_point(kind, from, to, rng);
          auto [u, v] = transition(kind, from, to, p.u, p.v);
          auto [ub, vb] = transition(kind, to, from, u, v);
          w(std::max(max_abs_diff(ub, p.u), max_abs_diff(vb, p.v)));
          ++evaluated;
        }
      }
    }
    rep.add("transition_round_trip", "transitions between overlapping charts are inverse",
            w.value, 1e-9, cfg);
    rep.details["round_trip_samples"] = evaluated;
  }

  {
    int bad = 0;
    auto check = [&](const HomogeneousTriple& t, int chart, const HyperNumber& u,
                     const HyperNumber& v) {
      const ChartPoint p = normalize(kind, t);
      if (p.chart != chart || max_abs_diff(p.u, u) > 1e-12 || max_abs_diff(p.v, v) > 1e-12)
        ++bad;
    };
    if (kind == PlaneKind::OP2) {
      check({2.0 * one, zero, zero}, 1, zero, zero);
      check({x(2), x(3), one}, 3, x(2), x(3));
    } else {
      check({2.0 * one, zero, zero}, 1, zero, zero);
    }
    if (kind == PlaneKind::ParaOP2) {
      const HyperNumber nl = x(2) + x(6);
      check({nl, one, zero}, 2, nl, zero);
    }
    if (!detail::throws<NotRepresentableError>([&] { (void)normalize(kind, {zero, zero, zero}); }))
      ++bad;
    rep.add_count("normalize_examples", "canonical chart is the lowest admissible index", bad);
  }

  {
    int bad = 0;
    const ChartPoint o = origin(kind);
    if (!points_equal(o, o)) ++bad;
    if (kind == PlaneKind::OP2) {
      const ChartPoint p = normalize(kind, {x(4), -x(3), x(2)});
      const ChartPoint q = normalize(kind, {one, x(2), x(3)});
      if (!points_equal(p, q)) ++bad;
    }
    const HyperNumber small = 0.5 * x(2);
    if (points_equal(o, make_point(kind, 1, small, zero))) ++bad;
    rep.add_count("equality_examples", "[k,-j,i] ~ [1,i,j]; distinct points differ", bad);
  }

  {
    // Chains [1,y1,z1] ~ [x2,1,z2] ~ [x3,y3,1], the last two obtained by right
    // scaling with the inverses of the pivots.
    Worst w;
    int unequal = 0;
    int chains = 0;
    for (int s = 0; chains < cfg.samples && s < 100 * cfg.samples; ++s) {
      const ChartPoint p1 = random_overlap_point(kind, 1, 2, rng);
      const HomogeneousTriple t1 = to_triple(p1);
      const HyperNumber y1i = inverse(t1[1]);
      const HomogeneousTriple t2 = {t1[0] * y1i, one, t1[2] * y1i};
      if (std::abs(norm_sq(t2[2])) < 0.1) continue;
      const HyperNumber z2i = inverse(t2[2]);
      const HomogeneousTriple t3 = {t2[0] * z2i, t2[1] * z2i, one};
      const auto p3 = try_chart(kind, t3, 3);
      if (!p3 || (kind == PlaneKind::ParaOP2 && (norm_sq(t1[1]) <= 0 || norm_sq(t2[2]) <= 0)))
        continue;
      ++chains;
      if (!points_equal(p1, *p3)) ++unequal;
      w(point_distance(p1, *p3));
    }
    rep.add("transitivity_chain", "[1,y1,z1] ~ [x2,1,z2] ~ [x3,y3,1] gives the first point back",
            w.value, kPointTolerance, cfg);
    rep.add_count("transitivity_equal", "points_equal confirms each chain", unequal);
    rep.details["chains"] = chains;
  }

  {
    // Right scaling of a chart representative, undone by the pivot of the same chart.
    Worst w;
    for (int s = 0; s < cfg.samples; ++s) {
      const ChartPoint p = random_point(kind, rng);
      HyperNumber lam(a);
      do {
        lam = random_hyper(a, rng);
      } while (kind == PlaneKind::ParaOP2 ? norm_sq(lam) < 0.1 : norm_sq(lam) < 0.01);
      HomogeneousTriple t = to_triple(p);
      for (auto& slot : t) slot = slot * lam;
      const auto q = try_chart(kind, t, p.chart);
      w(q ? point_distance(p, *q) : std::numeric_limits<double>::infinity());
    }
    rep.add("scaling_invariance", "[a l, b l, c l] with a pivot l is the same chart point",
            w.value, kPointTolerance, cfg);
  }

  if (kind == PlaneKind::ParaOP2) {
    int bad = 0;
    for (int s = 0; s < 100 * cfg.samples; ++s) {
      const HyperNumber l1 = random_hyper(a, rng);
      const HyperNumber l2 = random_hyper(a, rng);
      if (norm_sq(l1) <= kNullTolerance || norm_sq(l2) <= kNullTolerance) continue;
      if (!(norm_sq(l1 * l2) > 0.0) || !(norm_sq(inverse(l1)) > 0.0)) ++bad;
    }
    rep.add_count("positive_scalars_closed", "positive-norm scalars are closed under products and inverses",
                  bad);
  }
  return rep;
}

}  // namespace octoplane
