#include <gtest/gtest.h>

#include <array>
#include <random>

#include "octoplane/cayley.hpp"
#include "octoplane/errors.hpp"

using namespace octoplane;

namespace {

using Quat = std::array<double, 4>;

// Hamilton product written out by hand.
Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }
Quat qadd(const Quat& a, const Quat& b, double s = 1.0) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]};
}

// (q1,q2)(p1,p2) = (q1 p1 -+ conj(p2) q2, p2 q1 + q2 conj(p1)).
std::array<double, 8> oracle(bool split, const std::array<double, 8>& x,
                             const std::array<double, 8>& y) {
  const Quat q1{x[0], x[1], x[2], x[3]}, q2{x[4], x[5], x[6], x[7]};
  const Quat p1{y[0], y[1], y[2], y[3]}, p2{y[4], y[5], y[6], y[7]};
  const Quat first = qadd(qmul(q1, p1), qmul(qconj(p2), q2), split ? 1.0 : -1.0);
  const Quat second = qadd(qmul(p2, q1), qmul(q2, qconj(p1)));
  return {first[0], first[1], first[2], first[3], second[0], second[1], second[2], second[3]};
}

HyperNumber random(AlgebraKind k, std::mt19937_64& g) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  HyperNumber h(k);
  for (std::size_t i = 0; i < 8; ++i) h[i] = d(g);
  return h;
}

}  // namespace

TEST(Cayley, ProductMatchesHandWrittenDoubling) {
  std::mt19937_64 g(1);
  for (AlgebraKind k : {AlgebraKind::Octonion, AlgebraKind::ParaOctonion}) {
    for (int s = 0; s < 500; ++s) {
      const HyperNumber a = random(k, g), b = random(k, g);
      const auto want = oracle(k == AlgebraKind::ParaOctonion, a.coeffs(), b.coeffs());
      const HyperNumber got = a * b;
      for (int i = 0; i < 8; ++i) EXPECT_NEAR(got[i], want[i], 1e-14);
    }
  }
}

TEST(Cayley, StructureTableMatchesOracle) {
  for (AlgebraKind k : {AlgebraKind::Octonion, AlgebraKind::ParaOctonion}) {
    const StructureTable& t = structure_table(k);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        const auto want = oracle(k == AlgebraKind::ParaOctonion, HyperNumber::basis(k, i).coeffs(),
                                 HyperNumber::basis(k, j).coeffs());
        for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(t[i][j][c], want[c]);
      }
  }
}

TEST(Cayley, NonAssociativityDisplay) {
  const auto k = AlgebraKind::Octonion;
  const HyperNumber i = HyperNumber::basis(k, 1), j = HyperNumber::basis(k, 2);
  const HyperNumber l = HyperNumber::basis(k, 4), kl = HyperNumber::basis(k, 7);
  EXPECT_EQ(max_abs_diff(i * j, HyperNumber::basis(k, 3)), 0.0);
  EXPECT_EQ(max_abs_diff((i * j) * l, kl), 0.0);
  EXPECT_EQ(max_abs_diff(i * (j * l), -kl), 0.0);
  EXPECT_EQ(max_abs_diff(associator(i, j, l), -2.0 * kl), 0.0);
}

TEST(Cayley, SplitSquares) {
  const auto k = AlgebraKind::ParaOctonion;
  const HyperNumber l = HyperNumber::basis(k, 4);
  EXPECT_EQ(max_abs_diff(l * l, HyperNumber::real(k, 1.0)), 0.0);
  // Norms of the basis give signature (4,4).
  for (std::size_t n = 0; n < 8; ++n) {
    EXPECT_EQ(norm_sq(HyperNumber::basis(k, n)), n < 4 ? 1.0 : -1.0);
  }
  EXPECT_EQ(max_abs_diff(inverse(l), l), 0.0);
}

TEST(Cayley, ConjugateAndInner) {
  const auto k = AlgebraKind::Octonion;
  const HyperNumber one = HyperNumber::real(k, 1.0);
  const HyperNumber x2 = HyperNumber::basis(k, 1);
  EXPECT_EQ(max_abs_diff(conjugate(one), one), 0.0);
  EXPECT_EQ(max_abs_diff(conjugate(x2), -x2), 0.0);
  EXPECT_DOUBLE_EQ(norm_sq(one + x2), 2.0);
  EXPECT_EQ(max_abs_diff(inverse(x2), -x2), 0.0);
  EXPECT_DOUBLE_EQ(real_part(x2 + 3.0 * one), 3.0);
}

TEST(Cayley, Errors) {
  const auto p = AlgebraKind::ParaOctonion;
  const HyperNumber n = HyperNumber::basis(p, 1) + HyperNumber::basis(p, 5);
  EXPECT_EQ(norm_sq(n), 0.0);
  EXPECT_THROW((void)inverse(n), NonInvertibleError);
  EXPECT_THROW((void)inverse(HyperNumber(AlgebraKind::Octonion)), NonInvertibleError);
  EXPECT_THROW((void)(HyperNumber(AlgebraKind::Octonion) * HyperNumber(p)), KindMismatchError);
  EXPECT_THROW((void)inner_product(HyperNumber(AlgebraKind::Octonion), HyperNumber(p)),
               KindMismatchError);
}

TEST(Cayley, IdentitiesOnRandomInputs) {
  std::mt19937_64 g(7);
  for (AlgebraKind k : {AlgebraKind::Octonion, AlgebraKind::ParaOctonion}) {
    for (int s = 0; s < 1000; ++s) {
      const HyperNumber a = random(k, g), b = random(k, g), c = random(k, g), d = random(k, g);
      EXPECT_NEAR(norm_sq(a * b), norm_sq(a) * norm_sq(b), 1e-10);
      EXPECT_LT(max_abs_diff(associator(a, a, b), HyperNumber(k)), 1e-12);
      EXPECT_NEAR(real_part(associator(a, b, c)), 0.0, 1e-12);
      EXPECT_LT(max_abs_diff((a * b) * (c * a), a * ((b * c) * a)), 1e-10);
      EXPECT_NEAR(inner_product(a * conjugate(b), c * conjugate(d)) +
                      inner_product(a * conjugate(d), c * conjugate(b)),
                  2.0 * inner_product(a, c) * inner_product(b, d), 1e-10);
      EXPECT_NEAR(re_triple(a, b, c), re_triple(c, a, b), 1e-12);
    }
  }
}
