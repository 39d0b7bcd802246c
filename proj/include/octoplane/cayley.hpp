#pragma once

// Octonions and para-octonions as Cayley-Dickson doubles of the quaternions.
//
// An element is a pair (q1, q2) of quaternions stored as eight real
// coefficients against the basis
//
//   x1..x8 = (1,0) (i,0) (j,0) (k,0) (0,1) (0,i) (0,j) (0,k)
//
// (0-based index 0..7 in code). The product is
//
//   octonion:       (q1,q2)(p1,p2) = (q1 p1 - conj(p2) q2, p2 q1 + q2 conj(p1))
//   para-octonion:  (q1,q2)(p1,p2) = (q1 p1 + conj(p2) q2, p2 q1 + q2 conj(p1))
//
// and the inner product is <a,b> = Re[a conj(b)] = sum_i eps_i a_i b_i with
// eps_i = +1 for every octonion basis vector and eps = (+,+,+,+,-,-,-,-) for
// the para-octonions.

#include <array>
#include <cstddef>
#include <iosfwd>

namespace octoplane {

enum class AlgebraKind { Octonion, ParaOctonion };

inline constexpr std::size_t kAlgebraDim = 8;

/// Absolute threshold on |norm_sq| below which an element is treated as
/// non-invertible.
inline constexpr double kNullTolerance = 1e-9;

/// Sign of <x_i, x_i> for basis index i in 0..7.
constexpr double epsilon(AlgebraKind kind, std::size_t i) {
  return (kind == AlgebraKind::ParaOctonion && i >= 4) ? -1.0 : 1.0;
}

const char* to_string(AlgebraKind kind);

class HyperNumber {
 public:
  using Coeffs = std::array<double, kAlgebraDim>;

  explicit HyperNumber(AlgebraKind kind = AlgebraKind::Octonion)
      : kind_(kind), c_{} {}
  HyperNumber(AlgebraKind kind, const Coeffs& coeffs)
      : kind_(kind), c_(coeffs) {}

  static HyperNumber real(AlgebraKind kind, double value) {
    HyperNumber h(kind);
    h.c_[0] = value;
    return h;
  }
  /// Basis vector x_{i+1}, i in 0..7.
  static HyperNumber basis(AlgebraKind kind, std::size_t i) {
    HyperNumber h(kind);
    h.c_.at(i) = 1.0;
    return h;
  }
  /// Builds (q1, q2) from two quaternions given as (w, x, y, z).
  static HyperNumber from_quaternions(AlgebraKind kind,
                                      const std::array<double, 4>& q1,
                                      const std::array<double, 4>& q2);

  AlgebraKind kind() const { return kind_; }
  const Coeffs& coeffs() const { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;
  /// Euclidean (sum of squares) size of the coefficient vector, independent
  /// of the algebra's signature. Used for conditioning decisions only.
  double coeff_norm_sq() const;

  HyperNumber operator-() const;
  HyperNumber& operator+=(const HyperNumber& o);
  HyperNumber& operator-=(const HyperNumber& o);
  HyperNumber& operator*=(double s);
  HyperNumber& operator/=(double s);

  friend HyperNumber operator+(HyperNumber a, const HyperNumber& b) { return a += b; }
  friend HyperNumber operator-(HyperNumber a, const HyperNumber& b) { return a -= b; }
  friend HyperNumber operator*(HyperNumber a, double s) { return a *= s; }
  friend HyperNumber operator*(double s, HyperNumber a) { return a *= s; }
  friend HyperNumber operator/(HyperNumber a, double s) { return a /= s; }
  /// Algebra product; throws KindMismatchError on mixed kinds.
  friend HyperNumber operator*(const HyperNumber& a, const HyperNumber& b);

 private:
  AlgebraKind kind_;
  Coeffs c_;
};

std::ostream& operator<<(std::ostream& os, const HyperNumber& h);

HyperNumber multiply(const HyperNumber& a, const HyperNumber& b);
/// conj(a) = 2 Re[a] - a.
HyperNumber conjugate(const HyperNumber& a);
double real_part(const HyperNumber& a);
double inner_product(const HyperNumber& a, const HyperNumber& b);
double norm_sq(const HyperNumber& a);
/// conj(a) / norm_sq(a); throws NonInvertibleError when |norm_sq(a)| is
/// below kNullTolerance.
HyperNumber inverse(const HyperNumber& a);
/// [a,b,c] = a(bc) - (ab)c.
HyperNumber associator(const HyperNumber& a, const HyperNumber& b,
                       const HyperNumber& c);
/// Re[a(bc)]; equals Re[(ab)c] and is invariant under cyclic shifts.
double re_triple(const HyperNumber& a, const HyperNumber& b,
                 const HyperNumber& c);

/// Largest absolute coefficient difference. Throws on mixed kinds.
double max_abs_diff(const HyperNumber& a, const HyperNumber& b);

/// 8x8 structure-constant table T[i][j] = x_i * x_j, computed once per kind
/// from the quaternion-pair product.
using StructureTable = std::array<std::array<HyperNumber, kAlgebraDim>, kAlgebraDim>;
const StructureTable& structure_table(AlgebraKind kind);

}  // namespace octoplane
