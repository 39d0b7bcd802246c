#include "octoplane/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "octoplane/errors.hpp"

namespace octoplane {
namespace {

using Quat = std::array<double, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat lo(const HyperNumber& h) { return {h[0], h[1], h[2], h[3]}; }
Quat hi(const HyperNumber& h) { return {h[4], h[5], h[6], h[7]}; }

void require_same_kind(const HyperNumber& a, const HyperNumber& b,
                       const char* op) {
  if (a.kind() != b.kind()) {
    throw KindMismatchError(std::string(op) + ": operands of kinds " +
                            to_string(a.kind()) + " and " +
                            to_string(b.kind()));
  }
}

StructureTable build_table(AlgebraKind kind) {
  StructureTable t;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    for (std::size_t j = 0; j < kAlgebraDim; ++j) {
      t[i][j] = multiply(HyperNumber::basis(kind, i), HyperNumber::basis(kind, j));
    }
  }
  return t;
}

}  // namespace

const char* to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Octonion ? "octonion" : "para-octonion";
}

HyperNumber HyperNumber::from_quaternions(AlgebraKind kind,
                                          const std::array<double, 4>& q1,
                                          const std::array<double, 4>& q2) {
  return HyperNumber(kind, {q1[0], q1[1], q1[2], q1[3], q2[0], q2[1], q2[2], q2[3]});
}

bool HyperNumber::is_zero() const {
  for (double x : c_) {
    if (x != 0.0) return false;
  }
  return true;
}

double HyperNumber::coeff_norm_sq() const {
  double s = 0.0;
  for (double x : c_) s += x * x;
  return s;
}

HyperNumber HyperNumber::operator-() const {
  HyperNumber r(kind_);
  for (std::size_t i = 0; i < kAlgebraDim; ++i) r.c_[i] = -c_[i];
  return r;
}

HyperNumber& HyperNumber::operator+=(const HyperNumber& o) {
  require_same_kind(*this, o, "add");
  for (std::size_t i = 0; i < kAlgebraDim; ++i) c_[i] += o.c_[i];
  return *this;
}

HyperNumber& HyperNumber::operator-=(const HyperNumber& o) {
  require_same_kind(*this, o, "subtract");
  for (std::size_t i = 0; i < kAlgebraDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

HyperNumber& HyperNumber::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

HyperNumber& HyperNumber::operator/=(double s) {
  for (double& x : c_) x /= s;
  return *this;
}

HyperNumber operator*(const HyperNumber& a, const HyperNumber& b) {
  return multiply(a, b);
}

std::ostream& operator<<(std::ostream& os, const HyperNumber& h) {
  os << '(';
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    if (i) os << ", ";
    os << h[i];
  }
  return os << ')';
}

HyperNumber multiply(const HyperNumber& a, const HyperNumber& b) {
  require_same_kind(a, b, "multiply");
  const Quat q1 = lo(a), q2 = hi(a), p1 = lo(b), p2 = hi(b);
  const Quat first_a = qmul(q1, p1);
  const Quat first_b = qmul(qconj(p2), q2);
  const Quat second_a = qmul(p2, q1);
  const Quat second_b = qmul(q2, qconj(p1));
  const double sign = a.kind() == AlgebraKind::Octonion ? -1.0 : 1.0;
  Quat first, second;
  for (int i = 0; i < 4; ++i) {
    first[i] = first_a[i] + sign * first_b[i];
    second[i] = second_a[i] + second_b[i];
  }
  return HyperNumber::from_quaternions(a.kind(), first, second);
}

HyperNumber conjugate(const HyperNumber& a) {
  HyperNumber r = -a;
  r[0] = a[0];
  return r;
}

double real_part(const HyperNumber& a) { return a[0]; }

double inner_product(const HyperNumber& a, const HyperNumber& b) {
  require_same_kind(a, b, "inner_product");
  double s = 0.0;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    s += epsilon(a.kind(), i) * a[i] * b[i];
  }
  return s;
}

double norm_sq(const HyperNumber& a) { return inner_product(a, a); }

HyperNumber inverse(const HyperNumber& a) {
  const double n = norm_sq(a);
  if (std::abs(n) <= kNullTolerance) {
    throw NonInvertibleError("inverse: |norm_sq| = " + std::to_string(std::abs(n)) +
                             " is below the null tolerance");
  }
  return conjugate(a) / n;
}

HyperNumber associator(const HyperNumber& a, const HyperNumber& b,
                       const HyperNumber& c) {
  return a * (b * c) - (a * b) * c;
}

double re_triple(const HyperNumber& a, const HyperNumber& b,
                 const HyperNumber& c) {
  return real_part(a * (b * c));
}

double max_abs_diff(const HyperNumber& a, const HyperNumber& b) {
  require_same_kind(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const StructureTable& structure_table(AlgebraKind kind) {
  static const StructureTable octonion = build_table(AlgebraKind::Octonion);
  static const StructureTable para = build_table(AlgebraKind::ParaOctonion);
  return kind == AlgebraKind::Octonion ? octonion : para;
}

}  // namespace octoplane
