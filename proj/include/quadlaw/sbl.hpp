#pragma once

#include <array>
#include <string>
#include <utility>

#include "quadlaw/field.hpp"

namespace quadlaw {

/// Coordinates x1 v1 + x2 v2.
struct Vec2 {
  FieldElement x1;
  FieldElement x2;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Row-major 2x2 matrix; acts on column vectors.
struct Mat2 {
  FieldElement m11, m12, m21, m22;

  static Mat2 identity(const FieldSpec& spec);
  /// Columns c1, c2.
  static Mat2 from_columns(const Vec2& c1, const Vec2& c2);

  const FieldSpec& spec() const noexcept { return m11.spec(); }
  FieldElement det() const { return m11 * m22 - m12 * m21; }
  /// Throws SingularMap when det = 0.
  Mat2 inverse() const;
  Vec2 apply(const Vec2& v) const { return {m11 * v.x1 + m12 * v.x2, m21 * v.x1 + m22 * v.x2}; }
  Vec2 column(int j) const { return j == 0 ? Vec2{m11, m21} : Vec2{m12, m22}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// q(x) = q11 x1^2 + 2 q12 x1 x2 + q22 x2^2; (q11, q12; q12, q22) is the Gram
/// matrix of the polar form.
struct QuadraticForm {
  FieldElement q11, q12, q22;

  FieldElement value(const Vec2& x) const;
  /// Polar form b(x, y) with b(x, x) = q(x).
  FieldElement polar(const Vec2& x, const Vec2& y) const;
  FieldElement det() const { return q11 * q22 - q12 * q12; }
  bool is_degenerate() const { return det().is_zero(); }
  /// x -> q(m x), Gram m^T Q m.
  QuadraticForm pullback(const Mat2& m) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// l1 v1* + l2 v2*.
struct Covector {
  FieldElement l1, l2;

  FieldElement apply(const Vec2& x) const { return l1 * x.x1 + l2 * x.x2; }
  /// x -> l(m x).
  Covector pullback(const Mat2& m) const;

  friend bool operator==(const Covector&, const Covector&) = default;
};

/// A symmetric bilinear law F: V x V -> V on the plane, stored as the two
/// Gram matrices (a1, b1; b1, c1) and (a2, b2; b2, c2) of its components:
///
///   F(v1, v1) = a1 v1 + a2 v2,  F(v1, v2) = b1 v1 + b2 v2,
///   F(v2, v2) = c1 v1 + c2 v2.
class Sbl {
 public:
  /// Coefficients in the order (a1, b1, c1, a2, b2, c2).
  explicit Sbl(std::array<FieldElement, 6> coeffs);
  Sbl(const FieldSpec& spec, const std::array<std::int64_t, 6>& coeffs);

  static Sbl zero(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return c_[0].spec(); }
  const std::array<FieldElement, 6>& coeffs() const noexcept { return c_; }

  const FieldElement& a1() const noexcept { return c_[0]; }
  const FieldElement& b1() const noexcept { return c_[1]; }
  const FieldElement& c1() const noexcept { return c_[2]; }
  const FieldElement& a2() const noexcept { return c_[3]; }
  const FieldElement& b2() const noexcept { return c_[4]; }
  const FieldElement& c2() const noexcept { return c_[5]; }

  bool is_zero() const;

  friend Sbl operator+(const Sbl& f, const Sbl& g);
  friend Sbl operator-(const Sbl& f, const Sbl& g);
  friend bool operator==(const Sbl&, const Sbl&) = default;

  std::string to_string() const;

 private:
  std::array<FieldElement, 6> c_;
};

Vec2 evaluate(const Sbl& f, const Vec2& x, const Vec2& y);
/// Matrix of y -> F(x, y).
Mat2 endo(const Sbl& f, const Vec2& x);
/// q_F(x) = det(F_x).
QuadraticForm qform(const Sbl& f);
/// tr F = (a1 + b2) v1* + (b1 + c2) v2*.
Covector trace(const Sbl& f);
/// (u . F)(x, y) = u(F(u^-1 x, u^-1 y)). Throws SingularMap.
Sbl act(const Mat2& u, const Sbl& f);
/// sigma(v*)(x, y) = (v*(x) y + v*(y) x) / 3, a section of trace().
Sbl sigma(const Covector& v);
/// F - sigma(tr F).
Sbl traceless_part(const Sbl& f);
/// Determinant of the Gram matrix of the attached form of the traceless part.
FieldElement det_qbar(const Sbl& f);
bool is_regular(const Sbl& f);

struct IInvariants {
  FieldElement i1;
  FieldElement i2;

  friend bool operator==(const IInvariants&, const IInvariants&) = default;
};

/// The two rational GL(V)-invariants on regular laws. Throws NotRegular.
IInvariants invariants_I(const Sbl& f);

}  // namespace quadlaw
