#include "quadlaw/sbl.hpp"

namespace quadlaw {

Mat2 Mat2::identity(const FieldSpec& spec) {
  const auto zero = FieldElement::zero(spec);
  const auto one = FieldElement::one(spec);
  return {one, zero, zero, one};
}

Mat2 Mat2::from_columns(const Vec2& c1, const Vec2& c2) { return {c1.x1, c2.x1, c1.x2, c2.x2}; }

Mat2 Mat2::inverse() const {
  const FieldElement d = det();
  if (d.is_zero()) throw Error(ErrorKind::SingularMap, "matrix is singular");
  const FieldElement s = d.inv();
  return {s * m22, -s * m12, -s * m21, s * m11};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

FieldElement QuadraticForm::value(const Vec2& x) const { return polar(x, x); }

FieldElement QuadraticForm::polar(const Vec2& x, const Vec2& y) const {
  return q11 * x.x1 * y.x1 + q12 * (x.x1 * y.x2 + x.x2 * y.x1) + q22 * x.x2 * y.x2;
}

QuadraticForm QuadraticForm::pullback(const Mat2& m) const {
  const Vec2 c1 = m.column(0);
  const Vec2 c2 = m.column(1);
  return {polar(c1, c1), polar(c1, c2), polar(c2, c2)};
}

Covector Covector::pullback(const Mat2& m) const { return {apply(m.column(0)), apply(m.column(1))}; }

Sbl::Sbl(std::array<FieldElement, 6> coeffs) : c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.spec() == c_[0].spec())) {
      throw Error(ErrorKind::SpecMismatch, "law coefficients over different fields");
    }
  }
}

Sbl::Sbl(const FieldSpec& spec, const std::array<std::int64_t, 6>& coeffs)
    : Sbl(std::array<FieldElement, 6>{
          FieldElement(spec, coeffs[0]), FieldElement(spec, coeffs[1]),
          FieldElement(spec, coeffs[2]), FieldElement(spec, coeffs[3]),
          FieldElement(spec, coeffs[4]), FieldElement(spec, coeffs[5])}) {}

Sbl Sbl::zero(const FieldSpec& spec) { return Sbl(spec, {0, 0, 0, 0, 0, 0}); }

bool Sbl::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Sbl operator+(const Sbl& f, const Sbl& g) {
  std::array<FieldElement, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = f.c_[i] + g.c_[i];
  return Sbl(out);
}

Sbl operator-(const Sbl& f, const Sbl& g) {
  std::array<FieldElement, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = f.c_[i] - g.c_[i];
  return Sbl(out);
}

std::string Sbl::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) s += ", ";
    s += c_[i].to_string();
  }
  return s + ")";
}

Vec2 evaluate(const Sbl& f, const Vec2& x, const Vec2& y) {
  auto bilinear = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    return a * x.x1 * y.x1 + b * (x.x1 * y.x2 + x.x2 * y.x1) + c * x.x2 * y.x2;
  };
  return {bilinear(f.a1(), f.b1(), f.c1()), bilinear(f.a2(), f.b2(), f.c2())};
}

Mat2 endo(const Sbl& f, const Vec2& x) {
  return {f.a1() * x.x1 + f.b1() * x.x2, f.b1() * x.x1 + f.c1() * x.x2,
          f.a2() * x.x1 + f.b2() * x.x2, f.b2() * x.x1 + f.c2() * x.x2};
}

QuadraticForm qform(const Sbl& f) {
  const FieldElement half = FieldElement(f.spec(), 2).inv();
  return {f.a1() * f.b2() - f.a2() * f.b1(), half * (f.a1() * f.c2() - f.a2() * f.c1()),
          f.b1() * f.c2() - f.b2() * f.c1()};
}

Covector trace(const Sbl& f) { return {f.a1() + f.b2(), f.b1() + f.c2()}; }

Sbl act(const Mat2& u, const Sbl& f) {
  const Mat2 w = u.inverse();
  const Vec2 w1 = w.column(0);
  const Vec2 w2 = w.column(1);
  const Vec2 e11 = u.apply(evaluate(f, w1, w1));
  const Vec2 e12 = u.apply(evaluate(f, w1, w2));
  const Vec2 e22 = u.apply(evaluate(f, w2, w2));
  return Sbl({e11.x1, e12.x1, e22.x1, e11.x2, e12.x2, e22.x2});
}

Sbl sigma(const Covector& v) {
  const FieldSpec& spec = v.l1.spec();
  const FieldElement third = FieldElement(spec, 3).inv();
  const FieldElement two_thirds = FieldElement(spec, 2) * third;
  const FieldElement zero = FieldElement::zero(spec);
  return Sbl({two_thirds * v.l1, third * v.l2, zero, zero, third * v.l1, two_thirds * v.l2});
}

Sbl traceless_part(const Sbl& f) { return f - sigma(trace(f)); }

FieldElement det_qbar(const Sbl& f) { return qform(traceless_part(f)).det(); }

bool is_regular(const Sbl& f) { return !det_qbar(f).is_zero(); }

IInvariants invariants_I(const Sbl& f) {
  const FieldElement d = det_qbar(f);
  if (d.is_zero()) throw Error(ErrorKind::NotRegular, "law " + f.to_string() + " is not regular");
  const FieldSpec& spec = f.spec();
  const FieldElement n2(spec, 2), n3(spec, 3), n4(spec, 4), n9(spec, 9), n12(spec, 12);
  const auto& [a1, b1, c1, a2, b2, c2] = f.coeffs();

  const FieldElement t1 = a1 + b2;
  const FieldElement t2 = b1 + c2;
  const FieldElement u = n2 * b2 - a1;
  const FieldElement v = n2 * b1 - c2;

  const FieldElement bracket1 = t1 * t1 * (v * v + n3 * u * c1) + t1 * t2 * (u * v - n9 * a2 * c1) +
                                t2 * t2 * (u * u + n3 * v * a2);
  const FieldElement bracket2 =
      -c1 * t1 * t1 * t1 + t1 * t1 * t2 * v + t1 * t2 * t2 * u - a2 * t2 * t2 * t2;
  return {bracket1 / (n12 * d), bracket2 / (n4 * d)};
}

}  // namespace quadlaw
