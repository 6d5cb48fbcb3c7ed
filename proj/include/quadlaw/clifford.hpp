#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadlaw/field.hpp"

namespace quadlaw {

/// The even Clifford algebra C0(-q) of a binary form diag(-1, -beta),
/// presented as F[tau]/(tau^2 + beta).
class QuadAlgebra {
 public:
  /// Throws DegenerateInput when beta = 0.
  explicit QuadAlgebra(FieldElement beta);

  const FieldSpec& spec() const noexcept { return beta_.spec(); }
  const FieldElement& beta() const noexcept { return beta_; }

  /// -beta is a square: the algebra is F x F rather than a field.
  bool is_hyperbolic() const { return gamma_.has_value(); }
  /// Canonical sqrt(-beta) when hyperbolic.
  const std::optional<FieldElement>& gamma() const noexcept { return gamma_; }

  friend bool operator==(const QuadAlgebra& lhs, const QuadAlgebra& rhs) {
    return lhs.beta_ == rhs.beta_;
  }

 private:
  FieldElement beta_;
  std::optional<FieldElement> gamma_;
};

/// x0 + x12 * tau.
class QuadElement {
 public:
  QuadElement(const QuadAlgebra& algebra, FieldElement x0, FieldElement x12);
  QuadElement(const QuadAlgebra& algebra, std::int64_t x0, std::int64_t x12)
      : QuadElement(algebra, FieldElement(algebra.spec(), x0), FieldElement(algebra.spec(), x12)) {}

  static QuadElement zero(const QuadAlgebra& algebra) { return {algebra, 0, 0}; }
  static QuadElement one(const QuadAlgebra& algebra) { return {algebra, 1, 0}; }
  static QuadElement scalar(const QuadAlgebra& algebra, const FieldElement& s) {
    return {algebra, s, FieldElement::zero(algebra.spec())};
  }

  const QuadAlgebra& algebra() const noexcept { return algebra_; }
  const FieldElement& x0() const noexcept { return x0_; }
  const FieldElement& x12() const noexcept { return x12_; }

  bool is_zero() const noexcept { return x0_.is_zero() && x12_.is_zero(); }
  bool is_one() const noexcept { return x0_.is_one() && x12_.is_zero(); }
  /// Lies in the ground field.
  bool is_scalar() const noexcept { return x12_.is_zero(); }

  QuadElement operator-() const { return {algebra_, -x0_, -x12_}; }
  friend QuadElement operator+(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator-(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator*(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator*(const FieldElement& s, const QuadElement& x);
  /// Throws ZeroDivisor when N(y) = 0.
  friend QuadElement operator/(const QuadElement& x, const QuadElement& y);

  friend bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.algebra_ == y.algebra_ && x.x0_ == y.x0_ && x.x12_ == y.x12_;
  }
  /// Lexicographic on (x0, x12).
  friend bool operator<(const QuadElement& x, const QuadElement& y);

  std::string to_string() const;

 private:
  QuadAlgebra algebra_;
  FieldElement x0_;
  FieldElement x12_;
};

QuadElement conj(const QuadElement& x);
/// N(x) = x * conj(x) = x0^2 + beta * x12^2.
FieldElement norm(const QuadElement& x);
/// x + conj(x) = 2 x0.
FieldElement trace(const QuadElement& x);
/// conj(x) / N(x). Throws ZeroDivisor when N(x) = 0.
QuadElement inv(const QuadElement& x);
QuadElement power(const QuadElement& x, std::uint64_t exponent);

/// True iff N(x) = 0. Throws DegenerateInput for x = 0.
bool is_zero_divisor(const QuadElement& x);

/// Image of an element under the splitting F[tau]/(tau^2 - gamma^2) -> F x F,
/// u + v tau -> (u - v gamma, u + v gamma).
struct SplitPair {
  FieldElement first;
  FieldElement second;
  FieldElement gamma;
};

/// Throws NotHyperbolic on an elliptic algebra.
SplitPair split(const QuadElement& x);
QuadElement unsplit(const QuadAlgebra& algebra, const SplitPair& pair);

/// G = {lambda : N(lambda) = 1}, sorted. Throws Unsupported over Q.
std::vector<QuadElement> norm_one_group(const QuadAlgebra& algebra);
/// Every element of the algebra, sorted. Throws Unsupported over Q.
std::vector<QuadElement> enumerate(const QuadAlgebra& algebra);

/// All lambda with lambda^3 = y, restricted to G when `within_norm_one`.
/// Complete over GF(p) and over Q. Throws DegenerateInput for y = 0, or when
/// `within_norm_one` is requested for N(y) != 1.
std::vector<QuadElement> solve_cube(const QuadAlgebra& algebra, const QuadElement& y,
                                    bool within_norm_one);

/// y = z^3 for some unit z. Throws ZeroDivisor when N(y) = 0.
bool is_cube(const QuadAlgebra& algebra, const QuadElement& y);

}  // namespace quadlaw
