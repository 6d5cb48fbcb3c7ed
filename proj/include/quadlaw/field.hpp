#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "quadlaw/error.hpp"

namespace quadlaw {

/// Ground field: GF(p) for a prime p >= 5, or the rationals.
class FieldSpec {
 public:
  /// Throws Characteristic for p in {2, 3}, for non-primes, or for p >= 2^31.
  static FieldSpec prime(std::int64_t p);
  static FieldSpec rational() noexcept { return FieldSpec{}; }

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  /// p for GF(p), 0 for Q.
  std::int64_t characteristic() const noexcept { return p_; }

  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  explicit FieldSpec(std::int64_t p) : p_(p) {}

  std::int64_t p_ = 0;
};

/// Exact scalar: a residue in [0, p) or a reduced fraction with positive
/// denominator. Immutable value type.
class FieldElement {
 public:
  /// Zero of Q. Exists so containers of elements are default-constructible.
  FieldElement() : FieldElement(FieldSpec::rational(), 0) {}
  FieldElement(const FieldSpec& spec, std::int64_t value);
  FieldElement(const FieldSpec& spec, const mpq_class& value);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }
  /// Parses "n", "-n" or "n/d". Throws Malformed.
  static FieldElement parse(const FieldSpec& spec, const std::string& text);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue for GF(p). Throws Unsupported over Q.
  std::int64_t residue() const;
  /// Rational value. Throws Unsupported over GF(p).
  const mpq_class& rational() const;

  /// Residue as a decimal integer, or "num/den".
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  /// Multiplicative inverse. Throws DegenerateInput on zero.
  FieldElement inv() const;

  /// Equality is value equality; mismatched fields compare unequal.
  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);
  /// Canonical order: residues numerically, rationals by value.
  friend std::strong_ordering operator<=>(const FieldElement& lhs, const FieldElement& rhs);

 private:
  void require_same(const FieldElement& other) const;
  std::int64_t p() const noexcept { return spec_.characteristic(); }

  FieldSpec spec_;
  std::variant<std::int64_t, mpq_class> value_;
};

FieldElement power(const FieldElement& base, std::uint64_t exponent);

bool is_square(const FieldElement& x);
/// A square root when one exists: the smallest residue over GF(p), the
/// non-negative root over Q.
std::optional<FieldElement> sqrt(const FieldElement& x);
/// Every y with y^3 = x, in canonical order.
std::vector<FieldElement> cube_roots(const FieldElement& x);
/// All p elements of GF(p) in residue order. Throws Unsupported over Q.
std::vector<FieldElement> enumerate(const FieldSpec& spec);

std::string to_string(const FieldElement& x);

/// Roots in the ground field of t^3 + p t + q. Exact over Q (rational root
/// search on monotone pieces); exhaustive over GF(p) up to p = 10^4.
std::vector<FieldElement> roots_depressed_cubic(const FieldElement& p, const FieldElement& q);

}  // namespace quadlaw
