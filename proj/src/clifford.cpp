#include "quadlaw/clifford.hpp"

#include <algorithm>

#include "quadlaw/detail/cyclic_root.hpp"

namespace quadlaw {

namespace {

void require_same(const QuadElement& x, const QuadElement& y) {
  if (!(x.algebra() == y.algebra())) {
    throw Error(ErrorKind::SpecMismatch, "elements of different quadratic algebras");
  }
}

void sort_unique(std::vector<QuadElement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Cube roots in the unit group of an elliptic algebra over GF(p), which is
// GF(p^2)^* of order p^2 - 1.
std::vector<QuadElement> finite_field_cube_roots(const QuadAlgebra& algebra, const QuadElement& y) {
  const FieldSpec& spec = algebra.spec();
  const auto p = static_cast<std::uint64_t>(spec.characteristic());
  const std::uint64_t order = p * p - 1;
  const QuadElement one = QuadElement::one(algebra);

  std::optional<QuadElement> non_cube;
  for (std::uint64_t i = 0; i < p && !non_cube; ++i) {
    for (std::uint64_t j = 1; j < p && !non_cube; ++j) {
      QuadElement g(algebra, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
      if (!(power(g, order / 3) == one)) non_cube = g;
    }
  }
  if (!non_cube) throw Error(ErrorKind::InternalError, "no non-cube found in GF(p^2)");

  auto root = detail::cyclic_cube_root(y, one, order, *non_cube);
  if (!root) return {};
  const QuadElement omega = power(*non_cube, order / 3);
  return {*root, *root * omega, *root * omega * omega};
}

// Over Q: z^2 = T z - n with T = trace(z), n = N(z), hence
// y = z^3 = (T^2 - n) z - T n, N(y) = n^3 and T^3 - 3 n T - 2 y0 = 0.
std::vector<QuadElement> rational_cube_roots(const QuadAlgebra& algebra, const QuadElement& y) {
  const FieldSpec& spec = algebra.spec();
  const FieldElement two(spec, 2);
  const FieldElement three(spec, 3);
  std::vector<QuadElement> out;
  for (const FieldElement& n : cube_roots(norm(y))) {
    for (const FieldElement& t : roots_depressed_cubic(-three * n, -two * y.x0())) {
      const FieldElement denom = t * t - n;
      if (!denom.is_zero()) {
        out.push_back(denom.inv() * (y + QuadElement::scalar(algebra, t * n)));
        continue;
      }
      // T^2 = n: z = T/2 + s tau with -beta s^2 = -3 T^2 / 4.
      auto s = sqrt(three * t * t / (FieldElement(spec, 4) * algebra.beta()));
      if (!s) continue;
      out.emplace_back(algebra, t / two, *s);
      out.emplace_back(algebra, t / two, -*s);
    }
  }
  std::erase_if(out, [&](const QuadElement& z) { return !(z * z * z == y); });
  return out;
}

}  // namespace

QuadAlgebra::QuadAlgebra(FieldElement beta) : beta_(std::move(beta)) {
  if (beta_.is_zero()) throw Error(ErrorKind::DegenerateInput, "beta must be nonzero");
  gamma_ = sqrt(-beta_);
}

QuadElement::QuadElement(const QuadAlgebra& algebra, FieldElement x0, FieldElement x12)
    : algebra_(algebra), x0_(std::move(x0)), x12_(std::move(x12)) {
  if (!(x0_.spec() == algebra.spec()) || !(x12_.spec() == algebra.spec())) {
    throw Error(ErrorKind::SpecMismatch, "coordinates outside the algebra's field");
  }
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
  require_same(x, y);
  return {x.algebra_, x.x0_ + y.x0_, x.x12_ + y.x12_};
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
  require_same(x, y);
  return {x.algebra_, x.x0_ - y.x0_, x.x12_ - y.x12_};
}

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
  require_same(x, y);
  const FieldElement& beta = x.algebra_.beta();
  return {x.algebra_, x.x0_ * y.x0_ - beta * x.x12_ * y.x12_, x.x0_ * y.x12_ + x.x12_ * y.x0_};
}

QuadElement operator*(const FieldElement& s, const QuadElement& x) {
  return {x.algebra_, s * x.x0_, s * x.x12_};
}

QuadElement operator/(const QuadElement& x, const QuadElement& y) { return x * inv(y); }

bool operator<(const QuadElement& x, const QuadElement& y) {
  if (x.x0_ != y.x0_) return x.x0_ < y.x0_;
  return x.x12_ < y.x12_;
}

std::string QuadElement::to_string() const {
  return "(" + x0_.to_string() + " + " + x12_.to_string() + " tau)";
}

QuadElement conj(const QuadElement& x) { return {x.algebra(), x.x0(), -x.x12()}; }

FieldElement norm(const QuadElement& x) {
  return x.x0() * x.x0() + x.algebra().beta() * x.x12() * x.x12();
}

FieldElement trace(const QuadElement& x) { return x.x0() + x.x0(); }

QuadElement inv(const QuadElement& x) {
  const FieldElement n = norm(x);
  if (n.is_zero()) throw Error(ErrorKind::ZeroDivisor, "element " + x.to_string() + " has norm 0");
  return n.inv() * conj(x);
}

QuadElement power(const QuadElement& x, std::uint64_t exponent) {
  QuadElement result = QuadElement::one(x.algebra());
  QuadElement b = x;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    b = b * b;
    exponent >>= 1U;
  }
  return result;
}

bool is_zero_divisor(const QuadElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::DegenerateInput, "zero-divisor test on 0");
  return norm(x).is_zero();
}

SplitPair split(const QuadElement& x) {
  const auto& gamma = x.algebra().gamma();
  if (!gamma) throw Error(ErrorKind::NotHyperbolic, "split() on an elliptic algebra");
  return {x.x0() - x.x12() * *gamma, x.x0() + x.x12() * *gamma, *gamma};
}

QuadElement unsplit(const QuadAlgebra& algebra, const SplitPair& pair) {
  const auto& gamma = algebra.gamma();
  if (!gamma) throw Error(ErrorKind::NotHyperbolic, "unsplit() on an elliptic algebra");
  if (!(pair.gamma == *gamma)) throw Error(ErrorKind::SpecMismatch, "split pair from another gamma");
  const FieldElement two(algebra.spec(), 2);
  return {algebra, (pair.first + pair.second) / two, (pair.second - pair.first) / (two * *gamma)};
}

std::vector<QuadElement> enumerate(const QuadAlgebra& algebra) {
  const auto values = enumerate(algebra.spec());
  std::vector<QuadElement> out;
  out.reserve(values.size() * values.size());
  for (const auto& x0 : values) {
    for (const auto& x12 : values) out.emplace_back(algebra, x0, x12);
  }
  return out;
}

std::vector<QuadElement> norm_one_group(const QuadAlgebra& algebra) {
  if (!algebra.spec().is_prime()) {
    throw Error(ErrorKind::Unsupported, "the norm-one group over Q is infinite");
  }
  const auto values = enumerate(algebra.spec());
  std::vector<QuadElement> out;
  for (const auto& x0 : values) {
    // x12^2 = (1 - x0^2) / beta
    auto x12 = sqrt((FieldElement::one(algebra.spec()) - x0 * x0) / algebra.beta());
    if (!x12) continue;
    out.emplace_back(algebra, x0, *x12);
    if (!x12->is_zero()) out.emplace_back(algebra, x0, -*x12);
  }
  sort_unique(out);
  return out;
}

std::vector<QuadElement> solve_cube(const QuadAlgebra& algebra, const QuadElement& y,
                                    bool within_norm_one) {
  if (!(y.algebra() == algebra)) throw Error(ErrorKind::SpecMismatch, "element of another algebra");
  if (y.is_zero()) throw Error(ErrorKind::DegenerateInput, "cube roots of 0 are not considered");
  if (within_norm_one && !norm(y).is_one()) {
    throw Error(ErrorKind::DegenerateInput, "norm-one cube roots requested for N(y) != 1");
  }

  std::vector<QuadElement> roots;
  if (algebra.is_hyperbolic()) {
    const SplitPair s = split(y);
    for (const auto& r1 : cube_roots(s.first)) {
      for (const auto& r2 : cube_roots(s.second)) {
        roots.push_back(unsplit(algebra, {r1, r2, s.gamma}));
      }
    }
  } else if (algebra.spec().is_prime()) {
    roots = finite_field_cube_roots(algebra, y);
  } else {
    roots = rational_cube_roots(algebra, y);
  }
  if (within_norm_one) {
    std::erase_if(roots, [](const QuadElement& z) { return !norm(z).is_one(); });
  }
  sort_unique(roots);
  return roots;
}

bool is_cube(const QuadAlgebra& algebra, const QuadElement& y) {
  if (!(y.algebra() == algebra)) throw Error(ErrorKind::SpecMismatch, "element of another algebra");
  if (norm(y).is_zero()) throw Error(ErrorKind::ZeroDivisor, "cube test on a non-unit");
  if (algebra.is_hyperbolic()) {
    const SplitPair s = split(y);
    return !cube_roots(s.first).empty() && !cube_roots(s.second).empty();
  }
  if (algebra.spec().is_prime()) {
    const auto p = static_cast<std::uint64_t>(algebra.spec().characteristic());
    return power(y, (p * p - 1) / 3).is_one();
  }
  return !rational_cube_roots(algebra, y).empty();
}

}  // namespace quadlaw
