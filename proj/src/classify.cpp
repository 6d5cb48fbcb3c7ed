#include "quadlaw/classify.hpp"

#include <algorithm>
#include <numeric>

namespace quadlaw {

namespace {

// Height bound for the search of a vector with q(v) = -1 over Q.
constexpr std::int64_t kRationalSearchHeight = 40;

QuadElement elem(const QuadAlgebra& algebra, const FieldElement& x0, const FieldElement& x12) {
  return {algebra, x0, x12};
}

// Smallest x2 with q(s, x2) = -1, if any.
std::optional<FieldElement> solve_second_coordinate(const QuadraticForm& q, const FieldElement& s) {
  const FieldSpec& spec = s.spec();
  const FieldElement one = FieldElement::one(spec);
  const FieldElement constant = q.q11 * s * s + one;  // q22 x^2 + 2 q12 s x + constant = 0
  const FieldElement linear = FieldElement(spec, 2) * q.q12 * s;
  if (q.q22.is_zero()) {
    if (!linear.is_zero()) return -constant / linear;
    if (constant.is_zero()) return FieldElement::zero(spec);
    return std::nullopt;
  }
  const FieldElement disc = q.q12 * q.q12 * s * s - q.q22 * constant;
  auto r = sqrt(disc);
  if (!r) return std::nullopt;
  const FieldElement x_plus = (-q.q12 * s + *r) / q.q22;
  const FieldElement x_minus = (-q.q12 * s - *r) / q.q22;
  return std::min(x_plus, x_minus);
}

// Rationals of height exactly h: n/d with max(|n|, d) = h, in lowest terms.
std::vector<mpq_class> rationals_of_height(std::int64_t h) {
  std::vector<mpq_class> out;
  if (h == 0) return {mpq_class(0)};
  for (std::int64_t d = 1; d <= h; ++d) {
    for (std::int64_t n = -h; n <= h; ++n) {
      if (std::max(std::abs(n), d) != h || std::gcd(n, d) != 1) continue;
      out.emplace_back(static_cast<long>(n), static_cast<unsigned long>(d));
    }
  }
  return out;
}

Sbl normal_form_law(const QuadElement& a, const QuadElement& c) {
  return from_clifford_params({a, QuadElement::zero(a.algebra()), c});
}

bool same_params(const NormalForm& x, const NormalForm& y) { return x.a == y.a && x.c == y.c; }

// Candidate isometries carrying nf1 onto nf2, following the case analysis of
// the equivalence criteria. Each candidate is verified by the caller.
std::vector<GTransform> witness_candidates(const NormalForm& nf1, const NormalForm& nf2) {
  const QuadAlgebra& alg = nf1.algebra;
  const QuadElement& a = nf1.a;
  const QuadElement& c = nf1.c;
  const QuadElement& a2 = nf2.a;
  const QuadElement& c2 = nf2.c;
  std::vector<GTransform> out;

  if (a.is_zero()) {
    // lambda^3 = c'/c (phi) or c'/conj(c) (psi); N(c) = N(c') = 1.
    if (!a2.is_zero()) return out;
    for (const auto& l : solve_cube(alg, c2 / c, true)) out.push_back({GKind::Phi, l});
    for (const auto& l : solve_cube(alg, c2 / conj(c), true)) out.push_back({GKind::Psi, l});
    return out;
  }
  if (c.is_zero()) {
    // N(a) = N(a') = -1, lambda = a / a'.
    if (!c2.is_zero()) return out;
    out.push_back({GKind::Phi, a / a2});
    return out;
  }
  const QuadElement w = power(a, 3) * c;
  const QuadElement w2 = power(a2, 3) * c2;
  if (!norm(a).is_zero()) {
    if (w == w2) out.push_back({GKind::Phi, a / a2});
    if (w == conj(w2)) out.push_back({GKind::Psi, conj(a) / a2});
    return out;
  }
  // Hyperbolic, a a nonzero zero divisor: lambda = (t, 1/t) in split
  // coordinates, read off a component of a that does not vanish.
  const SplitPair s = split(a);
  const SplitPair s2 = split(a2);
  auto lambda_from = [&](const FieldElement& t) {
    return unsplit(alg, {t, t.inv(), s.gamma});
  };
  // phi: a' = (a_1 / t, a_2 t)
  if (!s.first.is_zero() && !s2.first.is_zero()) {
    out.push_back({GKind::Phi, lambda_from(s.first / s2.first)});
  } else if (!s.second.is_zero() && !s2.second.is_zero()) {
    out.push_back({GKind::Phi, lambda_from(s2.second / s.second)});
  }
  // psi: a' = (a_2 / t, a_1 t)
  if (!s.second.is_zero() && !s2.first.is_zero()) {
    out.push_back({GKind::Psi, lambda_from(s.second / s2.first)});
  } else if (!s.first.is_zero() && !s2.second.is_zero()) {
    out.push_back({GKind::Psi, lambda_from(s2.second / s.first)});
  }
  return out;
}

}  // namespace

std::string_view to_string(IsotropyCase c) noexcept {
  switch (c) {
    case IsotropyCase::Trivial: return "trivial";
    case IsotropyCase::OrderTwo: return "order_two";
    case IsotropyCase::NormZero: return "norm_zero";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not_equivalent";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Mat2 GTransform::matrix() const {
  const FieldElement& beta = lambda.algebra().beta();
  const FieldElement& l0 = lambda.x0();
  const FieldElement& l12 = lambda.x12();
  if (kind == GKind::Phi) return {l0, -beta * l12, l12, l0};
  return {l0, beta * l12, l12, -l0};
}

std::vector<GTransform> IsotropyDescription::elements() const {
  std::vector<GTransform> out;
  for (const auto& l : phi_lambdas) out.push_back({GKind::Phi, l});
  for (const auto& l : psi_lambdas) out.push_back({GKind::Psi, l});
  return out;
}

std::optional<Vec2> represent_minus_one(const QuadraticForm& q) {
  if (q.is_degenerate()) throw Error(ErrorKind::Degenerate, "degenerate quadratic form");
  const FieldSpec& spec = q.q11.spec();
  const FieldElement zero = FieldElement::zero(spec);
  const FieldElement one = FieldElement::one(spec);
  if (q.q11 == -one) return Vec2{one, zero};
  if (q.q22 == -one) return Vec2{zero, one};

  if (spec.is_prime()) {
    for (const auto& s : enumerate(spec)) {
      if (auto x2 = solve_second_coordinate(q, s)) return Vec2{s, *x2};
    }
    return std::nullopt;
  }
  for (std::int64_t h = 0; h <= kRationalSearchHeight; ++h) {
    for (const auto& r : rationals_of_height(h)) {
      const FieldElement s(spec, r);
      if (auto x2 = solve_second_coordinate(q, s)) return Vec2{s, *x2};
    }
  }
  return std::nullopt;
}

DiagonalBasis diagonalize(const QuadraticForm& q) {
  auto v1 = represent_minus_one(q);
  if (!v1) {
    throw Error(ErrorKind::Unknown, "no vector with q(v) = -1 found within the search height");
  }
  // Polar-orthogonal complement of v1: w . (Q v1) = 0.
  const FieldElement r1 = q.q11 * v1->x1 + q.q12 * v1->x2;
  const FieldElement r2 = q.q12 * v1->x1 + q.q22 * v1->x2;
  Vec2 w{-r2, r1};
  const FieldElement lead = w.x1.is_zero() ? w.x2 : w.x1;
  const FieldElement scale = lead.inv();
  w = {scale * w.x1, scale * w.x2};
  const FieldElement beta = -q.value(w);
  if (beta.is_zero()) throw Error(ErrorKind::InternalError, "orthogonal complement is isotropic");
  return {*v1, w, beta};
}

std::optional<DiagonalBasis> rebase(const DiagonalBasis& basis, const FieldElement& target) {
  auto s = sqrt(target / basis.beta);
  if (!s) return std::nullopt;
  return DiagonalBasis{basis.v1, {*s * basis.v2.x1, *s * basis.v2.x2}, target};
}

Sbl to_diagonal_coordinates(const Sbl& f, const DiagonalBasis& basis) {
  return act(basis.matrix().inverse(), f);
}

CliffordParams to_clifford_params(const Sbl& f, const DiagonalBasis& basis) {
  const Sbl g = to_diagonal_coordinates(f, basis);
  const FieldSpec& spec = f.spec();
  const QuadAlgebra alg(basis.beta);
  const FieldElement& beta = basis.beta;
  const FieldElement half = FieldElement(spec, 2).inv();
  const FieldElement quarter = half * half;

  const FieldElement sum0 = half * (g.a1() - g.c1() / beta);  // a0 + c0
  const FieldElement b0 = quarter * (g.a1() + g.c1() / beta);
  const FieldElement& diff0 = g.b2();  // a0 - c0
  const FieldElement diff12 = -g.b1() / beta;  // a12 - c12
  const FieldElement sum12 = half * (g.a2() - g.c2() / beta);  // a12 + c12
  const FieldElement b12 = quarter * (g.a2() + g.c2() / beta);

  return {elem(alg, half * (sum0 + diff0), half * (sum12 + diff12)), elem(alg, b0, b12),
          elem(alg, half * (sum0 - diff0), half * (sum12 - diff12))};
}

Sbl from_clifford_params(const CliffordParams& params) {
  const FieldElement& beta = params.a.algebra().beta();
  const FieldElement two(beta.spec(), 2);
  const auto& [a, b, c] = params;
  return Sbl({a.x0() + two * b.x0() + c.x0(), -beta * (a.x12() - c.x12()),
              -beta * (a.x0() - two * b.x0() + c.x0()), a.x12() + two * b.x12() + c.x12(),
              a.x0() - c.x0(), -beta * (a.x12() - two * b.x12() + c.x12())});
}

QuadElement evaluate_params(const CliffordParams& params, const QuadElement& x,
                            const QuadElement& y) {
  return params.a * x * y + params.b * (conj(x) * y + x * conj(y)) + params.c * conj(x * y);
}

NormalForm normal_form(const Sbl& f) {
  const QuadraticForm q = qform(f);
  if (q.is_degenerate()) throw Error(ErrorKind::Degenerate, "attached quadratic form is degenerate");
  return normal_form(f, diagonalize(q));
}

NormalForm normal_form(const Sbl& f, const DiagonalBasis& basis) {
  const QuadraticForm q = qform(f);
  const FieldElement one = FieldElement::one(f.spec());
  if (!(q.value(basis.v1) == -one) || !(q.value(basis.v2) == -basis.beta) ||
      !q.polar(basis.v1, basis.v2).is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "basis does not diagonalize the attached form");
  }
  CliffordParams params = to_clifford_params(f, basis);
  if (!params.b.is_zero()) {
    throw Error(ErrorKind::InternalError, "nonzero b parameter " + params.b.to_string());
  }
  if (!(norm(params.c) - norm(params.a) == one)) {
    throw Error(ErrorKind::InternalError, "normal form violates N(c) - N(a) = 1");
  }
  return {QuadAlgebra(basis.beta), std::move(params.a), std::move(params.c), basis};
}

Sbl from_normal_form(const NormalForm& nf) { return normal_form_law(nf.a, nf.c); }

Sbl to_original_coordinates(const NormalForm& nf) {
  return act(nf.basis.matrix(), from_normal_form(nf));
}

FieldElement invariant_K(const NormalForm& nf) { return trace(power(nf.a, 3) * nf.c); }

FieldElement invariant_Na(const NormalForm& nf) { return norm(nf.a); }

FieldElement j_denominator(const NormalForm& nf) {
  const FieldSpec& spec = nf.algebra.spec();
  const FieldElement k = invariant_K(nf);
  const FieldElement na = invariant_Na(nf);
  return FieldElement(spec, 4) * k + FieldElement(spec, 8) * na * na + FieldElement(spec, 36) * na +
         FieldElement(spec, 27);
}

JInvariants invariants_J(const NormalForm& nf) {
  const FieldSpec& spec = nf.algebra.spec();
  const FieldElement d = j_denominator(nf);
  if (d.is_zero()) throw Error(ErrorKind::NotRegular, "J-invariant denominator vanishes");
  const FieldElement k = invariant_K(nf);
  const FieldElement na = invariant_Na(nf);
  const FieldElement n2(spec, 2), n3(spec, 3), n27(spec, 27);
  return {n27 * (k + n2 * na * na + n3 * na) / d, n27 * (k + n2 * na * na) / d};
}

KNa recover_from_J(const FieldElement& j1, const FieldElement& j2) {
  const FieldSpec& spec = j1.spec();
  const FieldElement n2(spec, 2), n6(spec, 6), n8(spec, 8), n9(spec, 9), n12(spec, 12),
      n27(spec, 27);
  const FieldElement den = n12 * j1 - n8 * j2 - n27;
  if (den.is_zero()) throw Error(ErrorKind::Indeterminate, "12 J1 - 8 J2 - 27 vanishes");
  return {-n27 * (n6 * j1 * j1 - n2 * j2 * j2 - n27 * j2) / (den * den), n9 * (j2 - j1) / den};
}

NormalForm apply_g(const GTransform& t, const NormalForm& nf) {
  if (!(t.lambda.algebra() == nf.algebra)) {
    throw Error(ErrorKind::SpecMismatch, "transform from another algebra");
  }
  if (!norm(t.lambda).is_one()) throw Error(ErrorKind::DegenerateInput, "N(lambda) != 1");
  const QuadElement l_inv = conj(t.lambda);
  const QuadElement l_cubed = power(t.lambda, 3);
  if (t.kind == GKind::Phi) return {nf.algebra, l_inv * nf.a, l_cubed * nf.c, nf.basis};
  return {nf.algebra, l_inv * conj(nf.a), l_cubed * conj(nf.c), nf.basis};
}

IsotropyDescription isotropy(const NormalForm& nf) {
  const QuadAlgebra& alg = nf.algebra;
  const QuadElement one = QuadElement::one(alg);
  if (nf.a.is_zero()) {
    // N(c) = 1, so c^2 has norm one.
    return {IsotropyCase::NormZero, solve_cube(alg, one, true),
            solve_cube(alg, nf.c * nf.c, true)};
  }
  if (norm(nf.a).is_zero()) {
    // Hyperbolic with a a nonzero zero divisor: lambda a = a forces lambda = 1
    // inside G, and lambda a = conj(a) would make a nilpotent.
    return {IsotropyCase::Trivial, {one}, {}};
  }
  if ((power(nf.a, 3) * nf.c).is_scalar()) {
    return {IsotropyCase::OrderTwo, {one}, {conj(nf.a) / nf.a}};
  }
  return {IsotropyCase::Trivial, {one}, {}};
}

std::vector<Mat2> isotropy_matrices(const NormalForm& nf, const IsotropyDescription& iso) {
  const Mat2 p = nf.basis.matrix();
  const Mat2 p_inv = p.inverse();
  std::vector<Mat2> out;
  for (const auto& g : iso.elements()) out.push_back(p * g.matrix() * p_inv);
  return out;
}

EquivResult equivalent(const Sbl& f, const Sbl& g) {
  if (!(f.spec() == g.spec())) throw Error(ErrorKind::SpecMismatch, "laws over different fields");
  const QuadraticForm q1 = qform(f);
  const QuadraticForm q2 = qform(g);
  if (q1.is_degenerate() || q2.is_degenerate()) {
    throw Error(ErrorKind::Degenerate, "equivalence needs non-degenerate attached forms");
  }
  // Equivalent laws have isometric attached forms.
  if (!is_square(q1.det() / q2.det())) {
    return {Verdict::NotEquivalent, {}, {}, "attached forms have different discriminants"};
  }

  std::optional<DiagonalBasis> basis1;
  std::optional<DiagonalBasis> raw2;
  try {
    basis1 = diagonalize(q1);
    raw2 = diagonalize(q2);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unknown) throw;
    return {Verdict::Unknown, {}, {}, e.what()};
  }
  // Both forms are diag(-1, -beta) in their bases; they are isometric iff
  // the betas agree up to a square.
  const std::optional<DiagonalBasis> basis2 = rebase(*raw2, basis1->beta);
  if (!basis2) return {Verdict::NotEquivalent, {}, {}, "attached forms are not isometric"};

  const NormalForm nf1 = normal_form(f, *basis1);
  const NormalForm nf2 = normal_form(g, *basis2);
  if (!(invariant_Na(nf1) == invariant_Na(nf2))) {
    return {Verdict::NotEquivalent, {}, {}, "N(a) differs"};
  }
  if (!(invariant_K(nf1) == invariant_K(nf2))) {
    return {Verdict::NotEquivalent, {}, {}, "K(a, c) differs"};
  }

  for (const GTransform& t : witness_candidates(nf1, nf2)) {
    if (!same_params(apply_g(t, nf1), nf2)) continue;
    const Mat2 w = basis2->matrix() * t.matrix() * basis1->matrix().inverse();
    if (!(act(w, f) == g)) {
      throw Error(ErrorKind::InternalError, "normal-form isometry does not transport the law");
    }
    return {Verdict::Equivalent, w, t, {}};
  }
  return {Verdict::NotEquivalent, {}, {}, "no isometry of the normal forms exists"};
}

}  // namespace quadlaw
