#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadlaw/clifford.hpp"
#include "quadlaw/sbl.hpp"

namespace quadlaw {

/// Orthogonal basis with q(v1) = -1 and q(v2) = -beta.
struct DiagonalBasis {
  Vec2 v1;
  Vec2 v2;
  FieldElement beta;

  /// Change of basis P with columns v1, v2 (diagonal coordinates -> V).
  Mat2 matrix() const { return Mat2::from_columns(v1, v2); }

  friend bool operator==(const DiagonalBasis&, const DiagonalBasis&) = default;
};

/// (a, b, c) of the law a x y + b (conj(x) y + x conj(y)) + c conj(x y) on C0(-q).
struct CliffordParams {
  QuadElement a;
  QuadElement b;
  QuadElement c;
};

/// The law a x y + c conj(x y) with N(c) - N(a) = 1, together with the
/// diagonal basis that carries the original law onto it.
struct NormalForm {
  QuadAlgebra algebra;
  QuadElement a;
  QuadElement c;
  DiagonalBasis basis;
};

enum class GKind { Phi, Psi };

/// phi_lambda: x -> lambda x; psi_lambda: x -> lambda conj(x); N(lambda) = 1.
struct GTransform {
  GKind kind;
  QuadElement lambda;

  /// Matrix in diagonal coordinates (x1, x2) <-> x1 + x2 tau.
  Mat2 matrix() const;
};

enum class IsotropyCase {
  Trivial,   // {id}
  OrderTwo,  // {id, psi_{conj(a)/a}}
  NormZero,  // a = 0: {phi_l : l^3 = 1} u {psi_m : m^3 = c^2}
};

std::string_view to_string(IsotropyCase c) noexcept;

struct IsotropyDescription {
  IsotropyCase case_tag;
  std::vector<QuadElement> phi_lambdas;
  std::vector<QuadElement> psi_lambdas;

  std::size_t order() const noexcept { return phi_lambdas.size() + psi_lambdas.size(); }
  std::vector<GTransform> elements() const;
};

enum class Verdict { Equivalent, NotEquivalent, Unknown };

std::string_view to_string(Verdict v) noexcept;

struct EquivResult {
  Verdict verdict;
  /// u in GL(V) with act(u, first) = second, verified before return.
  std::optional<Mat2> witness;
  /// The isometry between the two normal forms behind `witness`.
  std::optional<GTransform> transform;
  std::string reason;
};

struct JInvariants {
  FieldElement j1;
  FieldElement j2;

  friend bool operator==(const JInvariants&, const JInvariants&) = default;
};

struct KNa {
  FieldElement k;
  FieldElement na;

  friend bool operator==(const KNa&, const KNa&) = default;
};

/// Some v with q(v) = -1. Exhaustive over GF(p); a bounded height search over Q.
/// Throws Degenerate for a degenerate form.
std::optional<Vec2> represent_minus_one(const QuadraticForm& q);

/// Throws Degenerate, or Unknown when -1 is not found over Q.
DiagonalBasis diagonalize(const QuadraticForm& q);

/// Rescales v2 so that q(v2) = -target; nullopt when target / beta is not a square.
std::optional<DiagonalBasis> rebase(const DiagonalBasis& basis, const FieldElement& target);

/// The law in diagonal coordinates: act(P^-1, F).
Sbl to_diagonal_coordinates(const Sbl& f, const DiagonalBasis& basis);

/// Solves the six linear coefficient equations for (a, b, c); `f` is in V
/// coordinates and is first moved to the diagonal basis.
CliffordParams to_clifford_params(const Sbl& f, const DiagonalBasis& basis);
/// Coefficients, in diagonal coordinates, of the law with parameters (a, b, c).
Sbl from_clifford_params(const CliffordParams& params);
/// a x y + b (conj(x) y + x conj(y)) + c conj(x y) evaluated in the algebra.
QuadElement evaluate_params(const CliffordParams& params, const QuadElement& x, const QuadElement& y);

/// Throws Degenerate, Unknown (Q, -1 not found) or InternalError (b != 0).
NormalForm normal_form(const Sbl& f);
/// Normal form with respect to a caller-supplied diagonal basis of qform(f).
NormalForm normal_form(const Sbl& f, const DiagonalBasis& basis);

/// Law in diagonal coordinates: coefficients of a x y + c conj(x y).
Sbl from_normal_form(const NormalForm& nf);
/// Law in the original coordinates: act(P, from_normal_form(nf)).
Sbl to_original_coordinates(const NormalForm& nf);

/// a^3 c + conj(a^3 c), a ground-field scalar.
FieldElement invariant_K(const NormalForm& nf);
FieldElement invariant_Na(const NormalForm& nf);
/// 4K + 8 Na^2 + 36 Na + 27.
FieldElement j_denominator(const NormalForm& nf);
/// Throws NotRegular when the denominator vanishes.
JInvariants invariants_J(const NormalForm& nf);
/// Inverse of invariants_J. Throws Indeterminate when 12 j1 - 8 j2 - 27 = 0.
KNa recover_from_J(const FieldElement& j1, const FieldElement& j2);

/// phi: (a, c) -> (a / lambda, lambda^3 c); psi: (conj(a) / lambda, lambda^3 conj(c)).
/// Throws DegenerateInput when N(lambda) != 1.
NormalForm apply_g(const GTransform& t, const NormalForm& nf);

IsotropyDescription isotropy(const NormalForm& nf);
/// Isotropy elements as matrices in V coordinates: P M P^-1.
std::vector<Mat2> isotropy_matrices(const NormalForm& nf, const IsotropyDescription& iso);

/// Decides GL(V)-equivalence of two laws with non-degenerate attached forms.
/// Throws Degenerate for a degenerate attached form.
EquivResult equivalent(const Sbl& f, const Sbl& g);

}  // namespace quadlaw
