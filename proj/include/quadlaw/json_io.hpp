#pragma once

#include <json.hpp>

#include "quadlaw/classify.hpp"

namespace quadlaw::io {

using json = nlohmann::json;

// Field values: residues as integers, rationals as "num/den" strings.
// Every *_from_json throws Error(Malformed) on schema violations.

json field_to_json(const FieldSpec& spec);
/// Accepts either {"type": ...} or a wrapper {"field": {"type": ...}}.
FieldSpec field_from_json(const json& j);

json value_to_json(const FieldElement& x);
FieldElement value_from_json(const FieldSpec& spec, const json& j);

json vec_to_json(const Vec2& v);
Vec2 vec_from_json(const FieldSpec& spec, const json& j);

/// {"field": ..., "coeffs": {"a1": .., "b1": .., "c1": .., "a2": .., "b2": .., "c2": ..}}
json law_to_json(const Sbl& f);
Sbl law_from_json(const json& j);

/// {"m": [[m11, m12], [m21, m22]]}
json mat_to_json(const Mat2& m);
Mat2 mat_from_json(const FieldSpec& spec, const json& j);

json form_to_json(const QuadraticForm& q);

/// {"x0": .., "x12": ..}
json quad_to_json(const QuadElement& x);
QuadElement quad_from_json(const QuadAlgebra& algebra, const json& j);

/// {"field": .., "beta": .., "a": {..}, "c": {..}, "basis": {"v1": [..], "v2": [..]}}
json normal_form_to_json(const NormalForm& nf);
/// Rejects data violating N(c) - N(a) = 1 or the basis conditions.
NormalForm normal_form_from_json(const json& j);

json transform_to_json(const GTransform& t);

/// {"verdict": .., "witness": {..}?, "transform": {..}?, "reason": ..?}
json equiv_to_json(const EquivResult& r);

/// {"case": .., "order": n, "phi_lambdas": [..], "psi_lambdas": [..], "matrices": [..]}
json isotropy_to_json(const NormalForm& nf, const IsotropyDescription& iso);

/// Parses text, mapping parse failures to Error(Malformed).
json parse(const std::string& text);

}  // namespace quadlaw::io
