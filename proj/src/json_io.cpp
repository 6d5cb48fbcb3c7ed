#include "quadlaw/json_io.hpp"

namespace quadlaw::io {

namespace {

constexpr const char* kCoeffNames[6] = {"a1", "b1", "c1", "a2", "b2", "c2"};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Malformed, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

json field_to_json(const FieldSpec& spec) {
  if (spec.is_prime()) return {{"type", "prime"}, {"p", spec.characteristic()}};
  return {{"type", "rational"}};
}

FieldSpec field_from_json(const json& j) {
  if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
  const json& type = member(j, "type");
  if (!type.is_string()) malformed("field type must be a string");
  if (type == "rational") return FieldSpec::rational();
  if (type != "prime") malformed("unknown field type " + type.dump());
  const json& p = member(j, "p");
  if (!p.is_number_integer()) malformed("field p must be an integer");
  return FieldSpec::prime(p.get<std::int64_t>());
}

json value_to_json(const FieldElement& x) {
  if (x.spec().is_prime()) return x.residue();
  return x.to_string();
}

FieldElement value_from_json(const FieldSpec& spec, const json& j) {
  if (j.is_number_integer()) return {spec, j.get<std::int64_t>()};
  if (j.is_string()) return FieldElement::parse(spec, j.get<std::string>());
  malformed("field value must be an integer or a \"num/den\" string, got " + j.dump());
}

json vec_to_json(const Vec2& v) { return json::array({value_to_json(v.x1), value_to_json(v.x2)}); }

Vec2 vec_from_json(const FieldSpec& spec, const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("vector must be a 2-element array");
  return {value_from_json(spec, j[0]), value_from_json(spec, j[1])};
}

json law_to_json(const Sbl& f) {
  json coeffs = json::object();
  for (std::size_t i = 0; i < 6; ++i) coeffs[kCoeffNames[i]] = value_to_json(f.coeffs()[i]);
  return {{"field", field_to_json(f.spec())}, {"coeffs", coeffs}};
}

Sbl law_from_json(const json& j) {
  const FieldSpec spec = field_from_json(member(j, "field"));
  const json& coeffs = member(j, "coeffs");
  std::array<FieldElement, 6> c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = value_from_json(spec, member(coeffs, kCoeffNames[i]));
  return Sbl(c);
}

json mat_to_json(const Mat2& m) {
  return {{"m", json::array({json::array({value_to_json(m.m11), value_to_json(m.m12)}),
                             json::array({value_to_json(m.m21), value_to_json(m.m22)})})}};
}

Mat2 mat_from_json(const FieldSpec& spec, const json& j) {
  const json& m = member(j, "m");
  if (!m.is_array() || m.size() != 2) malformed("matrix must have two rows");
  const Vec2 r1 = vec_from_json(spec, m[0]);
  const Vec2 r2 = vec_from_json(spec, m[1]);
  return {r1.x1, r1.x2, r2.x1, r2.x2};
}

json form_to_json(const QuadraticForm& q) {
  return {{"gram", json::array({json::array({value_to_json(q.q11), value_to_json(q.q12)}),
                                json::array({value_to_json(q.q12), value_to_json(q.q22)})})}};
}

json quad_to_json(const QuadElement& x) {
  return {{"x0", value_to_json(x.x0())}, {"x12", value_to_json(x.x12())}};
}

QuadElement quad_from_json(const QuadAlgebra& algebra, const json& j) {
  return {algebra, value_from_json(algebra.spec(), member(j, "x0")),
          value_from_json(algebra.spec(), member(j, "x12"))};
}

json normal_form_to_json(const NormalForm& nf) {
  return {{"field", field_to_json(nf.algebra.spec())},
          {"beta", value_to_json(nf.algebra.beta())},
          {"a", quad_to_json(nf.a)},
          {"c", quad_to_json(nf.c)},
          {"basis", {{"v1", vec_to_json(nf.basis.v1)}, {"v2", vec_to_json(nf.basis.v2)}}}};
}

NormalForm normal_form_from_json(const json& j) {
  const FieldSpec spec = field_from_json(member(j, "field"));
  const FieldElement beta = value_from_json(spec, member(j, "beta"));
  if (beta.is_zero()) malformed("beta must be nonzero");
  const QuadAlgebra alg(beta);
  QuadElement a = quad_from_json(alg, member(j, "a"));
  QuadElement c = quad_from_json(alg, member(j, "c"));
  if (!(norm(c) - norm(a)).is_one()) malformed("normal form violates N(c) - N(a) = 1");
  const json& basis = member(j, "basis");
  DiagonalBasis b{vec_from_json(spec, member(basis, "v1")), vec_from_json(spec, member(basis, "v2")),
                  beta};
  if (b.matrix().det().is_zero()) malformed("basis vectors are dependent");
  return {alg, std::move(a), std::move(c), std::move(b)};
}

json transform_to_json(const GTransform& t) {
  return {{"kind", t.kind == GKind::Phi ? "phi" : "psi"}, {"lambda", quad_to_json(t.lambda)}};
}

json equiv_to_json(const EquivResult& r) {
  json out = {{"verdict", std::string(to_string(r.verdict))}};
  if (r.witness) out["witness"] = mat_to_json(*r.witness);
  if (r.transform) out["transform"] = transform_to_json(*r.transform);
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

json isotropy_to_json(const NormalForm& nf, const IsotropyDescription& iso) {
  json phi = json::array();
  json psi = json::array();
  for (const auto& l : iso.phi_lambdas) phi.push_back(quad_to_json(l));
  for (const auto& l : iso.psi_lambdas) psi.push_back(quad_to_json(l));
  json matrices = json::array();
  for (const auto& m : isotropy_matrices(nf, iso)) matrices.push_back(mat_to_json(m));
  return {{"case", std::string(to_string(iso.case_tag))},
          {"order", iso.order()},
          {"phi_lambdas", phi},
          {"psi_lambdas", psi},
          {"matrices", matrices}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace quadlaw::io
