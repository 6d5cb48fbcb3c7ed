#include "quadlaw/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>

#include "quadlaw/json_io.hpp"

namespace quadlaw::oracle {

namespace {

using nlohmann::json;

constexpr std::uint32_t kUnassigned = UINT32_MAX;

void require_prime(std::int64_t p, std::int64_t ceiling, const char* what) {
  FieldSpec::prime(p);  // validates
  if (p > ceiling) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " limited to p <= " + std::to_string(ceiling));
  }
}

std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> factors;
  std::int64_t n = p - 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  const FieldSpec spec = FieldSpec::prime(p);
  for (std::int64_t g = 2; g < p; ++g) {
    const FieldElement x(spec, g);
    bool ok = true;
    for (auto q : factors) {
      if (power(x, static_cast<std::uint64_t>((p - 1) / q)).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2 only; unreachable for supported primes
}

std::array<std::int64_t, 4> mat_key(const Mat2& m) {
  return {m.m11.residue(), m.m12.residue(), m.m21.residue(), m.m22.residue()};
}

json pair_json(const Sbl& f, const Sbl& g) {
  return {{"first", io::law_to_json(f)}, {"second", io::law_to_json(g)}};
}

}  // namespace

std::uint64_t gl_order(std::int64_t p) {
  const auto q = static_cast<std::uint64_t>(p);
  return (q * q - 1) * (q * q - q);
}

std::vector<Mat2> enumerate_gl(std::int64_t p, const Limits& limits) {
  require_prime(p, limits.orbit_max_p, "GL(2, p) enumeration");
  const FieldSpec spec = FieldSpec::prime(p);
  const auto values = enumerate(spec);
  std::vector<Mat2> out;
  out.reserve(gl_order(p));
  for (const auto& a : values) {
    for (const auto& b : values) {
      for (const auto& c : values) {
        for (const auto& d : values) {
          if (!(a * d - b * c).is_zero()) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

std::array<Mat2, 2> gl_generators(std::int64_t p) {
  const FieldSpec spec = FieldSpec::prime(p);
  const FieldElement zero = FieldElement::zero(spec);
  const FieldElement one = FieldElement::one(spec);
  return {Mat2{FieldElement(spec, primitive_root(p)), zero, zero, one}, Mat2{-one, one, -one, zero}};
}

LawSpace::LawSpace(std::int64_t p) : p_(p), spec_(FieldSpec::prime(p)) {
  std::uint64_t n = 1;
  for (int i = 0; i < 6; ++i) n *= static_cast<std::uint64_t>(p);
  if (n > UINT32_MAX) throw Error(ErrorKind::TooLarge, "law space exceeds 2^32 codes");
  size_ = static_cast<LawCode>(n);
}

LawCode LawSpace::encode(const Sbl& f) const {
  std::uint64_t code = 0;
  for (const auto& c : f.coeffs()) code = code * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(c.residue());
  return static_cast<LawCode>(code);
}

Sbl LawSpace::decode(LawCode code) const {
  std::array<std::int64_t, 6> digits{};
  for (int i = 5; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = code % static_cast<LawCode>(p_);
    code /= static_cast<LawCode>(p_);
  }
  return Sbl(spec_, digits);
}

LinearAction LawSpace::action(const Mat2& u) const {
  LinearAction out;
  for (std::size_t k = 0; k < 6; ++k) {
    std::array<std::int64_t, 6> unit{};
    unit[k] = 1;
    const Sbl image = act(u, Sbl(spec_, unit));
    for (std::size_t r = 0; r < 6; ++r) out.m[r * 6 + k] = image.coeffs()[r].residue();
  }
  return out;
}

LawCode LawSpace::apply(const LinearAction& a, LawCode code) const {
  std::array<std::int64_t, 6> v{};
  for (int i = 5; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = code % static_cast<LawCode>(p_);
    code /= static_cast<LawCode>(p_);
  }
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < 6; ++r) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < 6; ++k) s += a.m[r * 6 + k] * v[k];
    out = out * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(s % p_);
  }
  return static_cast<LawCode>(out);
}

std::vector<Sbl> orbit(const Sbl& f, const Limits& limits) {
  require_prime(f.spec().characteristic(), limits.orbit_max_p, "orbit()");
  const LawSpace space(f.spec().characteristic());
  std::vector<LinearAction> gens;
  for (const auto& g : gl_generators(space.p())) gens.push_back(space.action(g));
  std::vector<LawCode> seen{space.encode(f)};
  std::vector<LawCode> frontier = seen;
  std::vector<bool> visited(space.size(), false);
  visited[seen.front()] = true;
  while (!frontier.empty()) {
    const LawCode x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const LawCode y = space.apply(g, x);
      if (!visited[y]) {
        visited[y] = true;
        seen.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  std::vector<Sbl> out;
  out.reserve(seen.size());
  for (auto c : seen) out.push_back(space.decode(c));
  return out;
}

std::vector<Mat2> stabilizer(const Sbl& f, const Limits& limits) {
  std::vector<Mat2> out;
  for (const auto& u : enumerate_gl(f.spec().characteristic(), limits)) {
    if (act(u, f) == f) out.push_back(u);
  }
  return out;
}

std::string_view to_string(CensusFilter f) noexcept {
  switch (f) {
    case CensusFilter::All: return "all";
    case CensusFilter::QFormEqualsN: return "qN";
    case CensusFilter::Regular: return "regular";
  }
  return "?";
}

CensusFilter filter_from_string(std::string_view s) {
  if (s == "all") return CensusFilter::All;
  if (s == "qN") return CensusFilter::QFormEqualsN;
  if (s == "regular") return CensusFilter::Regular;
  throw Error(ErrorKind::Malformed, "unknown census filter '" + std::string(s) + "'");
}

OrbitPartition partition(const LawSpace& space) {
  std::vector<LinearAction> gens;
  for (const auto& g : gl_generators(space.p())) gens.push_back(space.action(g));
  OrbitPartition out;
  out.orbit_of.assign(space.size(), kUnassigned);
  std::vector<LawCode> frontier;
  for (LawCode start = 0; start < space.size(); ++start) {
    if (out.orbit_of[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(start);
    std::uint64_t count = 1;
    out.orbit_of[start] = id;
    frontier.assign(1, start);
    while (!frontier.empty()) {
      const LawCode x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        const LawCode y = space.apply(g, x);
        if (out.orbit_of[y] == kUnassigned) {
          out.orbit_of[y] = id;
          ++count;
          frontier.push_back(y);
        }
      }
    }
    out.sizes.push_back(count);
  }
  return out;
}

std::vector<std::size_t> stabilizer_indices(const LawSpace& space,
                                            const std::vector<LinearAction>& group, LawCode code) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (space.apply(group[i], code) == code) out.push_back(i);
  }
  return out;
}

Census census(std::int64_t p, CensusFilter filter, std::optional<std::int64_t> beta,
              const Limits& limits) {
  require_prime(p, limits.census_max_p, "census");
  const LawSpace space(p);
  const FieldSpec& spec = space.spec();
  std::optional<FieldElement> beta_value;
  if (filter == CensusFilter::QFormEqualsN) {
    if (!beta) throw Error(ErrorKind::Malformed, "the qN filter needs beta");
    beta_value = FieldElement(spec, *beta);
    if (beta_value->is_zero()) throw Error(ErrorKind::DegenerateInput, "beta must be nonzero");
  }
  const QuadraticForm target =
      beta_value ? QuadraticForm{-FieldElement::one(spec), FieldElement::zero(spec), -*beta_value}
                 : QuadraticForm{};

  const OrbitPartition parts = partition(space);
  std::vector<std::uint64_t> filtered(parts.representatives.size(), 0);
  for (LawCode code = 0; code < space.size(); ++code) {
    bool keep = true;
    if (filter == CensusFilter::QFormEqualsN) {
      keep = qform(space.decode(code)) == target;
    } else if (filter == CensusFilter::Regular) {
      keep = is_regular(space.decode(code));
    }
    if (keep) ++filtered[parts.orbit_of[code]];
  }

  std::vector<LinearAction> group;
  for (const auto& u : enumerate_gl(p, limits)) group.push_back(space.action(u));

  Census out{p, filter, beta_value, 0, {}};
  for (std::size_t id = 0; id < parts.representatives.size(); ++id) {
    if (filtered[id] == 0) continue;
    const LawCode rep = parts.representatives[id];
    const Sbl f = space.decode(rep);
    const bool regular = is_regular(f);
    std::optional<IInvariants> inv;
    if (regular) inv = invariants_I(f);
    out.records.push_back({f, parts.sizes[id], filtered[id],
                           stabilizer_indices(space, group, rep).size(), regular, inv});
    out.total += filtered[id];
  }
  return out;
}

bool Report::clean() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.counterexamples.empty(); });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

FieldElement elliptic_beta(const FieldSpec& spec) {
  for (const auto& b : enumerate(spec)) {
    if (!b.is_zero() && !is_square(-b)) return b;
  }
  throw Error(ErrorKind::InternalError, "no non-square in GF(p)");
}

FieldElement hyperbolic_beta(const FieldSpec& spec) {
  for (const auto& b : enumerate(spec)) {
    if (!b.is_zero() && is_square(-b)) return b;
  }
  throw Error(ErrorKind::InternalError, "no nonzero square in GF(p)");
}

std::vector<NormalForm> all_normal_forms(const FieldElement& beta) {
  const FieldSpec& spec = beta.spec();
  const QuadAlgebra alg(beta);
  const auto elements = enumerate(alg);
  std::map<FieldElement, std::vector<QuadElement>> by_norm;
  for (const auto& x : elements) by_norm[norm(x)].push_back(x);
  const FieldElement zero = FieldElement::zero(spec);
  const FieldElement one = FieldElement::one(spec);
  const DiagonalBasis standard{{one, zero}, {zero, one}, beta};
  std::vector<NormalForm> out;
  for (const auto& a : elements) {
    const auto it = by_norm.find(norm(a) + one);
    if (it == by_norm.end()) continue;
    for (const auto& c : it->second) out.push_back({alg, a, c, standard});
  }
  return out;
}

namespace {

struct Context {
  const LawSpace& space;
  const OrbitPartition& parts;
  const std::vector<Mat2>& gl;
  const std::vector<LinearAction>& group;
};

CheckResult check_equivalence(const Context& ctx, const std::vector<bool>& nondegenerate,
                              const CrossValidateOptions& opt) {
  CheckResult res{"equiv_vs_orbits", 0, {}};
  const EquivalencePredicate eq =
      opt.equivalence ? opt.equivalence : EquivalencePredicate([](const Sbl& f, const Sbl& g) {
        return equivalent(f, g);
      });

  auto run = [&](LawCode x, LawCode y) {
    ++res.cases;
    const Sbl f = ctx.space.decode(x);
    const Sbl g = ctx.space.decode(y);
    const bool same = ctx.parts.orbit_of[x] == ctx.parts.orbit_of[y];
    const EquivResult r = eq(f, g);
    const bool said_same = r.verdict == Verdict::Equivalent;
    json detail = pair_json(f, g);
    if (r.verdict == Verdict::Unknown || said_same != same) {
      detail["orbit_membership"] = same;
      detail["result"] = io::equiv_to_json(r);
      res.counterexamples.push_back({{"check", res.name}, {"case", detail}});
      return;
    }
    if (said_same && (!r.witness || !(act(*r.witness, f) == g))) {
      detail["result"] = io::equiv_to_json(r);
      detail["problem"] = "witness missing or does not transport the law";
      res.counterexamples.push_back({{"check", res.name}, {"case", detail}});
    }
  };

  std::vector<LawCode> reps;
  for (auto r : ctx.parts.representatives) {
    if (nondegenerate[r]) reps.push_back(r);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) run(reps[i], reps[j]);
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<LawCode> law_dist(0, ctx.space.size() - 1);
  std::uniform_int_distribution<std::size_t> group_dist(0, ctx.group.size() - 1);
  auto random_law = [&] {
    LawCode x = 0;
    do {
      x = law_dist(rng);
    } while (!nondegenerate[x]);
    return x;
  };
  for (std::size_t k = 0; k < opt.random_pairs; ++k) {
    const LawCode x = random_law();
    const LawCode y = (k % 2 == 0) ? ctx.space.apply(ctx.group[group_dist(rng)], x) : random_law();
    run(x, y);
  }
  return res;
}

}  // namespace

Report cross_validate(std::int64_t p, const CrossValidateOptions& opt) {
  require_prime(p, opt.limits.census_max_p, "cross-validation");
  const LawSpace space(p);
  const FieldSpec& spec = space.spec();
  const OrbitPartition parts = partition(space);
  const std::vector<Mat2> gl = enumerate_gl(p, opt.limits);
  std::vector<LinearAction> group;
  group.reserve(gl.size());
  for (const auto& u : gl) group.push_back(space.action(u));
  const Context ctx{space, parts, gl, group};
  const bool full = opt.full_stabilizers.value_or(p <= 5);
  const std::uint64_t order = gl_order(p);

  std::vector<bool> is_rep(space.size(), false);
  for (auto r : parts.representatives) is_rep[r] = true;
  std::vector<bool> nondegenerate(space.size(), false);
  for (LawCode code = 0; code < space.size(); ++code) {
    nondegenerate[code] = !qform(space.decode(code)).is_degenerate();
  }

  Report report{p, opt.seed, {}};
  report.checks.push_back(check_equivalence(ctx, nondegenerate, opt));

  CheckResult orbit_stab{"orbit_stabilizer", 0, {}};
  CheckResult iso{"isotropy_vs_stabilizer", 0, {}};
  CheckResult j_vs_i{"j_vs_i", 0, {}};
  CheckResult j_den{"j_denominator_vs_regularity", 0, {}};
  auto fail = [](CheckResult& c, json detail) {
    c.counterexamples.push_back({{"check", c.name}, {"case", std::move(detail)}});
  };

  for (LawCode code = 0; code < space.size(); ++code) {
    const bool brute = full || is_rep[code];
    std::vector<std::size_t> stab;
    std::uint64_t stab_size = 0;
    if (brute) {
      stab = stabilizer_indices(space, group, code);
      stab_size = stab.size();
      ++orbit_stab.cases;
      if (parts.sizes[parts.orbit_of[code]] * stab_size != order) {
        fail(orbit_stab, {{"law", io::law_to_json(space.decode(code))},
                          {"orbit_size", parts.sizes[parts.orbit_of[code]]},
                          {"stabilizer_size", stab_size}});
      }
    } else {
      stab_size = order / parts.sizes[parts.orbit_of[code]];
    }
    if (!nondegenerate[code]) continue;

    const Sbl f = space.decode(code);
    const NormalForm nf = normal_form(f);

    ++iso.cases;
    const IsotropyDescription desc = isotropy(nf);
    bool iso_ok = desc.order() == stab_size;
    if (iso_ok && brute) {
      std::vector<std::array<std::int64_t, 4>> predicted, actual;
      for (const auto& m : isotropy_matrices(nf, desc)) predicted.push_back(mat_key(m));
      for (auto i : stab) actual.push_back(mat_key(gl[i]));
      std::sort(predicted.begin(), predicted.end());
      std::sort(actual.begin(), actual.end());
      iso_ok = predicted == actual;
    }
    if (!iso_ok) {
      fail(iso, {{"law", io::law_to_json(f)},
                 {"normal_form", io::normal_form_to_json(nf)},
                 {"isotropy", io::isotropy_to_json(nf, desc)},
                 {"stabilizer_size", stab_size}});
    }

    ++j_den.cases;
    const bool regular = is_regular(f);
    const bool d_zero = j_denominator(nf).is_zero();
    if (d_zero == regular) {
      fail(j_den, {{"law", io::law_to_json(f)}, {"regular", regular}, {"denominator_zero", d_zero}});
    }
    if (regular && !d_zero) {
      ++j_vs_i.cases;
      const JInvariants j = invariants_J(nf);
      const IInvariants i = invariants_I(f);
      if (!(j.j1 == i.i1) || !(j.j2 == i.i2)) {
        fail(j_vs_i, {{"law", io::law_to_json(f)},
                      {"J", {io::value_to_json(j.j1), io::value_to_json(j.j2)}},
                      {"I", {io::value_to_json(i.i1), io::value_to_json(i.i2)}}});
      }
    }
  }
  report.checks.push_back(std::move(orbit_stab));
  report.checks.push_back(std::move(iso));
  report.checks.push_back(std::move(j_vs_i));
  report.checks.push_back(std::move(j_den));

  CheckResult param{"normal_form_parametrization", 0, {}};
  CheckResult criteria{"invariant_criteria", 0, {}};
  CheckResult j_inv{"j_invariance", 0, {}};
  CheckResult g_orbit{"g_orbit_stabilizer", 0, {}};
  for (const FieldElement& beta : {elliptic_beta(spec), hyperbolic_beta(spec)}) {
    const std::vector<NormalForm> nfs = all_normal_forms(beta);
    const QuadraticForm target{-FieldElement::one(spec), FieldElement::zero(spec), -beta};

    // Laws with attached form diag(-1, -beta) are exactly the normal-form laws.
    std::vector<LawCode> image;
    for (const auto& nf : nfs) image.push_back(space.encode(from_normal_form(nf)));
    std::sort(image.begin(), image.end());
    std::vector<LawCode> direct;
    for (LawCode code = 0; code < space.size(); ++code) {
      if (qform(space.decode(code)) == target) direct.push_back(code);
    }
    ++param.cases;
    const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    if (image != direct || !injective) {
      fail(param, {{"beta", io::value_to_json(beta)},
                   {"normal_forms", nfs.size()},
                   {"laws_with_form", direct.size()},
                   {"injective", injective}});
    }

    // G-orbits of normal forms.
    const QuadAlgebra alg(beta);
    std::vector<GTransform> gcal;
    for (const auto& l : norm_one_group(alg)) {
      gcal.push_back({GKind::Phi, l});
      gcal.push_back({GKind::Psi, l});
    }
    std::map<std::pair<QuadElement, QuadElement>, std::size_t> index;
    for (std::size_t i = 0; i < nfs.size(); ++i) index.emplace(std::make_pair(nfs[i].a, nfs[i].c), i);
    std::vector<std::size_t> orbit_id(nfs.size(), SIZE_MAX);
    std::vector<std::size_t> orbit_size;
    for (std::size_t i = 0; i < nfs.size(); ++i) {
      if (orbit_id[i] != SIZE_MAX) continue;
      const std::size_t id = orbit_size.size();
      std::size_t count = 0;
      for (const auto& t : gcal) {
        const NormalForm img = apply_g(t, nfs[i]);
        const std::size_t k = index.at({img.a, img.c});
        if (orbit_id[k] == SIZE_MAX) {
          orbit_id[k] = id;
          ++count;
        }
      }
      orbit_size.push_back(count);
    }

    std::vector<FieldElement> na, kk;
    std::vector<std::optional<JInvariants>> jv;
    for (const auto& nf : nfs) {
      na.push_back(invariant_Na(nf));
      kk.push_back(invariant_K(nf));
      jv.push_back(j_denominator(nf).is_zero() ? std::nullopt : std::optional(invariants_J(nf)));
      ++g_orbit.cases;
      const IsotropyDescription desc = isotropy(nf);
      bool fixes = true;
      for (const auto& t : desc.elements()) {
        const NormalForm img = apply_g(t, nf);
        fixes = fixes && img.a == nf.a && img.c == nf.c;
      }
      const std::size_t id = orbit_id[index.at({nf.a, nf.c})];
      if (!fixes || orbit_size[id] * desc.order() != gcal.size()) {
        fail(g_orbit, {{"normal_form", io::normal_form_to_json(nf)},
                       {"orbit_size", orbit_size[id]},
                       {"isotropy", io::isotropy_to_json(nf, desc)}});
      }
    }

    for (std::size_t i = 0; i < nfs.size(); ++i) {
      const auto& x = nfs[i];
      for (std::size_t j = 0; j < nfs.size(); ++j) {
        const auto& y = nfs[j];
        const bool same = orbit_id[i] == orbit_id[j];
        const bool invariants_equal = na[i] == na[j] && kk[i] == kk[j];
        if (jv[i] && jv[j]) {
          ++j_inv.cases;
          const bool j_equal = *jv[i] == *jv[j];
          if ((same && !j_equal) || j_equal != invariants_equal) {
            fail(j_inv, {{"first", io::normal_form_to_json(x)},
                         {"second", io::normal_form_to_json(y)},
                         {"same_orbit", same},
                         {"j_equal", j_equal},
                         {"na_k_equal", invariants_equal}});
          }
        }
        ++criteria.cases;
        bool predicted = false;
        if (x.a.is_zero()) {
          predicted = y.a.is_zero() &&
                      (is_cube(alg, y.c / x.c) || is_cube(alg, y.c / conj(x.c)));
        } else if (x.c.is_zero()) {
          predicted = y.c.is_zero() && invariants_equal;
        } else {
          predicted = !y.a.is_zero() && !y.c.is_zero() && invariants_equal;
        }
        if (predicted != same) {
          fail(criteria, {{"first", io::normal_form_to_json(x)},
                        {"second", io::normal_form_to_json(y)},
                        {"same_orbit", same},
                        {"predicted", predicted}});
        }
      }
    }
  }
  report.checks.push_back(std::move(param));
  report.checks.push_back(std::move(criteria));
  report.checks.push_back(std::move(j_inv));
  report.checks.push_back(std::move(g_orbit));
  return report;
}

json census_to_json(const Census& c) {
  json orbits = json::array();
  for (const auto& r : c.records) {
    json rec = {{"representative", io::law_to_json(r.representative)["coeffs"]},
                {"orbit_size", r.orbit_size},
                {"filtered_count", r.filtered_count},
                {"stabilizer_size", r.stabilizer_size},
                {"regular", r.regular}};
    if (r.invariants) {
      rec["invariants"] = {{"I1", io::value_to_json(r.invariants->i1)},
                           {"I2", io::value_to_json(r.invariants->i2)}};
    }
    orbits.push_back(std::move(rec));
  }
  json out = {{"p", c.p},
              {"filter", std::string(to_string(c.filter))},
              {"total", c.total},
              {"orbit_count", c.records.size()},
              {"orbits", std::move(orbits)}};
  if (c.beta) out["beta"] = io::value_to_json(*c.beta);
  return out;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"counterexamples", c.counterexamples}});
  }
  return {{"p", r.p}, {"seed", r.seed}, {"clean", r.clean()}, {"checks", std::move(checks)}};
}

void write_fixtures(const Report& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Malformed, "cannot open fixture file " + path);
  for (const auto& c : r.checks) {
    for (const auto& ce : c.counterexamples) {
      json line = ce;
      line["p"] = r.p;
      out << line.dump() << '\n';
    }
  }
}

}  // namespace quadlaw::oracle
