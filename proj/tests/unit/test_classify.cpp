#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "quadlaw/classify.hpp"

using namespace quadlaw;

namespace {

const FieldSpec kGF5 = FieldSpec::prime(5);
const FieldSpec kGF7 = FieldSpec::prime(7);
const FieldSpec kQ = FieldSpec::rational();

FieldElement v(const FieldSpec& s, std::int64_t x) { return {s, x}; }
FieldElement r(const char* s) { return FieldElement::parse(kQ, s); }

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

DiagonalBasis standard(const FieldElement& beta) {
  const FieldSpec& s = beta.spec();
  return {{FieldElement::one(s), FieldElement::zero(s)}, {FieldElement::zero(s), FieldElement::one(s)}, beta};
}

NormalForm nf_of(const QuadAlgebra& alg, QuadElement a, QuadElement c) {
  return {alg, std::move(a), std::move(c), standard(alg.beta())};
}

std::vector<Mat2> gl2(const FieldSpec& s) {
  std::vector<Mat2> out;
  const auto vals = enumerate(s);
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals)
        for (const auto& d : vals)
          if (!(a * d - b * c).is_zero()) out.push_back({a, b, c, d});
  return out;
}

// Every (a, c) with N(c) - N(a) = 1, by scanning the whole algebra twice.
std::vector<NormalForm> brute_normal_forms(const QuadAlgebra& alg) {
  std::vector<NormalForm> out;
  const auto all = enumerate(alg);
  for (const auto& a : all)
    for (const auto& c : all)
      if ((norm(c) - norm(a)).is_one()) out.push_back(nf_of(alg, a, c));
  return out;
}

QuadElement as_element(const QuadAlgebra& alg, const Vec2& x) { return {alg, x.x1, x.x2}; }

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  FieldElement value(const FieldSpec& s) {
    if (s.is_prime()) return {s, static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(s.characteristic()))};
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return {s, mpq_class(num(gen), den(gen))};
  }
  Sbl law(const FieldSpec& s) { return Sbl({value(s), value(s), value(s), value(s), value(s), value(s)}); }
  Mat2 invertible(const FieldSpec& s) {
    for (;;) {
      Mat2 m{value(s), value(s), value(s), value(s)};
      if (!m.det().is_zero()) return m;
    }
  }
};

}  // namespace

TEST_CASE("represent_minus_one") {
  const QuadraticForm xy{v(kGF5, 0), v(kGF5, 3), v(kGF5, 0)};  // q12 = 1/2 = 3 mod 5
  REQUIRE(xy.value({v(kGF5, 1), v(kGF5, 1)}) == v(kGF5, 1));
  const auto w = represent_minus_one(xy);
  REQUIRE(w.has_value());
  CHECK(*w == Vec2{v(kGF5, 1), v(kGF5, 4)});

  CHECK(*represent_minus_one({r("-1"), r("0"), r("-1")}) == Vec2{r("1"), r("0")});
  CHECK_FALSE(represent_minus_one({r("1"), r("0"), r("1")}).has_value());
  expect_error(ErrorKind::Degenerate, [] { (void)represent_minus_one({r("1"), r("1"), r("1")}); });

  // x1^2 - 2 x2^2 takes -1 only off the coordinate axes.
  const auto found = represent_minus_one({r("1"), r("0"), r("-2")});
  REQUIRE(found.has_value());
  CHECK(QuadraticForm{r("1"), r("0"), r("-2")}.value(*found) == r("-1"));
}

TEST_CASE("diagonalize") {
  const QuadraticForm xy{v(kGF5, 0), v(kGF5, 3), v(kGF5, 0)};
  const DiagonalBasis b = diagonalize(xy);
  CHECK(b.v1 == Vec2{v(kGF5, 1), v(kGF5, 4)});
  CHECK(b.v2 == Vec2{v(kGF5, 1), v(kGF5, 1)});
  CHECK(b.beta == v(kGF5, 4));

  const DiagonalBasis d = diagonalize({v(kGF5, 4), v(kGF5, 0), v(kGF5, 3)});
  CHECK(d.v1 == Vec2{v(kGF5, 1), v(kGF5, 0)});
  CHECK(d.v2 == Vec2{v(kGF5, 0), v(kGF5, 1)});
  CHECK(d.beta == v(kGF5, 2));

  for (const FieldSpec& s : {kGF5, kGF7}) {
    for (const auto& q11 : enumerate(s))
      for (const auto& q12 : enumerate(s))
        for (const auto& q22 : enumerate(s)) {
          const QuadraticForm q{q11, q12, q22};
          if (q.is_degenerate()) {
            expect_error(ErrorKind::Degenerate, [&] { (void)diagonalize(q); });
            continue;
          }
          const DiagonalBasis e = diagonalize(q);
          CHECK(q.value(e.v1) == -FieldElement::one(s));
          CHECK(q.value(e.v2) == -e.beta);
          CHECK(q.polar(e.v1, e.v2).is_zero());
          CHECK_FALSE(e.beta.is_zero());
        }
  }
  expect_error(ErrorKind::Unknown, [] { (void)diagonalize({r("1"), r("0"), r("1")}); });
}

TEST_CASE("coefficient correspondence") {
  for (const char* b : {"3", "-5/2"}) {
    const QuadAlgebra A(r(b));
    const CliffordParams p{QuadElement::zero(A), QuadElement::one(A), QuadElement::zero(A)};
    const Sbl f = from_clifford_params(p);
    CHECK(f.a1() == r("2"));
    CHECK(f.c1() == r("2") * A.beta());
    CHECK(f.b1().is_zero());
    CHECK(f.a2().is_zero());
    CHECK(f.b2().is_zero());
    CHECK(f.c2().is_zero());
  }

  Rng rng(1);
  for (std::int64_t beta = 1; beta < 7; ++beta) {
    const QuadAlgebra A(v(kGF7, beta));
    const auto elems = enumerate(A);
    for (int i = 0; i < 60; ++i) {
      auto pick = [&] { return elems[rng.gen() % elems.size()]; };
      const CliffordParams p{pick(), pick(), pick()};
      const Sbl f = from_clifford_params(p);
      const CliffordParams back = to_clifford_params(f, standard(A.beta()));
      CHECK(back.a == p.a);
      CHECK(back.b == p.b);
      CHECK(back.c == p.c);
    }
  }

  // The coefficient law agrees pointwise with the algebra expression.
  for (std::int64_t beta : {2, 4}) {
    const QuadAlgebra A(v(kGF5, beta));
    const auto elems = enumerate(A);
    for (int i = 0; i < 20; ++i) {
      auto pick = [&] { return elems[rng.gen() % elems.size()]; };
      const CliffordParams p{pick(), pick(), pick()};
      const Sbl f = from_clifford_params(p);
      for (const auto& x : elems)
        for (const auto& y : elems) {
          const Vec2 fx = evaluate(f, {x.x0(), x.x12()}, {y.x0(), y.x12()});
          REQUIRE(as_element(A, fx) == evaluate_params(p, x, y));
        }
    }
  }
}

TEST_CASE("normal form parametrization over GF(5)") {
  for (std::int64_t beta : {2, 4}) {
    const QuadAlgebra A(v(kGF5, beta));
    const auto nfs = brute_normal_forms(A);
    CHECK(nfs.size() == 120);
    const QuadraticForm target{v(kGF5, -1), v(kGF5, 0), -A.beta()};

    // Every law with attached form N, found by scanning all 5^6 laws.
    std::vector<Sbl> with_form;
    const auto vals = enumerate(kGF5);
    for (const auto& a1 : vals)
      for (const auto& b1 : vals)
        for (const auto& c1 : vals)
          for (const auto& a2 : vals)
            for (const auto& b2 : vals)
              for (const auto& c2 : vals) {
                const Sbl f({a1, b1, c1, a2, b2, c2});
                if (qform(f) == target) with_form.push_back(f);
              }
    CHECK(with_form.size() == 120);

    std::vector<std::array<std::int64_t, 6>> image, direct;
    auto key = [](const Sbl& f) {
      std::array<std::int64_t, 6> k{};
      for (std::size_t i = 0; i < 6; ++i) k[i] = f.coeffs()[i].residue();
      return k;
    };
    for (const auto& nf : nfs) {
      const Sbl f = from_normal_form(nf);
      CHECK(qform(f) == target);
      image.push_back(key(f));
    }
    for (const auto& f : with_form) {
      direct.push_back(key(f));
      const NormalForm nf = normal_form(f, standard(A.beta()));
      CHECK((norm(nf.c) - norm(nf.a)).is_one());
      CHECK(from_normal_form(nf) == f);
      CHECK(to_clifford_params(f, standard(A.beta())).b.is_zero());
    }
    std::sort(image.begin(), image.end());
    std::sort(direct.begin(), direct.end());
    CHECK(image == direct);
  }
}

TEST_CASE("from_normal_form examples") {
  for (std::int64_t beta : {2, 3}) {
    const QuadAlgebra A(v(kGF7, beta));
    const Sbl f = from_normal_form(nf_of(A, QuadElement::zero(A), QuadElement::one(A)));
    CHECK(f.a1().is_one());
    CHECK(f.c1() == -A.beta());
    CHECK(f.b2() == v(kGF7, -1));
    CHECK(f.a2().is_zero());
    CHECK(f.b1().is_zero());
    CHECK(f.c2().is_zero());
    // conj(x y) on the algebra.
    const CliffordParams p{QuadElement::zero(A), QuadElement::zero(A), QuadElement::one(A)};
    CHECK(from_clifford_params(p) == f);
  }
  // a x y with N(a) = -1 and c = 0.
  const QuadAlgebra A(v(kGF5, 2));
  const QuadElement a(A, 2, 0);
  REQUIRE(norm(a) == v(kGF5, -1));
  const NormalForm nf = normal_form(from_normal_form(nf_of(A, a, QuadElement::zero(A))), standard(A.beta()));
  CHECK(nf.c.is_zero());
  CHECK(nf.a == a);
}

TEST_CASE("normal_form on arbitrary laws") {
  Rng rng(2);
  for (const FieldSpec& s : {kGF5, kGF7, kQ}) {
    int done = 0;
    for (int i = 0; i < 400; ++i) {
      const Sbl f = rng.law(s);
      if (qform(f).is_degenerate()) {
        expect_error(ErrorKind::Degenerate, [&] { (void)normal_form(f); });
        continue;
      }
      std::optional<NormalForm> found;
      try {
        found = normal_form(f);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unknown);
        CHECK(s.is_rational());
        continue;
      }
      ++done;
      const NormalForm& nf = *found;
      CHECK((norm(nf.c) - norm(nf.a)).is_one());
      CHECK(to_original_coordinates(nf) == f);
      const QuadraticForm q = qform(f);
      CHECK(q.value(nf.basis.v1) == FieldElement(s, -1));
      CHECK(q.value(nf.basis.v2) == -nf.algebra.beta());
      CHECK(q.polar(nf.basis.v1, nf.basis.v2).is_zero());
    }
    CHECK(done > 100);
  }
}

TEST_CASE("K and N(a)") {
  const QuadAlgebra A(v(kGF5, 2));
  const NormalForm zero_a = nf_of(A, QuadElement::zero(A), QuadElement::one(A));
  CHECK(invariant_K(zero_a).is_zero());
  CHECK(invariant_Na(zero_a).is_zero());
  const NormalForm zero_c = nf_of(A, QuadElement(A, 2, 0), QuadElement::zero(A));
  CHECK(invariant_K(zero_c).is_zero());
  CHECK(invariant_Na(zero_c) == v(kGF5, -1));

  const QuadElement tau(A, 0, 1);
  CHECK(norm(tau) == v(kGF5, 2));
  for (const auto& c : enumerate(A)) {
    if (norm(c) != v(kGF5, 3)) continue;
    const QuadElement t = power(tau, 3) * c;
    const QuadElement sum = t + conj(t);
    CHECK(sum.is_scalar());
    CHECK(invariant_K(nf_of(A, tau, c)) == sum.x0());
  }
}

TEST_CASE("J-invariants and their inversion") {
  const QuadAlgebra A(v(kGF5, 2));
  const JInvariants j0 = invariants_J(nf_of(A, QuadElement::zero(A), QuadElement::one(A)));
  CHECK(j0.j1.is_zero());
  CHECK(j0.j2.is_zero());

  // c = 0 forces N(a) = -1: over Q take beta = -2, a = 1 + tau (N = 1 - 2 = -1).
  const QuadAlgebra Am(r("-2"));
  const NormalForm zc = nf_of(Am, QuadElement(Am, r("1"), r("1")), QuadElement::zero(Am));
  REQUIRE(invariant_Na(zc) == r("-1"));
  CHECK(j_denominator(zc) == r("-1"));
  const JInvariants jc = invariants_J(zc);
  CHECK(jc.j1 == r("27"));
  CHECK(jc.j2 == r("-54"));

  CHECK(recover_from_J(r("0"), r("0")) == KNa{r("0"), r("0")});
  CHECK(recover_from_J(r("27"), r("-54")) == KNa{r("0"), r("-1")});
  // 12 j1 - 8 j2 - 27 = 0 at (j1, j2) = (9/4, 0).
  expect_error(ErrorKind::Indeterminate, [] { (void)recover_from_J(r("9/4"), r("0")); });

  for (std::int64_t beta : {2, 4}) {
    const QuadAlgebra B(v(kGF5, beta));
    std::size_t checked = 0;
    for (const auto& nf : brute_normal_forms(B)) {
      const Sbl law = from_normal_form(nf);
      const bool d_zero = j_denominator(nf).is_zero();
      CHECK(d_zero == !is_regular(law));
      if (d_zero) {
        expect_error(ErrorKind::NotRegular, [&] { (void)invariants_J(nf); });
        continue;
      }
      const JInvariants j = invariants_J(nf);
      const IInvariants i = invariants_I(law);
      CHECK(j.j1 == i.i1);
      CHECK(j.j2 == i.i2);
      const FieldElement rec_den = FieldElement(kGF5, 12) * j.j1 - FieldElement(kGF5, 8) * j.j2 - FieldElement(kGF5, 27);
      if (!rec_den.is_zero()) {
        CHECK(recover_from_J(j.j1, j.j2) == KNa{invariant_K(nf), invariant_Na(nf)});
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("isometry group action on normal forms") {
  for (std::int64_t beta : {2, 4}) {
    const QuadAlgebra A(v(kGF5, beta));
    const auto g = norm_one_group(A);
    const auto nfs = brute_normal_forms(A);
    for (const auto& nf : nfs) {
      const auto id = apply_g({GKind::Phi, QuadElement::one(A)}, nf);
      CHECK(id.a == nf.a);
      CHECK(id.c == nf.c);
    }
    for (const auto& l : g) {
      for (const auto& m : g) {
        for (std::size_t k = 0; k < nfs.size(); k += 7) {
          const auto& nf = nfs[k];
          const auto lm = apply_g({GKind::Phi, l}, apply_g({GKind::Phi, m}, nf));
          const auto direct = apply_g({GKind::Phi, l * m}, nf);
          CHECK(lm.a == direct.a);
          CHECK(lm.c == direct.c);
        }
      }
      for (const auto& nf : nfs) {
        for (GKind kind : {GKind::Phi, GKind::Psi}) {
          const GTransform t{kind, l};
          const NormalForm img = apply_g(t, nf);
          CHECK((norm(img.c) - norm(img.a)).is_one());
          // The coefficient law moves by the matrix of the transform.
          CHECK(act(t.matrix(), from_normal_form(nf)) == from_normal_form(img));
          if (!j_denominator(nf).is_zero()) CHECK(invariants_J(img) == invariants_J(nf));
        }
        const auto twice = apply_g({GKind::Psi, l}, apply_g({GKind::Psi, l}, nf));
        CHECK(twice.a == nf.a);
        CHECK(twice.c == nf.c);
      }
    }
    expect_error(ErrorKind::DegenerateInput, [&] { (void)apply_g({GKind::Phi, QuadElement(A, 2, 0)}, nfs.front()); });
  }
}

TEST_CASE("isotropy examples") {
  const QuadAlgebra E(v(kGF5, 2));
  const IsotropyDescription e = isotropy(nf_of(E, QuadElement::zero(E), QuadElement::one(E)));
  const std::vector<QuadElement> roots{QuadElement::one(E), QuadElement(E, 2, 1), QuadElement(E, 2, 4)};
  auto sorted = [](std::vector<QuadElement> x) {
    std::sort(x.begin(), x.end());
    return x;
  };
  CHECK(e.case_tag == IsotropyCase::NormZero);
  CHECK(sorted(e.phi_lambdas) == sorted(roots));
  CHECK(sorted(e.psi_lambdas) == sorted(roots));
  CHECK(e.order() == 6);

  const QuadAlgebra H(v(kGF5, 4));
  const IsotropyDescription h = isotropy(nf_of(H, QuadElement::zero(H), QuadElement::one(H)));
  CHECK(h.phi_lambdas == std::vector{QuadElement::one(H)});
  CHECK(h.psi_lambdas == std::vector{QuadElement::one(H)});
  CHECK(h.order() == 2);

  // An order-two case with a outside the ground field.
  bool seen = false;
  for (const auto& nf : brute_normal_forms(E)) {
    if (nf.a.is_scalar() || norm(nf.a).is_zero()) continue;
    if (!(power(nf.a, 3) * nf.c).is_scalar()) continue;
    const IsotropyDescription d = isotropy(nf);
    REQUIRE(d.case_tag == IsotropyCase::OrderTwo);
    REQUIRE(d.psi_lambdas.size() == 1);
    CHECK(d.psi_lambdas[0] == conj(nf.a) / nf.a);
    const NormalForm img = apply_g({GKind::Psi, d.psi_lambdas[0]}, nf);
    CHECK(img.a == nf.a);
    CHECK(img.c == nf.c);
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("isotropy agrees with brute-force stabilizers over GF(5)") {
  const auto group = gl2(kGF5);
  REQUIRE(group.size() == 480);
  for (std::int64_t beta : {2, 4}) {
    const QuadAlgebra A(v(kGF5, beta));
    for (const auto& nf : brute_normal_forms(A)) {
      const Sbl f = from_normal_form(nf);
      std::vector<std::array<std::int64_t, 4>> brute, predicted;
      for (const auto& u : group) {
        if (act(u, f) == f) brute.push_back({u.m11.residue(), u.m12.residue(), u.m21.residue(), u.m22.residue()});
      }
      const IsotropyDescription d = isotropy(nf);
      for (const auto& m : isotropy_matrices(nf, d)) {
        predicted.push_back({m.m11.residue(), m.m12.residue(), m.m21.residue(), m.m22.residue()});
      }
      std::sort(brute.begin(), brute.end());
      std::sort(predicted.begin(), predicted.end());
      CHECK(brute == predicted);
    }
  }
}

TEST_CASE("hyperbolic zero-divisor a has trivial isotropy") {
  // a != 0 with N(a) = 0 only happens for split algebras; nothing but the
  // identity fixes such a normal form.
  const auto group = gl2(kGF5);
  const QuadAlgebra H(v(kGF5, 4));
  std::size_t cases = 0;
  for (const auto& nf : brute_normal_forms(H)) {
    if (nf.a.is_zero() || !norm(nf.a).is_zero()) continue;
    ++cases;
    const IsotropyDescription d = isotropy(nf);
    CHECK(d.case_tag == IsotropyCase::Trivial);
    CHECK(d.order() == 1);
    const Sbl f = from_normal_form(nf);
    std::size_t fixed = 0;
    for (const auto& u : group) fixed += act(u, f) == f ? 1 : 0;
    CHECK(fixed == 1);
  }
  CHECK(cases > 0);
}

TEST_CASE("equivalence examples") {
  const QuadAlgebra E(v(kGF5, 2));
  const Sbl f01 = from_normal_form(nf_of(E, QuadElement::zero(E), QuadElement::one(E)));
  const Sbl f02 = from_normal_form(nf_of(E, QuadElement::zero(E), QuadElement(E, 2, 1)));
  const Sbl f04 = from_normal_form(nf_of(E, QuadElement::zero(E), QuadElement(E, 4, 0)));

  const EquivResult no = equivalent(f01, f02);
  CHECK(no.verdict == Verdict::NotEquivalent);
  CHECK_FALSE(no.witness.has_value());
  CHECK(invariants_J(nf_of(E, QuadElement::zero(E), QuadElement(E, 2, 1))) ==
        invariants_J(nf_of(E, QuadElement::zero(E), QuadElement::one(E))));

  const EquivResult yes = equivalent(f01, f04);
  REQUIRE(yes.verdict == Verdict::Equivalent);
  REQUIRE(yes.witness.has_value());
  CHECK(act(*yes.witness, f01) == f04);

  Rng rng(9);
  for (const FieldSpec& s : {kGF5, kGF7}) {
    for (int i = 0; i < 200; ++i) {
      const Sbl f = rng.law(s);
      if (qform(f).is_degenerate()) {
        expect_error(ErrorKind::Degenerate, [&] { (void)equivalent(f, f); });
        continue;
      }
      const Mat2 u = rng.invertible(s);
      const EquivResult res = equivalent(f, act(u, f));
      REQUIRE(res.verdict == Verdict::Equivalent);
      REQUIRE(res.witness.has_value());
      CHECK(act(*res.witness, f) == act(u, f));
    }
  }
}

TEST_CASE("equivalence over Q") {
  Rng rng(10);
  const QuadAlgebra A(r("1"));
  std::size_t equivalent_found = 0;
  for (int i = 0; i < 50; ++i) {
    Sbl f = rng.law(kQ);
    if (qform(f).is_degenerate()) continue;
    const Mat2 u = rng.invertible(kQ);
    const EquivResult res = equivalent(f, act(u, f));
    CHECK(res.verdict != Verdict::NotEquivalent);
    if (res.verdict == Verdict::Equivalent) {
      REQUIRE(res.witness.has_value());
      CHECK(act(*res.witness, f) == act(u, f));
      ++equivalent_found;
    }
  }
  CHECK(equivalent_found > 10);

  // Attached forms -x1^2 - x2^2 and -x1^2 - 2 x2^2 have different discriminants.
  const QuadAlgebra B(r("2"));
  const Sbl f1 = from_normal_form(nf_of(A, QuadElement::zero(A), QuadElement::one(A)));
  const Sbl f2 = from_normal_form(nf_of(B, QuadElement::zero(B), QuadElement::one(B)));
  CHECK(equivalent(f1, f2).verdict == Verdict::NotEquivalent);

  // c'/c = 2 is not a cube in Q(i); 8 is.
  const Sbl g1 = from_normal_form(nf_of(A, QuadElement::zero(A), QuadElement(A, r("3/5"), r("4/5"))));
  const EquivResult cube = equivalent(f1, g1);
  // (3 + 4i)/5 = ((2 + i)/(2 - i)), a cube iff (2 + i)/(2 - i) is; it is not.
  CHECK(cube.verdict == Verdict::NotEquivalent);
  const QuadElement w(A, r("3/5"), r("4/5"));
  const Sbl g3 = from_normal_form(nf_of(A, QuadElement::zero(A), w * w * w));
  const EquivResult cubed = equivalent(f1, g3);
  REQUIRE(cubed.verdict == Verdict::Equivalent);
  CHECK(act(*cubed.witness, f1) == g3);

  // A law whose attached form x1^2 + x2^2 never takes the value -1.
  const Sbl pos(kQ, {1, 0, -1, 0, 1, 0});
  REQUIRE(qform(pos) == QuadraticForm{r("1"), r("0"), r("1")});
  const EquivResult unknown = equivalent(pos, pos);
  CHECK(unknown.verdict == Verdict::Unknown);
  CHECK_FALSE(unknown.reason.empty());
  expect_error(ErrorKind::Unknown, [&] { (void)normal_form(pos); });
}

TEST_CASE("c = 0 equivalences use a phi witness") {
  for (std::int64_t beta : {2, 4}) {
    const QuadAlgebra A(v(kGF5, beta));
    std::vector<NormalForm> zero_c;
    for (const auto& nf : brute_normal_forms(A)) {
      if (nf.c.is_zero()) zero_c.push_back(nf);
    }
    REQUIRE(!zero_c.empty());
    for (const auto& x : zero_c) {
      for (const auto& y : zero_c) {
        const EquivResult res = equivalent(from_normal_form(x), from_normal_form(y));
        REQUIRE(res.verdict == Verdict::Equivalent);
        REQUIRE(res.transform.has_value());
        CHECK(res.transform->kind == GKind::Phi);
      }
    }
  }
}
