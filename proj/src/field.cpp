#include "quadlaw/field.hpp"

#include <algorithm>
#include <cctype>

#include "quadlaw/detail/cyclic_root.hpp"

namespace quadlaw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::Characteristic: return "Characteristic";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::Unknown: return "Unknown";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "?";
}

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;
constexpr std::int64_t kExhaustiveSqrtLimit = 10000;

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t base, std::uint64_t e, std::int64_t p) {
  std::int64_t result = 1 % p;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  // Fermat; p is prime.
  return powmod(a, static_cast<std::uint64_t>(p - 2), p);
}

std::int64_t reduce_rational(const mpq_class& q, std::int64_t p) {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw Error(ErrorKind::DegenerateInput,
                "denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
  }
  std::int64_t n = mod(num.get_si(), p);
  std::int64_t d = mod(den.get_si(), p);
  return mulmod(n, invmod(d, p), p);
}

std::optional<std::int64_t> tonelli_shanks(std::int64_t n, std::int64_t p) {
  if (n == 0) return 0;
  if (powmod(n, static_cast<std::uint64_t>((p - 1) / 2), p) != 1) return std::nullopt;
  std::int64_t q = p - 1;
  std::int64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (powmod(z, static_cast<std::uint64_t>((p - 1) / 2), p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = powmod(z, static_cast<std::uint64_t>(q), p);
  std::int64_t t = powmod(n, static_cast<std::uint64_t>(q), p);
  std::int64_t r = powmod(n, static_cast<std::uint64_t>((q + 1) / 2), p);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// Exact k-th root of a non-negative integer, if it is a perfect power.
std::optional<mpz_class> exact_root(const mpz_class& n, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) return r;
  return std::nullopt;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p == 2 || p == 3) {
    throw Error(ErrorKind::Characteristic, "characteristic 2 and 3 are not supported");
  }
  if (!is_prime_number(p)) {
    throw Error(ErrorKind::Characteristic, std::to_string(p) + " is not a prime");
  }
  if (p > kMaxPrime) {
    throw Error(ErrorKind::Characteristic, "prime exceeds 2^31 - 1");
  }
  return FieldSpec{p};
}

std::string FieldSpec::describe() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

FieldElement::FieldElement(const FieldSpec& spec, std::int64_t value) : spec_(spec) {
  if (spec.is_prime()) {
    value_ = mod(value, spec.characteristic());
  } else {
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  }
}

FieldElement::FieldElement(const FieldSpec& spec, const mpq_class& value) : spec_(spec) {
  if (spec.is_prime()) {
    value_ = reduce_rational(value, spec.characteristic());
  } else {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
  }
}

FieldElement FieldElement::parse(const FieldSpec& spec, const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::Malformed, "not a field value: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    }
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  };
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Malformed, "zero denominator in '" + text + "'");
  return {spec, mpq_class(num, den)};
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::int64_t FieldElement::residue() const {
  if (!spec_.is_prime()) throw Error(ErrorKind::Unsupported, "residue() on a rational value");
  return std::get<std::int64_t>(value_);
}

const mpq_class& FieldElement::rational() const {
  if (!spec_.is_rational()) throw Error(ErrorKind::Unsupported, "rational() on a residue");
  return std::get<mpq_class>(value_);
}

std::string FieldElement::to_string() const {
  if (spec_.is_prime()) return std::to_string(std::get<std::int64_t>(value_));
  const auto& q = std::get<mpq_class>(value_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void FieldElement::require_same(const FieldElement& other) const {
  if (!(spec_ == other.spec_)) {
    throw Error(ErrorKind::SpecMismatch,
                "field mismatch: " + spec_.describe() + " vs " + other.spec_.describe());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (spec_.is_prime()) {
    auto& r = std::get<std::int64_t>(out.value_);
    r = r == 0 ? 0 : p() - r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same(rhs);
  if (spec_.is_prime()) {
    auto& r = std::get<std::int64_t>(value_);
    r += std::get<std::int64_t>(rhs.value_);
    if (r >= p()) r -= p();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same(rhs);
  if (spec_.is_prime()) {
    auto& r = std::get<std::int64_t>(value_);
    r -= std::get<std::int64_t>(rhs.value_);
    if (r < 0) r += p();
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same(rhs);
  if (spec_.is_prime()) {
    auto& r = std::get<std::int64_t>(value_);
    r = mulmod(r, std::get<std::int64_t>(rhs.value_), p());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same(rhs);
  return *this *= rhs.inv();
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::DegenerateInput, "division by zero");
  FieldElement out = *this;
  if (spec_.is_prime()) {
    auto& r = std::get<std::int64_t>(out.value_);
    r = invmod(r, p());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  return lhs.spec_ == rhs.spec_ && lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const FieldElement& lhs, const FieldElement& rhs) {
  lhs.require_same(rhs);
  if (lhs.spec_.is_prime()) {
    return std::get<std::int64_t>(lhs.value_) <=> std::get<std::int64_t>(rhs.value_);
  }
  const int c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

FieldElement power(const FieldElement& base, std::uint64_t exponent) {
  FieldElement result = FieldElement::one(base.spec());
  FieldElement b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

bool is_square(const FieldElement& x) {
  if (x.spec().is_prime()) {
    const std::int64_t p = x.spec().characteristic();
    return x.is_zero() || powmod(x.residue(), static_cast<std::uint64_t>((p - 1) / 2), p) == 1;
  }
  return sqrt(x).has_value();
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  if (spec.is_prime()) {
    const std::int64_t p = spec.characteristic();
    const std::int64_t n = x.residue();
    if (p <= kExhaustiveSqrtLimit) {
      for (std::int64_t y = 0; y <= p / 2; ++y) {
        if (mulmod(y, y, p) == n) return FieldElement(spec, y);
      }
      return std::nullopt;
    }
    auto r = tonelli_shanks(n, p);
    if (!r) return std::nullopt;
    return FieldElement(spec, std::min(*r, p - *r));
  }
  const mpq_class& q = x.rational();
  if (q < 0) return std::nullopt;
  auto num = exact_root(q.get_num(), 2);
  auto den = exact_root(q.get_den(), 2);
  if (!num || !den) return std::nullopt;
  return FieldElement(spec, mpq_class(*num, *den));
}

std::vector<FieldElement> cube_roots(const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  if (x.is_zero()) return {x};
  if (spec.is_rational()) {
    const mpq_class& q = x.rational();
    mpz_class num = q.get_num();
    const bool negative = num < 0;
    if (negative) num = -num;
    auto rn = exact_root(num, 3);
    auto rd = exact_root(q.get_den(), 3);
    if (!rn || !rd) return {};
    mpz_class n = negative ? mpz_class(-*rn) : *rn;
    return {FieldElement(spec, mpq_class(n, *rd))};
  }
  const std::int64_t p = spec.characteristic();
  const auto order = static_cast<std::uint64_t>(p - 1);
  if (order % 3 != 0) {
    // Cubing is a bijection; x^s with 3s = 1 mod (p - 1).
    std::uint64_t s = 1;
    while ((3 * s) % order != 1) ++s;
    return {power(x, s)};
  }
  FieldElement non_cube(spec, 2);
  while (power(non_cube, order / 3).is_one()) non_cube += FieldElement::one(spec);
  auto root = detail::cyclic_cube_root(x, FieldElement::one(spec), order, non_cube);
  if (!root) return {};
  const FieldElement omega = power(non_cube, order / 3);
  std::vector<FieldElement> roots{*root, *root * omega, *root * omega * omega};
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FieldElement> enumerate(const FieldSpec& spec) {
  if (!spec.is_prime()) throw Error(ErrorKind::Unsupported, "cannot enumerate Q");
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(spec.characteristic()));
  for (std::int64_t v = 0; v < spec.characteristic(); ++v) out.emplace_back(spec, v);
  return out;
}

std::string to_string(const FieldElement& x) { return x.to_string(); }

namespace {

mpz_class eval_cubic(const mpz_class& s, const mpz_class& a, const mpz_class& b) {
  return s * s * s + a * s + b;
}

// Integer root of a monotone cubic on [lo, hi].
std::optional<mpz_class> bisect_integer_root(mpz_class lo, mpz_class hi, const mpz_class& a,
                                             const mpz_class& b) {
  if (lo > hi) return std::nullopt;
  mpz_class flo = eval_cubic(lo, a, b);
  mpz_class fhi = eval_cubic(hi, a, b);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (sgn(flo) == sgn(fhi)) return std::nullopt;
  const bool increasing = flo < 0;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    mpz_class fm = eval_cubic(mid, a, b);
    if (fm == 0) return mid;
    if ((fm < 0) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<FieldElement> roots_depressed_cubic(const FieldElement& p, const FieldElement& q) {
  const FieldSpec& spec = p.spec();
  if (!(spec == q.spec())) throw Error(ErrorKind::SpecMismatch, "cubic coefficient mismatch");
  std::vector<FieldElement> roots;
  if (spec.is_prime()) {
    if (spec.characteristic() > kExhaustiveSqrtLimit) {
      throw Error(ErrorKind::Unsupported, "cubic root search limited to p <= 10^4");
    }
    for (const auto& t : enumerate(spec)) {
      if ((t * t * t + p * t + q).is_zero()) roots.push_back(t);
    }
    return roots;
  }
  // t = s / d turns the cubic monic with integer coefficients; rational
  // roots are then integers.
  const mpq_class& pq = p.rational();
  const mpq_class& qq = q.rational();
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), pq.get_den().get_mpz_t(), qq.get_den().get_mpz_t());
  const mpz_class a = mpz_class(pq * d * d);
  const mpz_class b = mpz_class(qq * d * d * d);
  const mpz_class bound = 1 + (abs(a) > abs(b) ? abs(a) : abs(b));

  std::vector<mpz_class> found;
  if (a >= 0) {
    if (auto r = bisect_integer_root(-bound, bound, a, b)) found.push_back(*r);
  } else {
    // Critical points at +-c, c = sqrt(-a/3); k = ceil(c).
    mpz_class k;
    mpz_class ceil_div = (-a + 2) / 3;
    mpz_sqrt(k.get_mpz_t(), ceil_div.get_mpz_t());
    while (k * k * 3 < -a) ++k;
    for (const mpz_class& s : {mpz_class(-k), k}) {
      if (eval_cubic(s, a, b) == 0) found.push_back(s);
    }
    if (auto r = bisect_integer_root(-bound, -k - 1, a, b)) found.push_back(*r);
    if (auto r = bisect_integer_root(k + 1, bound, a, b)) found.push_back(*r);
    if (k >= 1) {
      if (auto r = bisect_integer_root(-(k - 1), k - 1, a, b)) found.push_back(*r);
    }
  }
  for (const auto& s : found) {
    FieldElement t(spec, mpq_class(s, d));
    if (std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace quadlaw
