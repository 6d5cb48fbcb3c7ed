#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadlaw/classify.hpp"

/// Brute-force ground truth over small prime fields. Nothing here uses the
/// Clifford parametrization; it only enumerates GL(2, p) and applies act().
namespace quadlaw::oracle {

struct Limits {
  std::int64_t census_max_p = 7;
  std::int64_t orbit_max_p = 13;
};

/// (p^2 - 1)(p^2 - p).
std::uint64_t gl_order(std::int64_t p);

/// Every invertible 2x2 matrix over GF(p), once. Throws TooLarge above the
/// single-orbit ceiling.
std::vector<Mat2> enumerate_gl(std::int64_t p, const Limits& limits = {});

/// Two matrices generating GL(2, p): diag(g, 1) for a primitive root g, and
/// (-1, 1; -1, 0).
std::array<Mat2, 2> gl_generators(std::int64_t p);

using LawCode = std::uint32_t;

/// Matrix of the linear map F -> act(u, F) on the 6 coefficients.
struct LinearAction {
  std::array<std::int64_t, 36> m{};
};

/// All laws over GF(p), coded as base-p integers in [0, p^6) with digits
/// (a1, b1, c1, a2, b2, c2), most significant first.
class LawSpace {
 public:
  explicit LawSpace(std::int64_t p);

  std::int64_t p() const noexcept { return p_; }
  const FieldSpec& spec() const noexcept { return spec_; }
  LawCode size() const noexcept { return size_; }

  LawCode encode(const Sbl& f) const;
  Sbl decode(LawCode code) const;

  LinearAction action(const Mat2& u) const;
  LawCode apply(const LinearAction& a, LawCode code) const;

 private:
  std::int64_t p_;
  FieldSpec spec_;
  LawCode size_;
};

/// The exact GL(2, p)-orbit of f, sorted by code.
std::vector<Sbl> orbit(const Sbl& f, const Limits& limits = {});
/// The exact stabilizer of f, by scanning GL(2, p).
std::vector<Mat2> stabilizer(const Sbl& f, const Limits& limits = {});

enum class CensusFilter { All, QFormEqualsN, Regular };

std::string_view to_string(CensusFilter f) noexcept;
/// "all", "qN", "regular". Throws Malformed.
CensusFilter filter_from_string(std::string_view s);

struct OrbitRecord {
  Sbl representative;  // smallest code in the orbit
  std::uint64_t orbit_size;
  std::uint64_t filtered_count;  // members of the orbit passing the filter
  std::uint64_t stabilizer_size;  // brute force, independent of orbit_size
  bool regular;
  std::optional<IInvariants> invariants;
};

struct Census {
  std::int64_t p;
  CensusFilter filter;
  std::optional<FieldElement> beta;
  std::uint64_t total;  // cardinality of the filtered set
  std::vector<OrbitRecord> records;
};

/// GL(2, p)-orbit decomposition of all p^6 laws, reported for the orbits that
/// meet the filter. QFormEqualsN keeps laws with attached Gram diag(-1, -beta).
/// Throws TooLarge above the census ceiling.
Census census(std::int64_t p, CensusFilter filter, std::optional<std::int64_t> beta = {},
              const Limits& limits = {});

/// Orbit id of every law code; ids are dense, assigned in increasing code order.
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;
  std::vector<LawCode> representatives;
  std::vector<std::uint64_t> sizes;
};

OrbitPartition partition(const LawSpace& space);

/// Brute-force stabilizer of a coded law given precomputed actions of every
/// group element; returns indices into `group`.
std::vector<std::size_t> stabilizer_indices(const LawSpace& space,
                                            const std::vector<LinearAction>& group, LawCode code);

using EquivalencePredicate = std::function<EquivResult(const Sbl&, const Sbl&)>;

struct CrossValidateOptions {
  std::uint64_t seed = 1;
  std::size_t random_pairs = 1000;
  /// Compare isotropy element sets on every law; otherwise on representatives
  /// only (orders are compared on every law either way). Defaults to p <= 5.
  std::optional<bool> full_stabilizers;
  /// Defaults to quadlaw::equivalent.
  EquivalencePredicate equivalence;
  Limits limits;
};

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<nlohmann::json> counterexamples;
};

struct Report {
  std::int64_t p;
  std::uint64_t seed;
  std::vector<CheckResult> checks;

  bool clean() const;
  const CheckResult* find(std::string_view name) const;
};

/// Checks every classification result against brute force over GF(p):
/// equivalence vs orbits, isotropy vs stabilizers, J vs I, the N(a)/K
/// criteria on normal forms, and the normal-form parametrization.
Report cross_validate(std::int64_t p, const CrossValidateOptions& options = {});

nlohmann::json census_to_json(const Census& c);
nlohmann::json report_to_json(const Report& r);

/// One JSON object per line; each counterexample carries its check name.
void write_fixtures(const Report& r, const std::string& path);

/// A beta with -beta a non-square (elliptic) and one with -beta a square.
FieldElement elliptic_beta(const FieldSpec& spec);
FieldElement hyperbolic_beta(const FieldSpec& spec);

/// Every normal form (a, c) with N(c) - N(a) = 1 over the algebra of beta,
/// with the standard basis as provenance.
std::vector<NormalForm> all_normal_forms(const FieldElement& beta);

}  // namespace quadlaw::oracle
