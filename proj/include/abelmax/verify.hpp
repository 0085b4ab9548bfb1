#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelmax/catalog.hpp"
#include "abelmax/numtheory.hpp"
#include "abelmax/search.hpp"

namespace abelmax {

struct VerifyConfig
{
  std::uint64_t brute_cap = kDefaultBruteCap;
  std::uint64_t enum_cap = kDefaultEnumCap;
  int workers = 1;
  /// Sylow subgroups enter the lemma suite only for groups up to this order.
  std::uint64_t lemma_order_cap = 10000;
};

/// A group with its computed m(G); shared by every check.
struct GroupAnalysis
{
  std::string id;
  PermGroup group;
  MaxAbelianResult max_abelian;

  std::uint64_t m() const noexcept { return max_abelian.m; }
};

GroupAnalysis analyze(std::string id, PermGroup group, VerifyConfig const &cfg = {});
GroupAnalysis analyze(GroupSpec const &spec, VerifyConfig const &cfg = {});
std::vector<GroupAnalysis> analyze_all(std::span<GroupSpec const> specs, VerifyConfig const &cfg = {});

/// Isomorphism stand-in: order, abelianness, multiset of element orders.
struct GroupFingerprint
{
  nt::BigInt order;
  bool abelian = false;
  std::map<std::uint64_t, std::uint64_t> element_orders;

  friend bool operator==(GroupFingerprint const &, GroupFingerprint const &) = default;
};

GroupFingerprint fingerprint(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);
/// n in 2..5 when the fingerprint matches S_n, nullopt otherwise.
std::optional<int> matches_small_symmetric(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);
bool matches_s3(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);
bool matches_a5(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);
/// A5, PSL2(p) with p > 5 and (p+1)/2 prime, or a simple group of the order of J1 or J3.
bool is_two_large_prime_simple(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);

// --- reports ---------------------------------------------------------------

enum class CheckStatus { pass, fail, expected_exception, unverified };
std::string_view status_name(CheckStatus s);

struct TheoremCheck
{
  std::string theorem; // A | goh | lemma | burnside | two_prime | equality | classify
  std::string group_id;
  bool passed = false;
  CheckStatus status = CheckStatus::fail;
  std::optional<std::uint64_t> m;
  nt::BigInt order;
  /// Every number used to reach the verdict, in insertion order.
  std::vector<std::pair<std::string, nt::BigInt>> detail;
  /// Name of the detail entry that goes into the CSV key column.
  std::string key_detail;
  std::string note;

  nt::BigInt const *find(std::string_view key) const;
};

struct ReportSummary
{
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t expected_exceptions = 0;
  std::size_t unverified = 0;
};

struct VerificationReport
{
  std::string suite;
  std::vector<TheoremCheck> checks;

  ReportSummary summary() const;
  /// No check has status fail.
  bool ok() const { return summary().failed == 0; }
  void append(VerificationReport const &other);
};

// --- single-group checks -------------------------------------------------

/// |G| divides g(m).
TheoremCheck theorem_a_check(GroupAnalysis const &a, VerifyConfig const &cfg = {});

/// Some prime p in (m/2, m] with |G| | p g(m)/h(m); also records whether
/// |G| <= m g(m)/h(m). S3 and A5 are the named exceptions; groups with two
/// large primes are outside the divisibility hypothesis.
TheoremCheck theorem_goh_check(GroupAnalysis const &a, VerifyConfig const &cfg = {});

enum class LargePrimeCase {
  none,
  case1_frobenius,
  case2_s3,
  case3_agammal,
  case4_almost_simple,
  unclassified,
};
std::string_view case_name(LargePrimeCase c);

struct LargePrimeReport
{
  std::string group_id;
  nt::FactoredInteger order;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> large_primes; // primes dividing |G| above m/2
  std::uint64_t prime = 0;                 // the prime the case refers to (largest)
  LargePrimeCase which = LargePrimeCase::none;
  std::string note;
};

LargePrimeReport large_primes(GroupAnalysis const &a);
LargePrimeReport classify_large_prime_case(GroupAnalysis const &a, VerifyConfig const &cfg = {});

// --- catalog scans ---------------------------------------------------------

VerificationReport theorem_a_suite(std::span<GroupAnalysis const> groups, VerifyConfig const &cfg = {});
VerificationReport goh_suite(std::span<GroupAnalysis const> groups, VerifyConfig const &cfg = {});
VerificationReport two_large_prime_scan(std::span<GroupAnalysis const> groups,
                                        VerifyConfig const &cfg = {});
VerificationReport equality_scan(std::span<GroupAnalysis const> groups, VerifyConfig const &cfg = {});
VerificationReport classify_suite(std::span<GroupAnalysis const> groups, VerifyConfig const &cfg = {});

/// Named p-groups for the lemma suite.
struct NamedGroup
{
  std::string id;
  PermGroup group;
};

/// Sylow subgroups of every group of order <= cfg.lemma_order_cap, plus the
/// fixed extras (dihedral 2-groups, elementary abelian groups, Sylows of S6..S8).
std::vector<NamedGroup> lemma_inputs(std::span<GroupAnalysis const> groups,
                                     VerifyConfig const &cfg = {}, bool with_extras = true);
VerificationReport lemma_suite(std::span<NamedGroup const> p_groups, VerifyConfig const &cfg = {});

/// suite: a | goh | lemma | twoprime | equality | classify | all.
/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view suite, std::span<GroupAnalysis const> groups,
                             VerifyConfig const &cfg = {});
std::vector<std::string> suite_names();

// --- serialization ---------------------------------------------------------

std::string to_json(VerificationReport const &r);
std::string to_csv(VerificationReport const &r);
std::string to_text(VerificationReport const &r);
std::string to_json(LargePrimeReport const &r);

} // namespace abelmax
