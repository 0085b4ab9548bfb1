#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace abelmax::nt {

using BigInt = boost::multiprecision::cpp_int;

/// Exact f(n) is only offered up to this n; f_log has no cap.
inline constexpr std::uint64_t kExactFCap = 100000;

// --- primes ---------------------------------------------------------------

/// Ascending primes <= limit. Serial sieve of Eratosthenes over odd numbers.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Same result as sieve_primes, computed with an OpenMP segmented sieve.
std::vector<std::uint64_t> sieve_primes_parallel(std::uint64_t limit, int workers = 0);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes p with lower < p <= upper. The lower bound is compared exactly.
std::vector<std::uint64_t> primes_in_halfopen(double lower, double upper);

/// All m in [3, limit] with fewer than two primes in (m/2, m].
std::vector<std::uint64_t> large_prime_count_exceptions(std::uint64_t limit);

/// Integers x in [25, limit] inspected against the "prime in (x, 6x/5)" bound.
struct NaguraScan
{
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> violations;     // no prime in (x, 6x/5]
  std::vector<std::uint64_t> endpoint_only;  // only prime is exactly 6x/5 (open-interval reading fails)
};
NaguraScan nagura_scan(std::uint64_t limit);

// --- factored integers ----------------------------------------------------

/// A positive integer carried both as prime -> exponent and as an exact value.
class FactoredInteger
{
public:
  FactoredInteger() = default; // 1

  /// Validates that every key is prime and every exponent positive.
  static FactoredInteger from_factors(std::map<std::uint64_t, std::uint32_t> factors);
  /// Trial-division factorisation; n must be >= 1.
  static FactoredInteger from_u64(std::uint64_t n);

  std::map<std::uint64_t, std::uint32_t> const &factors() const noexcept { return factors_; }
  BigInt const &value() const noexcept { return value_; }

  std::uint32_t exponent(std::uint64_t p) const;
  /// p^exponent(p) as an exact value.
  BigInt p_part(std::uint64_t p) const;
  std::vector<std::uint64_t> primes() const;

  bool divides(FactoredInteger const &other) const;
  /// other / *this; requires divides(other).
  FactoredInteger quotient_into(FactoredInteger const &other) const;

  /// Natural log summed from the factorisation.
  double log() const;
  /// Value as uint64 when it fits; throws std::overflow_error otherwise.
  std::uint64_t to_u64() const;
  bool fits_u64() const;
  std::string to_string() const { return value_.str(); }
  /// e.g. "2^6.3^3.5.11"
  std::string factor_string() const;

  friend FactoredInteger operator*(FactoredInteger const &a, FactoredInteger const &b);
  friend bool operator==(FactoredInteger const &a, FactoredInteger const &b)
  {
    return a.factors_ == b.factors_;
  }

private:
  void recompute_value();

  std::map<std::uint64_t, std::uint32_t> factors_;
  BigInt value_ = 1;
};

/// Natural log of a nonnegative big integer (-inf for 0).
double log_big(BigInt const &x);

// --- the arithmetic functions ---------------------------------------------

/// The unique e >= 1 with p^e <= n < p^(e+1). Throws if n < p or p is not prime.
std::uint32_t xi(std::uint64_t p, std::uint64_t n);

struct XiProfile
{
  std::uint64_t n = 0;
  std::map<std::uint64_t, std::uint32_t> entries;
};
XiProfile xi_profile(std::uint64_t n);

/// Product of all prime powers <= n, built from exponents xi(xi+1)/2.
FactoredInteger g_of(std::uint64_t n);
/// Product of the primes in (n/2, n].
FactoredInteger h_of(std::uint64_t n);
/// n * g(n) / h(n); throws CapacityError above kExactFCap.
FactoredInteger f_of(std::uint64_t n);
/// log f(n) summed over primes, no big product formed.
double f_log(std::uint64_t n);

struct AsymptoticSample
{
  std::uint64_t n = 0;
  double log_f = 0.0;
  double ratio = 0.0; // log_f / (n/2)
};
/// Requires n >= 16.
AsymptoticSample asymptotic_ratio(std::uint64_t n);

} // namespace abelmax::nt
