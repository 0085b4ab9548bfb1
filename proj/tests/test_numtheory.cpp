#include <doctest.h>

#include <cmath>
#include <map>

#include "abelmax/errors.hpp"
#include "abelmax/numtheory.hpp"

using namespace abelmax;
using namespace abelmax::nt;

namespace {

bool prime_by_trial(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

// g(n) as the product over primes p <= n of every prime power p^i <= n.
BigInt g_direct(std::uint64_t n)
{
  BigInt g = 1;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!prime_by_trial(p))
      continue;
    for (std::uint64_t q = p; q <= n; q *= p)
      g *= q;
  }
  return g;
}

BigInt h_direct(std::uint64_t n)
{
  BigInt h = 1;
  for (std::uint64_t p = n / 2 + 1; p <= n; ++p) {
    if (prime_by_trial(p))
      h *= p;
  }
  return h;
}

} // namespace

TEST_CASE("sieve agrees with trial division")
{
  auto const primes = sieve_primes(5000);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    if (prime_by_trial(n))
      expected.push_back(n);
  }
  CHECK(primes == expected);
  CHECK(sieve_primes(0).empty());
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("parallel sieve equals serial sieve")
{
  for (std::uint64_t limit : {0ull, 1ull, 2ull, 3ull, 100ull, 262143ull, 262144ull, 262145ull,
                              1'000'003ull, 3'000'000ull}) {
    for (int w : {1, 2, 4})
      CHECK(sieve_primes_parallel(limit, w) == sieve_primes(limit));
  }
}

TEST_CASE("miller-rabin")
{
  for (std::uint64_t n = 0; n < 20000; ++n)
    CHECK(is_prime(n) == prime_by_trial(n));
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(18446744073709551615ull));
  CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to 2,3,5,7
  CHECK(is_prime(4294967291ull));
}

TEST_CASE("primes in (lower, upper]")
{
  CHECK(primes_in_halfopen(3.0, 6.0) == std::vector<std::uint64_t>{5});
  CHECK(primes_in_halfopen(2.5, 5.0) == std::vector<std::uint64_t>{3, 5});
  CHECK(primes_in_halfopen(5.0, 10.0) == std::vector<std::uint64_t>{7});
  CHECK(primes_in_halfopen(2.0, 3.0) == std::vector<std::uint64_t>{3});
  CHECK_THROWS_AS(primes_in_halfopen(5.0, 5.0), std::invalid_argument);
}

TEST_CASE("large-prime count exceptions")
{
  CHECK(large_prime_count_exceptions(100) == std::vector<std::uint64_t>{4, 6, 10});
  // brute oracle on a small range
  for (std::uint64_t m = 3; m <= 300; ++m) {
    int count = 0;
    for (std::uint64_t p = m / 2 + 1; p <= m; ++p)
      count += prime_by_trial(p) && 2 * p > m;
    bool const listed = std::ranges::count(large_prime_count_exceptions(300), m) == 1;
    CHECK(listed == (count < 2));
  }
}

TEST_CASE("nagura scan")
{
  auto const scan = nagura_scan(100000);
  CHECK(scan.limit == 100000);
  CHECK(scan.violations.empty());
  for (auto x : scan.endpoint_only)
    CHECK(x % 5 == 0);
}

TEST_CASE("factored integers")
{
  auto const a = FactoredInteger::from_u64(95040);
  CHECK(a.factor_string() == "2^6.3^3.5.11");
  CHECK(a.value() == 95040);
  CHECK(a.exponent(3) == 3);
  CHECK(a.exponent(7) == 0);
  CHECK(a.p_part(2) == 64);
  CHECK(a.primes() == std::vector<std::uint64_t>{2, 3, 5, 11});
  CHECK(a.to_u64() == 95040);

  auto const b = FactoredInteger::from_u64(7920);
  CHECK(b.divides(a));
  CHECK(b.quotient_into(a).value() == 12);
  CHECK_FALSE(a.divides(b));
  CHECK((a * b).value() == BigInt(95040) * 7920);
  CHECK(std::abs(a.log() - std::log(95040.0)) < 1e-9);

  CHECK(FactoredInteger().value() == 1);
  CHECK(FactoredInteger::from_u64(1).factors().empty());
  CHECK(FactoredInteger::from_factors({{2, 3}, {7, 1}}).value() == 56);
  CHECK_THROWS(FactoredInteger::from_factors({{4, 1}}));
  CHECK_THROWS(FactoredInteger::from_factors({{3, 0}}));
  CHECK_THROWS(FactoredInteger::from_u64(0));

  auto const huge = g_of(200);
  CHECK_FALSE(huge.fits_u64());
  CHECK_THROWS_AS(huge.to_u64(), std::overflow_error);
}

TEST_CASE("xi")
{
  CHECK(xi(2, 8) == 3);
  CHECK(xi(2, 7) == 2);
  CHECK(xi(3, 9) == 2);
  CHECK(xi(5, 5) == 1);
  CHECK_THROWS(xi(5, 4));
  CHECK_THROWS(xi(4, 16));
  auto const prof = xi_profile(10);
  CHECK(prof.entries == std::map<std::uint64_t, std::uint32_t>{{2, 3}, {3, 2}, {5, 1}, {7, 1}});
}

TEST_CASE("g and h goldens")
{
  CHECK(g_of(2).value() == 2);
  CHECK(g_of(3).value() == 6);
  CHECK(g_of(4).value() == 24);
  CHECK(g_of(5).value() == 120);
  CHECK(g_of(6).value() == 120);
  CHECK(g_of(11).value() == 665280);
  CHECK(h_of(6).value() == 5);
  CHECK(h_of(10).value() == 7);
  CHECK(h_of(13).value() == 7 * 11 * 13);
  CHECK(g_of(1).value() == 1);
}

TEST_CASE("g and h against direct products")
{
  for (std::uint64_t n = 1; n <= 120; ++n) {
    CHECK(g_of(n).value() == g_direct(n));
    CHECK(h_of(n).value() == h_direct(n));
    if (n >= 2) {
      CHECK(h_of(n).divides(g_of(n)));
      CHECK(f_of(n).value() == n * g_direct(n) / h_direct(n));
    }
  }
}

TEST_CASE("f and its logarithm")
{
  for (std::uint64_t n : {16ull, 100ull, 1000ull, 5000ull})
    CHECK(std::abs(f_log(n) - f_of(n).log()) < 1e-6 * f_log(n));
  CHECK_THROWS_AS(f_of(kExactFCap + 1), CapacityError);
}

TEST_CASE("asymptotic ratio")
{
  auto const r3 = asymptotic_ratio(1000);
  auto const r6 = asymptotic_ratio(1000000);
  CHECK(r6.ratio >= 0.99);
  CHECK(r6.ratio <= 1.01);
  CHECK(std::abs(r6.ratio - 1) < std::abs(r3.ratio - 1));
  CHECK(r3.ratio == doctest::Approx(r3.log_f / 500.0));
  CHECK(asymptotic_ratio(10000).ratio < r3.ratio);
  CHECK_THROWS(asymptotic_ratio(15));
}
