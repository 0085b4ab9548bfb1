#include "abelmax/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "abelmax/errors.hpp"

namespace abelmax::nt {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1u)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1u;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n)
{
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

// pi(k) for k = 0..limit
std::vector<std::uint32_t> prime_counts(std::uint64_t limit)
{
  std::vector<std::uint32_t> counts(limit + 1, 0);
  auto const primes = sieve_primes(limit);
  std::size_t next = 0;
  std::uint32_t running = 0;
  for (std::uint64_t k = 0; k <= limit; ++k) {
    if (next < primes.size() && primes[next] == k) {
      ++running;
      ++next;
    }
    counts[k] = running;
  }
  return counts;
}

std::uint32_t xi_unchecked(std::uint64_t p, std::uint64_t n)
{
  std::uint32_t e = 1;
  std::uint64_t power = p;
  while (power <= n / p) {
    power *= p;
    ++e;
  }
  return e;
}

} // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit)
{
  std::vector<std::uint64_t> primes;
  if (limit < 2)
    return primes;
  primes.push_back(2);

  // composite[i] describes the odd number 2i+1
  std::vector<bool> composite((limit - 1) / 2 + 1, false);
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i])
      continue;
    std::uint64_t const p = 2 * i + 1;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += 2 * p)
      composite[q / 2] = true;
  }
  return primes;
}

std::vector<std::uint64_t> sieve_primes_parallel(std::uint64_t limit, int workers)
{
  if (limit < 2)
    return {};

  auto const root = isqrt(limit);
  auto const base = sieve_primes(root);

  constexpr std::uint64_t kSegment = 1u << 18;
  std::uint64_t const n_segments = limit / kSegment + 1;
  std::vector<std::vector<std::uint64_t>> found(n_segments);

  int const threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(n_segments); ++s) {
    std::uint64_t const lo = static_cast<std::uint64_t>(s) * kSegment;
    std::uint64_t const hi = std::min(limit, lo + kSegment - 1);
    std::vector<char> is_comp(hi - lo + 1, 0);

    for (auto p : base) {
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t q = start; q <= hi; q += p)
        is_comp[q - lo] = 1;
    }

    auto &out = found[static_cast<std::size_t>(s)];
    for (std::uint64_t k = std::max<std::uint64_t>(lo, 2); k <= hi; ++k) {
      if (!is_comp[k - lo])
        out.push_back(k);
    }
  }

  std::vector<std::uint64_t> primes;
  for (auto const &seg : found)
    primes.insert(primes.end(), seg.begin(), seg.end());
  return primes;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0)
      return n == p;
  }

  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++r;
  }

  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_halfopen(double lower, double upper)
{
  if (!(lower < upper))
    throw std::invalid_argument("primes_in_halfopen: lower bound must be below upper bound");
  if (upper < 2.0)
    return {};

  auto const hi = static_cast<std::uint64_t>(std::floor(upper));
  std::vector<std::uint64_t> result;
  for (auto p : sieve_primes(hi)) {
    if (static_cast<double>(p) > lower)
      result.push_back(p);
  }
  return result;
}

std::vector<std::uint64_t> large_prime_count_exceptions(std::uint64_t limit)
{
  if (limit < 3)
    throw std::invalid_argument("large_prime_count_exceptions: limit must be >= 3");

  auto const pi = prime_counts(limit);
  std::vector<std::uint64_t> result;
  for (std::uint64_t m = 3; m <= limit; ++m) {
    // integer p > m/2 iff p > floor(m/2)
    if (pi[m] - pi[m / 2] < 2)
      result.push_back(m);
  }
  return result;
}

NaguraScan nagura_scan(std::uint64_t limit)
{
  NaguraScan scan;
  scan.limit = limit;
  if (limit < 25)
    return scan;

  auto const top = limit * 6 / 5 + 1;
  auto const pi = prime_counts(top);
  for (std::uint64_t x = 25; x <= limit; ++x) {
    // closed upper end floor(6x/5); it is exactly 6x/5 only when 5 | x
    std::uint64_t const upper = 6 * x / 5;
    std::uint32_t const closed = pi[upper] - pi[x];
    if (closed == 0) {
      scan.violations.push_back(x);
    } else if (closed == 1 && x % 5 == 0 && is_prime(upper)) {
      scan.endpoint_only.push_back(x);
    }
  }
  return scan;
}

// --- FactoredInteger -------------------------------------------------------

FactoredInteger FactoredInteger::from_factors(std::map<std::uint64_t, std::uint32_t> factors)
{
  FactoredInteger out;
  for (auto const &[p, e] : factors) {
    if (!is_prime(p))
      throw std::invalid_argument("FactoredInteger: key " + std::to_string(p) + " is not prime");
    if (e == 0)
      throw std::invalid_argument("FactoredInteger: zero exponent for " + std::to_string(p));
  }
  out.factors_ = std::move(factors);
  out.recompute_value();
  return out;
}

FactoredInteger FactoredInteger::from_u64(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("FactoredInteger: zero has no factorisation");

  std::map<std::uint64_t, std::uint32_t> factors;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++factors[p];
      n /= p;
    }
  }
  if (n > 1)
    ++factors[n];

  FactoredInteger out;
  out.factors_ = std::move(factors);
  out.recompute_value();
  return out;
}

void FactoredInteger::recompute_value()
{
  value_ = 1;
  for (auto const &[p, e] : factors_)
    value_ *= boost::multiprecision::pow(BigInt(p), e);
}

std::uint32_t FactoredInteger::exponent(std::uint64_t p) const
{
  auto it = factors_.find(p);
  return it == factors_.end() ? 0u : it->second;
}

BigInt FactoredInteger::p_part(std::uint64_t p) const
{
  return boost::multiprecision::pow(BigInt(p), exponent(p));
}

std::vector<std::uint64_t> FactoredInteger::primes() const
{
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (auto const &kv : factors_)
    out.push_back(kv.first);
  return out;
}

bool FactoredInteger::divides(FactoredInteger const &other) const
{
  for (auto const &[p, e] : factors_) {
    if (other.exponent(p) < e)
      return false;
  }
  return true;
}

FactoredInteger FactoredInteger::quotient_into(FactoredInteger const &other) const
{
  if (!divides(other))
    throw std::invalid_argument("FactoredInteger: " + to_string() + " does not divide " +
                                other.to_string());
  FactoredInteger out;
  for (auto const &[p, e] : other.factors_) {
    auto const remaining = e - exponent(p);
    if (remaining > 0)
      out.factors_[p] = remaining;
  }
  out.recompute_value();
  return out;
}

double FactoredInteger::log() const
{
  double sum = 0.0;
  for (auto const &[p, e] : factors_)
    sum += e * std::log(static_cast<double>(p));
  return sum;
}

bool FactoredInteger::fits_u64() const
{
  return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t FactoredInteger::to_u64() const
{
  if (!fits_u64())
    throw std::overflow_error("FactoredInteger: value does not fit in 64 bits");
  return value_.convert_to<std::uint64_t>();
}

std::string FactoredInteger::factor_string() const
{
  if (factors_.empty())
    return "1";
  std::string out;
  for (auto const &[p, e] : factors_) {
    if (!out.empty())
      out += '.';
    out += std::to_string(p);
    if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

FactoredInteger operator*(FactoredInteger const &a, FactoredInteger const &b)
{
  FactoredInteger out = a;
  for (auto const &[p, e] : b.factors_)
    out.factors_[p] += e;
  out.value_ = a.value_ * b.value_;
  return out;
}

double log_big(BigInt const &x)
{
  if (x <= 0)
    return -std::numeric_limits<double>::infinity();
  auto const bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60)
    return std::log(x.convert_to<double>());
  auto const shift = bits - 60;
  BigInt const top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

// --- g, h, f ---------------------------------------------------------------

std::uint32_t xi(std::uint64_t p, std::uint64_t n)
{
  if (!is_prime(p))
    throw std::invalid_argument("xi: " + std::to_string(p) + " is not prime");
  if (n < p)
    throw std::invalid_argument("xi: n must be at least p");
  return xi_unchecked(p, n);
}

XiProfile xi_profile(std::uint64_t n)
{
  if (n < 2)
    throw std::invalid_argument("xi_profile: n must be at least 2");
  XiProfile profile;
  profile.n = n;
  for (auto p : sieve_primes(n))
    profile.entries[p] = xi_unchecked(p, n);
  return profile;
}

FactoredInteger g_of(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("g_of: n must be positive");
  if (n == 1)
    return {};

  std::map<std::uint64_t, std::uint32_t> factors;
  for (auto p : sieve_primes(n)) {
    auto const e = xi_unchecked(p, n);
    factors[p] = e * (e + 1) / 2;
  }
  return FactoredInteger::from_factors(std::move(factors));
}

FactoredInteger h_of(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("h_of: n must be positive");

  std::map<std::uint64_t, std::uint32_t> factors;
  for (auto p : sieve_primes(n)) {
    if (2 * p > n)
      factors[p] = 1;
  }
  return FactoredInteger::from_factors(std::move(factors));
}

FactoredInteger f_of(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("f_of: n must be positive");
  if (n > kExactFCap)
    throw CapacityError("exact f(n) cap", kExactFCap, n);
  return h_of(n).quotient_into(FactoredInteger::from_u64(n) * g_of(n));
}

double f_log(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("f_log: n must be positive");

  double sum = std::log(static_cast<double>(n));
  for (auto p : sieve_primes(n)) {
    double const lp = std::log(static_cast<double>(p));
    auto const e = xi_unchecked(p, n);
    sum += (e * (e + 1) / 2) * lp;
    if (2 * p > n)
      sum -= lp;
  }
  return sum;
}

AsymptoticSample asymptotic_ratio(std::uint64_t n)
{
  if (n < 16)
    throw std::invalid_argument("asymptotic_ratio: n must be at least 16");
  AsymptoticSample sample;
  sample.n = n;
  sample.log_f = f_log(n);
  sample.ratio = sample.log_f / (static_cast<double>(n) / 2.0);
  return sample;
}

} // namespace abelmax::nt
