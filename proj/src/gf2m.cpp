#include "abelmax/gf2m.hpp"

#include <stdexcept>
#include <string>

namespace abelmax {

GF2m::GF2m(unsigned a) : a_(a)
{
  switch (a) {
  case 2: modulus_ = 0b111; break;
  case 3: modulus_ = 0b1011; break;
  case 4: modulus_ = 0b10011; break;
  case 5: modulus_ = 0b100101; break;
  default:
    throw std::invalid_argument("GF2m: degree must be in {2,3,4,5}, got " + std::to_string(a));
  }
}

std::uint32_t GF2m::mul(std::uint32_t x, std::uint32_t y) const noexcept
{
  std::uint32_t acc = 0;
  while (y) {
    if (y & 1u)
      acc ^= x;
    y >>= 1u;
    x <<= 1u;
    if (x & size())
      x ^= modulus_;
  }
  return acc;
}

std::uint32_t GF2m::pow(std::uint32_t x, std::uint64_t e) const noexcept
{
  std::uint32_t result = 1;
  while (e) {
    if (e & 1u)
      result = mul(result, x);
    x = mul(x, x);
    e >>= 1u;
  }
  return result;
}

std::uint32_t GF2m::inverse(std::uint32_t x) const
{
  if (x == 0)
    throw std::domain_error("GF2m: zero has no inverse");
  return pow(x, size() - 2);
}

std::uint32_t GF2m::multiplicative_order(std::uint32_t x) const
{
  if (x == 0)
    throw std::domain_error("GF2m: zero has no multiplicative order");
  std::uint32_t k = 1;
  for (std::uint32_t y = x; y != 1; y = mul(y, x))
    ++k;
  return k;
}

} // namespace abelmax
