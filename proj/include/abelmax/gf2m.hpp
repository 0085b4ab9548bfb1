#pragma once

#include <cstdint>

namespace abelmax {

/// The field with 2^a elements, a in {2,3,4,5}, as bit-polynomials reduced
/// modulo a pinned primitive polynomial:
///   a=2: x^2+x+1   a=3: x^3+x+1   a=4: x^4+x+1   a=5: x^5+x^2+1
class GF2m
{
public:
  explicit GF2m(unsigned a);

  unsigned degree() const noexcept { return a_; }
  std::uint32_t size() const noexcept { return 1u << a_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// The class of x, a generator of the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return 2u; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept { return x ^ y; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for zero.
  std::uint32_t inverse(std::uint32_t x) const;
  /// x -> x^2, generator of the Galois group.
  std::uint32_t frobenius(std::uint32_t x) const noexcept { return mul(x, x); }
  /// Least k >= 1 with x^k == 1; throws std::domain_error for zero.
  std::uint32_t multiplicative_order(std::uint32_t x) const;

private:
  unsigned a_;
  std::uint32_t modulus_;
};

} // namespace abelmax
