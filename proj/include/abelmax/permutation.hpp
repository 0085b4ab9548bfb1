#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelmax {

using Point = std::uint32_t;

/// A bijection on {0..degree-1} stored as its image array.
///
/// Products compose left to right: (a * b)[x] == b[a[x]], so x^(ab) = (x^a)^b.
class Permutation
{
public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Disjoint or not, cycles are applied left to right. Points are 0-indexed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);
  /// Parses "(1,2,3)(4,5)" style text; `one_indexed` shifts points down by one.
  static Permutation parse_cycles(std::string_view text, std::size_t degree,
                                  bool one_indexed = true);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Least k >= 1 with g^k == identity.
  std::uint64_t order() const;
  Permutation pow(std::int64_t k) const;
  /// Smallest moved point, or degree() when identity.
  Point first_moved_point() const noexcept;

  /// Disjoint-cycle string, e.g. "(1,2,3)(4,5)", or "()" for the identity.
  std::string to_cycle_string(bool one_indexed = true) const;

  friend Permutation operator*(Permutation const &a, Permutation const &b);
  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

/// g^-1 * h * g, the conjugate of h by g.
Permutation conjugate(Permutation const &h, Permutation const &g);
bool commute(Permutation const &a, Permutation const &b);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace abelmax
