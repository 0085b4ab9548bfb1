#include "abelmax/permutation.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "abelmax/errors.hpp"

namespace abelmax {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("Permutation: image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation result(degree);
  for (auto const &cycle : cycles) {
    if (cycle.size() < 2)
      continue;
    std::vector<char> seen(degree, 0);
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree)
        throw std::invalid_argument("Permutation: cycle point " + std::to_string(cycle[i]) +
                                    " outside degree " + std::to_string(degree));
      if (seen[cycle[i]])
        throw std::invalid_argument("Permutation: repeated point in cycle");
      seen[cycle[i]] = 1;
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree, bool one_indexed)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  if (i == text.size())
    throw ParseError("empty cycle string");

  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' at column " + std::to_string(i + 1));
    ++i;
    std::vector<Point> cycle;
    skip_space();
    if (i < text.size() && text[i] == ')') {
      ++i; // "()" is the identity
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw ParseError("expected a point number at column " + std::to_string(start + 1));
      unsigned long value = std::stoul(std::string(text.substr(start, i - start)));
      if (one_indexed) {
        if (value == 0)
          throw ParseError("point 0 in 1-indexed cycle notation");
        --value;
      }
      if (value >= degree)
        throw ParseError("point " + std::to_string(one_indexed ? value + 1 : value) +
                         " exceeds degree " + std::to_string(degree));
      cycle.push_back(static_cast<Point>(value));
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')' at column " + std::to_string(i + 1));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }

  try {
    return from_cycles(degree, cycles);
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const noexcept
{
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation inv(degree());
  for (Point x = 0; x < images_.size(); ++x)
    inv.images_[images_[x]] = x;
  return inv;
}

std::uint64_t Permutation::order() const
{
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::pow(std::int64_t k) const
{
  Permutation base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation result(degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept
{
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return x;
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string(bool one_indexed) const
{
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  Point const shift = one_indexed ? 1 : 0;
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += '(';
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (y != x)
        out += ',';
      out += std::to_string(y + shift);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation: degree mismatch (" + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()) + ")");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.images_.size(); ++x)
    out.images_[x] = b.images_[a.images_[x]];
  return out;
}

Permutation conjugate(Permutation const &h, Permutation const &g)
{
  return g.inverse() * h * g;
}

bool commute(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  for (Point x = 0; x < a.degree(); ++x) {
    if (b[a[x]] != a[b[x]])
      return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace abelmax
