#include <algorithm>
#include <unordered_set>

#include "abelmax/errors.hpp"
#include "abelmax/search.hpp"

namespace abelmax {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash
{
  std::size_t operator()(Bits const &b) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Full Cayley table; the oracle is independent of the search kernel's
// incremental closures.
class CayleyTable
{
public:
  explicit CayleyTable(ElementTable const &elements) : n_(elements.size())
  {
    table_.resize(n_ * n_);
    std::vector<Point> prod(elements.degree());
    for (std::uint32_t a = 0; a < n_; ++a) {
      auto const x = elements.images(a);
      for (std::uint32_t b = 0; b < n_; ++b) {
        auto const y = elements.images(b);
        for (std::size_t p = 0; p < prod.size(); ++p)
          prod[p] = y[x[p]];
        table_[a * n_ + b] = elements.index_of(prod);
      }
    }
    identity_ = elements.identity_index();
  }

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::size_t size() const noexcept { return n_; }
  std::uint32_t identity() const noexcept { return identity_; }

private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
};

struct Subgroup
{
  Bits bits;
  std::vector<std::uint32_t> gens;
  std::size_t order = 0;
};

Subgroup generate(CayleyTable const &mul, std::vector<std::uint32_t> gens)
{
  Subgroup out;
  out.bits.assign((mul.size() + 63) / 64, 0);
  std::vector<std::uint32_t> members{mul.identity()};
  out.bits[mul.identity() / 64] |= 1ull << (mul.identity() % 64);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      auto const z = mul(members[i], s);
      auto &word = out.bits[z / 64];
      if (!(word & (1ull << (z % 64)))) {
        word |= 1ull << (z % 64);
        members.push_back(z);
      }
    }
  }
  out.order = members.size();
  out.gens = std::move(gens);
  return out;
}

bool has(Bits const &b, std::uint32_t x) { return (b[x / 64] >> (x % 64)) & 1u; }

} // namespace

MaxAbelianResult max_abelian_brute(PermGroup const &g, std::uint64_t brute_cap)
{
  auto const start = std::chrono::steady_clock::now();
  auto const &elements = g.elements(brute_cap);
  CayleyTable const mul(elements);

  std::unordered_set<Bits, BitsHash> visited;
  std::vector<Subgroup> stack{generate(mul, {})};
  visited.insert(stack.back().bits);

  MaxAbelianResult result;
  Subgroup best = stack.back();

  while (!stack.empty()) {
    Subgroup cur = std::move(stack.back());
    stack.pop_back();
    ++result.nodes_explored;
    if (cur.order > best.order)
      best = cur;

    for (std::uint32_t y = 0; y < mul.size(); ++y) {
      if (has(cur.bits, y))
        continue;
      bool commutes = std::all_of(cur.gens.begin(), cur.gens.end(),
                                  [&](std::uint32_t s) { return mul(y, s) == mul(s, y); });
      if (!commutes)
        continue;
      auto gens = cur.gens;
      gens.push_back(y);
      Subgroup next = generate(mul, std::move(gens));
      if (visited.insert(next.bits).second)
        stack.push_back(std::move(next));
    }
  }

  result.m = best.order;
  result.witness.order = best.order;
  for (auto i : best.gens)
    result.witness.generators.push_back(elements.permutation(i));
  result.witness.normal_in_parent =
    best.gens.empty() || is_normal(g, PermGroup(result.witness.generators));
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

} // namespace abelmax
