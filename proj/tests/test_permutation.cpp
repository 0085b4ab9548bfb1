#include <doctest.h>

#include <numeric>
#include <unordered_set>

#include "abelmax/errors.hpp"
#include "abelmax/gf2m.hpp"
#include "abelmax/permutation.hpp"

using namespace abelmax;

namespace {

// Every permutation of {0..n-1}, in lexicographic order.
std::vector<Permutation> all_perms(std::size_t n)
{
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

} // namespace

TEST_CASE("construction and validation")
{
  CHECK(Permutation::identity(4).is_identity());
  CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
  CHECK_THROWS(Permutation(std::vector<Point>{0, 3, 1}));
  auto const p = Permutation::parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[5] == 5);
  CHECK(p.order() == 6);
  CHECK(p.to_cycle_string() == "(1,2,3)(4,5)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(Permutation::parse_cycles("()", 3).is_identity());
  CHECK(Permutation::parse_cycles("(0,1)", 3, false)[0] == 1);
}

TEST_CASE("cycle parser errors")
{
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,1)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,x)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0,1)", 3), ParseError);
}

TEST_CASE("products compose left to right")
{
  auto const a = Permutation::parse_cycles("(1,2)", 3);
  auto const b = Permutation::parse_cycles("(2,3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b) == Permutation::parse_cycles("(1,3,2)", 3));
  CHECK_THROWS(a * Permutation::identity(4));
}

TEST_CASE("group axioms on S4")
{
  auto const s4 = all_perms(4);
  auto const e = Permutation::identity(4);
  for (auto const &x : s4) {
    CHECK(x * x.inverse() == e);
    CHECK(x.inverse() * x == e);
    CHECK(x.pow(static_cast<std::int64_t>(x.order())) == e);
    CHECK(x.pow(-1) == x.inverse());
    CHECK(x.pow(0) == e);
    for (auto const &y : s4) {
      CHECK(commute(x, y) == (x * y == y * x));
      CHECK(conjugate(x, y) == y.inverse() * x * y);
      CHECK(conjugate(x, y).order() == x.order());
    }
  }
  for (std::size_t i = 0; i < s4.size(); i += 5) {
    for (std::size_t j = 0; j < s4.size(); j += 3) {
      for (std::size_t k = 0; k < s4.size(); k += 7)
        CHECK((s4[i] * s4[j]) * s4[k] == s4[i] * (s4[j] * s4[k]));
    }
  }
}

TEST_CASE("order is the lcm of cycle lengths")
{
  for (auto const &x : all_perms(6)) {
    std::uint64_t o = 1;
    auto y = x;
    while (!y.is_identity()) {
      y = y * x;
      ++o;
    }
    CHECK(x.order() == o);
  }
}

TEST_CASE("hash and moved points")
{
  std::unordered_set<Permutation, PermutationHash> seen;
  for (auto const &x : all_perms(5))
    seen.insert(x);
  CHECK(seen.size() == 120);
  CHECK(Permutation::parse_cycles("(3,5)", 6).first_moved_point() == 2);
}

TEST_CASE("GF(2^a) arithmetic")
{
  for (unsigned a = 2; a <= 5; ++a) {
    GF2m const f(a);
    std::uint32_t const q = f.size();
    CHECK(f.multiplicative_order(f.primitive_element()) == q - 1);
    for (std::uint32_t x = 0; x < q; ++x) {
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(x, 0) == 0);
      CHECK(f.pow(x, q) == x);
      CHECK(f.frobenius(x) == f.mul(x, x));
      if (x != 0)
        CHECK(f.mul(x, f.inverse(x)) == 1);
      for (std::uint32_t y = 0; y < q; ++y) {
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (std::uint32_t z = 0; z < q; z += 3)
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
    CHECK_THROWS(f.inverse(0));
  }
  CHECK_THROWS(GF2m(1));
  CHECK_THROWS(GF2m(6));
}
