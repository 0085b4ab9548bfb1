#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "abelmax/catalog.hpp"
#include "abelmax/errors.hpp"
#include "abelmax/search.hpp"

using namespace abelmax;

namespace {

PermGroup named(char const *text) { return build_named(GroupSpec::parse(text)); }

Permutation random_perm(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

void check_against_brute(PermGroup const &g)
{
  auto const fast = max_abelian_order(g);
  auto const slow = max_abelian_brute(g);
  CHECK(fast.m == slow.m);
  CHECK(witness_is_valid(g, fast.witness));
  CHECK(witness_is_valid(g, slow.witness));
  CHECK(fast.witness.order == fast.m);
}

} // namespace

TEST_CASE("small goldens")
{
  CHECK(max_abelian_order(quaternion8()).m == 4);
  CHECK(max_abelian_order(named("cyclic:12")).m == 12);
  CHECK(max_abelian_order(named("dihedral:4")).m == 4);
  CHECK(max_abelian_order(named("sym:3")).m == 3);
  CHECK(max_abelian_order(named("sym:4")).m == 4);
  CHECK(max_abelian_order(named("sym:5")).m == 6);
  CHECK(max_abelian_order(named("alt:5")).m == 5);
  CHECK(max_abelian_order(named("sym:6")).m == 9);
  CHECK(max_abelian_order(named("psl2:7")).m == 7);
  CHECK(max_abelian_order(named("pgl2:7")).m == 8);
  CHECK(max_abelian_order(named("agl3_2")).m == 16);
  CHECK(max_abelian_order(PermGroup::trivial(3)).m == 1);
}

TEST_CASE("search equals the brute-force oracle on named groups")
{
  for (auto const *text :
       {"sym:3", "sym:4", "sym:5", "alt:4", "alt:5", "alt:6", "dihedral:4", "dihedral:5",
        "dihedral:6", "dihedral:12", "cyclic:7", "elem_abelian:2:3", "psl2:5", "psl2:7",
        "psl2:11", "pgl2:5", "pgl2:7", "frobenius:5:4", "frobenius:7:6", "frobenius:11:5",
        "agl1:2", "agl1:3", "agammal1:2", "agammal1:3", "agl3_2"}) {
    CAPTURE(text);
    check_against_brute(named(text));
  }
  check_against_brute(quaternion8());
}

TEST_CASE("search equals the brute-force oracle on random subgroups of S7")
{
  std::mt19937_64 rng(20261018);
  int checked = 0;
  while (checked < 40) {
    std::vector<Permutation> gens{random_perm(7, rng), random_perm(7, rng)};
    if (rng() % 2)
      gens[1] = gens[1].pow(static_cast<std::int64_t>(rng() % 4 + 1));
    PermGroup const g(gens);
    if (g.order_u64() > kDefaultBruteCap)
      continue;
    CAPTURE(g.order_u64());
    check_against_brute(g);
    ++checked;
  }
}

TEST_CASE("serial and parallel kernels agree")
{
  for (auto const *text : {"sym:6", "alt:7", "pgl2:11", "agl3_2", "agammal1:4"}) {
    CAPTURE(text);
    auto const g = named(text);
    SearchOptions opts;
    auto const serial = max_abelian_order_serial(g, opts);
    for (int w : {2, 3, 4}) {
      opts.workers = w;
      auto const par = max_abelian_order_parallel(g, opts);
      CHECK(par.m == serial.m);
      CHECK(witness_is_valid(g, par.witness));
    }
  }
}

TEST_CASE("serial search is reproducible")
{
  auto const g = named("alt:7");
  auto const a = max_abelian_order_serial(g);
  auto const b = max_abelian_order_serial(g);
  CHECK(a.m == b.m);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness.generators == b.witness.generators);
}

TEST_CASE("caps")
{
  CHECK_THROWS_AS(max_abelian_brute(named("sym:7")), CapacityError);
  SearchOptions opts;
  opts.enum_cap = 100;
  CHECK_THROWS_AS(max_abelian_order(named("sym:6"), opts), CapacityError);
  // abelian groups need no enumeration
  CHECK(max_abelian_order(named("elem_abelian:2:3"), opts).m == 8);
}

TEST_CASE("witness validation rejects bad witnesses")
{
  auto const g = named("sym:4");
  AbelianWitness w;
  w.generators = {Permutation::parse_cycles("(1,2)", 4), Permutation::parse_cycles("(2,3)", 4)};
  w.order = 6;
  CHECK_FALSE(witness_is_valid(g, w));
  w.generators = {Permutation::parse_cycles("(1,2)", 4), Permutation::parse_cycles("(3,4)", 4)};
  w.order = 4;
  CHECK(witness_is_valid(g, w));
  w.order = 2;
  CHECK_FALSE(witness_is_valid(g, w));
  w.generators = {Permutation::parse_cycles("(1,2)", 5)};
  CHECK_FALSE(witness_is_valid(g, w));
}
