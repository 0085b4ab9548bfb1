#include <doctest.h>

#include "abelmax/catalog.hpp"
#include "abelmax/search.hpp"

using namespace abelmax;

namespace {

PermGroup named(char const *text) { return build_named(GroupSpec::parse(text)); }

} // namespace

TEST_CASE("p-group prime")
{
  CHECK(p_group_prime(named("dihedral:8")) == 2);
  CHECK(p_group_prime(named("elem_abelian:3:2")) == 3);
  CHECK(p_group_prime(named("sym:3")) == 0);
  CHECK(p_group_prime(PermGroup::trivial(2)) == 0);
  CHECK_THROWS(max_abelian_normal_in_pgroup(named("sym:3")));
}

TEST_CASE("maximal abelian normal subgroups")
{
  auto const d8 = max_abelian_normal_in_pgroup(named("dihedral:4"));
  CHECK(d8.order == 4);
  CHECK(d8.normal_in_parent);
  CHECK(max_abelian_normal_in_pgroup(quaternion8()).order == 4);
  CHECK(max_abelian_normal_in_pgroup(named("dihedral:16")).order == 16);
  CHECK(max_abelian_normal_in_pgroup(named("cyclic:8")).order == 8);

  auto const s4 = named("sym:4");
  auto const p = sylow_subgroup(s4, 2).group;
  auto const w = max_abelian_normal_in_pgroup(p);
  CHECK(witness_is_valid(p, w));
  CHECK(is_normal(p, PermGroup(w.generators)));
}

TEST_CASE("normal abelian order never exceeds m")
{
  for (auto const *text : {"sym:6", "sym:7", "agl3_2", "psl2:7"}) {
    auto const g = named(text);
    for (auto p : g.order().primes()) {
      auto const s = sylow_subgroup(g, p).group;
      CHECK(max_abelian_normal_in_pgroup(s).order <= max_abelian_order(s).m);
    }
  }
}

TEST_CASE("lemma report values")
{
  auto const cyc = lemma_check(named("cyclic:7"));
  CHECK(cyc.p == 7);
  CHECK(cyc.k == 1);
  CHECK(cyc.s == 1);
  CHECK(cyc.bound_holds);

  auto const d8 = lemma_check(named("dihedral:4"));
  CHECK(d8.p == 2);
  CHECK(d8.k == 3);
  CHECK(d8.s == 2);
  CHECK(d8.c == 1);
  CHECK(d8.v == 2);
  CHECK(d8.bound_holds);
  CHECK(d8.burnside_holds);

  auto const e = lemma_check(named("elem_abelian:2:4"));
  CHECK(e.k == 4);
  CHECK(e.s == 4);
  CHECK(e.c == 4);

  for (auto const *text : {"dihedral:8", "dihedral:16", "dihedral:32"}) {
    auto const r = lemma_check(named(text));
    CHECK(r.bound_holds);
    CHECK(r.burnside_holds);
  }
}
