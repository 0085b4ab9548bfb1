#include <doctest.h>

#include <set>

#include "abelmax/catalog.hpp"
#include "abelmax/errors.hpp"
#include "abelmax/perm_group.hpp"

using namespace abelmax;

namespace {

// Closure of the generators by repeated right multiplication.
std::set<Permutation> closure_oracle(std::vector<Permutation> const &gens)
{
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        auto y = x * g;
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

PermGroup named(char const *text) { return build_named(GroupSpec::parse(text)); }

} // namespace

TEST_CASE("stabilizer chain order matches closure")
{
  for (auto const *text : {"sym:4", "alt:5", "dihedral:6", "cyclic:12", "psl2:7", "frobenius:7:3",
                           "agl1:3", "elem_abelian:3:2", "pgl2:5"}) {
    CAPTURE(text);
    auto const g = named(text);
    auto const oracle = closure_oracle(g.generators());
    CHECK(g.order().value() == oracle.size());
    auto const elems = enumerate_elements(g);
    CHECK(std::set<Permutation>(elems.begin(), elems.end()) == oracle);
  }
}

TEST_CASE("membership")
{
  auto const a5 = named("alt:5");
  CHECK(a5.contains(Permutation::parse_cycles("(1,2,3)", 5)));
  CHECK_FALSE(a5.contains(Permutation::parse_cycles("(1,2)", 5)));
  CHECK_FALSE(a5.contains(Permutation::identity(6)));
  CHECK(named("sym:8").order().value() == 40320);
  CHECK(named("alt:8").order().value() == 20160);
}

TEST_CASE("rank and unrank are inverse")
{
  auto const g = named("pgl2:7");
  auto const &chain = g.chain();
  std::set<std::uint64_t> ranks;
  for (std::uint64_t r = 0; r < g.order_u64(); ++r) {
    auto const x = chain.unrank(r);
    auto const back = chain.rank(x.images());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK_FALSE(chain.rank(Permutation::parse_cycles("(1,2)", 8).images()).has_value());
}

TEST_CASE("element table canonical order")
{
  auto const g = named("sym:4");
  auto const &t = g.elements();
  REQUIRE(t.size() == 24);
  CHECK(t.identity_index() == 23);
  CHECK(t.element_order(0) == 4);
  for (std::uint32_t i = 0; i + 1 < t.size(); ++i) {
    auto const a = t.element_order(i), b = t.element_order(i + 1);
    CHECK(a >= b);
    if (a == b) {
      auto const x = t.images(i), y = t.images(i + 1);
      CHECK(std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end()));
    }
  }
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    CHECK(t.index_of(t.permutation(i)) == i);
    CHECK(t.multiply(i, t.inverse(i)) == t.identity_index());
    for (std::uint32_t j = 0; j < t.size(); ++j) {
      CHECK(t.permutation(t.multiply(i, j)) == t.permutation(i) * t.permutation(j));
      CHECK(t.commute(i, j) == commute(t.permutation(i), t.permutation(j)));
      CHECK(t.permutation(t.conjugate(i, t.permutation(j))) ==
            conjugate(t.permutation(i), t.permutation(j)));
    }
  }
  CHECK_THROWS(t.index_of(Permutation::parse_cycles("(1,2)", 5)));
}

TEST_CASE("enumeration cap")
{
  auto const g = named("sym:7");
  CHECK_THROWS_AS(g.elements(1000), CapacityError);
  try {
    g.elements(1000);
  } catch (CapacityError const &e) {
    CHECK(e.cap() == 1000);
    CHECK(e.requested() == 5040);
  }
}

TEST_CASE("constructor errors")
{
  CHECK_THROWS(PermGroup(std::vector<Permutation>{}));
  CHECK_THROWS(PermGroup({Permutation::identity(3), Permutation::identity(4)}));
  CHECK(PermGroup::trivial(4).is_trivial());
  CHECK_THROWS(make_subgroup(named("alt:5"), {Permutation::parse_cycles("(1,2)", 5)}));
}

TEST_CASE("centralizers against brute force")
{
  for (auto const *text : {"sym:5", "dihedral:8", "psl2:7", "frobenius:11:5"}) {
    CAPTURE(text);
    auto const g = named(text);
    auto const elems = enumerate_elements(g);
    for (std::size_t i = 0; i < elems.size(); i += 7) {
      std::vector<Permutation> s{elems[i]};
      std::uint64_t expected = 0;
      for (auto const &y : elems)
        expected += commute(y, elems[i]);
      auto const c = centralizer(g, s);
      CHECK(c.order() == expected);
      for (auto const &gen : c.generators())
        CHECK(commute(gen, elems[i]));
    }
  }
  auto const d8 = named("dihedral:4");
  auto const rot = Permutation::parse_cycles("(1,2,3,4)", 4);
  auto const c = centralizer(d8, std::vector<Permutation>{rot});
  CHECK(c.order() == 4);
  CHECK(c.group.is_abelian());
  CHECK(center(named("sym:4")).order() == 1);
  CHECK(center(named("dihedral:4")).order() == 2);
  CHECK(center(quaternion8()).order() == 2);
}

TEST_CASE("normal subgroups")
{
  auto const s4 = named("sym:4");
  auto const v4 = make_subgroup(s4, {Permutation::parse_cycles("(1,2)(3,4)", 4),
                                     Permutation::parse_cycles("(1,3)(2,4)", 4)});
  CHECK(is_normal(s4, v4.group));
  auto const minimal = minimal_normal_subgroups(s4);
  REQUIRE(minimal.size() == 1);
  CHECK(same_subgroup(minimal.front().group, v4.group));

  auto const t = make_subgroup(s4, {Permutation::parse_cycles("(1,2)", 4)});
  CHECK_FALSE(is_normal(s4, t.group));
  CHECK(normal_closure(s4, t.generators()).order() == 24);
  CHECK(normalizer(s4, t.group).order() == 4);

  CHECK(is_subgroup_of(v4.group, s4));
  CHECK_FALSE(is_subgroup_of(s4, v4.group));

  CHECK(conjugacy_classes(s4).size() == 5);
  CHECK(conjugacy_classes(named("alt:5")).size() == 5);
  CHECK(conjugacy_classes(named("psl2:7")).size() == 6);
}

TEST_CASE("simplicity")
{
  CHECK(is_simple(named("alt:5")));
  CHECK(is_simple(named("psl2:7")));
  CHECK(is_simple(named("alt:6")));
  CHECK(is_simple(named("cyclic:7")));
  CHECK_FALSE(is_simple(named("sym:5")));
  CHECK_FALSE(is_simple(named("alt:4")));
  CHECK_FALSE(is_simple(named("cyclic:12")));
  CHECK_FALSE(is_simple(named("pgl2:7")));
}

TEST_CASE("sylow subgroups")
{
  for (auto const *text : {"sym:4", "sym:6", "alt:7", "psl2:13", "agl3_2", "dihedral:12"}) {
    CAPTURE(text);
    auto const g = named(text);
    for (auto p : g.order().primes()) {
      auto const s = sylow_subgroup(g, p);
      CHECK(s.group.order().value() == g.order().p_part(p));
      CHECK(is_subgroup_of(s.group, g));
    }
  }
  CHECK_THROWS_AS(sylow_subgroup(named("sym:4"), 5), std::invalid_argument);
}
