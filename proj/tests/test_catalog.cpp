#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "abelmax/catalog.hpp"
#include "abelmax/errors.hpp"
#include "abelmax/gf2m.hpp"

using namespace abelmax;

namespace {

PermGroup named(char const *text) { return build_named(GroupSpec::parse(text)); }

std::uint64_t order_of(char const *text) { return named(text).order_u64(); }

std::uint64_t fixed_points(Permutation const &x)
{
  std::uint64_t n = 0;
  for (Point i = 0; i < x.degree(); ++i)
    n += x[i] == i;
  return n;
}

} // namespace

TEST_CASE("family orders")
{
  std::uint64_t fact = 1;
  for (std::uint64_t n = 2; n <= 8; ++n) {
    fact *= n;
    auto const s = "sym:" + std::to_string(n);
    CHECK(order_of(s.c_str()) == fact);
    if (n >= 3) {
      auto const a = "alt:" + std::to_string(n);
      CHECK(order_of(a.c_str()) == fact / 2);
    }
  }
  CHECK(order_of("cyclic:12") == 12);
  CHECK(order_of("dihedral:5") == 10);
  CHECK(order_of("elem_abelian:2:3") == 8);
  CHECK(named("elem_abelian:3:2").is_abelian());
  CHECK(order_of("psl2:13") == 1092);
  CHECK(order_of("pgl2:13") == 2184);
  CHECK(order_of("pgl2:3") == 24);
  CHECK(order_of("frobenius:7:3") == 21);
  CHECK(order_of("agl1:3") == 56);
  CHECK(order_of("agammal1:3") == 168);
  CHECK(order_of("agammal1:2") == 24);
  CHECK(order_of("agammal1:5") == 32 * 31 * 5);
  CHECK(order_of("agl3_2") == 1344);
  CHECK(quaternion8().order_u64() == 8);
}

TEST_CASE("psl2 is simple and index 2 in pgl2")
{
  for (auto p : {5, 7, 11, 13}) {
    auto const psl = named(("psl2:" + std::to_string(p)).c_str());
    auto const pgl = named(("pgl2:" + std::to_string(p)).c_str());
    CHECK(is_simple(psl));
    CHECK(pgl.order_u64() == 2 * psl.order_u64());
    CHECK(is_subgroup_of(psl, pgl));
  }
}

TEST_CASE("frobenius point stabilizer")
{
  for (auto const *text : {"frobenius:5:4", "frobenius:7:3", "frobenius:11:5"}) {
    auto const g = named(text);
    auto const spec = GroupSpec::parse(text);
    std::uint64_t const c = spec.params[1];
    std::uint64_t stab = 0;
    for (auto const &x : enumerate_elements(g)) {
      stab += x[0] == 0;
      if (!x.is_identity())
        CHECK(fixed_points(x) <= 1);
      if (x[0] == 0)
        CHECK(c % x.order() == 0);
    }
    CHECK(stab == c);
  }
  CHECK_THROWS(named("frobenius:7:4"));
}

TEST_CASE("agammal1 translations are a normal elementary abelian subgroup")
{
  for (unsigned a = 2; a <= 4; ++a) {
    auto const g = named(("agammal1:" + std::to_string(a)).c_str());
    std::vector<Permutation> translations;
    for (auto const &x : enumerate_elements(g)) {
      if (x.order() == 2 && fixed_points(x) == 0)
        translations.push_back(x);
    }
    auto const t = make_subgroup(g, translations);
    CHECK(t.order() == (1u << a));
    CHECK(t.group.is_abelian());
    CHECK(is_normal(g, t.group));
  }
}

TEST_CASE("GF(2^a) pinned moduli")
{
  GF2m const f3(3);
  CHECK(f3.modulus() == 0b1011);
  CHECK(f3.mul(f3.mul(2, 2), 2) == 3);
  CHECK(f3.multiplicative_order(2) == 7);
  CHECK(GF2m(2).modulus() == 0b111);
  CHECK(GF2m(4).modulus() == 0b10011);
  CHECK(GF2m(5).modulus() == 0b100101);
  for (unsigned a = 2; a <= 5; ++a)
    CHECK(GF2m(a).inverse(1) == 1);
}

TEST_CASE("spec parsing")
{
  auto const s = GroupSpec::parse("frobenius:5:4");
  CHECK(s.family == Family::frobenius);
  CHECK(s.params == std::vector<std::uint64_t>{5, 4});
  CHECK(s.text() == "frobenius:5:4");
  CHECK(GroupSpec::parse("agl3_2").text() == "agl3_2");
  CHECK(GroupSpec::parse("file:groups/m11.gens").path == "groups/m11.gens");

  CHECK_THROWS_AS(GroupSpec::parse("foo:3"), ParseError);
  try {
    GroupSpec::parse("foo:3");
  } catch (ParseError const &e) {
    CHECK(std::string(e.what()).find("psl2") != std::string::npos);
  }
  CHECK_THROWS_AS(GroupSpec::parse("sym"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("sym:x"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("sym:3:4"), ParseError);
  CHECK_THROWS(named("sym:1"));
  CHECK_THROWS(named("psl2:9"));
  CHECK_THROWS(named("agl1:6"));
}

TEST_CASE("generator files")
{
  auto const m11 = load_generator_file(resolve_data_path("groups/m11.gens"));
  CHECK(m11.order_u64() == 7920);
  CHECK(m11.order().factor_string() == "2^4.3^2.5.11");
  auto const m12 = build_named(GroupSpec::parse("file:groups/m12.gens"));
  CHECK(m12.order_u64() == 95040);
  CHECK(m12.order().factor_string() == "2^6.3^3.5.11");

  auto const g = parse_generator_text("# comment\ndegree 4\ngen (1,2,3,4)\ngen (1,3)\n"
                                      "expect_order 8\n");
  CHECK(g.order_u64() == 8);

  CHECK_THROWS(parse_generator_text("degree 4\ngen (1,2)\nexpect_order 3\n"));
  try {
    parse_generator_text("degree 4\ngen (1,2\n");
    FAIL("no parse error");
  } catch (ParseError const &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_generator_text("gen (1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_generator_text("degree 4\nfoo 1\n"), ParseError);
  CHECK_THROWS(load_generator_file("does/not/exist.gens"));
}

TEST_CASE("manifest")
{
  auto const specs = load_manifest(default_manifest_path());
  CHECK(specs.size() >= 20);
  CHECK(std::ranges::count(specs, GroupSpec::parse("psl2:13")) == 1);

  auto const path = std::filesystem::temp_directory_path() / "abelmax_test.manifest";
  {
    std::ofstream f(path);
    f << "# header\nsym:3\n\n  alt:5  # trailing\n";
  }
  auto const small = load_manifest(path);
  REQUIRE(small.size() == 2);
  CHECK(small[1].text() == "alt:5");
  {
    std::ofstream f(path);
    f << "sym:3\nbogus\n";
  }
  CHECK_THROWS_AS(load_manifest(path), ParseError);
  std::filesystem::remove(path);
}
