#include "abelmax/catalog.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "abelmax/errors.hpp"
#include "abelmax/gf2m.hpp"

namespace abelmax {

namespace {

constexpr std::array kFamilies{
  std::pair{Family::sym, std::string_view{"sym"}},
  std::pair{Family::alt, std::string_view{"alt"}},
  std::pair{Family::cyclic, std::string_view{"cyclic"}},
  std::pair{Family::dihedral, std::string_view{"dihedral"}},
  std::pair{Family::elem_abelian, std::string_view{"elem_abelian"}},
  std::pair{Family::psl2, std::string_view{"psl2"}},
  std::pair{Family::pgl2, std::string_view{"pgl2"}},
  std::pair{Family::frobenius, std::string_view{"frobenius"}},
  std::pair{Family::agl1, std::string_view{"agl1"}},
  std::pair{Family::agammal1, std::string_view{"agammal1"}},
  std::pair{Family::agl3_2, std::string_view{"agl3_2"}},
  std::pair{Family::file, std::string_view{"file"}},
};

std::size_t expected_params(Family f)
{
  switch (f) {
  case Family::agl3_2: return 0;
  case Family::elem_abelian:
  case Family::frobenius: return 2;
  case Family::file: return 0;
  default: return 1;
  }
}

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(std::string_view s, std::string const &what, int line = 0)
{
  std::uint64_t v = 0;
  auto const *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw ParseError("invalid " + what + " '" + std::string(s) + "'", line);
  return v;
}

void require(bool ok, std::string const &msg)
{
  if (!ok)
    throw std::invalid_argument(msg);
}

Permutation from_map(std::size_t degree, auto &&f)
{
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x)
    images[x] = static_cast<Point>(f(static_cast<std::uint64_t>(x)));
  return Permutation(std::move(images));
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1u)
      r = r * b % m;
    b = b * b % m;
    e >>= 1u;
  }
  return r;
}

PermGroup symmetric(std::uint64_t n)
{
  require(n >= 2, "sym: n must be at least 2");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> cycle(n);
    for (Point i = 0; i < n; ++i)
      cycle[i] = i;
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermGroup(std::move(gens));
}

PermGroup alternating(std::uint64_t n)
{
  require(n >= 3, "alt: n must be at least 3");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup(std::move(gens));
}

PermGroup cyclic(std::uint64_t n)
{
  require(n >= 2, "cyclic: n must be at least 2");
  return PermGroup({from_map(n, [n](std::uint64_t x) { return (x + 1) % n; })});
}

PermGroup dihedral(std::uint64_t n)
{
  require(n >= 3, "dihedral: n must be at least 3");
  return PermGroup({from_map(n, [n](std::uint64_t x) { return (x + 1) % n; }),
                    from_map(n, [n](std::uint64_t x) { return (n - x) % n; })});
}

PermGroup elem_abelian(std::uint64_t p, std::uint64_t k)
{
  require(nt::is_prime(p), "elem_abelian: " + std::to_string(p) + " is not prime");
  require(k >= 1, "elem_abelian: rank must be at least 1");
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    size *= p;
    require(size <= 1u << 20, "elem_abelian: p^k too large for a regular action");
  }
  std::vector<Permutation> gens;
  std::uint64_t place = 1;
  for (std::uint64_t i = 0; i < k; ++i, place *= p) {
    gens.push_back(from_map(size, [p, place](std::uint64_t x) {
      std::uint64_t const digit = x / place % p;
      return x - digit * place + (digit + 1) % p * place;
    }));
  }
  return PermGroup(std::move(gens));
}

// points 0..p-1 are field elements, p is infinity
PermGroup projective_line(std::uint64_t p, bool full_linear)
{
  std::uint64_t const inf = p;
  auto inv = [p](std::uint64_t x) { return pow_mod(x, p - 2, p); };
  std::vector<Permutation> gens{
    from_map(p + 1, [=](std::uint64_t x) { return x == inf ? inf : (x + 1) % p; }),
    from_map(p + 1, [=](std::uint64_t x) -> std::uint64_t {
      if (x == inf)
        return 0;
      if (x == 0)
        return inf;
      return (p - inv(x)) % p;
    }),
  };
  if (full_linear) {
    auto const r = primitive_root(p);
    gens.push_back(from_map(p + 1, [=](std::uint64_t x) { return x == inf ? inf : x * r % p; }));
  }
  return PermGroup(std::move(gens));
}

PermGroup frobenius(std::uint64_t p, std::uint64_t c)
{
  require(nt::is_prime(p), "frobenius: " + std::to_string(p) + " is not prime");
  require(c >= 1 && (p - 1) % c == 0,
          "frobenius: c = " + std::to_string(c) + " does not divide p-1 = " + std::to_string(p - 1));
  std::vector<Permutation> gens{from_map(p, [p](std::uint64_t x) { return (x + 1) % p; })};
  if (c > 1) {
    auto const g = pow_mod(primitive_root(p), (p - 1) / c, p);
    gens.push_back(from_map(p, [=](std::uint64_t x) { return x * g % p; }));
  }
  return PermGroup(std::move(gens));
}

PermGroup affine_field(std::uint64_t a, bool semilinear)
{
  require(a >= 2 && a <= 5, std::string(semilinear ? "agammal1" : "agl1") +
                              ": a must be in {2,3,4,5}, got " + std::to_string(a));
  GF2m const field(static_cast<unsigned>(a));
  auto const q = field.size();
  std::vector<Permutation> gens{
    from_map(q, [&](std::uint64_t x) { return field.add(static_cast<std::uint32_t>(x), 1u); }),
    from_map(q, [&](std::uint64_t x) {
      return field.mul(static_cast<std::uint32_t>(x), field.primitive_element());
    }),
  };
  if (semilinear)
    gens.push_back(
      from_map(q, [&](std::uint64_t x) { return field.frobenius(static_cast<std::uint32_t>(x)); }));
  return PermGroup(std::move(gens));
}

PermGroup agl3_2()
{
  // points are bit vectors of F_2^3; translation by e_0 plus all elementary transvections
  std::vector<Permutation> gens{from_map(8, [](std::uint64_t v) { return v ^ 1u; })};
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      gens.push_back(from_map(8, [=](std::uint64_t v) { return v ^ (((v >> j) & 1u) << i); }));
    }
  }
  return PermGroup(std::move(gens));
}

} // namespace

std::string_view family_name(Family f)
{
  for (auto const &[fam, name] : kFamilies) {
    if (fam == f)
      return name;
  }
  return "?";
}

std::string valid_families()
{
  std::string out;
  for (auto const &[fam, name] : kFamilies) {
    if (!out.empty())
      out += ", ";
    out += name;
  }
  return out;
}

GroupSpec GroupSpec::parse(std::string_view text)
{
  auto const t = trim(text);
  auto const colon = t.find(':');
  auto const head = t.substr(0, colon);

  GroupSpec spec;
  bool found = false;
  for (auto const &[fam, name] : kFamilies) {
    if (name == head) {
      spec.family = fam;
      found = true;
    }
  }
  if (!found)
    throw ParseError("unknown group family '" + head + "' in spec '" + t +
                     "'; valid families: " + valid_families());

  if (spec.family == Family::file) {
    if (colon == std::string::npos || colon + 1 == t.size())
      throw ParseError("file spec needs a path, e.g. file:groups/m11.gens");
    spec.path = t.substr(colon + 1);
    return spec;
  }

  if (colon != std::string::npos) {
    std::string_view rest = std::string_view(t).substr(colon + 1);
    while (true) {
      auto const next = rest.find(':');
      spec.params.push_back(parse_u64(rest.substr(0, next), "parameter in '" + t + "'"));
      if (next == std::string_view::npos)
        break;
      rest = rest.substr(next + 1);
    }
  }
  if (spec.params.size() != expected_params(spec.family))
    throw ParseError("family '" + head + "' takes " +
                     std::to_string(expected_params(spec.family)) + " parameter(s), got " +
                     std::to_string(spec.params.size()) + " in '" + t + "'");
  return spec;
}

std::string GroupSpec::text() const
{
  std::string out(family_name(family));
  if (family == Family::file)
    return out + ":" + path;
  for (auto p : params)
    out += ":" + std::to_string(p);
  return out;
}

PermGroup quaternion8()
{
  // units 1,i,j,k as 0..3; point 4*s+u is (-1)^s u
  constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto right_mult = [&](int unit) {
    return from_map(8, [&](std::uint64_t x) {
      auto const s = static_cast<int>(x / 4);
      auto const u = static_cast<int>(x % 4);
      return static_cast<std::uint64_t>(4 * (s ^ kSign[u][unit]) + kUnit[u][unit]);
    });
  };
  return PermGroup({right_mult(1), right_mult(2)});
}

std::uint64_t primitive_root(std::uint64_t p)
{
  if (p == 2)
    return 1;
  auto const phi = p - 1;
  std::vector<std::uint64_t> qs;
  for (auto [q, n] = std::pair{std::uint64_t{2}, phi}; n > 1;) {
    if (q * q > n) {
      qs.push_back(n);
      break;
    }
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0)
        n /= q;
    }
    ++q;
  }
  for (std::uint64_t r = 2; r < p; ++r) {
    bool ok = true;
    for (auto q : qs)
      ok = ok && pow_mod(r, phi / q, p) != 1;
    if (ok)
      return r;
  }
  throw std::invalid_argument("primitive_root: no root found for " + std::to_string(p));
}

PermGroup build_named(GroupSpec const &spec)
{
  auto const &pr = spec.params;
  switch (spec.family) {
  case Family::sym: return symmetric(pr.at(0));
  case Family::alt: return alternating(pr.at(0));
  case Family::cyclic: return cyclic(pr.at(0));
  case Family::dihedral: return dihedral(pr.at(0));
  case Family::elem_abelian: return elem_abelian(pr.at(0), pr.at(1));
  case Family::psl2:
    require(nt::is_prime(pr.at(0)) && pr.at(0) >= 5,
            "psl2: p must be a prime >= 5, got " + std::to_string(pr.at(0)));
    return projective_line(pr.at(0), false);
  case Family::pgl2:
    require(nt::is_prime(pr.at(0)) && pr.at(0) >= 3,
            "pgl2: p must be a prime >= 3, got " + std::to_string(pr.at(0)));
    return projective_line(pr.at(0), true);
  case Family::frobenius: return frobenius(pr.at(0), pr.at(1));
  case Family::agl1: return affine_field(pr.at(0), false);
  case Family::agammal1: return affine_field(pr.at(0), true);
  case Family::agl3_2: return agl3_2();
  case Family::file: return load_generator_file(spec.path);
  }
  throw std::logic_error("build_named: unhandled family");
}

PermGroup parse_generator_text(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::size_t degree = 0;
  bool have_degree = false;
  std::optional<std::uint64_t> expect;
  std::vector<Permutation> gens;

  while (std::getline(in, raw)) {
    ++line_no;
    auto const hash = raw.find('#');
    auto const line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty())
      continue;

    auto const space = line.find_first_of(" \t");
    auto const key = line.substr(0, space);
    auto const value = space == std::string::npos ? std::string() : trim(line.substr(space));

    if (!have_degree) {
      if (key != "degree")
        throw ParseError("first entry must be 'degree <d>'", line_no);
      degree = parse_u64(value, "degree", line_no);
      if (degree == 0)
        throw ParseError("degree must be positive", line_no);
      have_degree = true;
    } else if (key == "gen") {
      if (value.empty())
        throw ParseError("'gen' needs a cycle string", line_no);
      try {
        gens.push_back(Permutation::parse_cycles(value, degree, true));
      } catch (ParseError const &e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (key == "expect_order") {
      expect = parse_u64(value, "expect_order", line_no);
    } else if (key == "degree") {
      throw ParseError("duplicate 'degree' entry", line_no);
    } else {
      throw ParseError("unknown entry '" + key + "'", line_no);
    }
  }

  if (!have_degree)
    throw ParseError("missing 'degree <d>' line");
  auto group = gens.empty() ? PermGroup::trivial(degree) : PermGroup(std::move(gens));
  if (expect && !(group.order() == nt::FactoredInteger::from_u64(*expect)))
    throw std::runtime_error("generator file: computed order " + group.order().to_string() +
                             " does not match expect_order " + std::to_string(*expect));
  return group;
}

std::filesystem::path resolve_data_path(std::filesystem::path const &path)
{
  if (path.is_absolute() || std::filesystem::exists(path))
    return path;
  auto const alt = std::filesystem::path(ABELMAX_SOURCE_DIR) / path;
  if (std::filesystem::exists(alt))
    return alt;
  return path;
}

PermGroup load_generator_file(std::filesystem::path const &path)
{
  auto const resolved = resolve_data_path(path);
  std::ifstream in(resolved);
  if (!in)
    throw std::runtime_error("cannot open generator file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_generator_text(buf.str());
  } catch (ParseError const &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<GroupSpec> load_manifest(std::filesystem::path const &path)
{
  auto const resolved = resolve_data_path(path);
  std::ifstream in(resolved);
  if (!in)
    throw std::runtime_error("cannot open manifest " + path.string());
  std::vector<GroupSpec> specs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto const line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty())
      continue;
    try {
      specs.push_back(GroupSpec::parse(line));
    } catch (ParseError const &e) {
      throw ParseError(path.string() + ": " + e.what(), line_no);
    }
  }
  return specs;
}

std::filesystem::path default_manifest_path()
{
  return std::filesystem::path(ABELMAX_SOURCE_DIR) / "groups" / "default.manifest";
}

} // namespace abelmax
