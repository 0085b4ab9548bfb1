#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "abelmax/perm_group.hpp"

namespace abelmax {

enum class Family {
  sym,
  alt,
  cyclic,
  dihedral,
  elem_abelian,
  psl2,
  pgl2,
  frobenius,
  agl1,
  agammal1,
  agl3_2,
  file,
};

/// A named group, written in the CLI as e.g. `sym:5`, `frobenius:5:4`,
/// `agammal1:3` (parameter a, field 2^a), `agl3_2`, `file:groups/m11.gens`.
struct GroupSpec
{
  Family family = Family::sym;
  std::vector<std::uint64_t> params;
  std::string path; // family == file

  /// Throws ParseError naming the valid families.
  static GroupSpec parse(std::string_view text);
  std::string text() const;

  friend bool operator==(GroupSpec const &, GroupSpec const &) = default;
};

std::string_view family_name(Family f);
/// "sym, alt, cyclic, ..." for error messages.
std::string valid_families();

/// Builds the group in its natural action. Invalid parameters throw
/// std::invalid_argument with a specific message.
PermGroup build_named(GroupSpec const &spec);

/// Parses generator-file text: `degree <d>`, then `gen <cycles>` lines in
/// 1-indexed cycle notation, optional `expect_order <N>`, `#` comments.
/// Parse errors carry line numbers; an order mismatch throws std::runtime_error.
PermGroup parse_generator_text(std::string_view text);
PermGroup load_generator_file(std::filesystem::path const &path);

/// Relative paths are tried against the working directory, then the source tree.
std::filesystem::path resolve_data_path(std::filesystem::path const &path);

/// One spec per line, `#` comments.
std::vector<GroupSpec> load_manifest(std::filesystem::path const &path);
std::filesystem::path default_manifest_path();

/// The quaternion group of order 8 in its regular action on 8 points.
PermGroup quaternion8();

/// Smallest primitive root modulo an odd prime p (1 for p = 2).
std::uint64_t primitive_root(std::uint64_t p);

} // namespace abelmax
