#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "abelmax/numtheory.hpp"
#include "abelmax/permutation.hpp"

namespace abelmax {

/// Default cap on explicit element enumeration (M12 at 95040 fits).
inline constexpr std::uint64_t kDefaultEnumCap = 200000;

/// Stabilizer chain built by the deterministic Schreier-Sims method.
///
/// Base points are taken in increasing order: each new level uses the smallest
/// point moved by the generator that created it.
class StabChain
{
public:
  explicit StabChain(std::size_t degree);

  /// Adds g to the generated group; returns false if g was already a member.
  bool add_generator(Permutation const &g);
  bool contains(Permutation const &g) const;

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Point> base() const;
  std::vector<std::uint64_t> orbit_lengths() const;
  nt::FactoredInteger order() const;

  /// Position of a member in [0, order); nullopt for non-members.
  std::optional<std::uint64_t> rank(std::span<Point const> g) const;
  Permutation unrank(std::uint64_t r) const;

private:
  struct Level
  {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_pos;
    std::vector<Permutation> reps;     // base_point^reps[i] == orbit[i]
    std::vector<Permutation> rep_invs;
  };

  bool contains_from(std::size_t level, Permutation g) const;
  void add(std::size_t level, Permutation const &g);
  void extend(std::size_t level, Permutation const &t);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Every element of a group, indexed in canonical order: element order
/// descending, then image array lexicographically.
class ElementTable
{
public:
  ElementTable(StabChain const &chain, std::uint64_t order);

  std::size_t size() const noexcept { return orders_.size(); }
  std::size_t degree() const noexcept { return degree_; }

  std::span<Point const> images(std::uint32_t i) const
  {
    return {flat_.data() + std::size_t(i) * degree_, degree_};
  }
  Permutation permutation(std::uint32_t i) const;
  std::uint64_t element_order(std::uint32_t i) const { return orders_[i]; }
  std::uint32_t identity_index() const noexcept { return identity_; }

  /// Index of a group member; throws std::invalid_argument otherwise.
  std::uint32_t index_of(std::span<Point const> g) const;
  std::uint32_t index_of(Permutation const &g) const { return index_of(g.images()); }

  bool commute(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  /// Index of g^-1 a g.
  std::uint32_t conjugate(std::uint32_t a, Permutation const &g) const;

private:
  StabChain const &chain_;
  std::size_t degree_;
  std::vector<Point> flat_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> rank_to_index_;
  std::uint32_t identity_ = 0;
};

/// Immutable permutation group. Copies share the underlying data.
class PermGroup
{
public:
  /// Throws std::invalid_argument on an empty list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  std::vector<Permutation> const &generators() const noexcept;
  nt::FactoredInteger const &order() const noexcept;
  /// Throws std::overflow_error if the order needs more than 64 bits.
  std::uint64_t order_u64() const;
  StabChain const &chain() const noexcept;

  bool contains(Permutation const &g) const;
  bool is_abelian() const;
  bool is_trivial() const { return order().factors().empty(); }

  /// Enumerates (once, lazily) and returns all elements; throws CapacityError
  /// when the order exceeds cap.
  ElementTable const &elements(std::uint64_t cap = kDefaultEnumCap) const;

private:
  struct Impl;
  PermGroup() = default;
  std::shared_ptr<Impl const> impl_;
};

PermGroup build_group(std::vector<Permutation> generators);
std::vector<Permutation> enumerate_elements(PermGroup const &g,
                                            std::uint64_t cap = kDefaultEnumCap);

/// A subgroup of a parent group, with its own stabilizer chain.
struct SubgroupHandle
{
  PermGroup parent;
  PermGroup group;

  std::vector<Permutation> const &generators() const { return group.generators(); }
  std::uint64_t order() const { return group.order_u64(); }
};

/// Validates that every generator lies in the parent.
SubgroupHandle make_subgroup(PermGroup const &parent, std::vector<Permutation> generators);
SubgroupHandle whole_group(PermGroup const &g);

/// K <= H, tested on generators of K.
bool is_subgroup_of(PermGroup const &k, PermGroup const &h);
bool same_subgroup(PermGroup const &a, PermGroup const &b);

SubgroupHandle centralizer(PermGroup const &g, std::span<Permutation const> s,
                           std::uint64_t cap = kDefaultEnumCap);
SubgroupHandle center(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);
SubgroupHandle normalizer(PermGroup const &g, PermGroup const &h,
                          std::uint64_t cap = kDefaultEnumCap);

bool is_normal(PermGroup const &g, PermGroup const &h);
SubgroupHandle normal_closure(PermGroup const &g, std::span<Permutation const> s);

/// Conjugacy classes as element indices into g.elements(); each class sorted,
/// classes ordered by their smallest index.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(PermGroup const &g,
                                                          std::uint64_t cap = kDefaultEnumCap);

std::vector<SubgroupHandle> minimal_normal_subgroups(PermGroup const &g,
                                                     std::uint64_t cap = kDefaultEnumCap);
/// True iff |G| > 1 and the only normal subgroups are 1 and G. Cyclic groups
/// of prime order count as simple.
bool is_simple(PermGroup const &g, std::uint64_t cap = kDefaultEnumCap);

/// Sylow p-subgroup grown from a cyclic p-subgroup by adjoining p-elements of
/// its normalizer. Throws std::invalid_argument if p does not divide |G|.
SubgroupHandle sylow_subgroup(PermGroup const &g, std::uint64_t p,
                              std::uint64_t cap = kDefaultEnumCap);

} // namespace abelmax
