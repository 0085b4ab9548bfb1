#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "abelmax/perm_group.hpp"

namespace abelmax {

/// Groups above this order are refused by the brute-force oracle.
inline constexpr std::uint64_t kDefaultBruteCap = 2000;

/// Generators of an abelian subgroup together with its order.
struct AbelianWitness
{
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  bool normal_in_parent = false;
};

struct MaxAbelianResult
{
  std::uint64_t m = 1;
  AbelianWitness witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0.0};
};

struct SearchOptions
{
  std::uint64_t enum_cap = kDefaultEnumCap;
  /// 1 runs the serial kernel; more uses an OpenMP pool over root classes.
  int workers = 1;
  /// Per-root bound on memoised closures.
  std::size_t memo_limit = 1u << 16;
};

/// m(G) by branch and bound.
///
/// Roots are conjugacy-class representatives x (every abelian subgroup has a
/// conjugate through one of them). Below a root, a node is an abelian subgroup
/// A with C = C_G(A); children adjoin y in C \ A with canonical index above
/// the previous choice. A node is cut when |C| cannot beat the best order so
/// far (C itself when abelian, otherwise a proper subgroup of C).
MaxAbelianResult max_abelian_order(PermGroup const &g, SearchOptions const &opts = {});

/// The same search on one thread, in fixed root order. nodes_explored is
/// reproducible run to run.
MaxAbelianResult max_abelian_order_serial(PermGroup const &g, SearchOptions const &opts = {});

/// The same search with roots spread across an OpenMP pool. m and the witness
/// order match the serial kernel; the witness itself may differ.
MaxAbelianResult max_abelian_order_parallel(PermGroup const &g, SearchOptions const &opts);

/// Exhaustive oracle: every abelian subgroup is reached from the trivial group
/// by adjoining commuting elements and closing under multiplication. No
/// centralizers, conjugacy classes or bounds are used.
MaxAbelianResult max_abelian_brute(PermGroup const &g, std::uint64_t brute_cap = kDefaultBruteCap);

/// Verifies a witness from scratch: generators commute pairwise and generate a
/// subgroup of g of exactly the stated order.
bool witness_is_valid(PermGroup const &g, AbelianWitness const &w);

// --- p-groups --------------------------------------------------------------

/// Prime p when |P| is a nontrivial power of p, 0 otherwise.
std::uint64_t p_group_prime(PermGroup const &p_group);

/// An abelian normal subgroup of largest order. Throws std::invalid_argument
/// for groups that are not nontrivial p-groups.
AbelianWitness max_abelian_normal_in_pgroup(PermGroup const &p_group,
                                            std::uint64_t cap = kDefaultEnumCap);

/// |P| = p^k, max abelian normal subgroup p^s (= p^v), |Z(P)| = p^c.
struct LemmaReport
{
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t s = 0;
  std::uint32_t c = 0;
  std::uint32_t v = 0;
  bool bound_holds = false;    // k <= s(s+1)/2
  bool burnside_holds = false; // k - v <= (v-c)(v+c-1)/2
};

LemmaReport lemma_check(PermGroup const &p_group, std::uint64_t cap = kDefaultEnumCap);

} // namespace abelmax
