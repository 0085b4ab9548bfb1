#include "abelmax/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "abelmax/errors.hpp"

namespace abelmax {

// --- StabChain -------------------------------------------------------------

StabChain::StabChain(std::size_t degree) : degree_(degree) {}

bool StabChain::add_generator(Permutation const &g)
{
  if (g.degree() != degree_)
    throw std::invalid_argument("StabChain: generator degree " + std::to_string(g.degree()) +
                                " does not match " + std::to_string(degree_));
  if (contains_from(0, g))
    return false;
  add(0, g);
  return true;
}

bool StabChain::contains(Permutation const &g) const
{
  return g.degree() == degree_ && contains_from(0, g);
}

bool StabChain::contains_from(std::size_t level, Permutation g) const
{
  for (std::size_t k = level; k < levels_.size(); ++k) {
    auto const &lv = levels_[k];
    auto const pos = lv.orbit_pos[g[lv.base_point]];
    if (pos < 0)
      return false;
    g = g * lv.rep_invs[static_cast<std::size_t>(pos)];
  }
  return g.is_identity();
}

// Knuth's incremental Sims table: add() puts g into level `level`, extend()
// either grows the orbit or pushes a Schreier generator one level down.
void StabChain::add(std::size_t level, Permutation const &g)
{
  if (contains_from(level, g))
    return;

  if (level == levels_.size()) {
    Level lv;
    lv.base_point = g.first_moved_point();
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit.push_back(lv.base_point);
    lv.orbit_pos[lv.base_point] = 0;
    lv.reps.emplace_back(degree_);
    lv.rep_invs.emplace_back(degree_);
    levels_.push_back(std::move(lv));
  }

  levels_[level].gens.push_back(g);
  std::size_t const known = levels_[level].orbit.size();
  for (std::size_t i = 0; i < known; ++i) {
    Permutation const t = levels_[level].reps[i] * g;
    extend(level, t);
  }
}

void StabChain::extend(std::size_t level, Permutation const &t)
{
  Point const b = t[levels_[level].base_point];
  auto const pos = levels_[level].orbit_pos[b];
  if (pos < 0) {
    auto &lv = levels_[level];
    lv.orbit_pos[b] = static_cast<std::int32_t>(lv.orbit.size());
    lv.orbit.push_back(b);
    lv.reps.push_back(t);
    lv.rep_invs.push_back(t.inverse());
    for (std::size_t j = 0; j < levels_[level].gens.size(); ++j) {
      Permutation const next = t * levels_[level].gens[j];
      extend(level, next);
    }
  } else {
    Permutation const schreier = t * levels_[level].rep_invs[static_cast<std::size_t>(pos)];
    if (!schreier.is_identity())
      add(level + 1, schreier);
  }
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> out;
  for (auto const &lv : levels_)
    out.push_back(lv.base_point);
  return out;
}

std::vector<std::uint64_t> StabChain::orbit_lengths() const
{
  std::vector<std::uint64_t> out;
  for (auto const &lv : levels_)
    out.push_back(lv.orbit.size());
  return out;
}

nt::FactoredInteger StabChain::order() const
{
  nt::FactoredInteger result;
  for (auto const &lv : levels_)
    result = result * nt::FactoredInteger::from_u64(lv.orbit.size());
  return result;
}

std::optional<std::uint64_t> StabChain::rank(std::span<Point const> g) const
{
  if (g.size() != degree_)
    return std::nullopt;
  std::vector<Point> cur(g.begin(), g.end());
  std::vector<Point> tmp(degree_);
  std::uint64_t r = 0;
  for (auto const &lv : levels_) {
    auto const pos = lv.orbit_pos[cur[lv.base_point]];
    if (pos < 0)
      return std::nullopt;
    r = r * lv.orbit.size() + static_cast<std::uint64_t>(pos);
    auto const &inv = lv.rep_invs[static_cast<std::size_t>(pos)];
    for (std::size_t x = 0; x < degree_; ++x)
      tmp[x] = inv[cur[x]];
    cur.swap(tmp);
  }
  for (Point x = 0; x < degree_; ++x) {
    if (cur[x] != x)
      return std::nullopt;
  }
  return r;
}

Permutation StabChain::unrank(std::uint64_t r) const
{
  std::vector<std::size_t> positions(levels_.size());
  for (std::size_t k = levels_.size(); k-- > 0;) {
    auto const len = levels_[k].orbit.size();
    positions[k] = static_cast<std::size_t>(r % len);
    r /= len;
  }
  if (r != 0)
    throw std::out_of_range("StabChain::unrank: rank beyond group order");

  // g = u_{L-1} * ... * u_1 * u_0
  Permutation g(degree_);
  for (std::size_t k = levels_.size(); k-- > 0;)
    g = g * levels_[k].reps[positions[k]];
  return g;
}

// --- ElementTable ----------------------------------------------------------

ElementTable::ElementTable(StabChain const &chain, std::uint64_t order)
  : chain_(chain), degree_(chain.degree())
{
  std::size_t const n = static_cast<std::size_t>(order);
  std::vector<Point> by_rank(n * degree_);
  std::vector<std::uint64_t> order_by_rank(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto const g = chain.unrank(r);
    std::copy(g.images().begin(), g.images().end(), by_rank.begin() + r * degree_);
    order_by_rank[r] = g.order();
  }

  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (order_by_rank[a] != order_by_rank[b])
      return order_by_rank[a] > order_by_rank[b];
    return std::lexicographical_compare(by_rank.begin() + a * degree_,
                                        by_rank.begin() + (a + 1) * degree_,
                                        by_rank.begin() + b * degree_,
                                        by_rank.begin() + (b + 1) * degree_);
  });

  flat_.resize(n * degree_);
  orders_.resize(n);
  rank_to_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto const r = perm[i];
    std::copy(by_rank.begin() + r * degree_, by_rank.begin() + (r + 1) * degree_,
              flat_.begin() + i * degree_);
    orders_[i] = order_by_rank[r];
    rank_to_index_[r] = static_cast<std::uint32_t>(i);
  }
  identity_ = static_cast<std::uint32_t>(n - 1); // the only element of order 1 sorts last
}

Permutation ElementTable::permutation(std::uint32_t i) const
{
  auto const s = images(i);
  return Permutation(std::vector<Point>(s.begin(), s.end()));
}

std::uint32_t ElementTable::index_of(std::span<Point const> g) const
{
  auto const r = chain_.rank(g);
  if (!r)
    throw std::invalid_argument("ElementTable: permutation is not a group member");
  return rank_to_index_[*r];
}

bool ElementTable::commute(std::uint32_t a, std::uint32_t b) const
{
  auto const x = images(a);
  auto const y = images(b);
  for (std::size_t p = 0; p < degree_; ++p) {
    if (y[x[p]] != x[y[p]])
      return false;
  }
  return true;
}

std::uint32_t ElementTable::multiply(std::uint32_t a, std::uint32_t b) const
{
  auto const x = images(a);
  auto const y = images(b);
  std::vector<Point> out(degree_);
  for (std::size_t p = 0; p < degree_; ++p)
    out[p] = y[x[p]];
  return index_of(out);
}

std::uint32_t ElementTable::inverse(std::uint32_t a) const
{
  auto const x = images(a);
  std::vector<Point> out(degree_);
  for (std::size_t p = 0; p < degree_; ++p)
    out[x[p]] = static_cast<Point>(p);
  return index_of(out);
}

std::uint32_t ElementTable::conjugate(std::uint32_t a, Permutation const &g) const
{
  auto const x = images(a);
  std::vector<Point> out(degree_);
  // (g^-1 a g)[g[p]] = g[a[p]]
  for (std::size_t p = 0; p < degree_; ++p)
    out[g[static_cast<Point>(p)]] = g[x[p]];
  return index_of(out);
}

// --- PermGroup -------------------------------------------------------------

struct PermGroup::Impl
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  StabChain chain{0};
  nt::FactoredInteger order;
  mutable std::once_flag elements_once;
  mutable std::unique_ptr<ElementTable> elements;
};

PermGroup::PermGroup(std::vector<Permutation> generators)
{
  if (generators.empty())
    throw std::invalid_argument(
      "build_group: empty generator list (use PermGroup::trivial for the trivial group)");
  auto const degree = generators.front().degree();
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("build_group: generators have different degrees");
  }

  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->chain = StabChain(degree);
  for (auto const &g : generators)
    impl->chain.add_generator(g);
  impl->generators = std::move(generators);
  impl->order = impl->chain.order();
  impl_ = std::move(impl);
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  return PermGroup({Permutation(degree)});
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
std::vector<Permutation> const &PermGroup::generators() const noexcept { return impl_->generators; }
nt::FactoredInteger const &PermGroup::order() const noexcept { return impl_->order; }
StabChain const &PermGroup::chain() const noexcept { return impl_->chain; }

std::uint64_t PermGroup::order_u64() const { return impl_->order.to_u64(); }

bool PermGroup::contains(Permutation const &g) const { return impl_->chain.contains(g); }

bool PermGroup::is_abelian() const
{
  auto const &gens = impl_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j]))
        return false;
    }
  }
  return true;
}

ElementTable const &PermGroup::elements(std::uint64_t cap) const
{
  auto const &ord = impl_->order;
  if (!ord.fits_u64() || ord.to_u64() > cap)
    throw CapacityError("element-enumeration cap", cap,
                        ord.fits_u64() ? ord.to_u64() : UINT64_MAX);
  std::call_once(impl_->elements_once, [this] {
    impl_->elements = std::make_unique<ElementTable>(impl_->chain, impl_->order.to_u64());
  });
  return *impl_->elements;
}

PermGroup build_group(std::vector<Permutation> generators)
{
  return PermGroup(std::move(generators));
}

std::vector<Permutation> enumerate_elements(PermGroup const &g, std::uint64_t cap)
{
  auto const &table = g.elements(cap);
  std::vector<Permutation> out;
  out.reserve(table.size());
  for (std::uint32_t i = 0; i < table.size(); ++i)
    out.push_back(table.permutation(i));
  return out;
}

// --- subgroups -------------------------------------------------------------

namespace {

PermGroup group_from(std::size_t degree, std::vector<Permutation> gens)
{
  std::erase_if(gens, [](Permutation const &p) { return p.is_identity(); });
  if (gens.empty())
    return PermGroup::trivial(degree);
  return PermGroup(std::move(gens));
}

// Greedy generating set for an explicit element list.
std::vector<Permutation> generators_for(std::size_t degree, ElementTable const &table,
                                        std::vector<std::uint32_t> const &members)
{
  StabChain chain(degree);
  std::vector<Permutation> gens;
  for (auto idx : members) {
    auto p = table.permutation(idx);
    if (chain.add_generator(p))
      gens.push_back(std::move(p));
  }
  return gens;
}

} // namespace

SubgroupHandle make_subgroup(PermGroup const &parent, std::vector<Permutation> generators)
{
  for (auto const &g : generators) {
    if (!parent.contains(g))
      throw std::invalid_argument("subgroup generator " + g.to_cycle_string() +
                                  " is not in the parent group");
  }
  return {parent, group_from(parent.degree(), std::move(generators))};
}

SubgroupHandle whole_group(PermGroup const &g) { return {g, g}; }

bool is_subgroup_of(PermGroup const &k, PermGroup const &h)
{
  return std::all_of(k.generators().begin(), k.generators().end(),
                     [&](Permutation const &x) { return h.contains(x); });
}

bool same_subgroup(PermGroup const &a, PermGroup const &b)
{
  return a.order() == b.order() && is_subgroup_of(a, b);
}

SubgroupHandle centralizer(PermGroup const &g, std::span<Permutation const> s, std::uint64_t cap)
{
  for (auto const &x : s) {
    if (!g.contains(x))
      throw std::invalid_argument("centralizer: " + x.to_cycle_string() +
                                  " is not in the group");
  }
  auto const &table = g.elements(cap);
  std::vector<std::uint32_t> idx;
  idx.reserve(s.size());
  for (auto const &x : s)
    idx.push_back(table.index_of(x));

  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if (std::all_of(idx.begin(), idx.end(), [&](std::uint32_t j) { return table.commute(i, j); }))
      members.push_back(i);
  }
  return {g, group_from(g.degree(), generators_for(g.degree(), table, members))};
}

SubgroupHandle center(PermGroup const &g, std::uint64_t cap)
{
  return centralizer(g, g.generators(), cap);
}

SubgroupHandle normalizer(PermGroup const &g, PermGroup const &h, std::uint64_t cap)
{
  auto const &table = g.elements(cap);
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    auto const x = table.permutation(i);
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](Permutation const &y) { return h.contains(conjugate(y, x)); });
    if (ok)
      members.push_back(i);
  }
  return {g, group_from(g.degree(), generators_for(g.degree(), table, members))};
}

bool is_normal(PermGroup const &g, PermGroup const &h)
{
  for (auto const &x : g.generators()) {
    for (auto const &y : h.generators()) {
      if (!h.contains(conjugate(y, x)))
        return false;
    }
  }
  return true;
}

SubgroupHandle normal_closure(PermGroup const &g, std::span<Permutation const> s)
{
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  for (auto const &x : s) {
    if (!g.contains(x))
      throw std::invalid_argument("normal_closure: " + x.to_cycle_string() +
                                  " is not in the group");
    if (chain.add_generator(x))
      gens.push_back(x);
  }

  // conjugates of the current generators by G's generators until closed
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const &x : g.generators()) {
      auto c = conjugate(gens[i], x);
      if (chain.add_generator(c))
        gens.push_back(std::move(c));
    }
  }
  return {g, group_from(g.degree(), std::move(gens))};
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(PermGroup const &g, std::uint64_t cap)
{
  auto const &table = g.elements(cap);
  std::vector<char> seen(table.size(), 0);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<std::uint32_t> cls{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (auto const &x : g.generators()) {
        auto const c = table.conjugate(cls[k], x);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

// Distinct normal closures of single nonidentity elements, one per class.
std::vector<SubgroupHandle> element_normal_closures(PermGroup const &g, std::uint64_t cap)
{
  auto const &table = g.elements(cap);
  std::vector<SubgroupHandle> out;
  for (auto const &cls : conjugacy_classes(g, cap)) {
    if (cls.front() == table.identity_index())
      continue;
    Permutation const x = table.permutation(cls.front());
    auto n = normal_closure(g, std::span<Permutation const>(&x, 1));
    bool dup = std::any_of(out.begin(), out.end(), [&](SubgroupHandle const &m) {
      return same_subgroup(m.group, n.group);
    });
    if (!dup)
      out.push_back(std::move(n));
  }
  return out;
}

} // namespace

std::vector<SubgroupHandle> minimal_normal_subgroups(PermGroup const &g, std::uint64_t cap)
{
  // every nontrivial normal subgroup contains the normal closure of one of its elements
  auto const closures = element_normal_closures(g, cap);
  std::vector<SubgroupHandle> out;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < closures.size() && minimal; ++j) {
      if (i != j && closures[j].order() < closures[i].order() &&
          is_subgroup_of(closures[j].group, closures[i].group))
        minimal = false;
    }
    if (minimal)
      out.push_back(closures[i]);
  }
  std::sort(out.begin(), out.end(), [](SubgroupHandle const &a, SubgroupHandle const &b) {
    return a.order() < b.order();
  });
  return out;
}

bool is_simple(PermGroup const &g, std::uint64_t cap)
{
  if (g.is_trivial())
    return false;
  auto const full = g.order();
  for (auto const &n : element_normal_closures(g, cap)) {
    if (!(n.group.order() == full))
      return false;
  }
  return true;
}

SubgroupHandle sylow_subgroup(PermGroup const &g, std::uint64_t p, std::uint64_t cap)
{
  if (!nt::is_prime(p) || g.order().exponent(p) == 0)
    throw std::invalid_argument("sylow_subgroup: " + std::to_string(p) +
                                " does not divide |G| = " + g.order().to_string());
  auto const &table = g.elements(cap);
  auto const target = g.order().p_part(p);

  auto is_p_power = [p](std::uint64_t n) {
    while (n % p == 0)
      n /= p;
    return n == 1;
  };

  // canonical order puts high-order p-elements first
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if (i != table.identity_index() && is_p_power(table.element_order(i))) {
      gens.push_back(table.permutation(i));
      break;
    }
  }
  PermGroup sub(gens);

  while (sub.order().value() < target) {
    auto const norm = normalizer(g, sub, cap);
    auto const &ntable = norm.group.elements(cap);
    bool grew = false;
    for (std::uint32_t i = 0; i < ntable.size() && !grew; ++i) {
      auto const x = ntable.permutation(i);
      if (!is_p_power(ntable.element_order(i)) || sub.contains(x))
        continue;
      // order of x modulo sub is p^j; x^(p^(j-1)) has order p modulo sub
      Permutation y = x;
      while (!sub.contains(y.pow(static_cast<std::int64_t>(p))))
        y = y.pow(static_cast<std::int64_t>(p));
      gens.push_back(y);
      sub = PermGroup(gens);
      grew = true;
    }
    if (!grew)
      throw std::logic_error("sylow_subgroup: normalizer contains no p-element outside P");
  }
  return {g, sub};
}

} // namespace abelmax
