#include "abelmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>

#include <omp.h>

namespace abelmax {

namespace {

using Clock = std::chrono::steady_clock;
using IndexSet = std::vector<std::uint32_t>; // sorted element indices

struct IndexSetHash
{
  std::size_t operator()(IndexSet const &s) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : s) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::uint64_t smallest_prime_factor(std::uint64_t n)
{
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0)
      return p;
  }
  return n;
}

std::vector<Permutation> generating_set(ElementTable const &table, IndexSet const &members)
{
  StabChain chain(table.degree());
  std::vector<Permutation> gens;
  for (auto i : members) {
    auto p = table.permutation(i);
    if (chain.add_generator(p))
      gens.push_back(std::move(p));
  }
  return gens;
}

// Best-so-far bound shared by every root; the witness is replaced only on a
// strict improvement.
class Incumbent
{
public:
  Incumbent(std::uint64_t order, std::vector<Permutation> gens) : best_(order)
  {
    witness_.order = order;
    witness_.generators = std::move(gens);
  }

  std::uint64_t best() const noexcept { return best_.load(std::memory_order_relaxed); }

  template <class MakeGens>
  void offer(std::uint64_t order, MakeGens &&make_gens)
  {
    if (order <= best())
      return;
    std::lock_guard lock(mu_);
    if (order <= best_.load(std::memory_order_relaxed))
      return;
    witness_.order = order;
    witness_.generators = make_gens();
    best_.store(order, std::memory_order_relaxed);
  }

  AbelianWitness const &witness() const noexcept { return witness_; }

private:
  std::atomic<std::uint64_t> best_;
  std::mutex mu_;
  AbelianWitness witness_;
};

// One root's depth-first search. Not shared between threads.
class RootSearch
{
public:
  RootSearch(ElementTable const &table, Incumbent &incumbent, std::size_t memo_limit)
    : table_(table), incumbent_(incumbent), memo_limit_(memo_limit), scratch_(table.degree())
  {}

  void run(std::uint32_t root)
  {
    IndexSet a = cyclic(root);
    IndexSet c;
    for (std::uint32_t i = 0; i < table_.size(); ++i) {
      if (table_.commute(i, root))
        c.push_back(i);
    }
    path_.assign(1, root);
    dfs(a, c, -1);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  std::uint32_t mul(std::uint32_t a, std::uint32_t b)
  {
    auto const x = table_.images(a);
    auto const y = table_.images(b);
    for (std::size_t p = 0; p < scratch_.size(); ++p)
      scratch_[p] = y[x[p]];
    return table_.index_of(scratch_);
  }

  IndexSet cyclic(std::uint32_t x)
  {
    IndexSet out{table_.identity_index()};
    for (std::uint32_t cur = x; cur != table_.identity_index(); cur = mul(cur, x))
      out.push_back(cur);
    std::sort(out.begin(), out.end());
    return out;
  }

  // <A, y> for abelian A and y centralizing A: the cosets A y^j, j < [<A,y> : A].
  IndexSet closure(IndexSet const &a, std::uint32_t y)
  {
    std::vector<std::uint32_t> powers;
    for (std::uint32_t cur = y; !std::binary_search(a.begin(), a.end(), cur); cur = mul(cur, y))
      powers.push_back(cur);
    IndexSet out = a;
    out.reserve(a.size() * (powers.size() + 1));
    for (auto x : a) {
      for (auto w : powers)
        out.push_back(mul(x, w));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_abelian(IndexSet const &c) const
  {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!table_.commute(c[i], c[j]))
          return false;
      }
    }
    return true;
  }

  void dfs(IndexSet const &a, IndexSet const &c, std::int64_t last)
  {
    ++nodes_;
    incumbent_.offer(a.size(), [&] {
      std::vector<Permutation> gens;
      for (auto i : path_)
        gens.push_back(table_.permutation(i));
      return gens;
    });

    // every abelian extension of A lies in C
    if (c.size() <= incumbent_.best() || c.size() == a.size())
      return;
    if (is_abelian(c)) {
      incumbent_.offer(c.size(), [&] { return generating_set(table_, c); });
      return;
    }
    // a proper subgroup of C containing A has index at least the least prime of |C:A|
    auto const bound = c.size() / smallest_prime_factor(c.size() / a.size());
    if (bound <= incumbent_.best())
      return;

    // (A, last) reaches a subset of what (A, last') reaches when last' <= last
    if (auto it = memo_.find(a); it != memo_.end()) {
      if (it->second <= last)
        return;
      it->second = last;
    } else if (memo_.size() < memo_limit_) {
      memo_.emplace(a, last);
    }

    for (auto y : c) {
      if (static_cast<std::int64_t>(y) <= last || std::binary_search(a.begin(), a.end(), y))
        continue;
      IndexSet next_c;
      next_c.reserve(c.size());
      for (auto z : c) {
        if (table_.commute(z, y))
          next_c.push_back(z);
      }
      if (next_c.size() <= incumbent_.best())
        continue;
      IndexSet next_a = closure(a, y);
      path_.push_back(y);
      dfs(next_a, next_c, y);
      path_.pop_back();
    }
  }

  ElementTable const &table_;
  Incumbent &incumbent_;
  std::size_t memo_limit_;
  std::vector<Point> scratch_;
  std::vector<std::uint32_t> path_;
  std::unordered_map<IndexSet, std::int64_t, IndexSetHash> memo_;
  std::uint64_t nodes_ = 0;
};

struct Roots
{
  std::vector<std::uint32_t> reps;
  std::vector<std::uint64_t> centralizer_orders;
};

Roots root_classes(PermGroup const &g, ElementTable const &table, std::uint64_t cap)
{
  Roots roots;
  for (auto const &cls : conjugacy_classes(g, cap)) {
    if (cls.front() == table.identity_index())
      continue;
    roots.reps.push_back(cls.front());
    roots.centralizer_orders.push_back(table.size() / cls.size());
  }
  return roots;
}

// abelian and trivial groups need no search
bool shortcut(PermGroup const &g, MaxAbelianResult &out)
{
  if (!g.is_abelian())
    return false;
  out.m = g.order_u64();
  out.witness.order = out.m;
  for (auto const &x : g.generators()) {
    if (!x.is_identity())
      out.witness.generators.push_back(x);
  }
  out.witness.normal_in_parent = true;
  return true;
}

MaxAbelianResult run_search(PermGroup const &g, SearchOptions const &opts, bool parallel)
{
  auto const start = Clock::now();
  MaxAbelianResult result;
  if (shortcut(g, result)) {
    result.wall_time = Clock::now() - start;
    return result;
  }

  auto const &table = g.elements(opts.enum_cap);
  auto const roots = root_classes(g, table, opts.enum_cap);

  // canonical order starts with an element of maximal order
  Incumbent incumbent(table.element_order(0), {table.permutation(0)});
  std::atomic<std::uint64_t> nodes{0};

  auto process = [&](std::size_t r) {
    if (roots.centralizer_orders[r] <= incumbent.best())
      return;
    RootSearch search(table, incumbent, opts.memo_limit);
    search.run(roots.reps[r]);
    nodes.fetch_add(search.nodes(), std::memory_order_relaxed);
  };

  if (parallel) {
    auto const n = static_cast<std::int64_t>(roots.reps.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.workers)
    for (std::int64_t r = 0; r < n; ++r)
      process(static_cast<std::size_t>(r));
  } else {
    for (std::size_t r = 0; r < roots.reps.size(); ++r)
      process(r);
  }

  result.m = incumbent.best();
  result.witness = incumbent.witness();
  result.witness.normal_in_parent =
    result.witness.generators.empty() || is_normal(g, PermGroup(result.witness.generators));
  result.nodes_explored = nodes.load();
  result.wall_time = Clock::now() - start;
  return result;
}

} // namespace

MaxAbelianResult max_abelian_order_serial(PermGroup const &g, SearchOptions const &opts)
{
  return run_search(g, opts, false);
}

MaxAbelianResult max_abelian_order_parallel(PermGroup const &g, SearchOptions const &opts)
{
  return run_search(g, opts, true);
}

MaxAbelianResult max_abelian_order(PermGroup const &g, SearchOptions const &opts)
{
  return opts.workers > 1 ? max_abelian_order_parallel(g, opts)
                          : max_abelian_order_serial(g, opts);
}

bool witness_is_valid(PermGroup const &g, AbelianWitness const &w)
{
  for (std::size_t i = 0; i < w.generators.size(); ++i) {
    if (!g.contains(w.generators[i]))
      return false;
    for (std::size_t j = i + 1; j < w.generators.size(); ++j) {
      if (!commute(w.generators[i], w.generators[j]))
        return false;
    }
  }
  std::uint64_t order = 1;
  if (!w.generators.empty()) {
    PermGroup const sub(w.generators);
    if (!sub.order().fits_u64())
      return false;
    order = sub.order_u64();
  }
  return order == w.order;
}

} // namespace abelmax
