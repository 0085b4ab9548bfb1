#include <algorithm>
#include <set>
#include <stdexcept>

#include "abelmax/search.hpp"

namespace abelmax {

std::uint64_t p_group_prime(PermGroup const &p_group)
{
  auto const &f = p_group.order().factors();
  return f.size() == 1 ? f.begin()->first : 0;
}

AbelianWitness max_abelian_normal_in_pgroup(PermGroup const &p_group, std::uint64_t cap)
{
  if (p_group_prime(p_group) == 0)
    throw std::invalid_argument("max_abelian_normal_in_pgroup: order " +
                                p_group.order().to_string() + " is not a prime power > 1");

  auto const &table = p_group.elements(cap);
  auto const classes = conjugacy_classes(p_group, cap);

  // normal subgroups are unions of classes; a set of classes is represented
  // by the sorted element indices it closes to
  auto close = [&](std::vector<std::uint32_t> gens) {
    std::vector<std::uint32_t> members{table.identity_index()};
    std::vector<char> in(table.size(), 0);
    in[table.identity_index()] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto s : gens) {
        auto const z = table.multiply(members[i], s);
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  // the center: all singleton classes; every maximal abelian normal subgroup contains it
  std::vector<std::uint32_t> central;
  for (auto const &cls : classes) {
    if (cls.size() == 1)
      central.push_back(cls.front());
  }

  std::set<std::vector<std::uint32_t>> visited;
  std::vector<std::vector<std::uint32_t>> stack{close(central)};
  visited.insert(stack.back());
  std::vector<std::uint32_t> best = stack.back();

  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    if (cur.size() > best.size())
      best = cur;

    for (auto const &cls : classes) {
      if (std::binary_search(cur.begin(), cur.end(), cls.front()))
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < cls.size() && ok; ++i) {
        for (auto z : cur) {
          if (!table.commute(cls[i], z)) {
            ok = false;
            break;
          }
        }
        for (std::size_t j = i + 1; j < cls.size() && ok; ++j)
          ok = table.commute(cls[i], cls[j]);
      }
      if (!ok)
        continue;
      auto gens = cur;
      gens.insert(gens.end(), cls.begin(), cls.end());
      auto next = close(std::move(gens));
      if (visited.insert(next).second)
        stack.push_back(std::move(next));
    }
  }

  AbelianWitness w;
  w.order = best.size();
  w.normal_in_parent = true;
  StabChain chain(p_group.degree());
  for (auto i : best) {
    auto p = table.permutation(i);
    if (chain.add_generator(p))
      w.generators.push_back(std::move(p));
  }
  return w;
}

namespace {

std::uint32_t log_p(std::uint64_t n, std::uint64_t p)
{
  std::uint32_t e = 0;
  while (n > 1) {
    if (n % p != 0)
      throw std::logic_error("log_p: not a power of p");
    n /= p;
    ++e;
  }
  return e;
}

} // namespace

LemmaReport lemma_check(PermGroup const &p_group, std::uint64_t cap)
{
  LemmaReport r;
  r.p = p_group_prime(p_group);
  if (r.p == 0)
    throw std::invalid_argument("lemma_check: order " + p_group.order().to_string() +
                                " is not a prime power > 1");

  r.k = p_group.order().exponent(r.p);
  r.s = log_p(max_abelian_normal_in_pgroup(p_group, cap).order, r.p);
  r.v = r.s;
  r.c = log_p(center(p_group, cap).order(), r.p);

  r.bound_holds = 2ull * r.k <= std::uint64_t(r.s) * (r.s + 1);
  // k - v <= (v - c)(v + c - 1)/2, both sides doubled; v >= c always
  r.burnside_holds = 2ll * (std::int64_t(r.k) - std::int64_t(r.v)) <=
                     (std::int64_t(r.v) - std::int64_t(r.c)) * (std::int64_t(r.v) + r.c - 1);
  return r;
}

} // namespace abelmax
