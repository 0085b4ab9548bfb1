// Serial vs OpenMP kernels: max-abelian search and the prime sieve.
// usage: bench_kernels [workers] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "abelmax/catalog.hpp"
#include "abelmax/numtheory.hpp"
#include "abelmax/search.hpp"

using namespace abelmax;

namespace {

template <class F>
double best_of(int repeats, F &&f)
{
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto const t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

} // namespace

int main(int argc, char **argv)
{
  int const workers = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  int const repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("workers=%d repeats=%d\n", workers, repeats);
  std::printf("%-16s %12s %12s %8s\n", "kernel", "serial_s", "parallel_s", "speedup");

  for (auto const *text : {"sym:6", "alt:7", "pgl2:13", "agl3_2", "alt:8", "file:groups/m12.gens"}) {
    auto const g = build_named(GroupSpec::parse(text));
    g.elements(); // table build is shared, keep it out of the timing
    SearchOptions opts;
    opts.workers = workers;
    std::uint64_t m_serial = 0, m_parallel = 0;
    double const ts = best_of(repeats, [&] { m_serial = max_abelian_order_serial(g, opts).m; });
    double const tp = best_of(repeats, [&] { m_parallel = max_abelian_order_parallel(g, opts).m; });
    if (m_serial != m_parallel) {
      std::fprintf(stderr, "%s: serial m=%llu parallel m=%llu\n", text,
                   (unsigned long long)m_serial, (unsigned long long)m_parallel);
      return 1;
    }
    std::printf("%-16s %12.4f %12.4f %8.2f\n", text, ts, tp, ts / tp);
  }

  for (std::uint64_t limit : {10'000'000ull, 100'000'000ull}) {
    std::size_t ns = 0, np = 0;
    double const ts = best_of(repeats, [&] { ns = nt::sieve_primes(limit).size(); });
    double const tp = best_of(repeats, [&] { np = nt::sieve_primes_parallel(limit, workers).size(); });
    if (ns != np) {
      std::fprintf(stderr, "sieve %llu: %zu vs %zu\n", (unsigned long long)limit, ns, np);
      return 1;
    }
    std::printf("%-16s %12.4f %12.4f %8.2f\n", ("sieve:" + std::to_string(limit)).c_str(), ts, tp,
                ts / tp);
  }
  return 0;
}
