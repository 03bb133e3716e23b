#include "gstein/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace gstein {

namespace {

template <class Fn>
std::uint64_t fastest_ns(unsigned repeats, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (unsigned r = 0; r < repeats; ++r) {
    const auto start = clock::now();
    fn();
    const auto stop = clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(ns));
  }
  return std::max<std::uint64_t>(best, 1);
}

}  // namespace

std::vector<BenchRecord> run_bench(unsigned n_max, unsigned repeats) {
  if (n_max > kMaxBenchOrder)
    throw std::invalid_argument("bench n_max must be <= " + std::to_string(kMaxBenchOrder));
  if (repeats == 0) throw std::invalid_argument("bench repeats must be >= 1");

  std::vector<BenchRecord> records;
  for (unsigned n = 0; n <= n_max; ++n) {
    Reduction closed;
    const auto closed_ns = fastest_ns(repeats, [&] { closed = reduce_zero_mean(n); });
    const auto closed_count = closed.terms.size();
    records.push_back({n, ReductionMethod::closed_form, closed_ns, closed_count, closed_count, 0});

    RewriteResult rewritten;
    const auto rec_ns =
        fastest_ns(repeats, [&] { rewritten = rewrite_with_stats(n, LawKind::zero_mean); });
    const auto& s = rewritten.stats;
    records.push_back({n, ReductionMethod::recursive, rec_ns, s.final_term_count,
                       s.peak_intermediate_term_count, s.rewrite_steps});
  }
  return records;
}

}  // namespace gstein
