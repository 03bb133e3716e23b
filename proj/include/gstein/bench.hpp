#pragma once

// Closed-form reduction versus repeated classical Stein steps.

#include <cstdint>
#include <string>
#include <vector>

#include "gstein/stein.hpp"

namespace gstein {

struct BenchRecord {
  unsigned n = 0;
  ReductionMethod method = ReductionMethod::closed_form;
  std::uint64_t wall_time_ns = 0;  // fastest of the repeats, at least 1
  std::size_t final_terms = 0;
  std::size_t peak_terms = 0;
  std::size_t steps = 0;
};

constexpr unsigned kMaxBenchOrder = 30;

/// Zero-mean reductions for n = 0 .. n_max, closed form then recursive for
/// each n. Throws std::invalid_argument if n_max > 30 or repeats == 0.
std::vector<BenchRecord> run_bench(unsigned n_max, unsigned repeats);

}  // namespace gstein
