#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzroot/isolate.hpp"
#include "lzroot/refine.hpp"

namespace lzroot {

/// T_n with the starting interval of the Chebyshev benchmark: the (n/2)-th
/// isolating interval in ascending order, bisected to width <= 10^-5 and on
/// until T_n' and T_n'' have no roots in it.
struct BenchInstance {
  int n = 0;
  Poly polynomial;
  ClosedInterval start;
};

BenchInstance chebyshev_instance(int n);

struct BenchRow {
  int n = 0;
  int L = 0;
  Method method = Method::lz2;
  Mode mode = Mode::interval;
  double seconds = 0.0;  // timed run after a discarded warm-up
  int iterations = 0;
  int precision_digits = 0;
  std::optional<double> order;  // empirical order over the last three iterations
  ClosedInterval enclosure;
  bool contract_ok = false;  // width contract met and f changes sign across the enclosure
};

/// Throws std::invalid_argument unless n is even and >= 2.
std::vector<BenchRow> bench_chebyshev(int n, int L, const std::vector<Method>& methods,
                                      Mode mode = Mode::interval);
std::vector<BenchRow> bench_chebyshev(const BenchInstance& instance, int L,
                                      const std::vector<Method>& methods,
                                      Mode mode = Mode::interval);

std::string bench_table(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows, int indent = 2);

}  // namespace lzroot
