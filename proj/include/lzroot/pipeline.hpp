#pragma once

#include <string>
#include <vector>

#include "lzroot/isolate.hpp"
#include "lzroot/poly.hpp"
#include "lzroot/refine.hpp"

namespace lzroot {

struct RootReport {
  ClosedInterval enclosure;
  int multiplicity = 1;
  std::string decimal;  // digits shared by both enclosure endpoints
  int correct_digits = 0;
  int iterations = 0;
  double wall_time = 0.0;  // seconds
};

struct RefineReport {
  Poly polynomial;
  Method method = Method::lz2;
  Mode mode = Mode::exact;
  int L = 0;
  std::vector<RootReport> roots;  // ascending, pairwise disjoint
};

/// Square-free decomposition, LMCD of each part, MCI of each factor, then the
/// configured refiner on every non-point interval. Throws PreconditionError
/// for the zero polynomial.
RefineReport refine_pipeline(const Poly& f, const RefineConfig& config,
                             const PrecisionPolicy& policy = {});

std::string report_text(const RefineReport& report);
std::string report_json(const RefineReport& report, int indent = 2);

}  // namespace lzroot
