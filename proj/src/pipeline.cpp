#include "lzroot/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "lzroot/decompose.hpp"
#include "lzroot/errors.hpp"

namespace lzroot {

namespace {

struct Candidate {
  ClosedInterval interval;
  const Poly* factor;
  int multiplicity;
};

// Bisects overlapping neighbours inside their own factor until all candidate
// intervals are pairwise disjoint. Subintervals keep the MCI property.
void separate(std::vector<Candidate>& cands) {
  auto by_lo = [](const Candidate& a, const Candidate& b) { return a.interval.lo < b.interval.lo; };
  std::sort(cands.begin(), cands.end(), by_lo);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
      Candidate& a = cands[i];
      Candidate& b = cands[i + 1];
      if (!a.interval.intersects(b.interval)) continue;
      Candidate& wide = a.interval.width() >= b.interval.width() ? a : b;
      wide.interval = bisect_step(*wide.factor, wide.interval);
      changed = true;
    }
    if (changed) std::sort(cands.begin(), cands.end(), by_lo);
  }
}

}  // namespace

RefineReport refine_pipeline(const Poly& f, const RefineConfig& config,
                             const PrecisionPolicy& policy) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no isolated roots");
  RefineReport report{f, config.method, config.mode, config.L, {}};
  if (f.degree() == 0) return report;

  std::vector<Poly> factors;
  std::vector<int> multiplicities;
  for (const auto& sf : square_free_decomposition(f).factors) {
    for (auto& g : lmcd(sf.factor).factors) {
      factors.push_back(std::move(g));
      multiplicities.push_back(sf.multiplicity);
    }
  }
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& interval : mci(factors[i]).intervals) {
      cands.push_back({interval, &factors[i], multiplicities[i]});
    }
  }
  separate(cands);
  if (config.prenarrow_digits > 0) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(config.prenarrow_digits));
    const Rational width = Rational(1) / Rational(scale);
    for (auto& cand : cands) {
      if (!cand.interval.is_point()) cand.interval = bisect_to_width(*cand.factor, cand.interval, width);
    }
  }

  for (const auto& cand : cands) {
    RootReport root;
    root.multiplicity = cand.multiplicity;
    if (cand.interval.is_point()) {
      root.enclosure = cand.interval;
    } else {
      auto t0 = std::chrono::steady_clock::now();
      RefineResult r = refine(*cand.factor, cand.interval, config, policy);
      root.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      root.enclosure = r.enclosure;
      root.iterations = r.iterations;
    }
    root.decimal = shared_decimal_prefix(root.enclosure.lo, root.enclosure.hi,
                                         std::max(config.L, 20));
    root.correct_digits = significant_digits(root.decimal);
    report.roots.push_back(std::move(root));
  }
  return report;
}

std::string report_text(const RefineReport& report) {
  std::ostringstream os;
  os << "polynomial: " << to_string(report.polynomial) << "\n";
  os << "method: " << to_string(report.method) << "  mode: " << to_string(report.mode)
     << "  L: " << report.L << "\n";
  os << "roots: " << report.roots.size() << "\n";
  int k = 1;
  for (const auto& r : report.roots) {
    os << "  #" << k++ << "  " << (r.decimal.empty() ? "?" : r.decimal) << "  multiplicity "
       << r.multiplicity << "  digits " << r.correct_digits << "  iterations " << r.iterations
       << "\n      lo = " << to_string(r.enclosure.lo) << "\n      hi = " << to_string(r.enclosure.hi)
       << "\n";
  }
  return os.str();
}

std::string report_json(const RefineReport& report, int indent) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : report.roots) {
    roots.push_back({{"lo", to_string(r.enclosure.lo)},
                     {"hi", to_string(r.enclosure.hi)},
                     {"decimal", r.decimal},
                     {"multiplicity", r.multiplicity},
                     {"correct_digits", r.correct_digits},
                     {"iterations", r.iterations},
                     {"wall_time", r.wall_time}});
  }
  nlohmann::json doc{{"polynomial", to_string(report.polynomial)},
                     {"method", to_string(report.method)},
                     {"mode", to_string(report.mode)},
                     {"L", report.L},
                     {"roots", roots}};
  return doc.dump(indent);
}

}  // namespace lzroot
