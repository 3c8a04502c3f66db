#include "lzroot/bench.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lzroot/errors.hpp"
#include "lzroot/parse.hpp"

namespace lzroot {

BenchInstance chebyshev_instance(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("benchmark degree must be even and >= 2");
  Poly t = chebyshev(n);
  Isolation iso = isolate_roots(t);
  ClosedInterval box = iso.intervals.at(static_cast<std::size_t>(n / 2 - 1));
  box = bisect_to_width(t, box, Rational(1, 100000));
  Poly d1 = derivative(t);
  Poly d2 = derivative(d1);
  while (!box.is_point() && !(sign_constant(d1, box) && sign_constant(d2, box))) {
    box = bisect_step(t, box);
  }
  return {n, std::move(t), std::move(box)};
}

std::vector<BenchRow> bench_chebyshev(const BenchInstance& instance, int L,
                                      const std::vector<Method>& methods, Mode mode) {
  std::vector<BenchRow> rows;
  for (Method method : methods) {
    RefineConfig config;
    config.L = L;
    config.mode = mode;
    config.method = method;
    refine(instance.polynomial, instance.start, config);  // warm-up
    auto t0 = std::chrono::steady_clock::now();
    RefineResult r = refine(instance.polynomial, instance.start, config);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    BenchRow row;
    row.n = instance.n;
    row.L = L;
    row.method = method;
    row.mode = mode;
    row.seconds = seconds;
    row.iterations = r.iterations;
    row.precision_digits = r.precision_digits;
    row.order = empirical_order(trace_widths(r.trace));
    row.enclosure = r.enclosure;
    const auto& e = r.enclosure;
    int s_lo = sign(eval_exact(instance.polynomial, e.lo));
    int s_hi = sign(eval_exact(instance.polynomial, e.hi));
    bool brackets = e.is_point() ? s_lo == 0 : s_lo * s_hi <= 0;
    row.contract_ok = brackets && (e.is_point() || meets_relative_width(e.lo, e.hi, L));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BenchRow> bench_chebyshev(int n, int L, const std::vector<Method>& methods,
                                      Mode mode) {
  return bench_chebyshev(chebyshev_instance(n), L, methods, mode);
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%6s %6s %6s %9s %10s %6s %8s %7s %9s\n", "n", "L", "method",
                "mode", "time(s)", "iters", "digits", "order", "contract");
  os << line;
  for (const auto& r : rows) {
    std::string order = r.order ? std::to_string(*r.order).substr(0, 5) : "-";
    std::snprintf(line, sizeof line, "%6d %6d %6s %9s %10.4f %6d %8d %7s %9s\n", r.n, r.L,
                  to_string(r.method), to_string(r.mode), r.seconds, r.iterations,
                  r.precision_digits, order.c_str(), r.contract_ok ? "ok" : "FAIL");
    os << line;
  }
  return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows, int indent) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"n", r.n},
                       {"L", r.L},
                       {"method", to_string(r.method)},
                       {"mode", to_string(r.mode)},
                       {"seconds", r.seconds},
                       {"iterations", r.iterations},
                       {"precision_digits", r.precision_digits},
                       {"lo", to_string(r.enclosure.lo)},
                       {"hi", to_string(r.enclosure.hi)},
                       {"contract_ok", r.contract_ok}};
    row["order"] = r.order ? nlohmann::json(*r.order) : nlohmann::json(nullptr);
    out.push_back(std::move(row));
  }
  return out.dump(indent);
}

}  // namespace lzroot
