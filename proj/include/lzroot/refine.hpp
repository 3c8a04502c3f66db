#pragma once

#include <optional>
#include <vector>

#include "lzroot/interval.hpp"
#include "lzroot/isolate.hpp"
#include "lzroot/poly.hpp"

namespace lzroot {

enum class Method { lz1, lz2 };
enum class Mode { exact, interval };

const char* to_string(Method method);
const char* to_string(Mode mode);

struct RefineConfig {
  int L = 8;                 // target relative width 10^-L
  Mode mode = Mode::exact;
  Method method = Method::lz2;
  int max_iterations = 0;    // 0: 64 + 2 * ceil(log2(L + 1))
  int extra_iterations = 0;  // full iterations to keep running after the target is met
  int prenarrow_digits = 5;  // pipeline only: bisect isolating intervals to width 10^-k first

  int iteration_cap() const;
};

/// Precision handling for the interval refiners. Zero fields are resolved
/// per problem by `resolved`.
struct PrecisionPolicy {
  int initial_l = 0;
  int escalation_factor = 2;
  int exact_fallback_threshold = 0;

  /// initial_l: max(min(100, deg f + 5), floor(1.6 L), digits of a, digits of b).
  /// threshold: 4 * (bits of the largest integer coefficient) + 8 * deg f, at least initial_l.
  PrecisionPolicy resolved(const Poly& f, const ClosedInterval& interval, int L) const;
};

/// Newton starting bound x (the endpoint where f * f'' > 0) and the opposite bound c.
struct StartPoints {
  Rational x;
  Rational c;
};

/// Throws InvalidInterval when a >= b or a * b <= 0, NotBracketing when
/// f(a) * f(b) >= 0.
StartPoints select_start(const Poly& f, const ClosedInterval& interval);

/// One enclosure in a refinement trace. `full` marks the end of an iteration
/// (after the secant update); LZ2 Newton half-steps are recorded with full = false.
struct TraceEntry {
  int iteration = 0;
  Rational x;
  Rational c;
  bool full = true;

  ClosedInterval enclosure() const;
};

struct RefineResult {
  ClosedInterval enclosure;
  int iterations = 0;
  int precision_digits = 0;  // largest working precision used (interval mode)
  std::vector<TraceEntry> trace;
};

RefineResult lz1_exact(const Poly& f, const ClosedInterval& interval, int L);
RefineResult lz2_exact(const Poly& f, const ClosedInterval& interval, int L);
RefineResult lz1_interval(const Poly& f, const ClosedInterval& interval, int L,
                          const PrecisionPolicy& policy = {});
RefineResult lz2_interval(const Poly& f, const ClosedInterval& interval, int L,
                          const PrecisionPolicy& policy = {});

/// Dispatches on config.method and config.mode.
RefineResult refine(const Poly& f, const ClosedInterval& interval, const RefineConfig& config,
                    const PrecisionPolicy& policy = {});

/// |hi - lo| <= 10^-L * min(|lo|, |hi|), decided exactly.
bool meets_relative_width(const Rational& lo, const Rational& hi, int L);

struct CertifiedSign {
  int sign = 0;
  FloatInterval enclosure;
  int digits_used = 0;
  bool exact_fallback = false;
};

/// Sign of f(q) by interval Horner, escalating the precision by the policy's
/// factor while the enclosure straddles 0; past the threshold f(q) is evaluated
/// exactly, so sign 0 means q is a root.
CertifiedSign certified_sign_eval(const Poly& f, const Rational& q, const PrecisionPolicy& policy);

struct DigitCount {
  int iteration = 0;
  int correct_digits = 0;
};

/// Shared leading decimal digits of the enclosure after each full iteration.
std::vector<DigitCount> convergence_trace(const Poly& f, const ClosedInterval& interval,
                                          const RefineConfig& config,
                                          const PrecisionPolicy& policy = {});

/// Widths of the full-iteration enclosures of a trace.
std::vector<Rational> trace_widths(const std::vector<TraceEntry>& trace);

/// log(w3 / w2) / log(w2 / w1) over the last three widths; nullopt with fewer.
std::optional<double> empirical_order(const std::vector<Rational>& widths);

}  // namespace lzroot
