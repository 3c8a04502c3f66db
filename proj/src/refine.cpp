#include "lzroot/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lzroot/errors.hpp"
#include "zpoly.hpp"

namespace lzroot {

const char* to_string(Method method) { return method == Method::lz1 ? "lz1" : "lz2"; }
const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "interval"; }

int RefineConfig::iteration_cap() const {
  if (max_iterations > 0) return max_iterations;
  return 64 + 2 * static_cast<int>(std::ceil(std::log2(static_cast<double>(L) + 1.0)));
}

namespace {

int default_threshold(const Poly& f) {
  long bits = 0;
  for (const auto& a : detail::to_zpoly(f)) bits = std::max(bits, bit_length(a));
  return static_cast<int>(4 * bits + 8L * std::max(f.degree(), 0));
}

int correct_digit_estimate(const Rational& x, const Rational& c) {
  Rational m = std::min(abs_value(x), abs_value(c));
  if (m == 0 || x == c) return 0;
  double d = -log10_abs(Rational(abs_value(x - c) / m));
  return d > 0 ? static_cast<int>(d) : 0;
}

}  // namespace

PrecisionPolicy PrecisionPolicy::resolved(const Poly& f, const ClosedInterval& interval,
                                          int L) const {
  PrecisionPolicy out = *this;
  if (out.initial_l <= 0) {
    out.initial_l = std::max({std::min(100, f.degree() + 5), (16 * L) / 10,
                              decimal_size(interval.lo), decimal_size(interval.hi)});
  }
  if (out.escalation_factor < 2) out.escalation_factor = 2;
  if (out.exact_fallback_threshold <= 0) out.exact_fallback_threshold = default_threshold(f);
  out.exact_fallback_threshold = std::max(out.exact_fallback_threshold, out.initial_l);
  return out;
}

bool meets_relative_width(const Rational& lo, const Rational& hi, int L) {
  Rational scale;
  mpz_ui_pow_ui(scale.get_num_mpz_t(), 10, static_cast<unsigned long>(L));
  scale.get_den() = 1;
  return abs_value(hi - lo) * scale <= std::min(abs_value(lo), abs_value(hi));
}

ClosedInterval TraceEntry::enclosure() const {
  return x < c ? ClosedInterval{x, c} : ClosedInterval{c, x};
}

StartPoints select_start(const Poly& f, const ClosedInterval& interval) {
  const Rational& a = interval.lo;
  const Rational& b = interval.hi;
  if (a >= b) throw InvalidInterval("refinement needs lo < hi");
  if (sign(a) * sign(b) <= 0) throw InvalidInterval("refinement needs an interval excluding 0");
  int fa = sign(eval_exact(f, a));
  int fb = sign(eval_exact(f, b));
  if (fa * fb >= 0) throw NotBracketing();
  int f2a = sign(eval_exact(derivative(derivative(f)), a));
  if (fa * f2a > 0) return {a, b};
  return {b, a};
}

CertifiedSign certified_sign_eval(const Poly& f, const Rational& q, const PrecisionPolicy& policy) {
  int l = policy.initial_l > 0 ? policy.initial_l
                               : std::max(std::min(100, f.degree() + 5), decimal_size(q));
  int factor = std::max(2, policy.escalation_factor);
  int threshold = policy.exact_fallback_threshold > 0 ? policy.exact_fallback_threshold
                                                      : default_threshold(f);
  while (true) {
    Precision p{l};
    FloatInterval e = eval_interval(f, round_out(q, p), p);
    IntervalSign s = fi_sign(e);
    if (s != IntervalSign::indeterminate) return {to_int(s), std::move(e), l, false};
    if (static_cast<long>(l) * factor > threshold) {
      Rational v = eval_exact(f, q);
      return {sign(v), round_out(v, p), l, true};
    }
    l *= factor;
  }
}

namespace {

/// Root found exactly at an iterate.
struct ExactRootHit {
  Rational root;
};

class ExactArith {
 public:
  using Value = Rational;

  explicit ExactArith(const Poly& f) : f_(f), df_(derivative(f)) {}

  void begin_iteration(const Rational&, const Rational&) {}
  bool retry() { return false; }
  int digits() const { return 0; }

  Value value(const Rational& x, int expected_sign) {
    Rational v = eval_exact(f_, x);
    check_sign(sign(v), expected_sign, x);
    return v;
  }
  Rational newton(const Rational& from, const Value& f_from, int) {
    Rational d = eval_exact(df_, from);
    if (d == 0) throw InternalError("f' vanished at a refinement iterate");
    return from - f_from / d;
  }
  Rational secant(const Rational& x, const Value& u, const Rational& c, const Value& v, int) {
    if (v == u) throw InternalError("secant denominator vanished");
    return (x * v - c * u) / (v - u);
  }
  void certify(const Rational&, int, const Rational&, int) {}

  static void check_sign(int got, int expected, const Rational& x) {
    if (got == 0) throw ExactRootHit{x};
    if (got != expected) throw InternalError("iterate left its side of the root");
  }

 private:
  const Poly& f_;
  Poly df_;
};

class IntervalArith {
 public:
  struct Value {
    FloatInterval enclosure;
    int sign;
  };

  IntervalArith(const Poly& f, const PrecisionPolicy& policy, int order)
      : f_(f), df_(derivative(f)), policy_(policy), order_(order), l_(policy.initial_l),
        max_used_(policy.initial_l) {}

  void begin_iteration(const Rational& x, const Rational& c) {
    l_ = std::max(l_, order_ * correct_digit_estimate(x, c) + kGuardDigits);
    max_used_ = std::max(max_used_, l_);
  }
  bool retry() {
    if (l_ > kMaxDigits) return false;
    l_ *= policy_.escalation_factor;
    max_used_ = std::max(max_used_, l_);
    return true;
  }
  int digits() const { return max_used_; }

  Value value(const Rational& x, int expected_sign) {
    CertifiedSign cs = certified_sign_eval(f_, x, query_policy());
    note(cs.digits_used);
    ExactArith::check_sign(cs.sign, expected_sign, x);
    return {std::move(cs.enclosure), cs.sign};
  }
  Rational newton(const Rational& from, const Value& f_from, int toward) {
    CertifiedSign d = certified_sign_eval(df_, from, query_policy());
    note(d.digits_used);
    if (d.sign == 0) throw InternalError("f' vanished at a refinement iterate");
    Precision p{l_};
    FloatInterval step = fi_div(f_from.enclosure, d.enclosure, p);
    FloatInterval r = fi_sub(round_out(from, p), step, p);
    return outer(r, toward);
  }
  Rational secant(const Rational& x, const Value& u, const Rational& c, const Value& v,
                  int toward) {
    // x - u (x - c) / (u - v) keeps the rounding error proportional to |x - c|.
    Precision p{l_};
    FloatInterval gap = round_out(Rational(x - c), p);
    FloatInterval den = fi_sub(u.enclosure, v.enclosure, p);
    FloatInterval step = fi_div(fi_mul(u.enclosure, gap, p), den, p);
    return outer(fi_sub(round_out(x, p), step, p), toward);
  }
  /// Certifies opposite signs of f at the final endpoints.
  void certify(const Rational& x, int sx, const Rational& c, int sc) {
    value(x, sx);
    value(c, sc);
  }

 private:
  static constexpr int kGuardDigits = 10;
  static constexpr int kMaxDigits = 1 << 22;

  static Rational outer(const FloatInterval& r, int toward) {
    return toward > 0 ? r.hi.to_rational() : r.lo.to_rational();
  }
  PrecisionPolicy query_policy() const {
    PrecisionPolicy q = policy_;
    q.initial_l = l_;
    q.exact_fallback_threshold = std::max(policy_.exact_fallback_threshold, 4 * l_);
    return q;
  }
  void note(int used) {
    l_ = std::max(l_, used);
    max_used_ = std::max(max_used_, l_);
  }

  const Poly& f_;
  Poly df_;
  PrecisionPolicy policy_;
  int order_;
  int l_;
  int max_used_;
};

void validate_mci_interval(const Poly& f, const ClosedInterval& interval) {
  Poly d1 = derivative(f);
  if (!sign_constant(d1, interval) || !sign_constant(derivative(d1), interval)) {
    throw InvalidInterval("f' or f'' has a root in the interval");
  }
}

bool strictly_between(const Rational& p, const Rational& a, const Rational& b) {
  return a < b ? (a < p && p < b) : (b < p && p < a);
}

/// Shared bookkeeping of both refiners.
struct Run {
  const ClosedInterval& input;
  const RefineConfig& config;
  RefineResult result;
  int extra_left;
  bool overtime = false;

  Run(const ClosedInterval& in, const RefineConfig& cfg)
      : input(in), config(cfg), extra_left(cfg.extra_iterations) {}

  /// Target met and no extra iterations pending.
  bool finished(const Rational& x, const Rational& c) {
    if (!meets_relative_width(x, c, config.L)) return false;
    if (extra_left <= 0) return true;
    overtime = true;
    return false;
  }
  /// Records a full iteration; true when the last extra iteration is done.
  bool record_full(int it, const Rational& x, const Rational& c) {
    result.trace.push_back({it, x, c, true});
    return overtime && --extra_left <= 0;
  }
  void next_iteration(int& it) {
    if (++it > config.iteration_cap()) throw IterationLimitExceeded(config.iteration_cap());
  }
};

template <class Arith>
RefineResult run_lz1(const Poly& f, const ClosedInterval& interval, const RefineConfig& config,
                     Arith& arith) {
  StartPoints start = select_start(f, interval);
  validate_mci_interval(f, interval);
  Run run(interval, config);
  Rational x = start.x, c = start.c;
  run.result.trace.push_back({0, x, c, true});
  if (meets_relative_width(interval.lo, interval.hi, config.L)) {
    run.result.enclosure = interval;
    run.result.precision_digits = arith.digits();
    return run.result;
  }
  const int dir_x = x > c ? 1 : -1;
  const int sx = sign(eval_exact(f, x));
  int it = 0;
  try {
    while (!run.finished(x, c)) {
      run.next_iteration(it);
      arith.begin_iteration(x, c);
      Rational p, cn;
      while (true) {
        auto u = arith.value(x, sx);
        auto v = arith.value(c, -sx);
        p = arith.newton(x, u, dir_x);
        cn = arith.secant(x, u, c, v, -dir_x);
        if (strictly_between(p, x, c) && strictly_between(cn, x, c)) break;
        if (!arith.retry()) throw InternalError("LZ1 iterate left the bracket");
      }
      x = std::move(p);
      c = std::move(cn);
      if (run.record_full(it, x, c)) break;
    }
    arith.certify(x, sx, c, -sx);
  } catch (const ExactRootHit& hit) {
    run.result.enclosure = {hit.root, hit.root};
    run.result.iterations = it;
    run.result.precision_digits = arith.digits();
    return run.result;
  }
  run.result.enclosure = x < c ? ClosedInterval{x, c} : ClosedInterval{c, x};
  run.result.iterations = it;
  run.result.precision_digits = arith.digits();
  return run.result;
}

template <class Arith>
RefineResult run_lz2(const Poly& f, const ClosedInterval& interval, const RefineConfig& config,
                     Arith& arith) {
  StartPoints start = select_start(f, interval);
  validate_mci_interval(f, interval);
  Run run(interval, config);
  Rational x = start.x, c = start.c;
  run.result.trace.push_back({0, x, c, true});
  if (meets_relative_width(interval.lo, interval.hi, config.L)) {
    run.result.enclosure = interval;
    run.result.precision_digits = arith.digits();
    return run.result;
  }
  const int dir_x = x > c ? 1 : -1;
  const int sx = sign(eval_exact(f, x));
  int it = 0;
  try {
    // Stage 1: secant steps on c until the Newton point from c falls in [a, b].
    arith.begin_iteration(x, c);
    auto u = arith.value(x, sx);
    auto v = arith.value(c, -sx);
    Rational z = arith.newton(c, v, dir_x);
    while (!interval.contains(z)) {
      run.next_iteration(it);
      arith.begin_iteration(x, c);
      Rational cn;
      while (true) {
        cn = arith.secant(x, u, c, v, -dir_x);
        if (strictly_between(cn, x, c)) break;
        if (!arith.retry()) throw InternalError("LZ2 secant iterate left the bracket");
        u = arith.value(x, sx);
        v = arith.value(c, -sx);
      }
      c = std::move(cn);
      v = arith.value(c, -sx);
      z = arith.newton(c, v, dir_x);
      run.result.trace.push_back({it, x, c, true});
    }
    x = std::move(z);
    run.result.trace.push_back({it, x, c, false});

    // Stage 2: alternate secant (c side) and Newton from c (x side).
    while (!run.finished(x, c)) {
      run.next_iteration(it);
      arith.begin_iteration(x, c);
      Rational cn;
      while (true) {
        u = arith.value(x, sx);
        cn = arith.secant(x, u, c, v, -dir_x);
        if (strictly_between(cn, x, c)) break;
        if (!arith.retry()) throw InternalError("LZ2 secant iterate left the bracket");
        v = arith.value(c, -sx);
      }
      c = std::move(cn);
      if (run.record_full(it, x, c)) break;
      if (!run.overtime && run.finished(x, c)) break;
      // The secant step just gained digits; the Newton half-step needs them too.
      arith.begin_iteration(x, c);
      Rational xn;
      while (true) {
        v = arith.value(c, -sx);
        xn = arith.newton(c, v, dir_x);
        if (strictly_between(xn, x, c)) break;
        if (!arith.retry()) throw InternalError("LZ2 Newton iterate left the bracket");
      }
      x = std::move(xn);
      run.result.trace.push_back({it, x, c, false});
    }
    arith.certify(x, sx, c, -sx);
  } catch (const ExactRootHit& hit) {
    run.result.enclosure = {hit.root, hit.root};
    run.result.iterations = it;
    run.result.precision_digits = arith.digits();
    return run.result;
  }
  run.result.enclosure = x < c ? ClosedInterval{x, c} : ClosedInterval{c, x};
  run.result.iterations = it;
  run.result.precision_digits = arith.digits();
  return run.result;
}

RefineConfig config_for(int L, Mode mode, Method method) {
  RefineConfig cfg;
  cfg.L = L;
  cfg.mode = mode;
  cfg.method = method;
  return cfg;
}

}  // namespace

RefineResult refine(const Poly& f, const ClosedInterval& interval, const RefineConfig& config,
                    const PrecisionPolicy& policy) {
  if (config.L < 1) throw std::invalid_argument("L must be at least 1");
  if (config.mode == Mode::exact) {
    ExactArith arith(f);
    return config.method == Method::lz1 ? run_lz1(f, interval, config, arith)
                                        : run_lz2(f, interval, config, arith);
  }
  PrecisionPolicy resolved = policy.resolved(f, interval, config.L);
  IntervalArith arith(f, resolved, config.method == Method::lz1 ? 2 : 3);
  return config.method == Method::lz1 ? run_lz1(f, interval, config, arith)
                                      : run_lz2(f, interval, config, arith);
}

RefineResult lz1_exact(const Poly& f, const ClosedInterval& interval, int L) {
  return refine(f, interval, config_for(L, Mode::exact, Method::lz1));
}

RefineResult lz2_exact(const Poly& f, const ClosedInterval& interval, int L) {
  return refine(f, interval, config_for(L, Mode::exact, Method::lz2));
}

RefineResult lz1_interval(const Poly& f, const ClosedInterval& interval, int L,
                          const PrecisionPolicy& policy) {
  return refine(f, interval, config_for(L, Mode::interval, Method::lz1), policy);
}

RefineResult lz2_interval(const Poly& f, const ClosedInterval& interval, int L,
                          const PrecisionPolicy& policy) {
  return refine(f, interval, config_for(L, Mode::interval, Method::lz2), policy);
}

std::vector<DigitCount> convergence_trace(const Poly& f, const ClosedInterval& interval,
                                          const RefineConfig& config,
                                          const PrecisionPolicy& policy) {
  RefineResult r = refine(f, interval, config, policy);
  std::vector<DigitCount> out;
  for (const auto& e : r.trace) {
    if (!e.full) continue;
    ClosedInterval enc = e.enclosure();
    out.push_back({e.iteration, shared_digits(enc.lo, enc.hi)});
  }
  return out;
}

std::vector<Rational> trace_widths(const std::vector<TraceEntry>& trace) {
  std::vector<Rational> out;
  for (const auto& e : trace) {
    if (e.full) out.push_back(abs_value(e.x - e.c));
  }
  return out;
}

std::optional<double> empirical_order(const std::vector<Rational>& widths) {
  if (widths.size() < 3) return std::nullopt;
  std::size_t n = widths.size();
  double w1 = log10_abs(widths[n - 3]);
  double w2 = log10_abs(widths[n - 2]);
  double w3 = log10_abs(widths[n - 1]);
  if (w2 == w1) return std::nullopt;
  return (w3 - w2) / (w2 - w1);
}

}  // namespace lzroot
