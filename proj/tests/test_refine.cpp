#include <random>

#include "doctest.h"
#include "lzroot/errors.hpp"
#include "lzroot/isolate.hpp"
#include "lzroot/refine.hpp"
#include "oracles.hpp"

using namespace lzroot;

namespace {

const Poly kCubic{7, -20, 0, 1};
const ClosedInterval kBox{Rational(1097, 256), Rational(4389, 1024)};
const Poly kSqrt2{-2, 0, 1};

Rational pow10_inv(int k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return Rational(1) / Rational(p);
}

bool brackets(const Poly& f, const ClosedInterval& I) {
  if (I.is_point()) return eval_exact(f, I.lo) == 0;
  return sign(eval_exact(f, I.lo)) * sign(eval_exact(f, I.hi)) < 0;
}

RefineResult run(Method m, Mode mode, const Poly& f, const ClosedInterval& I, int L) {
  RefineConfig c;
  c.method = m;
  c.mode = mode;
  c.L = L;
  return refine(f, I, c);
}

}  // namespace

TEST_CASE("select_start") {
  StartPoints s = select_start(kSqrt2, {1, 2});
  CHECK(s.x == 2);
  CHECK(s.c == 1);
  s = select_start(kCubic, kBox);
  CHECK(s.x == kBox.hi);
  CHECK(s.c == kBox.lo);
  // Negation leaves f * f'' unchanged, so the Newton end stays at 2.
  s = select_start(-kSqrt2, {1, 2});
  CHECK(s.x == 2);
  CHECK(s.c == 1);

  CHECK_THROWS_AS(select_start(kSqrt2, {2, 1}), InvalidInterval);
  CHECK_THROWS_AS(select_start(kSqrt2, {-1, 2}), InvalidInterval);
  CHECK_THROWS_AS(select_start(kSqrt2, {0, 2}), InvalidInterval);
  CHECK_THROWS_AS(select_start(kSqrt2, {2, 3}), NotBracketing);
}

TEST_CASE("refiners reject intervals without monotonicity and convexity") {
  Poly f{0, -1, 0, 1};  // x^3 - x: inflection at 0, extrema at +-0.577
  CHECK_THROWS_AS(lz1_exact(f, {Rational(1, 2), 2}, 8), PreconditionError);
}

TEST_CASE("lz1_exact on the cubic reproduces known iterates") {
  RefineResult r = lz1_exact(kCubic, kBox, 8);
  REQUIRE(r.trace.size() >= 2);
  ClosedInterval first = r.trace[1].enclosure();
  CHECK(first == ClosedInterval{Rational("40379863349/9422150912"),
                                Rational("80788619485/18851042816")});
  CHECK(r.iterations == 2);
  CHECK(meets_relative_width(r.enclosure.lo, r.enclosure.hi, 8));
}

TEST_CASE("lz2_exact on the cubic reproduces known iterates") {
  RefineResult r = lz2_exact(kCubic, kBox, 8);
  Rational b1(1261419417, 294336896);
  Rational a1(Integer("6671209230324943307293"), Integer("1556645655550311117184"));
  a1.canonicalize();
  bool saw_b1 = false, saw_a1 = false;
  for (const auto& e : r.trace) {
    auto I = e.enclosure();
    saw_b1 = saw_b1 || I.hi == b1;
    saw_a1 = saw_a1 || I.lo == a1;
  }
  CHECK(saw_b1);
  CHECK(saw_a1);
  CHECK(meets_relative_width(r.enclosure.lo, r.enclosure.hi, 8));
}

TEST_CASE("narrow input returns unchanged") {
  ClosedInterval tight{Rational(14142135, 10000000), Rational(14142136, 10000000)};
  for (Method m : {Method::lz1, Method::lz2})
    for (Mode mode : {Mode::exact, Mode::interval}) {
      RefineResult r = run(m, mode, kSqrt2, tight, 6);
      CHECK(r.enclosure == tight);
      CHECK(r.iterations == 0);
      auto digits = convergence_trace(kSqrt2, tight, RefineConfig{6, mode, m});
      CHECK(digits.size() == 1);
    }
}

TEST_CASE("sqrt 2 in both modes") {
  auto ref = oracle::bisect(kSqrt2.coefficients(), 1, 2, pow10_inv(60));
  ClosedInterval oracle_box{ref.first, ref.second};
  for (Method m : {Method::lz1, Method::lz2}) {
    RefineResult ex = run(m, Mode::exact, kSqrt2, {1, 2}, 12);
    CHECK(ex.enclosure.width() <= pow10_inv(12) * ex.enclosure.lo);
    CHECK(brackets(kSqrt2, ex.enclosure));
    CHECK(oracle::count_roots_closed(kSqrt2.coefficients(), ex.enclosure.lo, ex.enclosure.hi) == 1);

    RefineResult iv = run(m, Mode::interval, kSqrt2, {1, 2}, 50);
    CHECK(meets_relative_width(iv.enclosure.lo, iv.enclosure.hi, 50));
    CHECK(iv.enclosure.intersects(oracle_box));
    CHECK(ex.enclosure.intersects(oracle_box));
    CHECK(oracle::count_roots_closed(kSqrt2.coefficients(), iv.enclosure.lo, iv.enclosure.hi) == 1);
    CHECK(brackets(kSqrt2, iv.enclosure));
    CHECK(ex.enclosure.intersects(iv.enclosure));
  }
}

TEST_CASE("lz2_interval on the cubic from twelve digits") {
  PrecisionPolicy policy;
  policy.initial_l = 12;
  RefineResult r = lz2_interval(kCubic, kBox, 8, policy);
  CHECK(shared_decimal_prefix(r.enclosure.lo, r.enclosure.hi).starts_with("4.285631226"));
  CHECK(meets_relative_width(r.enclosure.lo, r.enclosure.hi, 8));
  CHECK(brackets(kCubic, r.enclosure));
  CHECK(PrecisionPolicy{}.resolved(kCubic, kBox, 8).initial_l == 12);
}

TEST_CASE("certified_sign_eval") {
  CertifiedSign s = certified_sign_eval(kCubic, 0, {});
  CHECK(s.sign == 1);
  CHECK(s.enclosure.contains(7));
  CHECK_FALSE(s.exact_fallback);

  CertifiedSign z = certified_sign_eval(Poly{-4, 0, 1}, 2, {});
  CHECK(z.sign == 0);
  CHECK(z.exact_fallback);

  PrecisionPolicy low;
  low.initial_l = 3;
  CertifiedSign e = certified_sign_eval(kCubic, Rational(4389, 1024), low);
  CHECK(e.sign == sign(eval_exact(kCubic, Rational(4389, 1024))));
  CHECK(e.sign == 1);
  CHECK(e.digits_used > 3);
  CHECK(e.enclosure.contains(eval_exact(kCubic, Rational(4389, 1024))));
}

TEST_CASE("trace invariants in exact mode") {
  for (Method m : {Method::lz1, Method::lz2}) {
    RefineResult r = run(m, Mode::exact, kCubic, kBox, 30);
    Rational last_width = kBox.width() + 1;
    const TraceEntry* prev = nullptr;
    for (const auto& e : r.trace) {
      CHECK(sign(eval_exact(kCubic, e.x)) * sign(eval_exact(kCubic, e.c)) < 0);
      if (e.full) {
        CHECK(e.enclosure().width() < last_width);
        last_width = e.enclosure().width();
      }
      if (prev) {
        // x and c each move monotonically toward the root from their own side.
        CHECK(abs_value(e.x - e.c) <= abs_value(prev->x - prev->c));
        if (e.x != prev->x) CHECK(sign(e.x - prev->x) == sign(prev->c - prev->x));
        if (e.c != prev->c) CHECK(sign(e.c - prev->c) == sign(prev->x - prev->c));
      }
      prev = &e;
    }
  }
}

TEST_CASE("bracketing holds along interval traces") {
  for (Method m : {Method::lz1, Method::lz2}) {
    RefineResult r = run(m, Mode::interval, kCubic, kBox, 60);
    for (const auto& e : r.trace)
      CHECK(sign(eval_exact(kCubic, e.x)) * sign(eval_exact(kCubic, e.c)) < 0);
  }
}

TEST_CASE("convergence orders on the cubic") {
  for (Mode mode : {Mode::exact, Mode::interval}) {
    RefineResult r1 = run(Method::lz1, mode, kCubic, kBox, 200);
    auto o1 = empirical_order(trace_widths(r1.trace));
    REQUIRE(o1);
    CHECK(*o1 >= 1.8);
    RefineResult r2 = run(Method::lz2, mode, kCubic, kBox, 200);
    auto o2 = empirical_order(trace_widths(r2.trace));
    REQUIRE(o2);
    CHECK(*o2 >= 2.5);
  }
}

TEST_CASE("LZ1 digit counts roughly double on sqrt 2") {
  auto digits = convergence_trace(kSqrt2, {1, 2}, RefineConfig{100, Mode::exact, Method::lz1});
  REQUIRE(digits.size() >= 4);
  auto n = digits.size();
  double ratio = static_cast<double>(digits[n - 1].correct_digits) / digits[n - 2].correct_digits;
  CHECK(ratio >= 1.8);
}

TEST_CASE("mode agreement on random polynomials") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 8; ++i) {
    Poly f = oracle::to_poly(oracle::random_square_free(rng, 8, 50, true));
    for (auto I : mci(f).intervals) {
      if (I.is_point()) continue;
      I = bisect_to_width(f, I, Rational(1, 100000));
      if (I.is_point()) continue;
      for (Method m : {Method::lz1, Method::lz2}) {
        auto ex = run(m, Mode::exact, f, I, 20).enclosure;
        auto iv = run(m, Mode::interval, f, I, 20).enclosure;
        CHECK(ex.intersects(iv));
        CHECK(brackets(f, ex));
        CHECK(brackets(f, iv));
      }
    }
  }
}

TEST_CASE("iteration cap") {
  CHECK(RefineConfig{}.iteration_cap() == 64 + 2 * 4);
  RefineConfig c;
  c.max_iterations = 1;
  c.L = 30;
  CHECK_THROWS_AS(refine(kCubic, kBox, c), IterationLimitExceeded);
}
