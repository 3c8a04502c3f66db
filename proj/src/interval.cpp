#include "lzroot/interval.hpp"

#include <cmath>
#include <utility>

#include "lzroot/errors.hpp"

namespace lzroot {

mpfr_prec_t Precision::bits() const {
  double b = std::ceil(static_cast<double>(digits) * 3.3219280948873623);
  return static_cast<mpfr_prec_t>(b) + 2;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& x, mpfr_prec_t bits, mpfr_rnd_t rounding) {
  BigFloat r(bits);
  mpfr_set_q(r.value_, x.get_mpq_t(), rounding);
  return r;
}

Rational BigFloat::to_rational() const {
  if (mpfr_zero_p(value_)) return Rational(0);
  Integer mantissa;
  mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational r(mantissa);
  if (exp >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
  }
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool FloatInterval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo.get(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi.get(), x.get_mpq_t()) >= 0;
}

Rational FloatInterval::width() const { return hi.to_rational() - lo.to_rational(); }

std::string FloatInterval::to_string(int digits) const {
  return "[" + lo.to_string(digits) + ", " + hi.to_string(digits) + "]";
}

FloatInterval round_out(const Rational& x, Precision precision) {
  mpfr_prec_t bits = precision.bits();
  return {BigFloat::from_rational(x, bits, MPFR_RNDD), BigFloat::from_rational(x, bits, MPFR_RNDU)};
}

namespace {

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(BinaryFn fn, const BigFloat& a, const BigFloat& b, mpfr_prec_t bits,
               mpfr_rnd_t rounding) {
  BigFloat r(bits);
  fn(r.get(), a.get(), b.get(), rounding);
  return r;
}

bool nonnegative(const FloatInterval& a) { return a.lo.sign() >= 0; }
bool nonpositive(const FloatInterval& a) { return a.hi.sign() <= 0; }

}  // namespace

FloatInterval fi_add(const FloatInterval& a, const FloatInterval& b, Precision precision) {
  mpfr_prec_t bits = precision.bits();
  return {apply(mpfr_add, a.lo, b.lo, bits, MPFR_RNDD), apply(mpfr_add, a.hi, b.hi, bits, MPFR_RNDU)};
}

FloatInterval fi_sub(const FloatInterval& a, const FloatInterval& b, Precision precision) {
  mpfr_prec_t bits = precision.bits();
  return {apply(mpfr_sub, a.lo, b.hi, bits, MPFR_RNDD), apply(mpfr_sub, a.hi, b.lo, bits, MPFR_RNDU)};
}

FloatInterval fi_mul(const FloatInterval& a, const FloatInterval& b, Precision precision) {
  mpfr_prec_t bits = precision.bits();
  auto down = [&](const BigFloat& x, const BigFloat& y) { return apply(mpfr_mul, x, y, bits, MPFR_RNDD); };
  auto up = [&](const BigFloat& x, const BigFloat& y) { return apply(mpfr_mul, x, y, bits, MPFR_RNDU); };

  if (nonnegative(a)) {
    if (nonnegative(b)) return {down(a.lo, b.lo), up(a.hi, b.hi)};
    if (nonpositive(b)) return {down(a.hi, b.lo), up(a.lo, b.hi)};
    return {down(a.hi, b.lo), up(a.hi, b.hi)};
  }
  if (nonpositive(a)) {
    if (nonnegative(b)) return {down(a.lo, b.hi), up(a.hi, b.lo)};
    if (nonpositive(b)) return {down(a.hi, b.hi), up(a.lo, b.lo)};
    return {down(a.lo, b.hi), up(a.lo, b.lo)};
  }
  if (nonnegative(b)) return {down(a.lo, b.hi), up(a.hi, b.hi)};
  if (nonpositive(b)) return {down(a.hi, b.lo), up(a.lo, b.lo)};

  // Both straddle zero.
  BigFloat lo1 = down(a.lo, b.hi), lo2 = down(a.hi, b.lo);
  BigFloat hi1 = up(a.lo, b.lo), hi2 = up(a.hi, b.hi);
  return {lo1 < lo2 ? std::move(lo1) : std::move(lo2), hi1 > hi2 ? std::move(hi1) : std::move(hi2)};
}

FloatInterval fi_div(const FloatInterval& a, const FloatInterval& b, Precision precision) {
  if (fi_sign(b) == IntervalSign::indeterminate) throw DivisionByIntervalContainingZero();
  mpfr_prec_t bits = precision.bits();
  auto down = [&](const BigFloat& x, const BigFloat& y) { return apply(mpfr_div, x, y, bits, MPFR_RNDD); };
  auto up = [&](const BigFloat& x, const BigFloat& y) { return apply(mpfr_div, x, y, bits, MPFR_RNDU); };
  if (b.lo.sign() > 0) {
    return {a.lo.sign() >= 0 ? down(a.lo, b.hi) : down(a.lo, b.lo),
            a.hi.sign() >= 0 ? up(a.hi, b.lo) : up(a.hi, b.hi)};
  }
  return {a.hi.sign() >= 0 ? down(a.hi, b.hi) : down(a.hi, b.lo),
          a.lo.sign() >= 0 ? up(a.lo, b.lo) : up(a.lo, b.hi)};
}

FloatInterval fi_arith(ArithOp op, const FloatInterval& a, const FloatInterval& b,
                       Precision precision) {
  switch (op) {
    case ArithOp::add: return fi_add(a, b, precision);
    case ArithOp::sub: return fi_sub(a, b, precision);
    case ArithOp::mul: return fi_mul(a, b, precision);
    case ArithOp::div: return fi_div(a, b, precision);
  }
  throw std::logic_error("unknown interval operation");
}

IntervalSign fi_sign(const FloatInterval& a) {
  if (a.lo.sign() > 0) return IntervalSign::positive;
  if (a.hi.sign() < 0) return IntervalSign::negative;
  return IntervalSign::indeterminate;
}

int to_int(IntervalSign s) {
  switch (s) {
    case IntervalSign::negative: return -1;
    case IntervalSign::positive: return 1;
    case IntervalSign::indeterminate: return 0;
  }
  return 0;
}

}  // namespace lzroot
