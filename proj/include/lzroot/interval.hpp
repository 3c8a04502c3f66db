#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "lzroot/rational.hpp"

namespace lzroot {

/// Working precision in decimal digits. Binary mantissas carry
/// ceil(digits * log2(10)) + 2 bits.
struct Precision {
  int digits = 0;

  mpfr_prec_t bits() const;
  friend auto operator<=>(const Precision&, const Precision&) = default;
};

/// Owning wrapper around an MPFR float.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Nearest float at `bits` in the given rounding direction.
  static BigFloat from_rational(const Rational& x, mpfr_prec_t bits, mpfr_rnd_t rounding);

  Rational to_rational() const;
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  int sign() const { return mpfr_sgn(value_); }
  std::string to_string(int digits = 20) const;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with float endpoints. Every operation producing
/// one rounds lo toward -inf and hi toward +inf.
struct FloatInterval {
  BigFloat lo;
  BigFloat hi;

  bool contains(const Rational& x) const;
  /// hi - lo as an exact rational.
  Rational width() const;
  std::string to_string(int digits = 20) const;
};

enum class IntervalSign { negative, indeterminate, positive };
enum class ArithOp { add, sub, mul, div };

/// Tightest enclosure of x by floats of the given precision.
FloatInterval round_out(const Rational& x, Precision precision);

FloatInterval fi_add(const FloatInterval& a, const FloatInterval& b, Precision precision);
FloatInterval fi_sub(const FloatInterval& a, const FloatInterval& b, Precision precision);
FloatInterval fi_mul(const FloatInterval& a, const FloatInterval& b, Precision precision);
/// Throws DivisionByIntervalContainingZero when 0 is in b.
FloatInterval fi_div(const FloatInterval& a, const FloatInterval& b, Precision precision);

FloatInterval fi_arith(ArithOp op, const FloatInterval& a, const FloatInterval& b,
                       Precision precision);

/// Positive iff lo > 0, negative iff hi < 0; intervals touching 0 are indeterminate.
IntervalSign fi_sign(const FloatInterval& a);

/// +1, -1, or 0 for indeterminate.
int to_int(IntervalSign s);

}  // namespace lzroot
