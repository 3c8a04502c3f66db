#include "lzroot/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lzroot {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("bad rational literal '" + s + "'");
    }
    q.canonicalize();
    return q;
  }
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (seen_point) ++scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      throw std::invalid_argument("bad rational literal '" + s + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal '" + s + "'");
  Integer num(digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

long bit_length(const Integer& x) {
  if (x == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

int decimal_size(const Rational& x) {
  Integer num = abs(x.get_num());
  const Integer& den = x.get_den();
  const Integer& big = num > den ? num : den;
  return static_cast<int>(big.get_str().size());
}

double log10_abs(const Rational& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(t, t, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  double r = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

std::string truncated_decimal(const Rational& x, int fraction_digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(0, fraction_digits)));
  Integer num = abs(x.get_num()) * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  std::string s = q.get_str();
  if (fraction_digits > 0) {
    if (static_cast<int>(s.size()) <= fraction_digits) {
      s.insert(0, static_cast<std::size_t>(fraction_digits + 1 - static_cast<int>(s.size())), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(fraction_digits), ".");
  }
  if (x < 0) s.insert(0, "-");
  return s;
}

namespace {

std::string strip_trailing_point(std::string s) {
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string shared_decimal_prefix(const Rational& lo, const Rational& hi, int point_digits) {
  if (lo == hi) {
    int lead = lo == 0 ? 0 : static_cast<int>(std::floor(log10_abs(lo)));
    int places = std::max(0, point_digits - 1 - lead);
    std::string s = truncated_decimal(lo, places);
    if (s.find('.') != std::string::npos) {
      while (s.back() == '0') s.pop_back();
    }
    return strip_trailing_point(s);
  }
  if (sign(lo) != sign(hi)) return "";
  double w = log10_abs(hi - lo);
  int places = std::max(10, static_cast<int>(std::ceil(-w)) + 3);
  std::string a = truncated_decimal(lo, places);
  std::string b = truncated_decimal(hi, places);
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return strip_trailing_point(a.substr(0, n));
}

int significant_digits(std::string_view decimal) {
  int count = 0;
  bool started = false;
  for (char ch : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (ch != '0') started = true;
    if (started) ++count;
  }
  return count;
}

int shared_digits(const Rational& lo, const Rational& hi) {
  return significant_digits(shared_decimal_prefix(lo, hi));
}

}  // namespace lzroot
