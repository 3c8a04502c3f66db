#include "lzroot/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "lzroot/errors.hpp"

namespace lzroot {

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = unary();
        if (d.degree() != 0) throw ParseError("division by a non-constant polynomial", at);
        acc *= Rational(1) / d.leading();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t at = pos_;
    if (accept('-')) throw UnsupportedExponent(at);
    accept('+');
    skip_space();
    if (!at_digit()) throw UnsupportedExponent(at);
    long e = 0;
    while (at_digit()) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > kMaxExponent) throw UnsupportedExponent(at);
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) throw UnsupportedExponent(at);
    return lzroot::pow(base, static_cast<int>(e));
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (ch == 'x' || ch == 'X') {
      ++pos_;
      return Poly{Rational(0), Rational(1)};
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      try {
        return Poly::constant(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed number", start);
      }
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Poly parse_coefficient_list(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                                : comma - start);
    try {
      coeffs.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed coefficient", start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

}  // namespace

Poly parse_poly(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return parse_coefficient_list(text);
  return Parser(text).parse();
}

Poly chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("Chebyshev degree must be nonnegative");
  Poly prev = Poly::constant(1);
  if (n == 0) return prev;
  Poly cur{Rational(0), Rational(1)};
  const Poly two_x{Rational(0), Rational(2)};
  for (int k = 1; k < n; ++k) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace lzroot
