#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lzroot/interval.hpp"
#include "lzroot/rational.hpp"

namespace lzroot {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients)
      : Poly(std::vector<Rational>(coefficients)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// c * (x - root)
  static Poly linear_from_root(const Rational& root);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(int i) const;
  const Rational& leading() const { return coefficients_.back(); }

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Horner evaluation in exact arithmetic.
Rational eval_exact(const Poly& f, const Rational& x);

/// Interval Horner scheme at the given precision; encloses f(X).
FloatInterval eval_interval(const Poly& f, const FloatInterval& x, Precision precision);

Poly derivative(const Poly& f);
Poly pow(const Poly& f, int exponent);

/// Euclidean division; throws std::domain_error for a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);

/// a / b, which must divide exactly (std::domain_error otherwise).
Poly exact_quotient(const Poly& a, const Poly& b);

/// Integer coefficients with gcd 1 and positive leading coefficient, together
/// with the rational content c such that f = c * primitive.
struct PrimitiveForm {
  Rational content;
  Poly primitive;
};
PrimitiveForm primitive_form(const Poly& f);
Poly primitive_part(const Poly& f);

/// Integer coefficient vector of the primitive part.
std::vector<Integer> integer_coefficients(const Poly& f);

/// gcd normalized to a primitive integer polynomial with positive leading coefficient.
/// The gcd of a polynomial with 0 is its primitive part.
Poly poly_gcd(const Poly& f, const Poly& g);

bool is_square_free(const Poly& f);

struct SquareFreeFactor {
  Poly factor;
  int multiplicity = 1;
};

/// f = constant * prod factor_i^multiplicity_i, factors primitive, pairwise
/// coprime and square-free, multiplicities strictly increasing.
struct SquareFreeDecomposition {
  Rational constant;
  std::vector<SquareFreeFactor> factors;
};

SquareFreeDecomposition square_free_decomposition(const Poly& f);

/// Human-readable form such as "x^3 - 20*x + 7", accepted by parse_poly.
std::string to_string(const Poly& f);

}  // namespace lzroot
