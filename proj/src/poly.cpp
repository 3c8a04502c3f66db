#include "lzroot/poly.hpp"

#include "zpoly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace lzroot {

Poly::Poly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::linear_from_root(const Rational& root) { return Poly{Rational(-root), Rational(1)}; }

Rational Poly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& x) const { return eval_exact(*this, x); }

void Poly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& a : coefficients_) a *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Poly(std::move(out));
}

Poly operator-(Poly a) { return a *= Rational(-1); }

Rational eval_exact(const Poly& f, const Rational& x) {
  const auto& c = f.coefficients();
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

FloatInterval eval_interval(const Poly& f, const FloatInterval& x, Precision precision) {
  const auto& c = f.coefficients();
  if (c.empty()) return round_out(Rational(0), precision);
  FloatInterval acc = round_out(c.back(), precision);
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    acc = fi_add(fi_mul(acc, x, precision), round_out(*it, precision), precision);
  }
  return acc;
}

Poly derivative(const Poly& f) {
  if (f.degree() < 1) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = f.coefficient(i) * i;
  return Poly(std::move(out));
}

Poly pow(const Poly& f, int exponent) {
  Poly result = Poly::constant(1);
  for (int i = 0; i < exponent; ++i) result = result * f;
  return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Poly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
  const Rational& lb = b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw std::domain_error("polynomial division is not exact");
  return qr.quotient;
}

namespace {

using namespace detail;

// Pseudo-remainder of a by b, made primitive.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Integer la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  make_primitive(a);
  return a;
}

// Degree of gcd(a, b) mod p, or -2 when p divides a leading coefficient.
int modular_gcd_degree(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  auto reduce = [p](const ZPoly& z) {
    std::vector<std::uint64_t> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
    return r;
  };
  auto ra = reduce(a), rb = reduce(b);
  if (ra.back() == 0 || rb.back() == 0) return -2;
  auto strip = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  while (!rb.empty()) {
    std::uint64_t inv = inverse(rb.back());
    while (!ra.empty() && ra.size() >= rb.size()) {
      std::uint64_t q = ra.back() * inv % p;
      std::size_t shift = ra.size() - rb.size();
      for (std::size_t j = 0; j < rb.size(); ++j) {
        ra[shift + j] = (ra[shift + j] + p - q * rb[j] % p) % p;
      }
      strip(ra);
    }
    std::swap(ra, rb);
  }
  return static_cast<int>(ra.size()) - 1;
}

}  // namespace

PrimitiveForm primitive_form(const Poly& f) {
  if (f.is_zero()) return {Rational(0), Poly()};
  Poly prim = from_zpoly(to_zpoly(f));
  return {f.leading() / prim.leading(), prim};
}

Poly primitive_part(const Poly& f) { return primitive_form(f).primitive; }

std::vector<Integer> integer_coefficients(const Poly& f) { return to_zpoly(f); }

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  ZPoly a = to_zpoly(f), b = to_zpoly(g);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() == 1) return Poly::constant(1);

  // A constant gcd modulo a prime not dividing either leading coefficient
  // certifies a constant gcd over the integers.
  constexpr std::array<std::uint64_t, 3> primes{2147483647ULL, 2147483629ULL, 2147483587ULL};
  for (std::uint64_t p : primes) {
    int d = modular_gcd_degree(a, b, p);
    if (d == 0) return Poly::constant(1);
    if (d > 0) break;
  }

  while (!b.empty()) {
    ZPoly r = primitive_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return from_zpoly(a);
}

bool is_square_free(const Poly& f) {
  if (f.degree() < 1) return !f.is_zero();
  return poly_gcd(f, derivative(f)).degree() == 0;
}

SquareFreeDecomposition square_free_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  SquareFreeDecomposition out;
  if (f.degree() == 0) {
    out.constant = f.leading();
    return out;
  }
  // Yun's algorithm.
  Poly df = derivative(f);
  Poly a = poly_gcd(f, df);
  Poly b = exact_quotient(f, a);
  Poly c = exact_quotient(df, a);
  Poly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Poly g = poly_gcd(b, d);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - derivative(b);
    if (g.degree() > 0) out.factors.push_back({g, i});
  }
  Rational denom(1);
  for (const auto& sf : out.factors) {
    Rational lc = sf.factor.leading();
    for (int k = 0; k < sf.multiplicity; ++k) denom *= lc;
  }
  out.constant = f.leading() / denom;
  return out;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    Rational c = f.coefficient(i);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs_value(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lzroot
