#pragma once

// Integer-coefficient helpers shared by the exact algorithms.

#include <utility>
#include <vector>

#include "lzroot/poly.hpp"

namespace lzroot::detail {

using ZPoly = std::vector<Integer>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& a : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  }
}

inline ZPoly to_zpoly(const Poly& f) {
  Integer den = 1;
  for (const auto& a : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
  ZPoly out;
  out.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) out.push_back(a.get_num() * (den / a.get_den()));
  make_primitive(out);
  return out;
}

inline Poly from_zpoly(const ZPoly& p) { return Poly(std::vector<Rational>(p.begin(), p.end())); }

/// p(x) -> p(x + t) in place, O(n^2) additions.
inline void taylor_shift(ZPoly& p, const Integer& t) {
  const std::size_t n = p.size();
  if (n < 2 || t == 0) return;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      if (t == 1) {
        p[j] += p[j + 1];
      } else {
        mpz_addmul(p[j].get_mpz_t(), p[j + 1].get_mpz_t(), t.get_mpz_t());
      }
    }
  }
}

}  // namespace lzroot::detail
