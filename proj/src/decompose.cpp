#include "lzroot/decompose.hpp"

#include <algorithm>

#include "lzroot/errors.hpp"

namespace lzroot {

namespace {

void split(const Poly& f, std::vector<Poly>& out) {
  if (f.degree() == 1) {
    out.push_back(f);
    return;
  }
  Poly g = poly_gcd(f, derivative(derivative(f)));
  if (g.degree() == 0) {
    out.push_back(f);
    return;
  }
  split(g, out);
  split(primitive_part(exact_quotient(f, g)), out);
}

bool coefficient_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

}  // namespace

bool admits_mci(const Poly& g) {
  if (g.degree() == 1) return true;
  return poly_gcd(g, derivative(derivative(g))).degree() == 0;
}

Lmcd lmcd(const Poly& f) {
  if (f.degree() < 1) throw ConstantInput();
  if (!is_square_free(f)) throw NotSquareFree();
  PrimitiveForm pf = primitive_form(f);
  Lmcd out;
  split(pf.primitive, out.factors);
  std::sort(out.factors.begin(), out.factors.end(), coefficient_less);
  Rational lc_product(1);
  for (const auto& g : out.factors) lc_product *= g.leading();
  out.constant = f.leading() / lc_product;
  return out;
}

}  // namespace lzroot
