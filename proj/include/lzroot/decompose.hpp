#pragma once

#include <vector>

#include "lzroot/poly.hpp"

namespace lzroot {

/// Local monotonic convex decomposition: f = constant * prod factors, where each
/// factor is primitive and either linear or coprime with its second derivative.
struct Lmcd {
  Rational constant;
  std::vector<Poly> factors;  // sorted by degree, then coefficients
};

/// Splits a nonconstant square-free f by recursing on g = gcd(f, f'') and f / g.
/// Throws ConstantInput or NotSquareFree.
Lmcd lmcd(const Poly& f);

/// True when deg g == 1 or gcd(g, g'') == 1.
bool admits_mci(const Poly& g);

}  // namespace lzroot
