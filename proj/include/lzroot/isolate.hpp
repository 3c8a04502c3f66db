#pragma once

#include <string>
#include <vector>

#include "lzroot/poly.hpp"

namespace lzroot {

/// Closed rational interval; lo == hi encodes an exactly known root.
struct ClosedInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool intersects(const ClosedInterval& other) const { return lo <= other.hi && other.lo <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

std::string to_string(const ClosedInterval& interval);

/// Disjoint ascending intervals, each holding exactly one real root of `polynomial`.
struct Isolation {
  Poly polynomial;
  std::vector<ClosedInterval> intervals;
};

/// Descartes/bisection isolation of all real roots of a square-free f. Endpoints
/// are dyadic; exact roots met on the way (and the root 0) become point intervals.
/// Non-point intervals never touch 0 or each other. Throws NotSquareFree.
Isolation isolate_roots(const Poly& f);

/// Sign variations of the Moebius-transformed g on the open interval (lo, hi),
/// an upper bound on (and of equal parity to) its root count there.
int descartes_variations(const Poly& g, const ClosedInterval& interval);

/// True iff g has no real root in the closed interval (decided exactly).
bool sign_constant(const Poly& g, const ClosedInterval& interval);

/// Monotonic convex isolation of a square-free f with gcd(f, f'') = 1: every
/// non-point interval has f' and f'' free of roots and f nonzero at both ends.
/// Throws NotSquareFree, ConstantInput or MciNotGuaranteed.
Isolation mci(const Poly& f);

/// One bisection step on an interval bracketing the single root of f inside it.
/// Returns the half containing the root, or the point interval when f(mid) = 0.
ClosedInterval bisect_step(const Poly& f, const ClosedInterval& interval);

/// Repeated bisect_step until the width is at most `width` (or a point is hit).
ClosedInterval bisect_to_width(const Poly& f, ClosedInterval interval, const Rational& width);

}  // namespace lzroot
