#include "lzroot/isolate.hpp"

#include <algorithm>

#include "lzroot/errors.hpp"
#include "zpoly.hpp"

namespace lzroot {

using detail::ZPoly;

std::string to_string(const ClosedInterval& interval) {
  return "[" + to_string(interval.lo) + ", " + to_string(interval.hi) + "]";
}

namespace {

int variations(const ZPoly& p) {
  int count = 0;
  int last = 0;
  for (const auto& a : p) {
    int s = sgn(a);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Descartes bound for roots of q in the open unit interval: variations of
// (x + 1)^n q(1 / (x + 1)).
int unit_variations(const ZPoly& q) {
  ZPoly r(q.rbegin(), q.rend());
  detail::taylor_shift(r, Integer(1));
  return variations(r);
}

// 2^n q(x / 2).
ZPoly left_half(const ZPoly& q) {
  ZPoly out = q;
  const std::size_t n = q.size() - 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_mul_2exp(out[i].get_mpz_t(), out[i].get_mpz_t(), n - i);
  }
  return out;
}

// Integer polynomial K with K(x) proportional to g(lo + (hi - lo) x).
ZPoly to_unit_interval(const ZPoly& g, const Rational& lo, const Rational& hi) {
  const std::size_t n = g.size() - 1;
  const Integer& p = lo.get_num();
  const Integer& q = lo.get_den();
  ZPoly h(g.size());
  // h(y) = q^n g(y / q)
  Integer qpow = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    h[i] = g[i] * qpow;
    qpow *= q;
  }
  detail::taylor_shift(h, p);
  // x in [0, 1] maps to y = q (hi - lo) x = (q r / s) x.
  Rational w = hi - lo;
  Integer scale_num = q * w.get_num();
  const Integer& scale_den = w.get_den();
  Integer num_pow = 1;
  std::vector<Integer> den_pows(n + 1);
  den_pows[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) den_pows[i] = den_pows[i - 1] * scale_den;
  for (std::size_t i = 0; i <= n; ++i) {
    h[i] *= num_pow * den_pows[n - i];
    num_pow *= scale_num;
  }
  detail::make_primitive(h);
  return h;
}

// Whether a square-free q has a root in the open unit interval.
bool has_root_in_unit(const ZPoly& q0) {
  std::vector<ZPoly> stack{q0};
  while (!stack.empty()) {
    ZPoly q = std::move(stack.back());
    stack.pop_back();
    int v = unit_variations(q);
    if (v == 0) continue;
    if (v == 1) return true;
    ZPoly left = left_half(q);
    ZPoly right = left;
    detail::taylor_shift(right, Integer(1));
    if (right.front() == 0) return true;
    stack.push_back(std::move(left));
    stack.push_back(std::move(right));
  }
  return false;
}

ZPoly square_free_zpart(const Poly& g) {
  Poly d = poly_gcd(g, derivative(g));
  return detail::to_zpoly(d.degree() > 0 ? exact_quotient(g, d) : g);
}

// No root of g in the closed interval; gz is the integer square-free part of g.
bool root_free(const Poly& g, const ZPoly& gz, const ClosedInterval& interval) {
  if (g.is_zero()) return false;
  if (g.degree() == 0) return true;
  if (eval_exact(g, interval.lo) == 0 || eval_exact(g, interval.hi) == 0) return false;
  if (interval.is_point()) return true;
  return !has_root_in_unit(to_unit_interval(gz, interval.lo, interval.hi));
}

struct Node {
  ZPoly q;
  long depth;
  Integer index;
  bool lo_blocked;
  bool hi_blocked;
  int var;
};

Rational dyadic(const Integer& index, long exponent) {
  Rational r(index);
  if (exponent >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return r;
}

// Isolates the roots of p in (0, inf); p(0) != 0 and p square-free. A node
// whose endpoint is blocked (0, an exact root, or an endpoint shared with a
// sibling that also holds roots) is bisected further, so emitted intervals never
// touch each other, a point root, or 0.
void isolate_positive(const ZPoly& p, std::vector<ClosedInterval>& out) {
  const std::size_t n = p.size() - 1;
  Integer max_low = 0;
  for (std::size_t i = 0; i < n; ++i) max_low = std::max(max_low, Integer(abs(p[i])));
  long k = std::max<long>(1, bit_length(max_low) - bit_length(Integer(abs(p[n]))) + 2);

  ZPoly q0 = p;
  for (std::size_t i = 0; i <= n; ++i) {
    mpz_mul_2exp(q0[i].get_mpz_t(), q0[i].get_mpz_t(), static_cast<mp_bitcnt_t>(k) * i);
  }
  std::vector<Node> stack;
  int v0 = unit_variations(q0);
  if (v0 == 0) return;
  stack.push_back({std::move(q0), 0, Integer(0), true, false, v0});

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    long exponent = k - node.depth;
    if (node.var == 1 && !node.lo_blocked && !node.hi_blocked) {
      out.push_back({dyadic(node.index, exponent), dyadic(node.index + 1, exponent)});
      continue;
    }
    ZPoly left = left_half(node.q);
    ZPoly right = left;
    detail::taylor_shift(right, Integer(1));
    bool mid_root = right.front() == 0;
    if (mid_root) {
      right.erase(right.begin());
      out.push_back({dyadic(2 * node.index + 1, exponent - 1), dyadic(2 * node.index + 1, exponent - 1)});
    }
    int vl = unit_variations(left);
    int vr = right.size() > 1 ? unit_variations(right) : 0;
    bool shared_blocked = mid_root || (vl > 0 && vr > 0);
    if (vr > 0) {
      stack.push_back({std::move(right), node.depth + 1, 2 * node.index + 1, shared_blocked,
                       node.hi_blocked, vr});
    }
    if (vl > 0) {
      stack.push_back({std::move(left), node.depth + 1, 2 * node.index, node.lo_blocked,
                       shared_blocked, vl});
    }
  }
}

void require_square_free(const Poly& f) {
  if (f.degree() < 1) throw ConstantInput();
  if (!is_square_free(f)) throw NotSquareFree();
}

bool interval_less(const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; }

}  // namespace

int descartes_variations(const Poly& g, const ClosedInterval& interval) {
  if (g.degree() < 1) return 0;
  if (interval.is_point()) throw InvalidInterval("Descartes count needs a non-point interval");
  return unit_variations(to_unit_interval(detail::to_zpoly(g), interval.lo, interval.hi));
}

bool sign_constant(const Poly& g, const ClosedInterval& interval) {
  if (g.degree() < 1) return !g.is_zero();
  return root_free(g, square_free_zpart(g), interval);
}

Isolation isolate_roots(const Poly& f) {
  require_square_free(f);
  Isolation iso{f, {}};
  if (f.degree() == 1) {
    Rational root = -f.coefficient(0) / f.coefficient(1);
    iso.intervals.push_back({root, root});
    return iso;
  }
  ZPoly p = detail::to_zpoly(f);
  if (p.front() == 0) {
    iso.intervals.push_back({Rational(0), Rational(0)});
    p.erase(p.begin());
  }
  if (p.size() > 1) {
    std::vector<ClosedInterval> positive, negative;
    isolate_positive(p, positive);
    ZPoly mirrored = p;
    for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
    isolate_positive(mirrored, negative);
    iso.intervals.insert(iso.intervals.end(), positive.begin(), positive.end());
    for (const auto& iv : negative) iso.intervals.push_back({Rational(-iv.hi), Rational(-iv.lo)});
  }
  std::sort(iso.intervals.begin(), iso.intervals.end(), interval_less);
  return iso;
}

ClosedInterval bisect_step(const Poly& f, const ClosedInterval& interval) {
  Rational mid = interval.midpoint();
  int s_mid = sign(eval_exact(f, mid));
  if (s_mid == 0) return {mid, mid};
  int s_lo = sign(eval_exact(f, interval.lo));
  if (s_lo != 0) {
    return s_lo * s_mid < 0 ? ClosedInterval{interval.lo, mid} : ClosedInterval{mid, interval.hi};
  }
  int s_hi = sign(eval_exact(f, interval.hi));
  return s_hi * s_mid < 0 ? ClosedInterval{mid, interval.hi} : ClosedInterval{interval.lo, mid};
}

ClosedInterval bisect_to_width(const Poly& f, ClosedInterval interval, const Rational& width) {
  while (!interval.is_point() && interval.width() > width) interval = bisect_step(f, interval);
  return interval;
}

Isolation mci(const Poly& f) {
  require_square_free(f);
  if (f.degree() == 1) return isolate_roots(f);
  Poly d1 = derivative(f);
  Poly d2 = derivative(d1);
  if (poly_gcd(f, d2).degree() != 0) throw MciNotGuaranteed();

  ZPoly d1z = square_free_zpart(d1);
  ZPoly d2z = d2.degree() > 0 ? square_free_zpart(d2) : ZPoly{};
  Isolation iso = isolate_roots(f);
  for (auto& interval : iso.intervals) {
    while (!interval.is_point() &&
           !(root_free(d1, d1z, interval) && root_free(d2, d2z, interval))) {
      interval = bisect_step(f, interval);
    }
  }
  return iso;
}

}  // namespace lzroot
