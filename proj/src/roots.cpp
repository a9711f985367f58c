#include "spectree/roots.hpp"

#include <algorithm>

#include "spectree/error.hpp"

namespace spectree {

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(divide_content(p));
  IntPoly d = derivative(p);
  if (d.is_zero()) return chain;
  chain.push_back(divide_content(d));
  while (chain.back().degree() > 0) {
    const IntPoly& prev = chain[chain.size() - 2];
    const IntPoly& last = chain.back();
    IntPoly rem = pseudo_rem(prev, last);
    if (rem.is_zero()) break;
    // prem scales by lc(last)^(delta+1); flip so the entry equals the
    // rational-division remainder times a positive constant, negated.
    const int delta = prev.degree() - last.degree();
    const bool negative_scale =
        sign_of(last.leading()) < 0 && (delta + 1) % 2 == 1;
    IntPoly next = negative_scale ? rem : -rem;
    chain.push_back(divide_content(next));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  int variations = 0;
  int last = 0;
  for (const IntPoly& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

// Strict bound on root magnitudes: 1 + max |c_i| / |c_n|.
Rat cauchy_bound(const IntPoly& p) {
  Int max_abs = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Int a = abs(p.coeff(i));
    if (a > max_abs) max_abs = a;
  }
  Rat bound = 1 + make_rat(max_abs, abs(p.leading()));
  return bound;
}

void isolate_range(const IntPoly& p, const std::vector<IntPoly>& chain,
                   const Rat& lo, int v_lo, const Rat& hi, int v_hi,
                   std::vector<RootInterval>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back(RootInterval{p, lo, hi});
    return;
  }
  const Rat mid = (lo + hi) / 2;
  if (sign_at(p, mid) == 0) {
    // Exact rational root at the midpoint. Find a punctured neighbourhood
    // containing no other root, then recurse on both sides.
    Rat delta = (hi - lo) / 4;
    while (true) {
      const Rat left = mid - delta;
      const Rat right = mid + delta;
      if (sign_at(p, left) != 0 && sign_at(p, right) != 0 &&
          sign_variations(chain, left) - sign_variations(chain, right) == 1) {
        isolate_range(p, chain, lo, v_lo, left, sign_variations(chain, left),
                      out);
        out.push_back(RootInterval{p, mid, mid});
        isolate_range(p, chain, right, sign_variations(chain, right), hi, v_hi,
                      out);
        return;
      }
      delta /= 2;
    }
  }
  const int v_mid = sign_variations(chain, mid);
  isolate_range(p, chain, lo, v_lo, mid, v_mid, out);
  isolate_range(p, chain, mid, v_mid, hi, v_hi, out);
}

}  // namespace

int count_real_roots(const IntPoly& p) {
  if (p.degree() < 1) return 0;
  std::vector<IntPoly> chain = sturm_chain(p);
  const Rat bound = cauchy_bound(p);
  return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

std::vector<RootInterval> isolate_roots(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::kZeroPolynomial, "cannot isolate roots of 0");
  if (gcd_primitive(p, derivative(p)).degree() > 0)
    fail(ErrorKind::kNotSquarefree, "isolate_roots requires squarefree input");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  if (p.degree() == 1) {
    const Rat root = make_rat(-p.coeff(0), p.coeff(1));
    out.push_back(RootInterval{p, root, root});
    return out;
  }
  std::vector<IntPoly> chain = sturm_chain(p);
  const Rat bound = cauchy_bound(p);
  isolate_range(p, chain, -bound, sign_variations(chain, -bound), bound,
                sign_variations(chain, bound), out);
  return out;
}

RootInterval refine(RootInterval iv, const Rat& max_width) {
  while (!iv.is_point() && iv.width() > max_width) {
    const Rat mid = iv.midpoint();
    const int s = sign_at(iv.poly, mid);
    if (s == 0) {
      iv.lo = mid;
      iv.hi = mid;
      break;
    }
    if (sign_at(iv.poly, iv.lo) * s < 0)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

namespace {

// One bisection step.
void refine_step(RootInterval& iv) {
  if (iv.is_point()) return;
  const Rat mid = iv.midpoint();
  const int s = sign_at(iv.poly, mid);
  if (s == 0) {
    iv.lo = mid;
    iv.hi = mid;
  } else if (sign_at(iv.poly, iv.lo) * s < 0) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

int compare_rationals(const Rat& a, const Rat& b) {
  return a < b ? -1 : (a == b ? 0 : 1);
}

}  // namespace

int compare_root_rational(const RootInterval& a, const Rat& value) {
  if (a.is_point()) return compare_rationals(a.lo, value);
  if (sign_at(a.poly, value) == 0 && a.lo < value && value < a.hi) return 0;
  RootInterval iv = a;
  while (true) {
    if (iv.is_point()) return compare_rationals(iv.lo, value);
    if (value <= iv.lo) return 1;
    if (value >= iv.hi) return -1;
    refine_step(iv);
  }
}

int compare_roots(const RootInterval& a, const RootInterval& b) {
  if (a.is_point()) return -compare_root_rational(b, a.lo);
  if (b.is_point()) return compare_root_rational(a, b.lo);
  // Shared roots are possible only through a common factor.
  IntPoly g = gcd_primitive(a.poly, b.poly);
  if (g.degree() > 0) {
    const Rat lo = std::max(a.lo, b.lo);
    const Rat hi = std::min(a.hi, b.hi);
    if (lo < hi) {
      // Endpoints of the overlap are endpoints of the isolating intervals,
      // hence not roots of either polynomial nor of g.
      std::vector<IntPoly> chain = sturm_chain(g);
      if (sign_variations(chain, lo) - sign_variations(chain, hi) >= 1)
        return 0;
    }
  }
  // Roots known distinct: refine until the intervals separate.
  RootInterval u = a;
  RootInterval v = b;
  while (true) {
    if (u.is_point()) return -compare_root_rational(v, u.lo);
    if (v.is_point()) return compare_root_rational(u, v.lo);
    if (u.hi <= v.lo) return -1;
    if (v.hi <= u.lo) return 1;
    refine_step(u);
    refine_step(v);
  }
}

std::string decimal_approx(const RootInterval& iv, int digits) {
  Rat target(1);
  for (int i = 0; i < digits + 2; ++i) target /= 10;
  RootInterval fine = refine(iv, target);
  return decimal_string(fine.midpoint(), digits);
}

}  // namespace spectree
