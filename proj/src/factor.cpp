#include "spectree/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "spectree/error.hpp"

namespace spectree {

IntPoly Factorization::expand() const {
  IntPoly acc = IntPoly::constant(Int(sign) * content);
  for (const FactorPart& part : parts) acc = acc * pow(part.poly, part.exponent);
  return acc;
}

namespace {

// ---------------------------------------------------------------------
// Arithmetic in F_p[x] for a small odd prime p, coefficients in [0, p).
// ---------------------------------------------------------------------

using ZpPoly = std::vector<int64_t>;

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

int64_t mod_pow(int64_t base, int64_t e, int64_t p) {
  int64_t acc = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

int64_t mod_inv(int64_t a, int64_t p) { return mod_pow((a % p + p) % p, p - 2, p); }

ZpPoly zp_from_int_poly(const IntPoly& f, int64_t p) {
  ZpPoly a(static_cast<size_t>(f.degree()) + 1);
  const Int pz(static_cast<long>(p));
  for (int i = 0; i <= f.degree(); ++i) {
    Int r = f.coeff(i) % pz;
    if (r < 0) r += pz;
    a[static_cast<size_t>(i)] = r.get_si();
  }
  zp_trim(a);
  return a;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  zp_trim(c);
  return c;
}

ZpPoly zp_scale(const ZpPoly& a, int64_t s, int64_t p) {
  ZpPoly c(a);
  for (auto& x : c) x = x * (s % p) % p;
  zp_trim(c);
  return c;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, int64_t p) {
  ZpPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
  zp_trim(c);
  return c;
}

// Division with remainder; b nonzero.
void zp_divmod(const ZpPoly& a, const ZpPoly& b, int64_t p, ZpPoly& q,
               ZpPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const int64_t inv_lead = mod_inv(b.back(), p);
  for (int d = zp_deg(r) - zp_deg(b); d >= 0; --d) {
    const size_t top = static_cast<size_t>(d) + b.size() - 1;
    if (top >= r.size() || r[top] == 0) continue;
    const int64_t c = r[top] * inv_lead % p;
    q[static_cast<size_t>(d)] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      size_t k = static_cast<size_t>(d) + i;
      r[k] = ((r[k] - c * b[i]) % p + p) % p;
    }
  }
  zp_trim(q);
  zp_trim(r);
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, int64_t p) {
  ZpPoly q, r;
  zp_divmod(a, b, p, q, r);
  return r;
}

ZpPoly zp_monic(const ZpPoly& a, int64_t p) {
  if (a.empty()) return a;
  return zp_scale(a, mod_inv(a.back(), p), p);
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, int64_t p) {
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

// s*a + t*b == 1 for coprime a, b; deg s < deg b, deg t < deg a.
void zp_bezout(const ZpPoly& a, const ZpPoly& b, int64_t p, ZpPoly& s,
               ZpPoly& t) {
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0 = {1}, s1 = {};
  ZpPoly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    ZpPoly q, r;
    zp_divmod(r0, r1, p, q, r);
    ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd (a unit for coprime inputs); normalize to make it 1.
  if (zp_deg(r0) != 0)
    fail(ErrorKind::kInternal, "bezout on non-coprime polynomials");
  const int64_t inv = mod_inv(r0[0], p);
  s = zp_scale(s0, inv, p);
  t = zp_scale(t0, inv, p);
  // Reduce degrees into the canonical range.
  if (zp_deg(s) >= zp_deg(b)) s = zp_mod(s, b, p);
  // Recompute t = (1 - s*a) / b exactly.
  ZpPoly one = {1};
  ZpPoly num = zp_sub(one, zp_mul(s, a, p), p);
  ZpPoly q, r;
  if (!num.empty()) {
    zp_divmod(num, b, p, q, r);
    if (!r.empty()) fail(ErrorKind::kInternal, "bezout reduction failed");
    t = std::move(q);
  } else {
    t = {};
  }
}

ZpPoly zp_derivative(const ZpPoly& a, int64_t p) {
  if (a.size() <= 1) return {};
  ZpPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    d[i - 1] = a[i] * (static_cast<int64_t>(i) % p) % p;
  zp_trim(d);
  return d;
}

ZpPoly zp_pow_mod(ZpPoly base, int64_t e, const ZpPoly& f, int64_t p) {
  ZpPoly acc = {1};
  base = zp_mod(base, f, p);
  while (e > 0) {
    if (e & 1) acc = zp_mod(zp_mul(acc, base, p), f, p);
    base = zp_mod(zp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

// Deterministic Berlekamp factorization of a monic squarefree polynomial
// over F_p. Returns monic irreducible factors sorted for determinism.
std::vector<ZpPoly> berlekamp(const ZpPoly& f, int64_t p) {
  const int d = zp_deg(f);
  if (d <= 1) return {f};
  // Frobenius matrix: column j holds x^(jp) mod f.
  std::vector<ZpPoly> cols(static_cast<size_t>(d));
  ZpPoly xp = zp_pow_mod({0, 1}, p, f, p);
  cols[0] = {1};
  for (int j = 1; j < d; ++j)
    cols[static_cast<size_t>(j)] =
        zp_mod(zp_mul(cols[static_cast<size_t>(j - 1)], xp, p), f, p);
  // A = Q - I over F_p, row-major.
  std::vector<std::vector<int64_t>> a(
      static_cast<size_t>(d), std::vector<int64_t>(static_cast<size_t>(d), 0));
  for (int j = 0; j < d; ++j) {
    const ZpPoly& col = cols[static_cast<size_t>(j)];
    for (int i = 0; i < d; ++i) {
      int64_t v = i < static_cast<int>(col.size()) ? col[static_cast<size_t>(i)] : 0;
      if (i == j) v = ((v - 1) % p + p) % p;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  }
  // Nullspace basis by Gauss-Jordan.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int piv = -1;
    for (int i = row; i < d; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(row)]);
    const int64_t inv = mod_inv(a[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
    for (int j = 0; j < d; ++j)
      a[static_cast<size_t>(row)][static_cast<size_t>(j)] =
          a[static_cast<size_t>(row)][static_cast<size_t>(j)] * inv % p;
    for (int i = 0; i < d; ++i) {
      if (i == row) continue;
      const int64_t c = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (c == 0) continue;
      for (int j = 0; j < d; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            ((a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
              c * a[static_cast<size_t>(row)][static_cast<size_t>(j)]) %
                 p +
             p) %
            p;
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(d), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<ZpPoly> basis;
  for (int free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    ZpPoly v(static_cast<size_t>(d), 0);
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2) {
      const int pc = pivot_col_of_row[r2];
      const int64_t val = a[r2][static_cast<size_t>(free_col)];
      v[static_cast<size_t>(pc)] = ((-val) % p + p) % p;
    }
    zp_trim(v);
    basis.push_back(std::move(v));
  }
  // Number of irreducible factors equals the nullity (constants included).
  const size_t factor_count = basis.size();
  std::vector<ZpPoly> factors = {f};
  if (factor_count == 1) return factors;
  for (const ZpPoly& v : basis) {
    if (zp_deg(v) < 1) continue;
    for (int64_t c = 0; c < p && factors.size() < factor_count; ++c) {
      ZpPoly shifted = v;
      shifted.resize(std::max<size_t>(shifted.size(), 1), 0);
      shifted[0] = ((shifted[0] - c) % p + p) % p;
      zp_trim(shifted);
      std::vector<ZpPoly> next;
      for (ZpPoly& g : factors) {
        if (zp_deg(g) <= 1) {
          next.push_back(std::move(g));
          continue;
        }
        ZpPoly h = zp_gcd(g, shifted, p);
        if (zp_deg(h) > 0 && zp_deg(h) < zp_deg(g)) {
          ZpPoly q, r;
          zp_divmod(g, h, p, q, r);
          next.push_back(std::move(h));
          next.push_back(zp_monic(q, p));
        } else {
          next.push_back(std::move(g));
        }
      }
      factors = std::move(next);
    }
    if (factors.size() == factor_count) break;
  }
  if (factors.size() != factor_count)
    fail(ErrorKind::kInternal, "berlekamp split incomplete");
  std::sort(factors.begin(), factors.end(),
            [](const ZpPoly& x, const ZpPoly& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              for (size_t i = x.size(); i-- > 0;)
                if (x[i] != y[i]) return x[i] < y[i];
              return false;
            });
  return factors;
}

// ---------------------------------------------------------------------
// Arithmetic in (Z/m)[x] with arbitrary-precision m; coeffs in [0, m).
// ---------------------------------------------------------------------

using MpPoly = std::vector<Int>;

void mp_trim(MpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_deg(const MpPoly& a) { return static_cast<int>(a.size()) - 1; }

Int mp_mod(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

MpPoly mp_reduce(const MpPoly& a, const Int& m) {
  MpPoly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = mp_mod(a[i], m);
  mp_trim(c);
  return c;
}

MpPoly mp_from_int_poly(const IntPoly& f, const Int& m) {
  MpPoly a(static_cast<size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i)
    a[static_cast<size_t>(i)] = mp_mod(f.coeff(i), m);
  mp_trim(a);
  return a;
}

MpPoly mp_from_zp(const ZpPoly& f) {
  MpPoly a(f.size());
  for (size_t i = 0; i < f.size(); ++i) a[i] = Int(static_cast<long>(f[i]));
  return a;
}

MpPoly mp_mul(const MpPoly& a, const MpPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  MpPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return mp_reduce(c, m);
}

MpPoly mp_add(const MpPoly& a, const MpPoly& b, const Int& m) {
  MpPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return mp_reduce(c, m);
}

MpPoly mp_sub(const MpPoly& a, const MpPoly& b, const Int& m) {
  MpPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return mp_reduce(c, m);
}

// Division by a monic divisor.
void mp_divmod_monic(const MpPoly& a, const MpPoly& b, const Int& m, MpPoly& q,
                     MpPoly& r) {
  if (b.empty() || b.back() != 1)
    fail(ErrorKind::kInternal, "monic division expected");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  for (int d = mp_deg(r) - mp_deg(b); d >= 0; --d) {
    const size_t top = static_cast<size_t>(d) + b.size() - 1;
    if (top >= r.size()) continue;
    Int c = mp_mod(r[top], m);
    if (c == 0) continue;
    q[static_cast<size_t>(d)] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      size_t k = static_cast<size_t>(d) + i;
      r[k] = mp_mod(r[k] - c * b[i], m);
    }
  }
  mp_trim(q);
  r = mp_reduce(r, m);
}

struct HenselPair {
  MpPoly g, h, s, t;
};

// One quadratic lifting step: modulus m -> m^2. Requires h monic,
// f == g*h (mod m) and s*g + t*h == 1 (mod m).
void hensel_step(const MpPoly& f, HenselPair& pair, const Int& m) {
  const Int m2 = m * m;
  MpPoly g = mp_reduce(pair.g, m2);
  MpPoly h = mp_reduce(pair.h, m2);
  MpPoly s = mp_reduce(pair.s, m2);
  MpPoly t = mp_reduce(pair.t, m2);
  const MpPoly f2 = mp_reduce(f, m2);
  const int deg_g = mp_deg(g);
  const int deg_h = mp_deg(h);

  MpPoly e = mp_sub(f2, mp_mul(g, h, m2), m2);
  MpPoly q, r;
  mp_divmod_monic(mp_mul(s, e, m2), h, m2, q, r);
  MpPoly g_new = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
  MpPoly h_new = mp_add(h, r, m2);
  if (mp_deg(h_new) != deg_h || mp_deg(g_new) != deg_g)
    fail(ErrorKind::kInternal, "hensel step degree drift");

  MpPoly b = mp_sub(mp_add(mp_mul(s, g_new, m2), mp_mul(t, h_new, m2), m2),
                    MpPoly{Int(1)}, m2);
  MpPoly c, d;
  mp_divmod_monic(mp_mul(s, b, m2), h_new, m2, c, d);
  MpPoly s_new = mp_sub(s, d, m2);
  MpPoly t_new =
      mp_sub(t, mp_add(mp_mul(t, b, m2), mp_mul(c, g_new, m2), m2), m2);

  pair = HenselPair{std::move(g_new), std::move(h_new), std::move(s_new),
                    std::move(t_new)};
}

// Lifts f == (lc * prod of tail) * head (mod p) to modulus target, where
// head is monic. Moduli follow p, p^2, p^4, ..., target exactly.
HenselPair lift_pair(const MpPoly& f, const ZpPoly& g0, const ZpPoly& h0,
                     int64_t p, const Int& target) {
  ZpPoly s0, t0;
  zp_bezout(g0, h0, p, s0, t0);
  HenselPair pair{mp_from_zp(g0), mp_from_zp(h0), mp_from_zp(s0),
                  mp_from_zp(t0)};
  Int m(static_cast<long>(p));
  while (m < target) {
    hensel_step(f, pair, m);
    m *= m;
  }
  return pair;
}

// Lifts all monic modular factors of f (f == lc * prod factors mod p)
// to monic factors mod target.
std::vector<MpPoly> lift_factors(const MpPoly& f,
                                 const std::vector<ZpPoly>& factors,
                                 int64_t p, const Int& target) {
  std::vector<MpPoly> out;
  MpPoly current = f;
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    // Head factor is lifted; tail keeps the leading coefficient.
    ZpPoly tail = {static_cast<int64_t>(0)};
    {
      // lc(current) mod p
      Int lead = current.empty() ? Int(0) : current.back();
      tail = {mpz_class(lead % Int(static_cast<long>(p))).get_si()};
      if (tail[0] < 0) tail[0] += p;
    }
    for (size_t j = i + 1; j < factors.size(); ++j)
      tail = zp_mul(tail, factors[j], p);
    HenselPair pair = lift_pair(current, tail, factors[i], p, target);
    out.push_back(pair.h);
    current = pair.g;
  }
  // Last factor: normalize the remaining product to monic.
  Int lead = current.empty() ? Int(0) : current.back();
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), target.get_mpz_t()) == 0)
    fail(ErrorKind::kInternal, "leading coefficient not invertible");
  MpPoly last(current.size());
  for (size_t i = 0; i < current.size(); ++i)
    last[i] = mp_mod(current[i] * inv, target);
  mp_trim(last);
  out.push_back(std::move(last));
  return out;
}

IntPoly symmetric_int_poly(const MpPoly& a, const Int& m) {
  std::vector<Int> v(a.size());
  const Int half = m / 2;
  for (size_t i = 0; i < a.size(); ++i)
    v[i] = a[i] > half ? Int(a[i] - m) : a[i];
  return IntPoly(std::move(v));
}

// Landau-Mignotte style coefficient bound for lc-adjusted factors.
Int factor_coefficient_bound(const IntPoly& f) {
  Int norm_sq = 0;
  for (const Int& c : f.coeffs()) norm_sq += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  return (Int(1) << f.degree()) * norm * abs(f.leading());
}

// Zassenhaus factorization of a primitive squarefree polynomial with
// positive leading coefficient and degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  // Prime selection: p must keep the degree and squarefreeness of f.
  struct Choice {
    int64_t p = 0;
    std::vector<ZpPoly> factors;
  };
  std::vector<Choice> choices;
  Int prime(3);
  for (; prime < 1000000 && choices.size() < 3;
       mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
    const int64_t p = prime.get_si();
    if (f.leading() % prime == 0) continue;
    ZpPoly fp = zp_from_int_poly(f, p);
    if (zp_deg(fp) != f.degree()) continue;
    if (zp_deg(zp_gcd(fp, zp_derivative(fp, p), p)) != 0) continue;
    Choice c;
    c.p = p;
    c.factors = berlekamp(zp_monic(fp, p), p);
    if (c.factors.size() == 1) return {f};
    choices.push_back(std::move(c));
  }
  if (choices.empty())
    fail(ErrorKind::kInternal, "no usable prime for factorization");
  const Choice* best = &choices[0];
  for (const Choice& c : choices)
    if (c.factors.size() < best->factors.size()) best = &c;
  const int64_t p = best->p;

  const Int bound = factor_coefficient_bound(f);
  const Int needed = 2 * bound + 1;
  Int modulus(static_cast<long>(p));
  while (modulus < needed) modulus *= modulus;

  std::vector<MpPoly> lifted =
      lift_factors(mp_from_int_poly(f, modulus), best->factors, p, modulus);

  // Subset recombination.
  std::vector<IntPoly> result;
  std::vector<int> active(lifted.size());
  std::iota(active.begin(), active.end(), 0);
  IntPoly current = f;
  size_t size = 1;
  while (2 * size <= active.size()) {
    bool found = false;
    std::vector<size_t> combo(size);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      MpPoly prod = {mp_mod(current.leading(), modulus)};
      for (size_t idx : combo)
        prod = mp_mul(prod, lifted[static_cast<size_t>(active[idx])], modulus);
      IntPoly candidate = primitive_positive(symmetric_int_poly(prod, modulus));
      if (auto quotient = try_divide(current, candidate)) {
        result.push_back(candidate);
        current = *std::move(quotient);
        std::vector<int> remaining;
        for (size_t i = 0; i < active.size(); ++i)
          if (std::find(combo.begin(), combo.end(), i) == combo.end())
            remaining.push_back(active[i]);
        active = std::move(remaining);
        found = true;
        break;
      }
      // Next lexicographic combination.
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 &&
             combo[static_cast<size_t>(pos)] ==
                 active.size() - size + static_cast<size_t>(pos))
        --pos;
      if (pos < 0) break;
      ++combo[static_cast<size_t>(pos)];
      for (size_t i = static_cast<size_t>(pos) + 1; i < size; ++i)
        combo[i] = combo[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (current.degree() > 0) result.push_back(current);
  return result;
}

// Divisors of |v| by trial division; empty when v exceeds the threshold.
std::vector<Int> small_divisors(const Int& v) {
  static const Int kThreshold = Int(1000000000);
  Int a = abs(v);
  std::vector<Int> divisors;
  if (a == 0 || a > kThreshold) return divisors;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divisors.push_back(d);
      if (d * d != a) divisors.push_back(a / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Strips rational roots of a squarefree primitive polynomial; returns the
// linear factors found. May find nothing when coefficients are too large
// to enumerate divisors; the caller falls back to zassenhaus().
std::vector<IntPoly> strip_rational_roots(IntPoly& f, bool* complete) {
  std::vector<IntPoly> linear;
  *complete = false;
  if (f.degree() < 1) {
    *complete = true;
    return linear;
  }
  if (f.coeff(0) == 0) {
    // Squarefree, so x divides exactly once.
    linear.push_back(IntPoly::x());
    f = divide_exact(f, IntPoly::x());
  }
  const std::vector<Int> nums = small_divisors(f.coeff(0));
  const std::vector<Int> dens = small_divisors(f.leading());
  if (nums.empty() || dens.empty()) return linear;
  *complete = true;
  for (const Int& den : dens) {
    for (const Int& num : nums) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        if (f.degree() < 1) break;
        const Rat root = make_rat(sign * num, den);
        if (sign_at(f, root) == 0) {
          IntPoly lin({-sign * num, den});
          linear.push_back(lin);
          f = divide_exact(f, lin);
        }
      }
    }
  }
  return linear;
}

// Irreducible factors of a primitive squarefree polynomial with positive
// leading coefficient.
std::vector<IntPoly> factor_squarefree(IntPoly f) {
  std::vector<IntPoly> out;
  if (f.degree() < 1) return out;
  if (f.degree() == 1) {
    out.push_back(std::move(f));
    return out;
  }
  bool roots_complete = false;
  std::vector<IntPoly> linear = strip_rational_roots(f, &roots_complete);
  for (IntPoly& l : linear) out.push_back(primitive_positive(l));
  if (f.degree() == 1) {
    out.push_back(primitive_positive(f));
    return out;
  }
  if (f.degree() >= 2) {
    if (roots_complete && f.degree() <= 3) {
      // No rational roots left: quadratics and cubics are irreducible.
      out.push_back(std::move(f));
    } else {
      for (IntPoly& g : zassenhaus(f)) out.push_back(std::move(g));
    }
  }
  return out;
}

void sort_parts(std::vector<FactorPart>& parts) {
  std::sort(parts.begin(), parts.end(),
            [](const FactorPart& a, const FactorPart& b) {
              if (a.poly.degree() != b.poly.degree())
                return a.poly.degree() < b.poly.degree();
              return a.poly < b.poly;
            });
}

}  // namespace

Factorization squarefree(const IntPoly& p) {
  if (p.is_zero())
    fail(ErrorKind::kZeroPolynomial, "squarefree of the zero polynomial");
  Factorization result;
  IntPoly pp = primitive_positive(p, &result.sign);
  result.content = p.is_zero() ? Int(0) : content(p);
  for (auto& [part, mult] : yun_squarefree(pp))
    result.parts.push_back(FactorPart{std::move(part), mult});
  sort_parts(result.parts);
  return result;
}

Factorization factor(const IntPoly& p) {
  if (p.is_zero())
    fail(ErrorKind::kZeroPolynomial, "factor of the zero polynomial");
  if (p.degree() > kMaxFactorDegree)
    fail(ErrorKind::kDegreeBound,
         "degree " + std::to_string(p.degree()) + " exceeds factoring bound");
  Factorization result;
  IntPoly pp = primitive_positive(p, &result.sign);
  result.content = content(p);
  for (auto& [part, mult] : yun_squarefree(pp)) {
    for (IntPoly& irreducible : factor_squarefree(std::move(part)))
      result.parts.push_back(FactorPart{std::move(irreducible), mult});
  }
  sort_parts(result.parts);
  return result;
}

}  // namespace spectree
