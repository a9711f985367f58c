#include "spectree/polynomial.hpp"

#include <sstream>

namespace spectree {

Int content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly divide_content(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (g == 1) return p;
  std::vector<Int> v(p.coeffs());
  for (Int& c : v) c = exact_quotient(c, g);
  return IntPoly(std::move(v));
}

IntPoly primitive_positive(const IntPoly& p, int* sign) {
  IntPoly q = divide_content(p);
  int s = q.is_zero() ? 0 : sign_of(q.leading());
  if (sign != nullptr) *sign = s;
  return s < 0 ? -q : q;
}

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quo(static_cast<size_t>(a.degree() - b.degree()) + 1,
                       Int(0));
  const Int& lead = b.leading();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    Int& top = rem[static_cast<size_t>(d + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      return std::nullopt;
    Int q = exact_quotient(top, lead);
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<size_t>(d + i)] -= q * b.coeff(i);
    quo[static_cast<size_t>(d)] = std::move(q);
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide(a, b);
  if (!q) fail(ErrorKind::kInternal, "expected exact polynomial division");
  return *std::move(q);
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(ErrorKind::kInternal, "pseudo_rem by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> rem(a.coeffs());
  const Int& lead = b.leading();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    Int top = rem[static_cast<size_t>(d + b.degree())];
    for (Int& c : rem) c *= lead;
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<size_t>(d + i)] -= top * b.coeff(i);
  }
  rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
  return IntPoly(std::move(rem));
}

IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
  IntPoly u = primitive_positive(a);
  IntPoly v = primitive_positive(b);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = primitive_positive(pseudo_rem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

std::vector<std::pair<IntPoly, int>> yun_squarefree(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::kZeroPolynomial, "squarefree of zero");
  std::vector<std::pair<IntPoly, int>> parts;
  if (p.degree() == 0) return parts;
  IntPoly d = derivative(p);
  IntPoly g = gcd_primitive(p, d);
  if (g.degree() == 0) {
    parts.emplace_back(p, 1);
    return parts;
  }
  IntPoly c = divide_exact(p, g);
  IntPoly w = divide_exact(d, g) - derivative(c);
  int multiplicity = 1;
  while (c.degree() > 0) {
    IntPoly y = gcd_primitive(c, w);
    if (y.degree() > 0) parts.emplace_back(y, multiplicity);
    c = divide_exact(c, y);
    w = divide_exact(w, y) - derivative(c);
    ++multiplicity;
  }
  return parts;
}

int sign_at(const IntPoly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  const Int num(x.get_num());
  const Int den(x.get_den());  // positive by canonicalization
  // p(a/b) * b^deg = sum c_i a^i b^(deg-i)
  Int acc = 0;
  Int num_pow = 1;
  std::vector<Int> den_pows(static_cast<size_t>(p.degree()) + 1);
  den_pows[static_cast<size_t>(p.degree())] = 1;
  for (int i = p.degree() - 1; i >= 0; --i)
    den_pows[static_cast<size_t>(i)] = den_pows[static_cast<size_t>(i) + 1] * den;
  for (int i = 0; i <= p.degree(); ++i) {
    acc += p.coeff(i) * num_pow * den_pows[static_cast<size_t>(i)];
    if (i < p.degree()) num_pow *= num;
  }
  return sign_of(acc);
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int c = p.coeff(i);
    if (c == 0) continue;
    const Int a = abs(c);
    if (first) {
      if (sign_of(c) < 0) out << "-";
      first = false;
    } else {
      out << (sign_of(c) < 0 ? "-" : "+");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str();
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string decimal_string(const Rat& value, int digits) {
  const bool negative = sign_of(value) < 0;
  Rat a = negative ? Rat(-value) : value;
  Int scale = pow_int(Int(10), static_cast<unsigned long>(digits));
  // round(|v| * 10^digits) to nearest, half away from zero
  Int num = Int(a.get_num()) * scale;
  Int den(a.get_den());
  Int scaled = (2 * num + den) / (2 * den);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string fs = frac.get_str();
  fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
  std::string out;
  if (negative && (whole != 0 || frac != 0)) out += "-";
  out += whole.get_str();
  if (digits > 0) {
    out += ".";
    out += fs;
  }
  return out;
}

}  // namespace spectree
