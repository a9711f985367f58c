#ifndef SPECTREE_POLYNOMIAL_HPP
#define SPECTREE_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectree/error.hpp"
#include "spectree/numeric.hpp"

namespace spectree {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The coefficient vector never has a zero leading entry; the zero
/// polynomial is the empty vector (degree -1).
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  Polynomial(std::initializer_list<Scalar> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }

  static Polynomial monomial(int degree, Scalar c) {
    if (c == 0) return Polynomial();
    std::vector<Scalar> v(static_cast<size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  /// The polynomial x.
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i (zero beyond the degree).
  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<size_t>(i)];
  }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  const Scalar& leading() const { return coeffs_.back(); }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Scalar eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Total order used for deterministic output: degree, then coefficients
  /// from the top down.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
  }

  friend Polynomial operator-(const Polynomial& p) {
    std::vector<Scalar> v(p.coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    if (s == 0) return Polynomial();
    std::vector<Scalar> v(p.coeffs_);
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& p, const Scalar& s) {
    return s * p;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<Int>;

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return Polynomial<Scalar>();
  std::vector<Scalar> v(static_cast<size_t>(p.degree()), Scalar(0));
  for (int i = 1; i <= p.degree(); ++i)
    v[static_cast<size_t>(i) - 1] = Scalar(i) * p.coeff(i);
  return Polynomial<Scalar>(std::move(v));
}

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, int e) {
  Polynomial<Scalar> acc = Polynomial<Scalar>::constant(Scalar(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

/// GCD of all coefficients, nonnegative; 0 for the zero polynomial.
Int content(const IntPoly& p);

/// p divided by its content; sign of the leading coefficient is preserved.
IntPoly divide_content(const IntPoly& p);

/// Primitive part with positive leading coefficient. If `sign` is non-null
/// it receives the sign (+1/-1) of the original leading coefficient.
IntPoly primitive_positive(const IntPoly& p, int* sign = nullptr);

/// Exact quotient a / b over Z[x]; empty when b does not divide a.
std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b; throws ErrorKind::kInternal when not divisible.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: prem(a, b) with lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b);

/// Yun squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: returns (part, multiplicity) with parts primitive,
/// squarefree, pairwise coprime, and product part^mult == p.
std::vector<std::pair<IntPoly, int>> yun_squarefree(const IntPoly& p);

/// Sign of p(x) at a rational point, evaluated homogeneously in integers.
int sign_at(const IntPoly& p, const Rat& x);

/// Human-readable form, highest term first, e.g. "x^2-3x+1".
std::string to_string(const IntPoly& p);

}  // namespace spectree

#endif  // SPECTREE_POLYNOMIAL_HPP
