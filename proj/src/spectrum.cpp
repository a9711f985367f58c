#include "spectree/spectrum.hpp"

#include <algorithm>

#include "spectree/error.hpp"
#include "spectree/linalg.hpp"

namespace spectree {

const IntPoly& THETA_POLY() {
  static const IntPoly p({Int(1), Int(-3), Int(1)});
  return p;
}

FactoredSpectrum::FactoredSpectrum(int order, std::vector<EigenClass> classes)
    : order_(order), classes_(std::move(classes)) {
  long long total = 0;
  for (const EigenClass& c : classes_) {
    if (c.roots.empty())
      fail(ErrorKind::kInternal, "eigenvalue class without real roots");
    total += static_cast<long long>(c.multiplicity) * c.min_poly.degree();
  }
  if (total != order_)
    fail(ErrorKind::kInternal,
         "class multiplicities do not account for the matrix order");
  std::sort(classes_.begin(), classes_.end(),
            [](const EigenClass& a, const EigenClass& b) {
              return compare_roots(a.roots.front(), b.roots.front()) < 0;
            });
  for (int ci = 0; ci < static_cast<int>(classes_.size()); ++ci)
    for (int ri = 0; ri < static_cast<int>(classes_[static_cast<size_t>(ci)].roots.size()); ++ri)
      ascending_.push_back(EigenvalueRef{ci, ri});
  std::sort(ascending_.begin(), ascending_.end(),
            [this](const EigenvalueRef& a, const EigenvalueRef& b) {
              return compare_roots(root(a), root(b)) < 0;
            });
}

EigenvalueRef FactoredSpectrum::value_at(int k) const {
  if (k < 0 || k >= order_)
    fail(ErrorKind::kInvalidArgument, "eigenvalue index out of range");
  int seen = 0;
  for (const EigenvalueRef& ref : ascending_) {
    seen += multiplicity(ref);
    if (k < seen) return ref;
  }
  fail(ErrorKind::kInternal, "eigenvalue indexing is inconsistent");
}

const EigenClass* FactoredSpectrum::find_class(const IntPoly& min_poly) const {
  for (const EigenClass& c : classes_)
    if (c.min_poly == min_poly) return &c;
  return nullptr;
}

std::vector<RootInterval> FactoredSpectrum::expand() const {
  std::vector<RootInterval> out;
  out.reserve(static_cast<size_t>(order_));
  for (const EigenvalueRef& ref : ascending_)
    for (int i = 0; i < multiplicity(ref); ++i) out.push_back(root(ref));
  return out;
}

FactoredSpectrum spectrum_of_laplacian(const IntMatrix& laplacian) {
  const int n = static_cast<int>(laplacian.rows());
  IntPoly cp = charpoly(laplacian);
  Factorization fac = factor(cp);
  if (fac.expand() != cp)
    fail(ErrorKind::kInternal, "factorization does not reconstruct charpoly");
  std::vector<EigenClass> classes;
  for (FactorPart& part : fac.parts) {
    EigenClass c;
    c.roots = isolate_roots(part.poly);
    if (static_cast<int>(c.roots.size()) != part.poly.degree())
      fail(ErrorKind::kInternal,
           "factor of a symmetric characteristic polynomial with complex roots");
    c.min_poly = std::move(part.poly);
    c.multiplicity = part.exponent;
    classes.push_back(std::move(c));
  }
  return FactoredSpectrum(n, std::move(classes));
}

FactoredSpectrum spectrum(const Tree& t) {
  FactoredSpectrum s = spectrum_of_laplacian(laplacian(t));
  // Tree facts: 0 simple (connected), mu_n simple (connected bipartite).
  const EigenClass& low = s.cls(s.ascending().front());
  if (!(low.min_poly == IntPoly::x()) || low.multiplicity != 1)
    fail(ErrorKind::kInternal, "tree Laplacian must have 0 as a simple root");
  if (s.multiplicity(s.ascending().back()) != 1)
    fail(ErrorKind::kInternal,
         "tree Laplacian must have a simple largest eigenvalue");
  return s;
}

int multiplicity_rational(const Tree& t, const Rat& value) {
  IntPoly p = charpoly(laplacian(t));
  const IntPoly lin({Int(-value.get_num()), Int(value.get_den())});
  int count = 0;
  while (!p.is_zero() && sign_at(p, value) == 0) {
    p = divide_exact(divide_content(p), lin);
    ++count;
  }
  return count;
}

int multiplicity_class(const Tree& t, const IntPoly& q) {
  if (q.degree() < 1)
    fail(ErrorKind::kInvalidArgument, "class polynomial must be nonconstant");
  const int n = t.order();
  const IntMatrix evaluated = eval_poly_at_matrix(q, laplacian(t));
  const int nullity = n - rank_exact(evaluated);
  if (nullity % q.degree() != 0)
    fail(ErrorKind::kInternal,
         "nullity of q(L) not divisible by deg q; conjugate multiplicities "
         "would differ");
  return nullity / q.degree();
}

EigenvalueRef algebraic_connectivity(const FactoredSpectrum& s) {
  if (s.order() < 2)
    fail(ErrorKind::kPrecondition, "mu_2 needs order >= 2");
  return s.value_at(1);
}

EigenvalueRef second_largest(const FactoredSpectrum& s) {
  if (s.order() < 2)
    fail(ErrorKind::kPrecondition, "mu_{n-1} needs order >= 2");
  return s.value_at(s.order() - 2);
}

bool interlaces(const std::vector<RootInterval>& inner,
                const std::vector<RootInterval>& outer) {
  if (inner.size() + 1 != outer.size())
    fail(ErrorKind::kInvalidArgument, "interlacing needs |inner|+1 == |outer|");
  for (size_t i = 0; i < inner.size(); ++i) {
    if (compare_roots(outer[i], inner[i]) > 0) return false;
    if (compare_roots(inner[i], outer[i + 1]) > 0) return false;
  }
  return true;
}

}  // namespace spectree
