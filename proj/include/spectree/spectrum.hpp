#ifndef SPECTREE_SPECTRUM_HPP
#define SPECTREE_SPECTRUM_HPP

#include <vector>

#include "spectree/factor.hpp"
#include "spectree/roots.hpp"
#include "spectree/tree.hpp"

namespace spectree {

/// x^2 - 3x + 1, whose roots (3 -+ sqrt(5))/2 are the extremal values in
/// the spider classifications. Algebraic comparisons always go through
/// this polynomial; no decimal constants anywhere in logic.
const IntPoly& THETA_POLY();

/// One irreducible factor of the Laplacian characteristic polynomial,
/// its multiplicity, and isolating intervals for its real roots. All
/// roots of the factor occur with the same multiplicity.
struct EigenClass {
  IntPoly min_poly;  // irreducible, primitive, positive leading coefficient
  int multiplicity = 0;
  std::vector<RootInterval> roots;  // sorted ascending
};

/// Position of one eigenvalue: a class and a root within it.
struct EigenvalueRef {
  int class_index = 0;
  int root_index = 0;
};

/// The full Laplacian spectrum as eigenvalue classes; classes are sorted
/// by their smallest root. Sum over classes of multiplicity * degree
/// equals the matrix order.
class FactoredSpectrum {
 public:
  FactoredSpectrum(int order, std::vector<EigenClass> classes);

  int order() const { return order_; }
  const std::vector<EigenClass>& classes() const { return classes_; }
  const EigenClass& cls(const EigenvalueRef& ref) const {
    return classes_[static_cast<size_t>(ref.class_index)];
  }
  const RootInterval& root(const EigenvalueRef& ref) const {
    return cls(ref).roots[static_cast<size_t>(ref.root_index)];
  }
  int multiplicity(const EigenvalueRef& ref) const {
    return cls(ref).multiplicity;
  }

  /// Distinct eigenvalues in ascending order.
  const std::vector<EigenvalueRef>& ascending() const { return ascending_; }
  int distinct_count() const { return static_cast<int>(ascending_.size()); }

  /// mu_{k+1} for 0 <= k < order (counting multiplicities).
  EigenvalueRef value_at(int k) const;

  /// Class with the given minimal polynomial, or nullptr.
  const EigenClass* find_class(const IntPoly& min_poly) const;

  /// All eigenvalues with multiplicity, ascending (size == order).
  std::vector<RootInterval> expand() const;

 private:
  int order_;
  std::vector<EigenClass> classes_;
  std::vector<EigenvalueRef> ascending_;
};

/// Factored spectrum of any symmetric integer Laplacian.
FactoredSpectrum spectrum_of_laplacian(const IntMatrix& laplacian);

/// Factored spectrum of a tree; additionally checks the tree facts that
/// 0 is simple and the largest eigenvalue is simple.
FactoredSpectrum spectrum(const Tree& t);

/// Exact multiplicity of a rational value as a Laplacian eigenvalue.
int multiplicity_rational(const Tree& t, const Rat& value);

/// Multiplicity of the eigenvalue class of an irreducible q, computed as
/// (n - rank(q(L))) / deg(q) by fraction-free elimination. Throws
/// kInternal if deg(q) does not divide n - rank.
int multiplicity_class(const Tree& t, const IntPoly& q);

/// The algebraic connectivity mu_2 (order >= 2).
EigenvalueRef algebraic_connectivity(const FactoredSpectrum& s);

/// mu_{n-1} (order >= 2).
EigenvalueRef second_largest(const FactoredSpectrum& s);

/// True when the ascending sequence `inner` interlaces `outer`
/// (|inner| = |outer| - 1): outer[i] <= inner[i] <= outer[i+1].
bool interlaces(const std::vector<RootInterval>& inner,
                const std::vector<RootInterval>& outer);

}  // namespace spectree

#endif  // SPECTREE_SPECTRUM_HPP
