#ifndef SPECTREE_FACTOR_HPP
#define SPECTREE_FACTOR_HPP

#include <vector>

#include "spectree/polynomial.hpp"

namespace spectree {

struct FactorPart {
  IntPoly poly;  // primitive, positive leading coefficient
  int exponent = 1;
};

/// sign * content * prod(poly^exponent) reconstructs the input exactly.
struct Factorization {
  int sign = 1;
  Int content = 1;  // positive
  std::vector<FactorPart> parts;

  IntPoly expand() const;
};

/// Squarefree decomposition: parts pairwise coprime and squarefree,
/// exponent = multiplicity.
Factorization squarefree(const IntPoly& p);

/// Full factorization into irreducibles over the rationals. Exact;
/// rational-root stripping plus small-prime Berlekamp, Hensel lifting and
/// subset recombination for the residual.
Factorization factor(const IntPoly& p);

/// Degree cap for factor(); inputs beyond it are rejected.
inline constexpr int kMaxFactorDegree = 64;

}  // namespace spectree

#endif  // SPECTREE_FACTOR_HPP
