#ifndef SPECTREE_LINALG_HPP
#define SPECTREE_LINALG_HPP

#include "spectree/numeric.hpp"
#include "spectree/polynomial.hpp"

namespace spectree {

/// Characteristic polynomial det(xI - A), exact and division-free
/// (Berkowitz). Monic of degree n.
IntPoly charpoly(const IntMatrix& a);

/// Rank over the rationals, computed by fraction-free (Bareiss)
/// elimination over the integers.
int rank_exact(IntMatrix m);

/// q(A) by Horner's rule over integer matrices.
IntMatrix eval_poly_at_matrix(const IntPoly& q, const IntMatrix& a);

}  // namespace spectree

#endif  // SPECTREE_LINALG_HPP
