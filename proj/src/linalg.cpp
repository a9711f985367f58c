#include "spectree/linalg.hpp"

#include <algorithm>
#include <vector>

#include "spectree/error.hpp"

namespace spectree {

IntPoly charpoly(const IntMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorKind::kInvalidArgument, "charpoly needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return IntPoly::constant(1);

  // Berkowitz iteration: c holds the characteristic polynomial of the
  // leading r x r principal submatrix, coefficients highest degree first.
  std::vector<Int> c = {Int(1), -a(0, 0)};
  std::vector<Int> v, w;
  for (int r = 1; r < n; ++r) {
    std::vector<Int> t(static_cast<size_t>(r) + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    v.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = a(i, r);
    for (int j = 2; j <= r + 1; ++j) {
      Int dot = 0;
      for (int i = 0; i < r; ++i) dot += a(r, i) * v[static_cast<size_t>(i)];
      t[static_cast<size_t>(j)] = -dot;
      if (j <= r) {
        w.assign(static_cast<size_t>(r), Int(0));
        for (int i = 0; i < r; ++i) {
          Int sum = 0;
          for (int k = 0; k < r; ++k) sum += a(i, k) * v[static_cast<size_t>(k)];
          w[static_cast<size_t>(i)] = std::move(sum);
        }
        v.swap(w);
      }
    }
    // Multiply by the lower-triangular Toeplitz matrix with first column t.
    std::vector<Int> next(static_cast<size_t>(r) + 2, Int(0));
    for (int i = 0; i < r + 2; ++i) {
      Int sum = 0;
      const int j_lo = std::max(0, i - (r + 1));
      const int j_hi = std::min(i, r);
      for (int j = j_lo; j <= j_hi; ++j)
        sum += t[static_cast<size_t>(i - j)] * c[static_cast<size_t>(j)];
      next[static_cast<size_t>(i)] = std::move(sum);
    }
    c.swap(next);
  }
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

int rank_exact(IntMatrix m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m(i, j) = exact_quotient(m(i, j) * m(rank, col) - m(i, col) * m(rank, j),
                                 prev);
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

IntMatrix eval_poly_at_matrix(const IntPoly& q, const IntMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorKind::kInvalidArgument, "matrix evaluation needs a square matrix");
  const int n = static_cast<int>(a.rows());
  IntMatrix acc = IntMatrix::Zero(n, n);
  if (q.is_zero()) return acc;
  for (int i = 0; i < n; ++i) acc(i, i) = q.leading();
  for (int d = q.degree() - 1; d >= 0; --d) {
    acc = (acc * a).eval();
    for (int i = 0; i < n; ++i) acc(i, i) += q.coeff(d);
  }
  return acc;
}

}  // namespace spectree
