#include <doctest.h>

#include <random>
#include <vector>

#include "spectree/enumerate.hpp"
#include "spectree/linalg.hpp"
#include "spectree/tree.hpp"

using namespace spectree;

namespace {

// Test-only oracle: determinant of the polynomial matrix xI - A by
// Laplace expansion. Exponential, fine for n <= 6.
IntPoly det_expand(std::vector<std::vector<IntPoly>> m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  IntPoly acc;
  int sign = 1;
  for (size_t col = 0; col < n; ++col) {
    std::vector<std::vector<IntPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<IntPoly> row;
      for (size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    IntPoly term = m[0][col] * det_expand(std::move(minor));
    acc = sign > 0 ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

IntPoly charpoly_oracle(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<IntPoly>> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntPoly entry = IntPoly::constant(-a(i, j));
      if (i == j) entry = entry + IntPoly::x();
      m[static_cast<size_t>(i)].push_back(std::move(entry));
    }
  return det_expand(std::move(m));
}

IntPoly make_poly(std::vector<long> coeffs) {
  std::vector<Int> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("charpoly on the named families") {
  CHECK(charpoly(laplacian(path(2))) == make_poly({0, -2, 1}));  // x^2-2x
  // star K_{1,5}: x(x-1)^4(x-6)
  CHECK(charpoly(laplacian(star(5))) ==
        IntPoly::x() * pow(make_poly({-1, 1}), 4) * make_poly({-6, 1}));
  // H(2,2,2): x(x-1)^2(x^3-8x^2+17x-6)
  CHECK(charpoly(laplacian(h_tree(2, 2, 2))) ==
        IntPoly::x() * pow(make_poly({-1, 1}), 2) * make_poly({-6, 17, -8, 1}));
}

TEST_CASE("charpoly agrees with cofactor expansion on random trees") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // orders 2..6
    std::vector<int> seq(static_cast<size_t>(std::max(0, n - 2)));
    for (int& v : seq) v = static_cast<int>(rng() % static_cast<unsigned>(n));
    const IntMatrix l = laplacian(tree_from_pruefer(seq));
    CHECK(charpoly(l) == charpoly_oracle(l));
  }
}

TEST_CASE("charpoly matrix-tree coefficients for trees") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    std::vector<int> seq(static_cast<size_t>(std::max(0, n - 2)));
    for (int& v : seq) v = static_cast<int>(rng() % static_cast<unsigned>(n));
    const IntPoly cp = charpoly(laplacian(tree_from_pruefer(seq)));
    CHECK(cp.degree() == n);
    CHECK(cp.is_monic());
    CHECK(cp.coeff(0) == 0);
    CHECK(cp.coeff(1) == ((n - 1) % 2 == 0 ? Int(n) : Int(-n)));
    CHECK(-cp.coeff(n - 1) == 2 * (n - 1));
  }
}

namespace {

// Test-only oracle: plain Gaussian elimination over exact rationals.
int rank_oracle(const IntMatrix& a) {
  using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
  RatMatrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (int i = rank + 1; i < m.rows(); ++i) {
      const Rat factor = m(i, col) / m(rank, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank by fraction-free elimination") {
  IntMatrix zero = IntMatrix::Zero(3, 3);
  CHECK(rank_exact(zero) == 0);
  IntMatrix id = IntMatrix::Identity(4, 4);
  CHECK(rank_exact(id) == 4);
  // Laplacian of a connected graph on n vertices has rank n-1.
  CHECK(rank_exact(laplacian(path(6))) == 5);
  CHECK(rank_exact(laplacian(star(7))) == 7);
  // Rank-1 outer product.
  IntMatrix outer(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer(i, j) = Int((i + 1) * (j + 2));
  CHECK(rank_exact(outer) == 1);
}

TEST_CASE("rank agrees with rational elimination on random matrices") {
  std::mt19937 rng(31);
  auto random_matrix = [&](int rows, int cols, int span) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = Int(static_cast<long>(rng() % (2 * span + 1u)) - span);
    return m;
  };
  for (int trial = 0; trial < 120; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6u);
    const int cols = 1 + static_cast<int>(rng() % 6u);
    IntMatrix m = random_matrix(rows, cols, 5);
    // Half the time force low rank via an outer product.
    if (trial % 2 == 0) {
      const int inner = 1 + static_cast<int>(rng() % 2u);
      m = (random_matrix(rows, inner, 3) * random_matrix(inner, cols, 3)).eval();
    }
    // Occasionally zero out a column to exercise pivot skipping.
    if (trial % 5 == 0 && cols > 1)
      for (int i = 0; i < rows; ++i) m(i, 1) = 0;
    CHECK(rank_exact(m) == rank_oracle(m));
  }
}

TEST_CASE("polynomial evaluation at a matrix") {
  const IntMatrix l = laplacian(path(3));
  const IntPoly cp = charpoly(l);
  // Cayley-Hamilton: cp(L) = 0.
  const IntMatrix z = eval_poly_at_matrix(cp, l);
  CHECK(z == IntMatrix::Zero(3, 3));
  const IntMatrix shifted = eval_poly_at_matrix(make_poly({5, 1}), l);
  CHECK(shifted == (l + Int(5) * IntMatrix::Identity(3, 3)).eval());
}
