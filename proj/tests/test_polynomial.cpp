#include <doctest.h>

#include <random>
#include <set>

#include "spectree/error.hpp"
#include "spectree/factor.hpp"
#include "spectree/linalg.hpp"
#include "spectree/polynomial.hpp"
#include "spectree/roots.hpp"
#include "spectree/tree.hpp"
#include "spectree/enumerate.hpp"

using namespace spectree;

namespace {

IntPoly make_poly(std::vector<long> coeffs) {
  std::vector<Int> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const IntPoly a = make_poly({1, 2, 1});   // (x+1)^2
  const IntPoly b = make_poly({-1, 1});     // x-1
  CHECK((a * b) == make_poly({-1, -1, 1, 1}));
  CHECK((a + b) == make_poly({0, 3, 1}));
  CHECK((a - a).is_zero());
  CHECK(derivative(a) == make_poly({2, 2}));
  CHECK(a.eval(Int(2)) == 9);
  CHECK(pow(b, 3) == make_poly({-1, 3, -3, 1}));
  CHECK(to_string(make_poly({1, -3, 1})) == "x^2-3x+1");
  CHECK(to_string(make_poly({0, -4})) == "-4x");
  CHECK(to_string(IntPoly()) == "0");
}

TEST_CASE("division, gcd, content") {
  const IntPoly prod = make_poly({-3, 2, 1}) * make_poly({5, 7});
  CHECK(divide_exact(prod, make_poly({5, 7})) == make_poly({-3, 2, 1}));
  CHECK(!try_divide(make_poly({1, 0, 1}), make_poly({-1, 1})).has_value());
  CHECK(content(make_poly({6, -9, 12})) == 3);
  CHECK(gcd_primitive(make_poly({-1, 0, 1}), make_poly({-1, 1})) ==
        make_poly({-1, 1}));
  CHECK(gcd_primitive(make_poly({1, -3, 1}), make_poly({-1, 1})).degree() == 0);
}

TEST_CASE("sign_at evaluates homogeneously") {
  const IntPoly theta = make_poly({1, -3, 1});
  CHECK(sign_at(theta, Rat(0)) > 0);
  CHECK(sign_at(theta, Rat(1)) < 0);
  CHECK(sign_at(theta, Rat(3)) > 0);
  CHECK(sign_at(make_poly({-1, 1}), Rat(1)) == 0);
  CHECK(sign_at(theta, make_rat(Int(1), Int(2))) < 0);
}

TEST_CASE("squarefree decomposition") {
  // x * (x^2-3x+1)^2
  const IntPoly theta = make_poly({1, -3, 1});
  const IntPoly input = IntPoly::x() * theta * theta;
  const Factorization sq = squarefree(input);
  REQUIRE(sq.parts.size() == 2);
  CHECK(sq.parts[0].poly == IntPoly::x());
  CHECK(sq.parts[0].exponent == 1);
  CHECK(sq.parts[1].poly == theta);
  CHECK(sq.parts[1].exponent == 2);
  CHECK(sq.expand() == input);

  const Factorization single = squarefree(make_poly({2, 0, 3}));
  CHECK(single.parts.size() == 1);
  CHECK(single.parts[0].exponent == 1);

  CHECK_THROWS_AS(squarefree(IntPoly()), Error);
}

TEST_CASE("factor spec examples") {
  // x^3-8x^2+17x-6 = (x-3)(x^2-5x+2)
  Factorization f = factor(make_poly({-6, 17, -8, 1}));
  REQUIRE(f.parts.size() == 2);
  CHECK(f.parts[0].poly == make_poly({-3, 1}));
  CHECK(f.parts[1].poly == make_poly({2, -5, 1}));

  Factorization irr = factor(make_poly({1, -3, 1}));
  REQUIRE(irr.parts.size() == 1);
  CHECK(irr.parts[0].poly == make_poly({1, -3, 1}));
  CHECK(irr.parts[0].exponent == 1);

  Factorization split = factor(make_poly({3, -4, 1}));
  REQUIRE(split.parts.size() == 2);
  CHECK(split.expand() == make_poly({3, -4, 1}));
  std::set<std::string> linear;
  for (const auto& part : split.parts) linear.insert(to_string(part.poly));
  CHECK(linear == std::set<std::string>{"x-1", "x-3"});

  CHECK_THROWS_AS(factor(IntPoly()), Error);
}

TEST_CASE("factor handles sign, content and higher degree") {
  // -18 * (x-1)^2 * (x^2+x+1)
  const IntPoly input =
      Int(-18) * pow(make_poly({-1, 1}), 2) * make_poly({1, 1, 1});
  Factorization f = factor(input);
  CHECK(f.sign == -1);
  CHECK(f.content == 18);
  CHECK(f.expand() == input);

  // Swinnerton-Dyer style: x^4-10x^2+1 (minimal polynomial of sqrt2+sqrt3)
  // is irreducible but splits modulo every prime.
  Factorization sd = factor(make_poly({1, 0, -10, 0, 1}));
  REQUIRE(sd.parts.size() == 1);
  CHECK(sd.parts[0].poly.degree() == 4);

  // (x^2-2)(x^2-3): needs recombination of modular factors.
  Factorization rec = factor(make_poly({-2, 0, 1}) * make_poly({-3, 0, 1}));
  REQUIRE(rec.parts.size() == 2);
  CHECK(rec.expand() == make_poly({-2, 0, 1}) * make_poly({-3, 0, 1}));
}

TEST_CASE("factor handles degree 24 and enforces its bound") {
  // P24: many quadratic and quartic eigenvalue fields.
  const IntPoly cp = charpoly(laplacian(path(24)));
  REQUIRE(cp.degree() == 24);
  const Factorization f = factor(cp);
  CHECK(f.expand() == cp);
  CHECK(f.parts.size() >= 4);
  // Product of two irreducible sextics (x^6-2 and x^6-3).
  std::vector<Int> a(7, Int(0)), b(7, Int(0));
  a[0] = -2;
  a[6] = 1;
  b[0] = -3;
  b[6] = 1;
  const IntPoly sextics = IntPoly(a) * IntPoly(b);
  const Factorization g = factor(sextics);
  REQUIRE(g.parts.size() == 2);
  CHECK(g.expand() == sextics);

  std::vector<Int> too_big(static_cast<size_t>(kMaxFactorDegree) + 2, Int(0));
  too_big.front() = 1;
  too_big.back() = 1;
  CHECK_THROWS_AS(factor(IntPoly(too_big)), Error);
}

TEST_CASE("factorization reconstructs random tree charpolys exactly") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);  // orders 4..12
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& v : seq) v = static_cast<int>(rng() % static_cast<unsigned>(n));
    const IntPoly cp = charpoly(laplacian(tree_from_pruefer(seq)));
    const Factorization f = factor(cp);
    CHECK(f.expand() == cp);
    for (const FactorPart& part : f.parts) {
      CHECK(part.poly.leading() > 0);
      CHECK(content(part.poly) == 1);
    }
  }
}

TEST_CASE("root isolation on the spec quadratics") {
  const IntPoly theta = make_poly({1, -3, 1});
  auto roots = isolate_roots(theta);
  REQUIRE(roots.size() == 2);
  // (3-sqrt5)/2 = 0.38196..., (3+sqrt5)/2 = 2.61803...
  RootInterval lo = refine(roots[0], make_rat(Int(1), Int(1000000)));
  RootInterval hi = refine(roots[1], make_rat(Int(1), Int(1000000)));
  CHECK(lo.lo >= make_rat(Int(381965), Int(1000000)));
  CHECK(lo.hi <= make_rat(Int(381967), Int(1000000)));
  CHECK(hi.lo >= make_rat(Int(2618032), Int(1000000)));
  CHECK(hi.hi <= make_rat(Int(2618035), Int(1000000)));

  auto one = isolate_roots(make_poly({-1, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_point());
  CHECK(one[0].lo == 1);

  auto pm = isolate_roots(make_poly({1, -4, 1}));  // 2 +- sqrt3
  REQUIRE(pm.size() == 2);
  CHECK(compare_root_rational(pm[0], Rat(1)) < 0);
  CHECK(compare_root_rational(pm[1], Rat(3)) > 0);

  CHECK_THROWS_AS(isolate_roots(pow(make_poly({-1, 1}), 2)), Error);
}

TEST_CASE("isolation count matches the Sturm count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Int> coeffs(static_cast<size_t>(2 + rng() % 6));
    for (Int& c : coeffs) c = Int(static_cast<long>(rng() % 21) - 10);
    IntPoly p(std::move(coeffs));
    if (p.degree() < 1) continue;
    if (gcd_primitive(p, derivative(p)).degree() > 0) continue;
    const auto intervals = isolate_roots(p);
    CHECK(static_cast<int>(intervals.size()) == count_real_roots(p));
    for (const auto& iv : intervals) {
      if (!iv.is_point()) {
        CHECK(sign_at(p, iv.lo) != 0);
        CHECK(sign_at(p, iv.hi) != 0);
        CHECK(sign_at(p, iv.lo) * sign_at(p, iv.hi) < 0);
      }
    }
    for (size_t i = 1; i < intervals.size(); ++i)
      CHECK(compare_roots(intervals[i - 1], intervals[i]) < 0);
  }
}

TEST_CASE("exact root comparison") {
  const auto theta = isolate_roots(make_poly({1, -3, 1}));
  const auto sqrt3 = isolate_roots(make_poly({1, -4, 1}));
  // 2-sqrt3 = 0.2679 < theta = 0.3819
  CHECK(compare_roots(sqrt3[0], theta[0]) < 0);
  // theta-bar = 2.618 < 3
  CHECK(compare_root_rational(theta[1], Rat(3)) < 0);
  // equal roots through a shared factor
  const auto a = isolate_roots(make_poly({1, -3, 1}) * make_poly({-5, 1}));
  const auto b = isolate_roots(make_poly({1, -3, 1}) * make_poly({7, 1}));
  REQUIRE(a.size() == 3);  // theta, theta-bar, 5
  REQUIRE(b.size() == 3);  // -7, theta, theta-bar
  CHECK(compare_roots(a[0], b[1]) == 0);  // both isolate theta
  CHECK(compare_roots(a[1], b[2]) == 0);  // both isolate theta-bar
  CHECK(compare_roots(a[1], b[1]) > 0);
  const auto ones = isolate_roots(make_poly({-1, 1}));
  CHECK(compare_roots(ones[0], ones[0]) == 0);
  // rational value equality through a point interval
  CHECK(compare_root_rational(ones[0], Rat(1)) == 0);
}

TEST_CASE("refine keeps the root and shrinks") {
  const auto roots = isolate_roots(make_poly({1, -3, 1}));
  const Rat width = make_rat(Int(1), Int(1) << 40);
  RootInterval fine = refine(roots[0], width);
  CHECK(fine.width() <= width);
  CHECK(sign_at(fine.poly, fine.lo) * sign_at(fine.poly, fine.hi) < 0);
  CHECK(decimal_approx(roots[0], 12) == "0.381966011250");
  CHECK(decimal_approx(roots[1], 12) == "2.618033988750");
}
