#ifndef SPECTREE_NUMERIC_HPP
#define SPECTREE_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace Eigen {

// mpz_class / mpq_class as Eigen scalars. Exact arithmetic only; no packets.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 80
  };
};

}  // namespace Eigen

namespace spectree {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int exact_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Decimal expansion of a rational, rounded to `digits` fractional digits.
/// Presentational only; never part of any exact decision.
std::string decimal_string(const Rat& value, int digits);

}  // namespace spectree

#endif  // SPECTREE_NUMERIC_HPP
