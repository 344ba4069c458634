// Exact unbounded arithmetic: thin layer over GMP's C++ types.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace chi3 {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long: " + z.get_str());
  return z.get_si();
}

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
  return to_long(Integer(q.get_num()));
}

}  // namespace chi3

namespace Eigen {

// Exact scalars for dense solves (cyclotomic inversion, the M2 bootstrap).
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;

  static inline Real epsilon() { return mpq_class(0); }
  static inline Real dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100,
  };
};

}  // namespace Eigen
