#pragma once

#include <gmpxx.h>

#include <string>

namespace qcong {

// Arbitrary-precision scalars. mpq_class keeps values in lowest terms with a
// positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qcong
