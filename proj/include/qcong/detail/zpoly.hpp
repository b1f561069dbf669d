#pragma once

// Dense integer polynomial kernel shared by the exact arithmetic types.
// A ZPoly stores coefficients from the constant term upward; the zero
// polynomial is the empty vector and trimmed values never end in a zero.

#include <qcong/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qcong::detail {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& p);

inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);

// Product; schoolbook for short operands, Kronecker substitution through a
// single GMP multiplication otherwise. Results are identical either way.
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b);
ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b);

// Division by a monic divisor: a = q*m + r, deg r < deg m.
std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& m);
ZPoly rem_monic(const ZPoly& a, const ZPoly& m);

// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[x].
std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b);

// In-place division by (1 - x^m), m >= 1; returns false on a nonzero
// remainder (in which case the contents of a are unspecified).
bool exact_div_binomial(ZPoly& a, long m);

Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

// Greatest common divisor of primitive integer polynomials, normalised to a
// positive leading coefficient. Small-prime modular algorithm with CRT and
// trial division, so the result is always exact.
ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b);

// Number of times the monic polynomial m divides a (a != 0), stopping at cap.
long valuation_monic(ZPoly a, const ZPoly& m, long cap);

}  // namespace qcong::detail
