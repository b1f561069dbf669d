#pragma once

#include <qcong/laurent_poly.hpp>

#include <string>

namespace qcong {

/// Quotient of Laurent polynomials in canonical form.
///
/// The denominator is an ordinary monic polynomial with nonzero constant
/// term, and it is coprime to the numerator's ordinary part. Equal values
/// therefore have identical (num, den) pairs, and `==` is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Normalizes num/den; throws DivisionByZero when den is zero.
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& y);
  RatFunc& operator-=(const RatFunc& y);
  RatFunc& operator*=(const RatFunc& y);
  RatFunc& operator/=(const RatFunc& y);
  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc inverse() const;

  // Throws PoleError when the denominator (or a negative power of q)
  // vanishes at the point.
  Rational eval(const Rational& point) const;

  std::string str() const;

 private:
  struct Trusted {};
  RatFunc(LaurentPoly num, LaurentPoly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace qcong
