#include <qcong/errors.hpp>
#include <qcong/rat_func.hpp>

namespace qcong {

namespace {

// Ordinary part of a nonzero polynomial: x = q^shift * ord, ord(0) != 0.
LaurentPoly ordinary_part(const LaurentPoly& x) { return x.shifted(-x.min_exp()); }

}  // namespace

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const long s = den.min_exp();
  LaurentPoly n = num.shifted(-s);
  LaurentPoly d = den.shifted(-s);
  if (!d.is_constant()) {
    const LaurentPoly g = gcd(ordinary_part(n), d);
    if (!g.is_constant()) {
      const long ns = n.min_exp();
      n = exact_quotient(n.shifted(-ns), g).shifted(ns);
      d = exact_quotient(d, g);
    }
  }
  const Rational lc = d.leading_coeff();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den) { return RatFunc(num, den); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Trusted{}); }

RatFunc& RatFunc::operator+=(const RatFunc& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  if (den_ == y.den_) return *this = RatFunc(num_ + y.num_, den_);
  if (is_polynomial() && y.is_polynomial()) return *this = RatFunc(num_ + y.num_);
  const LaurentPoly g = gcd(den_, y.den_);
  const LaurentPoly xd = exact_quotient(den_, g);
  const LaurentPoly yd = exact_quotient(y.den_, g);
  return *this = RatFunc(num_ * yd + y.num_ * xd, den_ * yd);
}

RatFunc& RatFunc::operator-=(const RatFunc& y) { return *this += -y; }

RatFunc& RatFunc::operator*=(const RatFunc& y) {
  if (is_zero() || y.is_zero()) return *this = RatFunc();
  if (is_polynomial() && y.is_polynomial()) return *this = RatFunc(num_ * y.num_);
  return *this = RatFunc(num_ * y.num_, den_ * y.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& y) {
  if (y.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this *= y.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& point) const {
  const Rational d = den_.eval(point);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qcong
