#pragma once

#include <qcong/detail/zpoly.hpp>
#include <qcong/rational.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

/// Sparse Laurent polynomial in q with rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two values
/// are equal exactly when their term lists are equal. Negative exponents are
/// allowed; "ordinary" means the zero polynomial or minimum exponent >= 0.
class LaurentPoly {
 public:
  using Exponent = long;
  struct Term {
    Exponent exp;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c);  // NOLINT
  LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms);

  static LaurentPoly monomial(const Rational& c, Exponent e);
  static LaurentPoly q() { return monomial(1, 1); }
  // 1 - q^m
  static LaurentPoly binomial(Exponent m);
  static LaurentPoly from_terms(std::vector<Term> terms);
  // Sum of coeffs[i] * q^(i + shift).
  static LaurentPoly from_dense(const detail::ZPoly& coeffs, Exponent shift = 0);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Both require a nonzero polynomial.
  Exponent min_exp() const { return terms_.front().exp; }
  Exponent max_exp() const { return terms_.back().exp; }
  bool is_ordinary() const { return terms_.empty() || terms_.front().exp >= 0; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_integral() const;

  Rational coeff(Exponent e) const;
  const Rational& leading_coeff() const { return terms_.back().coeff; }

  LaurentPoly shifted(Exponent s) const;
  LaurentPoly scaled(const Rational& c) const;
  // Multiply by (1 - q^m) in one linear pass.
  LaurentPoly times_binomial(Exponent m) const;
  // Substitute q -> q^k (k != 0).
  LaurentPoly dilated(Exponent k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& y);
  LaurentPoly& operator-=(const LaurentPoly& y);
  LaurentPoly& operator*=(const LaurentPoly& y);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact value at a rational point; throws PoleError at 0 when negative
  /// exponents are present.
  Rational eval(const Rational& point) const;

  std::string str() const;

  // Coefficients as q^shift * (1/denom) * sum(ints[i] q^i).
  struct Scaled {
    Exponent shift = 0;
    detail::ZPoly ints;
    Integer denom = 1;
  };
  Scaled to_scaled() const;
  static LaurentPoly from_scaled(const Scaled& s);

 private:
  explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

// Division with remainder of ordinary polynomials: x = quot*y + rem with
// deg rem < deg y. Throws DivisionByZero if y = 0, DomainError on negative
// exponents.
std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& x, const LaurentPoly& y);

// Monic gcd of the ordinary parts (each argument shifted by its minimal
// monomial). gcd(x, 0) = monic(x); throws UndefinedInput when both are zero.
LaurentPoly gcd(const LaurentPoly& x, const LaurentPoly& y);

LaurentPoly monic(const LaurentPoly& x);

// Exact quotient x / y for ordinary polynomials; throws InexactDivision.
LaurentPoly exact_quotient(const LaurentPoly& x, const LaurentPoly& y);

}  // namespace qcong
