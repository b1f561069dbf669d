#pragma once

#include <qcong/rat_func.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qcong {

// Sparse Laurent polynomial in two variables a and q. Terms are sorted by
// (a-exponent, q-exponent) with no zero coefficients.
class BiLaurent {
 public:
  struct Term {
    long a;
    long q;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  BiLaurent() = default;
  BiLaurent(long c);  // NOLINT
  BiLaurent(const Rational& c);  // NOLINT
  BiLaurent(const LaurentPoly& p);  // NOLINT: a-free embedding

  static BiLaurent monomial(const Rational& c, long a_exp, long q_exp);
  static BiLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_a_free() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].a == 0 && terms_[0].q == 0); }

  // Require a nonzero value.
  long min_a() const { return terms_.front().a; }
  long max_a() const { return terms_.back().a; }
  long min_q() const;
  long max_q() const;
  const Rational& lex_leading_coeff() const { return terms_.back().coeff; }

  BiLaurent shifted(long da, long dq) const;
  BiLaurent scaled(const Rational& c) const;
  // Multiply by (1 - a^i q^j) in one pass.
  BiLaurent times_binomial(long i, long j) const;

  BiLaurent operator-() const;
  BiLaurent& operator+=(const BiLaurent& y);
  BiLaurent& operator-=(const BiLaurent& y);
  BiLaurent& operator*=(const BiLaurent& y);
  friend BiLaurent operator+(BiLaurent x, const BiLaurent& y) { return x += y; }
  friend BiLaurent operator-(BiLaurent x, const BiLaurent& y) { return x -= y; }
  friend BiLaurent operator*(const BiLaurent& x, const BiLaurent& y);
  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

  // a -> q^m.
  LaurentPoly subst_a(long m) const;
  // Coefficients of a^i, increasing i, zero coefficients omitted.
  std::vector<std::pair<long, LaurentPoly>> coeffs_in_a() const;
  static BiLaurent from_coeffs_in_a(const std::vector<std::pair<long, LaurentPoly>>& coeffs);
  // Projection onto a-free values; throws DomainError if a occurs.
  LaurentPoly to_laurent() const;

  // Exact value at (a, q); throws PoleError on a zero base with a negative exponent.
  Rational eval(const Rational& a, const Rational& q) const;

  std::string str() const;

 private:
  explicit BiLaurent(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

// Quotient of BiLaurent values. Normalization only fixes a representative up
// to common factors: the denominator is shifted to have minimal a- and
// q-exponent 0, and it is scaled to integer coefficients with content 1 and a
// positive lex-leading coefficient. Equality is decided by cross-multiplying.
class BiRatFunc {
 public:
  BiRatFunc() : den_(1) {}
  BiRatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  BiRatFunc(BiLaurent p) : num_(std::move(p)), den_(1) {}  // NOLINT
  BiRatFunc(const RatFunc& f) : BiRatFunc(BiLaurent(f.num()), BiLaurent(f.den())) {}  // NOLINT
  BiRatFunc(BiLaurent num, BiLaurent den);

  const BiLaurent& num() const { return num_; }
  const BiLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_a_free() const { return num_.is_a_free() && den_.is_a_free(); }

  BiRatFunc operator-() const;
  BiRatFunc& operator+=(const BiRatFunc& y);
  BiRatFunc& operator-=(const BiRatFunc& y);
  BiRatFunc& operator*=(const BiRatFunc& y);
  BiRatFunc& operator/=(const BiRatFunc& y);
  friend BiRatFunc operator+(BiRatFunc x, const BiRatFunc& y) { return x += y; }
  friend BiRatFunc operator-(BiRatFunc x, const BiRatFunc& y) { return x -= y; }
  friend BiRatFunc operator*(BiRatFunc x, const BiRatFunc& y) { return x *= y; }
  friend BiRatFunc operator/(BiRatFunc x, const BiRatFunc& y) { return x /= y; }
  friend bool operator==(const BiRatFunc& x, const BiRatFunc& y);

  // a -> q^m; throws DegenerateInstance when the denominator vanishes.
  RatFunc subst_a(long m) const;
  // Requires an a-free value.
  RatFunc to_ratfunc() const;
  Rational eval(const Rational& a, const Rational& q) const;

  std::string str() const;

 private:
  BiLaurent num_;
  BiLaurent den_;
};

}  // namespace qcong
