#pragma once

// Local arithmetic at a primitive n-th root of unity.
//
// Q[q]/Phi_n^E is isomorphic to Q(zeta_n)[t]/t^E via q = zeta + t, so the
// Phi_n-adic valuation of a polynomial f is the t-adic order of f(zeta + t).
// Elements are E rows of n integers: row i holds the coefficient of t^i as an
// element of Z[x]/(x^n - 1), reduced modulo Phi_n(x) after every step.
//
// Factors 1 - q^m with n | m vanish at zeta to order exactly 1; the ring
// divides them by t and reports order 1 so the engine can track the power.
// The bracket [m] is represented by 1 - q^m, i.e. the sum is scaled by the
// unit 1 - q (n >= 2).

#include <qcong/catalog.hpp>
#include <qcong/cyclotomic.hpp>

#include <map>
#include <vector>

namespace qcong {

class CycloJet {
 public:
  using Elem = std::vector<Integer>;  // rows * n_, row-major

  // cap: valuations at or above it are reported as AtLeast(cap).
  CycloJet(long n, long cap, CycloCache& cache = default_cache());

  long n() const { return n_; }
  long cap() const { return cap_; }
  long precision() const { return rows_; }

  long order(const Factor& f) const;
  long bracket_order(long m) const;
  bool set_precision(long vmin);
  bool active(long shift) const { return shift < rows_; }
  Elem one() const;
  Elem zero() const { return Elem(rows_ * n_); }
  void mul_factor(Elem& x, const Factor& f) const;
  void mul_monomial(Elem& x, long e) const;
  Elem times_bracket(const Elem& x, long m) const;
  void mul_t(Elem& x, long s) const;
  void add(Elem& x, const Elem& y) const;
  void tidy(Elem& x) const;

  // t-adic order of an element (after reduction), capped at the precision.
  long order_of(const Elem& x) const;

 private:
  // x <- x * sum_i coeff[i] * x^rot[i] * t^i (plus `constant` at i = 0).
  void mul_series(Elem& x, const std::vector<Integer>& coeff, const std::vector<long>& rot, long constant) const;
  void series_of_power(long m, long skip, std::vector<Integer>& coeff, std::vector<long>& rot) const;
  long rot(long e) const { return ((e % n_) + n_) % n_; }

  long n_;
  long cap_;
  long rows_ = 0;
  const detail::ZPoly* phi_;
};

// Laurent polynomials in a with coefficients in Z[zeta_n], used to test that
// every a-coefficient of a sum's numerator vanishes modulo Phi_n.
class CycloAPoly {
 public:
  struct Elem {
    long amin = 0;
    std::vector<std::vector<Integer>> rows;  // rows[i] is the coefficient of a^(amin+i)
  };

  explicit CycloAPoly(long n, CycloCache& cache = default_cache());

  long order(const Factor& f) const;
  long bracket_order(long m) const;
  bool set_precision(long) const { return true; }
  bool active(long) const { return true; }
  Elem one() const;
  Elem zero() const { return {}; }
  void mul_factor(Elem& x, const Factor& f) const;
  void mul_monomial(Elem& x, long e) const;
  Elem times_bracket(const Elem& x, long m) const;
  void mul_t(Elem&, long) const {}
  void add(Elem& x, const Elem& y) const;
  void tidy(Elem& x) const;

  bool is_zero(const Elem& x) const;

 private:
  long rot(long e) const { return ((e % n_) + n_) % n_; }
  long n_;
  const detail::ZPoly* phi_;
};

}  // namespace qcong
