#pragma once

// Exact polynomial rings for the summation engine. Orders are always 0
// except for identically vanishing factors.

#include <qcong/cyclotomic.hpp>
#include <qcong/detail/sum_engine.hpp>

#include <stdexcept>

namespace qcong::detail {

struct LaurentRing {
  using Elem = LaurentPoly;

  static long order(const Factor& f) {
    if (f.a_exp != 0) throw std::logic_error("univariate ring received a factor depending on a");
    return f.q_exp == 0 ? kZeroOrder : 0;
  }
  static long bracket_order(long m) { return m == 0 ? kZeroOrder : 0; }
  static bool set_precision(long) { return true; }
  static bool active(long) { return true; }
  static Elem one() { return LaurentPoly(1); }
  static Elem zero() { return {}; }
  static void mul_factor(Elem& x, const Factor& f) { x = x.times_binomial(f.q_exp); }
  static void mul_monomial(Elem& x, long e) { x = x.shifted(e); }
  static Elem times_bracket(const Elem& x, long m) { return x * qint_poly(m); }
  static void mul_t(Elem&, long) {}
  static void add(Elem& x, const Elem& y) { x += y; }
  static void tidy(Elem&) {}
};

struct BiLaurentRing {
  using Elem = BiLaurent;

  static long order(const Factor& f) { return f.a_exp == 0 && f.q_exp == 0 ? kZeroOrder : 0; }
  static long bracket_order(long m) { return m == 0 ? kZeroOrder : 0; }
  static bool set_precision(long) { return true; }
  static bool active(long) { return true; }
  static Elem one() { return BiLaurent(1); }
  static Elem zero() { return {}; }
  static void mul_factor(Elem& x, const Factor& f) { x = x.times_binomial(f.a_exp, f.q_exp); }
  static void mul_monomial(Elem& x, long e) { x = x.shifted(0, e); }
  static Elem times_bracket(const Elem& x, long m) { return x * BiLaurent(qint_poly(m)); }
  static void mul_t(Elem&, long) {}
  static void add(Elem& x, const Elem& y) { x += y; }
  static void tidy(Elem&) {}
};

}  // namespace qcong::detail
