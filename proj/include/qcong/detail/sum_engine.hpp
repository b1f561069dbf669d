#pragma once

// Forward accumulation of a truncated hypergeometric sum over an abstract ring.
//
// With term_k = B_k * prod_{j<=k} P_j / Q_j, the engine keeps
//   U_k = prod_{j<=k} P_j,  D_k = prod_{j<=k} Q_j,  N_k = N_{k-1} Q_k + B_k U_k,
// so that the sum equals N / D. Rings may report a t-adic order for each
// factor (order > 0 means the factor was divided by t^order); the engine
// tracks the resulting power of t per term and aligns terms at the minimum.
//
// A numerator factor that is identically zero ends the sum. A denominator
// factor that is identically zero (before truncation) is degenerate.

#include <qcong/catalog.hpp>
#include <qcong/errors.hpp>

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

namespace qcong::detail {

inline constexpr long kZeroOrder = LONG_MAX;

template <class Ring>
struct SumParts {
  typename Ring::Elem num;
  typename Ring::Elem den;
  long vmin = 0;  // sum = t^vmin * num / den
  long last = -1;  // last index with a possibly nonzero term
  bool empty = true;  // every term vanished identically
  bool computed = true;  // false when the ring declined (vmin beyond its cap)
};

template <class Ring>
SumParts<Ring> accumulate(Ring& ring, const Recipe& rc, long upto, bool need_den) {
  SumParts<Ring> out;
  std::vector<Factor> num, den;

  // Pass 1: t-orders of every term.
  std::vector<long> order(upto + 1, kZeroOrder);
  long acc = 0;
  long last = upto;
  for (long k = 0; k <= upto; ++k) {
    if (k > 0) {
      num.clear();
      den.clear();
      rc.step_factors(k, num, den);
      bool zero = false;
      for (const auto& f : den) {
        const long o = ring.order(f);
        if (o == kZeroOrder)
          throw DegenerateInstance("denominator factor 1 - a^" + std::to_string(f.a_exp) + " q^" +
                                   std::to_string(f.q_exp) + " vanishes at k = " + std::to_string(k));
        acc -= o;
      }
      for (const auto& f : num) {
        const long o = ring.order(f);
        if (o == kZeroOrder) {
          zero = true;
          break;
        }
        acc += o;
      }
      if (zero) {
        last = k - 1;
        break;
      }
    }
    long ob = 0;
    if (rc.has_bracket) {
      ob = ring.bracket_order(rc.bracket_arg(k));
      if (ob == kZeroOrder) continue;
    }
    order[k] = acc + ob;
  }
  out.last = last;
  long vmin = kZeroOrder;
  for (long k = 0; k <= last; ++k) vmin = std::min(vmin, order[k]);
  if (vmin == kZeroOrder) {
    ring.set_precision(0);
    out.num = ring.zero();
    out.den = ring.one();
    out.empty = true;
    out.vmin = 0;
    return out;
  }
  out.empty = false;
  out.vmin = vmin;
  if (!ring.set_precision(vmin)) {
    out.computed = false;
    return out;
  }
  out.num = ring.zero();
  out.den = ring.one();

  // Pass 2: accumulate.
  typename Ring::Elem u = ring.one();
  for (long k = 0; k <= last; ++k) {
    if (k > 0) {
      num.clear();
      den.clear();
      rc.step_factors(k, num, den);
      for (const auto& f : num) ring.mul_factor(u, f);
      if (rc.q_slope != 0) ring.mul_monomial(u, rc.q_slope);
      for (const auto& f : den) {
        ring.mul_factor(out.num, f);
        if (need_den) ring.mul_factor(out.den, f);
      }
      ring.tidy(u);
    }
    if (order[k] != kZeroOrder && ring.active(order[k] - vmin)) {
      typename Ring::Elem t = rc.has_bracket ? ring.times_bracket(u, rc.bracket_arg(k)) : u;
      ring.mul_t(t, order[k] - vmin);
      ring.add(out.num, t);
    }
    ring.tidy(out.num);
  }
  return out;
}

}  // namespace qcong::detail
