#pragma once

#include <qcong/bi_laurent.hpp>

namespace qcong {

// The monomial a^a_exp * q^q_exp (coefficient +1).
struct MonomialArg {
  long a_exp = 0;
  long q_exp = 0;

  static MonomialArg q_pow(long e) { return {0, e}; }
  MonomialArg times(const MonomialArg& o) const { return {a_exp + o.a_exp, q_exp + o.q_exp}; }
  MonomialArg inverse() const { return {-a_exp, -q_exp}; }
  friend bool operator==(const MonomialArg&, const MonomialArg&) = default;
};

// (arg; q^base_exp)_k = prod_{j<k} (1 - arg * q^(j*base_exp)).
BiLaurent q_poch(const MonomialArg& arg, long base_exp, long k);
LaurentPoly q_poch_univariate(long q_exp, long base_exp, long k);

// Gaussian binomial coefficient in base q^base_exp; 0 outside 0 <= k <= n.
LaurentPoly q_binom(long n, long k, long base_exp = 1);

// Whether [N] divides the central q-binomial [2N-2, N-1].
bool q_catalan_divides(long N);

}  // namespace qcong
