#include <qcong/cyclotomic.hpp>
#include <qcong/errors.hpp>
#include <qcong/qkit.hpp>

namespace qcong {

BiLaurent q_poch(const MonomialArg& arg, long base_exp, long k) {
  BiLaurent out(1);
  for (long j = 0; j < k; ++j) out = out.times_binomial(arg.a_exp, arg.q_exp + j * base_exp);
  return out;
}

LaurentPoly q_poch_univariate(long q_exp, long base_exp, long k) {
  LaurentPoly out(1);
  for (long j = 0; j < k; ++j) out = out.times_binomial(q_exp + j * base_exp);
  return out;
}

LaurentPoly q_binom(long n, long k, long base_exp) {
  if (base_exp < 1) throw DomainError("q_binom base exponent must be >= 1");
  if (k < 0 || n < 0 || k > n) return {};
  k = std::min(k, n - k);
  // After step i the product is [n-k+i, i] in base q^base_exp.
  detail::ZPoly p{Integer(1)};
  for (long i = 1; i <= k; ++i) {
    const long m = base_exp * (n - k + i);
    detail::ZPoly next(p.size() + m, Integer(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] += p[j];
      next[j + m] -= p[j];
    }
    if (!detail::exact_div_binomial(next, base_exp * i)) throw InexactDivision("q_binom: product formula left a remainder");
    p = std::move(next);
  }
  return LaurentPoly::from_dense(p);
}

bool q_catalan_divides(long N) {
  if (N < 1) throw DomainError("q_catalan_divides requires N >= 1");
  return divrem(q_binom(2 * N - 2, N - 1), qint_poly(N)).second.is_zero();
}

}  // namespace qcong
