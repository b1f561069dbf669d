#include <qcong/errors.hpp>
#include <qcong/verify.hpp>

#include <climits>
#include <random>
#include <sstream>

namespace qcong {

bool check_qbino(long n, long j) {
  if (n < 1 || j < 0 || j > n - 1) throw PreconditionError("check_qbino: need 0 <= j <= n-1");
  LaurentPoly sum;
  for (long k = 0; k <= n; ++k) {
    const LaurentPoly t = q_binom(n, k).shifted((n - k) * (n - k - 1) / 2 + j * k);
    if (k % 2 == 0)
      sum += t;
    else
      sum -= t;
  }
  return sum.is_zero();
}

namespace {

// b with x == 1 - q^b, if any.
std::optional<long> one_minus_power(const LaurentPoly& x) {
  if (x.is_zero()) return 0;
  if (x.size() != 2) return std::nullopt;
  const auto& t = x.terms();
  for (int i = 0; i < 2; ++i) {
    const auto& one = t[i];
    const auto& other = t[1 - i];
    if (one.exp == 0 && one.coeff == 1 && other.coeff == -1) return other.exp;
  }
  return std::nullopt;
}

}  // namespace

BracketFit derive_ind_bracket(long n_max) {
  BracketFit fit;
  FamilyParams p;
  for (long N = 2; N <= n_max; ++N) {
    const RatFunc sum = partial_sum_univariate(FamilyId::T_MAIN3, p, N - 1);
    const LaurentPoly a = q_poch_univariate(1, 2, N - 1);
    const LaurentPoly b = q_poch_univariate(2, 2, N - 1);
    const RatFunc ratio = sum * RatFunc(b * b, a * a) - RatFunc(LaurentPoly::monomial(1, 2 * N - 2));
    // ratio == 2[x] iff ratio * (1 - q) / 2 == 1 - q^x
    const RatFunc y = ratio * RatFunc(LaurentPoly::binomial(1).scaled(Rational(1, 2)));
    std::optional<long> x;
    if (y.is_polynomial()) x = one_minus_power(y.num());
    fit.per_n.push_back(x ? *x : LONG_MIN);
  }
  if (fit.per_n.size() < 2 || fit.per_n[0] == LONG_MIN || fit.per_n[1] == LONG_MIN) return fit;
  fit.slope = fit.per_n[1] - fit.per_n[0];
  fit.offset = fit.per_n[0] - 2 * fit.slope;
  fit.found = true;
  for (std::size_t i = 0; i < fit.per_n.size(); ++i)
    if (fit.per_n[i] != fit.slope * static_cast<long>(i + 2) + fit.offset) fit.found = false;
  return fit;
}

bool check_closed_form(FamilyId id, long n) {
  FamilyParams p;
  p.n = n;
  if (id == FamilyId::CF_D3A) p.d = 3;
  return closed_form(id, p) == closed_form_sum(id, p);
}

QIntSquareDetail ind_closed_form_qint_square(long N, long n, CycloCache& cache) {
  if (N < 2) throw PreconditionError("CF_IND needs N > 1");
  QIntSquareDetail out;
  out.holds = true;
  const LaurentPoly bracket = qint_poly(2 * N - 2).scaled(2) + LaurentPoly::monomial(1, 2 * N - 2);
  for (long d : divisors(n)) {
    if (d == 1) continue;
    // Phi_d divides 1 - q^m exactly once when d | m.
    long v = val_phi(bracket, d, cache);
    for (long j = 0; j < N - 1; ++j) {
      if ((2 * j + 1) % d == 0) v += 2;
      if ((2 * j + 2) % d == 0) v -= 2;
    }
    if (v < 0) out.den_coprime = false;
    if (v < 2) out.holds = false;
    out.per_divisor.emplace_back(d, Valuation::finite(v));
  }
  out.holds = out.holds && out.den_coprime;
  return out;
}

std::string andrews_str(const AndrewsInstance& in) {
  std::ostringstream os;
  os << "m=" << in.m << " N=" << in.N << " base=q^" << in.base_exp << " a=q^" << in.a << " b=(";
  for (std::size_t i = 0; i < in.b.size(); ++i) os << (i ? "," : "") << "q^" << in.b[i];
  os << ") c=(";
  for (std::size_t i = 0; i < in.c.size(); ++i) os << (i ? "," : "") << "q^" << in.c[i];
  os << ")";
  return os.str();
}

AndrewsTally check_andrews(long m, long N, long want, std::uint64_t seed, long range, long max_tries) {
  AndrewsTally tally;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> exp(-range, range);
  std::uniform_int_distribution<long> base(1, 2);
  while (tally.equal + tally.unequal < want && tally.tried < max_tries) {
    ++tally.tried;
    AndrewsInstance in;
    in.m = m;
    in.N = N;
    in.base_exp = base(rng);
    do in.a = exp(rng);
    while (in.a == 0);
    for (long i = 0; i < m; ++i) {
      in.b.push_back(exp(rng));
      in.c.push_back(exp(rng));
    }
    try {
      const RatFunc lhs = andrews_side(in, AndrewsSide::Left);
      const RatFunc rhs = andrews_side(in, AndrewsSide::Right);
      if (lhs == rhs) {
        ++tally.equal;
      } else {
        ++tally.unequal;
        tally.failures.push_back(in);
      }
    } catch (const DegenerateInstance&) {
      ++tally.degenerate;
    }
  }
  return tally;
}

}  // namespace qcong
