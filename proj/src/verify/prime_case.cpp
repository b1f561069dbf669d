#include <qcong/errors.hpp>
#include <qcong/verify.hpp>

#include <climits>

namespace qcong {

namespace {

struct PrimeCase {
  long m = 0;
  long residue = 0;  // p = residue (mod m)
  std::vector<Rational> args;
};

PrimeCase prime_case_of(FamilyId conj, long d) {
  PrimeCase pc;
  long sign = 1;
  bool odd = false;
  switch (conj) {
    case FamilyId::C_123: break;
    case FamilyId::C_N123: sign = -1; break;
    case FamilyId::C_135: odd = true; break;
    case FamilyId::C_N135:
      odd = true;
      sign = -1;
      break;
    default: throw PreconditionError("prime case defined for C_123, C_N123, C_135, C_N135 only");
  }
  FamilyParams p;
  p.d = d;
  validate(conj, p);
  pc.m = odd ? d * d : d * (d + 1) / 2;
  pc.residue = sign > 0 ? pc.m - 1 : 1;
  for (long i = 1; i <= d; ++i) pc.args.push_back(make_rational(Integer(sign * (odd ? 2 * i - 1 : i)), Integer(pc.m)));
  return pc;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

long padic_valuation(const Rational& x, long p) {
  if (sgn(x) == 0) return LONG_MAX;
  const Integer P = p;
  long v = 0;
  Integer num = x.get_num(), den = x.get_den();
  while (mpz_divisible_p(num.get_mpz_t(), P.get_mpz_t())) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t());
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t())) {
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    --v;
  }
  return v;
}

bool prime_case_applies(FamilyId conj, long d, long p) {
  try {
    const PrimeCase pc = prime_case_of(conj, d);
    return is_prime(p) && p % pc.m == pc.residue % pc.m;
  } catch (const InvalidParams&) {
    return false;
  }
}

bool check_prime_case(FamilyId conj, long d, long p) {
  const PrimeCase pc = prime_case_of(conj, d);
  if (!is_prime(p)) throw PreconditionError("check_prime_case: p must be prime");
  if (p % pc.m != pc.residue % pc.m) throw PreconditionError("check_prime_case: p outside the residue class");
  // sum_{k<p} prod_i (x_i)_k / k!^d
  Rational term = 1, sum = 1;
  for (long k = 1; k < p; ++k) {
    for (const auto& x : pc.args) term *= x + (k - 1);
    Integer kd;
    mpz_ui_pow_ui(kd.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(pc.args.size()));
    term /= kd;
    sum += term;
  }
  return padic_valuation(sum, p) >= 2;
}

}  // namespace qcong
