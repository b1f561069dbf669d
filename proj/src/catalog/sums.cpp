#include <qcong/catalog.hpp>
#include <qcong/cyclotomic.hpp>
#include <qcong/detail/exact_rings.hpp>
#include <qcong/errors.hpp>

namespace qcong {

namespace {

BiLaurent poch_product(const std::vector<PochSpec>& specs, long k) {
  BiLaurent out(1);
  for (const auto& s : specs) {
    const BiLaurent f = q_poch(s.arg, s.base_exp, k);
    for (long i = 0; i < s.power; ++i) out *= f;
  }
  return out;
}

void check_upto(long upto) {
  if (upto < 0) throw PreconditionError("truncation index must be >= 0");
}

}  // namespace

BiRatFunc term(FamilyId id, const FamilyParams& p, long k) {
  if (k < 0) throw PreconditionError("term index must be >= 0");
  const Recipe rc = recipe(id, p);
  BiLaurent num = poch_product(rc.num, k).shifted(0, rc.q_slope * k);
  if (rc.has_bracket) num *= BiLaurent(qint_poly(rc.bracket_arg(k)));
  const BiLaurent den = poch_product(rc.den, k);
  if (den.is_zero()) throw DegenerateInstance(std::string(family_name(id)) + ": denominator vanishes at k = " + std::to_string(k));
  return BiRatFunc(num, den);
}

BiRatFunc partial_sum(FamilyId id, const FamilyParams& p, long upto) {
  check_upto(upto);
  const Recipe rc = recipe(id, p);
  if (rc.is_a_free()) {
    detail::LaurentRing ring;
    auto parts = detail::accumulate(ring, rc, upto, true);
    return BiRatFunc(BiLaurent(parts.num), BiLaurent(parts.den));
  }
  detail::BiLaurentRing ring;
  auto parts = detail::accumulate(ring, rc, upto, true);
  return BiRatFunc(parts.num, parts.den);
}

RatFunc partial_sum_univariate(FamilyId id, const FamilyParams& p, long upto) {
  check_upto(upto);
  const Recipe rc = recipe(id, p);
  if (!rc.is_a_free()) throw PreconditionError(std::string(family_name(id)) + ": sum depends on a");
  detail::LaurentRing ring;
  auto parts = detail::accumulate(ring, rc, upto, true);
  return RatFunc(parts.num, parts.den);
}

RatFunc specialize_a(FamilyId id, const FamilyParams& p, long upto, long m) {
  check_upto(upto);
  FamilyParams live = p;
  live.parametric = true;
  const Recipe rc = recipe(id, live).specialized(m);
  detail::LaurentRing ring;
  auto parts = detail::accumulate(ring, rc, upto, true);
  return RatFunc(parts.num, parts.den);
}

RatFunc ind_closed_form(long N, long bracket_arg) {
  if (N < 2) throw InvalidParams("CF_IND: hypothesis violated: N > 1");
  const LaurentPoly num = q_poch_univariate(1, 2, N - 1);
  const LaurentPoly den = q_poch_univariate(2, 2, N - 1);
  const LaurentPoly bracket = qint_poly(bracket_arg).scaled(2) + LaurentPoly::monomial(1, 2 * N - 2);
  return RatFunc(num * num * bracket, den * den);
}

BiRatFunc closed_form(FamilyId id, const FamilyParams& p) {
  validate(id, p);
  const long n = p.n;
  switch (id) {
    case FamilyId::CF_IND: return BiRatFunc(ind_closed_form(n, 2 * n - 2));
    case FamilyId::CF_IND2:
    case FamilyId::CF_Q4: {
      const long b = id == FamilyId::CF_IND2 ? 3 : 4;
      const long s = b - 1;  // second numerator argument: q^2 or q^3
      const LaurentPoly lead = LaurentPoly(2) + LaurentPoly::monomial(1, b * n) - LaurentPoly::monomial(1, 1) -
                               LaurentPoly::monomial(1, s) - LaurentPoly::monomial(1, b * n - b);
      const LaurentPoly num = lead * q_poch_univariate(1, b, n - 1) * q_poch_univariate(s, b, n - 1);
      const LaurentPoly base = q_poch_univariate(b, b, n - 1);
      const LaurentPoly den = LaurentPoly::binomial(1) * LaurentPoly::binomial(s) * base * base;
      return BiRatFunc(RatFunc(num, den));
    }
    case FamilyId::CF_D3A: {
      const BiLaurent num = BiLaurent(qint_poly(3 * n - 2) * qint_poly(3 * n - 4)) * q_poch({1, 2}, 3, n - 1) *
                            q_poch({-1, 2}, 3, n - 1) * q_poch({0, -1}, 3, n - 1);
      const BiLaurent den = q_poch({1, 3}, 3, n - 1) * q_poch({-1, 3}, 3, n - 1) * q_poch({0, 3}, 3, n - 1);
      return BiRatFunc(num, den);
    }
    default: throw PreconditionError(std::string(family_name(id)) + " is not a closed-form family");
  }
}

BiRatFunc closed_form_sum(FamilyId id, const FamilyParams& p) {
  validate(id, p);
  return partial_sum(id, p, p.n - 1);
}

}  // namespace qcong
