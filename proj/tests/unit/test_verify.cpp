#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcong/errors.hpp>
#include <qcong/verify.hpp>

using namespace qcong;

namespace {

FamilyParams params(long d, std::optional<long> r = std::nullopt) {
  FamilyParams p;
  p.d = d;
  p.r = r;
  return p;
}

CongruenceReport run_first(FamilyId id, const FamilyParams& p, long n, long exponent = 0) {
  for (const auto& c : claims_for(id, p))
    if (c.applies(n) && (exponent == 0 || c.exponent == exponent)) return run_claim(c, n);
  FAIL("no claim for n = " << n);
  return {};
}

}  // namespace

TEST_CASE("Phi_n-power congruences") {
  CHECK(check_phi_power(FamilyId::T_GUO5, params(0), 4, 2).verdict == Verdict::Pass);
  CHECK(check_phi_power(FamilyId::T_MAIN1, params(5), 7, 3).verdict == Verdict::Pass);
  CHECK(check_phi_power(FamilyId::T_MAIN4, params(0), 4, 2).verdict == Verdict::Pass);

  const auto small = check_phi_power(FamilyId::T_MAIN1, params(5), 2, 3);
  CHECK(small.verdict == Verdict::Pass);
  CHECK(small.observed.reaches(4));

  // exponent one above what holds
  const auto over = check_phi_power(FamilyId::T_MAIN4, params(0), 4, 5, {Backend::Full});
  CHECK(over.verdict == Verdict::Fail);
}

TEST_CASE("backends agree") {
  for (long n : {4L, 9L, 14L}) {
    const auto full = check_phi_power(FamilyId::T_MAIN1, params(5), n, 2, {Backend::Full});
    const auto res = check_phi_power(FamilyId::T_MAIN1, params(5), n, 2, {Backend::Residue});
    const auto both = check_phi_power(FamilyId::T_MAIN1, params(5), n, 2, {Backend::Both});
    CHECK(full.verdict == Verdict::Pass);
    CHECK(res.verdict == Verdict::Pass);
    CHECK(both.verdict == Verdict::Pass);
    CHECK(full.observed.value >= res.observed.value);
  }
}

TEST_CASE("[n]^2 congruences") {
  CHECK(check_qint_square(3, Truncation::NMinus1).verdict == Verdict::Pass);
  CHECK(check_qint_square(5, Truncation::HalfNPlus1).verdict == Verdict::Pass);
  CHECK(check_qint_square(9, Truncation::NMinus1).verdict == Verdict::Pass);
  CHECK(check_qint_square(9, Truncation::NMinus1, {Backend::Residue}).verdict == Verdict::Pass);
}

TEST_CASE("parametric congruences") {
  CHECK(check_bivar_vanish(FamilyId::P_A1, params(5), 4).verdict == Verdict::Pass);
  CHECK(check_bivar_vanish(FamilyId::P_M1, params(4, 1), 3).verdict == Verdict::Pass);
  CHECK(check_bivar_phi(FamilyId::P_B2, params(3), 2).verdict == Verdict::Pass);
  const auto a2 = check_bivar_phi(FamilyId::P_A2, params(5), 2);
  CHECK(a2.verdict == Verdict::Pass);
  CHECK(a2.required == 3);
}

TEST_CASE("d = 3 parametric sum does not vanish at a = q^4") {
  // Recorded counterexample: for d = 3 the a = q^{+-n} roots are absent,
  // although the a-coefficients still vanish modulo Phi_n.
  const auto rep = check_bivar_phi(FamilyId::P_A2, params(3), 4);
  CHECK(rep.verdict == Verdict::Fail);
  CHECK(rep.observed.value == 1);
  const RatFunc at_root = specialize_a(FamilyId::P_A2, [] {
    FamilyParams p;
    p.d = 3;
    p.n = 4;
    return p;
  }(), 3, 4);
  CHECK_FALSE(at_root.is_zero());
}

TEST_CASE("lemmas in the residue ring") {
  CHECK(check_lemma(Lemma::L22, 3, 4, 0));
  CHECK(check_lemma(Lemma::L22, 5, 7, 1));
  CHECK(check_lemma(Lemma::L32, 3, 2, 0));
  CHECK_THROWS_AS(lemma_k_max(Lemma::L22, 3, 5), PreconditionError);
}

TEST_CASE("q-binomial vanishing") {
  CHECK(check_qbino(2, 0));
  CHECK(check_qbino(3, 2));
  CHECK(check_qbino(1, 0));
}

TEST_CASE("prime cases") {
  CHECK(prime_case_applies(FamilyId::C_N123, 2, 7));
  CHECK(check_prime_case(FamilyId::C_N123, 2, 7));
  CHECK(check_prime_case(FamilyId::C_123, 3, 5));
  CHECK(check_prime_case(FamilyId::C_N135, 2, 5));
  CHECK_FALSE(prime_case_applies(FamilyId::C_123, 3, 7));
  CHECK(padic_valuation(make_rational(Integer(50), Integer(3)), 5) == 2);
  CHECK(padic_valuation(make_rational(Integer(2), Integer(25)), 5) == -2);
}

TEST_CASE("conjecture measurements") {
  const auto r1 = run_first(FamilyId::C_REFINE1, params(5), 4);
  CHECK(r1.observed.reaches(3));
  CHECK(run_first(FamilyId::C_N135, params(2), 5).observed.reaches(2));
  CHECK(run_first(FamilyId::C_L1, params(2, 2), 5).observed.reaches(2));
  CHECK(run_first(FamilyId::C_L4, params(2, 1), 5).observed.reaches(2));
  for (long n : {6L, 11L}) CHECK(run_first(FamilyId::C_REFINE2, params(5), n).observed.reaches(3));
}

TEST_CASE("bracket of the inductive closed form") {
  const BracketFit fit = derive_ind_bracket(8);
  REQUIRE(fit.found);
  CHECK(fit.slope == 2);
  CHECK(fit.offset == -2);
  for (long N = 2; N <= 10; ++N) CHECK(check_closed_form(FamilyId::CF_IND, N));
  for (long n : {3L, 5L, 9L}) {
    CHECK(ind_closed_form_qint_square(n, n).holds);
    CHECK(ind_closed_form_qint_square((n + 3) / 2, n).holds);
  }
}

TEST_CASE("Andrews tallies") {
  const AndrewsTally t = check_andrews(2, 2, 5, 1);
  CHECK(t.equal >= 5);
  CHECK(t.unequal == 0);
}
