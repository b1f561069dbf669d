#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcong/catalog.hpp>
#include <qcong/errors.hpp>

using namespace qcong;
using LP = LaurentPoly;

namespace {

Rational frac(long a, long b) { return make_rational(Integer(a), Integer(b)); }

FamilyParams params(long d, long n, std::optional<long> r = std::nullopt) {
  FamilyParams p;
  p.d = d;
  p.n = n;
  p.r = r;
  return p;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (FamilyId id : all_families()) {
    auto parsed = parse_family(family_name(id));
    REQUIRE(parsed);
    CHECK(*parsed == id);
  }
  CHECK_FALSE(parse_family("T_NOPE"));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(FamilyId::T_MAIN1, params(4, 0)), InvalidParams);
  CHECK_NOTHROW(validate(FamilyId::T_MAIN1, params(5, 0)));
  CHECK_THROWS_AS(validate(FamilyId::T_MORE1, params(4, 0)), InvalidParams);
  for (FamilyId id : all_families()) {
    FamilyParams p = example_params(id);
    if (is_closed_form(id)) p.n = 2;
    CHECK_NOTHROW(validate(id, p));
  }
  CHECK_THROWS_AS(validate(FamilyId::CF_IND, params(0, 1)), InvalidParams);
}

TEST_CASE("single terms") {
  const BiRatFunc t = term(FamilyId::T_MAIN3, params(0, 3), 1);
  const RatFunc expected(LP(1), LP{{0, 1}, {1, 2}, {2, 1}});
  CHECK(t == BiRatFunc(expected));
  CHECK(t.eval(1, 2) == frac(1, 9));

  CHECK(term(FamilyId::T_MAIN1, params(5, 4), 0) == BiRatFunc(1));
  CHECK(term(FamilyId::T_MAIN2, params(3, 4), 0) == BiRatFunc(RatFunc(LP{{-1, -1}})));
}

TEST_CASE("truncated sums") {
  CHECK(partial_sum_univariate(FamilyId::T_MAIN3, params(0, 3), 2).eval(2) == frac(2254, 2025));
  CHECK(partial_sum_univariate(FamilyId::T_MAIN4, params(0, 2), 1).eval(2) == frac(52, 49));
  for (FamilyId id : {FamilyId::T_MAIN1, FamilyId::T_MORE2, FamilyId::C_L3}) {
    const FamilyParams p = example_params(id);
    CHECK(partial_sum(id, p, 0) == term(id, p, 0));
  }
}

TEST_CASE("closed forms at q = 2") {
  CHECK(closed_form(FamilyId::CF_IND2, params(0, 2)).eval(1, 2) == frac(52, 49));
  CHECK(closed_form_sum(FamilyId::CF_IND2, params(0, 2)).eval(1, 2) == frac(52, 49));
  CHECK(closed_form(FamilyId::CF_Q4, params(0, 2)).eval(1, 2) == frac(232, 225));
  CHECK(closed_form_sum(FamilyId::CF_Q4, params(0, 2)).eval(1, 2) == frac(232, 225));
  CHECK(closed_form(FamilyId::CF_D3A, params(3, 1)).eval(3, 2) == frac(-1, 2));
  CHECK(closed_form_sum(FamilyId::CF_D3A, params(3, 1)).eval(3, 2) == frac(-1, 2));
}

TEST_CASE("closed forms equal their sums") {
  for (long n = 1; n <= 8; ++n) {
    CHECK(closed_form(FamilyId::CF_IND2, params(0, n)) == closed_form_sum(FamilyId::CF_IND2, params(0, n)));
    CHECK(closed_form(FamilyId::CF_Q4, params(0, n)) == closed_form_sum(FamilyId::CF_Q4, params(0, n)));
    CHECK(closed_form(FamilyId::CF_D3A, params(3, n)) == closed_form_sum(FamilyId::CF_D3A, params(3, n)));
  }
  for (long N = 2; N <= 10; ++N)
    CHECK(closed_form(FamilyId::CF_IND, params(0, N)) == closed_form_sum(FamilyId::CF_IND, params(0, N)));
}

TEST_CASE("substituting a = q^m") {
  // (q^{1-(d-1)n}; q^d)_k vanishes for k > 3 when d = 5, n = 4
  const FamilyParams p = params(5, 4);
  const RatFunc whole = specialize_a(FamilyId::P_A1, p, p.n - 1, -4);
  CHECK(whole.is_zero());
  CHECK(term(FamilyId::P_A1, p, 4).subst_a(-4).is_zero());

  // the d = 3, n = 4 sum at a = q^4 stops after k = 1
  const FamilyParams p2 = params(3, 4);
  const RatFunc two_terms = specialize_a(FamilyId::P_A2, p2, 1, 4);
  CHECK(specialize_a(FamilyId::P_A2, p2, 3, 4) == two_terms);
  CHECK(term(FamilyId::P_A2, p2, 2).subst_a(4).is_zero());

  const BiRatFunc t = term(FamilyId::T_MAIN1, params(5, 4), 2);
  CHECK(t.subst_a(0) == t.subst_a(3));
}

TEST_CASE("claims") {
  const auto main1 = claims_for(FamilyId::T_MAIN1, params(5, 0));
  REQUIRE(main1.size() == 2);
  CHECK(main1[0].exponent == 2);
  CHECK(main1[1].exponent == 3);
  CHECK(main1[0].status == ClaimStatus::Theorem);
  for (long n : {4L, 9L}) CHECK(main1[0].applies(n));
  for (long n : {2L, 7L, 12L}) CHECK(main1[1].applies(n));
  CHECK_FALSE(main1[0].applies(7));

  const auto refine = claims_for(FamilyId::C_REFINE1, params(5, 0));
  REQUIRE(refine.size() == 2);
  CHECK(refine[0].exponent == 3);
  CHECK(refine[1].exponent == 4);
  CHECK(refine[0].status == ClaimStatus::Conjecture);

  const auto main2 = claims_for(FamilyId::T_MAIN2, params(3, 0));
  bool cubic_for_one_mod_three = false;
  for (const auto& c : main2)
    if (c.exponent == 3 && c.applies(4)) cubic_for_one_mod_three = true;
  CHECK(cubic_for_one_mod_three);

  const auto main3 = claims_for(FamilyId::T_MAIN3, params(0, 0));
  REQUIRE(main3.size() == 2);
  CHECK(main3[0].kind == ModulusKind::QIntSquare);
  CHECK(main3[0].applies(9));
  CHECK_FALSE(main3[0].applies(8));

  CHECK(claims_for(FamilyId::P_A2, params(5, 0))[0].kind == ModulusKind::PhiTimesBivar);
  CHECK(claims_for(FamilyId::P_A1, params(5, 0))[0].kind == ModulusKind::BivarProduct);
}

TEST_CASE("Andrews transformation instances") {
  AndrewsInstance trivial;
  trivial.m = 1;
  trivial.N = 0;
  trivial.a = 1;
  trivial.b = {3};
  trivial.c = {5};
  CHECK(andrews_side(trivial, AndrewsSide::Left) == RatFunc(1));
  CHECK(andrews_side(trivial, AndrewsSide::Right) == RatFunc(1));

  // a = q, b = q^2 makes aq/b = 1, so (aq/b; q)_1 vanishes in a denominator
  AndrewsInstance degenerate;
  degenerate.m = 1;
  degenerate.N = 1;
  degenerate.a = 1;
  degenerate.b = {2};
  degenerate.c = {3};
  CHECK_THROWS_AS(andrews_side(degenerate, AndrewsSide::Left), DegenerateInstance);

  AndrewsInstance one = degenerate;
  one.b = {4};
  one.c = {-3};
  CHECK(andrews_side(one, AndrewsSide::Left) == andrews_side(one, AndrewsSide::Right));

  AndrewsInstance two;
  two.m = 2;
  two.N = 2;
  two.a = 1;
  two.b = {-4, -3};
  two.c = {-3, -4};
  CHECK(andrews_side(two, AndrewsSide::Left) == andrews_side(two, AndrewsSide::Right));
}

TEST_CASE("registry dump mentions every family") {
  const std::string dump = dump_catalog();
  for (FamilyId id : all_families()) CHECK(dump.find(family_name(id)) != std::string::npos);
}
