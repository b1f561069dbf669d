#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcong/cyclotomic.hpp>
#include <qcong/errors.hpp>
#include <qcong/residue.hpp>

#include <filesystem>
#include <random>

using namespace qcong;
using LP = LaurentPoly;

TEST_CASE("cyclotomic polynomials") {
  CHECK(phi(1) == LP{{1, 1}, {0, -1}});
  CHECK(phi(2) == LP{{1, 1}, {0, 1}});
  CHECK(phi(6) == LP{{2, 1}, {1, -1}, {0, 1}});
  CHECK_THROWS_AS(phi(0), DomainError);

  // q^n - 1 is the product over divisors
  for (long n = 1; n <= 60; ++n) {
    LP prod(1);
    for (long d : divisors(n)) prod *= phi(d);
    CHECK(prod == LP{{n, 1}, {0, -1}});
    CHECK(phi(n).max_exp() == euler_phi(n));
  }
  CHECK(phi(105).coeff(7) == -2);
}

TEST_CASE("q-integers") {
  CHECK(qint_poly(3) == LP{{0, 1}, {1, 1}, {2, 1}});
  CHECK(qint_poly(0).is_zero());
  CHECK(qint_poly(-1) == LP{{-1, -1}});
  CHECK(qint_poly(-3) * LP{{0, 1}, {1, -1}} == LP{{0, 1}, {-3, -1}});
}

TEST_CASE("Phi_n valuations") {
  const LP p4 = phi(4);
  const RatFunc x(p4 * p4 * LP{{0, 1}, {1, 1}}, LP{{0, 1}, {1, 1}, {2, 1}});
  CHECK(val_phi(x, 4) == Valuation::finite(2));

  const LP one_minus_q4{{0, 1}, {4, -1}};
  const RatFunc y(one_minus_q4 * one_minus_q4, LP{{0, 1}, {2, -1}});
  CHECK(val_phi(y, 4) == Valuation::finite(2));

  CHECK(val_phi(RatFunc(LP(1), phi(3)), 3) == Valuation::finite(-1));
  CHECK(val_phi(RatFunc(0), 3) == Valuation::infinite());
  CHECK(val_phi(LP{{12, 1}, {0, -1}}, 6) == 1);
}

TEST_CASE("valuation is additive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> n_dist(1, 30), e_dist(0, 3), c_dist(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const long n = n_dist(rng);
    LP f = LP{{0, 1}, {1, c_dist(rng)}, {3, 1}};
    LP g = LP{{0, 2}, {2, c_dist(rng)}, {1, 1}};
    const long ef = e_dist(rng), eg = e_dist(rng);
    for (long k = 0; k < ef; ++k) f *= phi(n);
    for (long k = 0; k < eg; ++k) g *= phi(n);
    CHECK(val_phi(f * g, n) == val_phi(f, n) + val_phi(g, n));
  }
}

TEST_CASE("[n]^2 divisibility") {
  const LP p3 = phi(3);
  CHECK(val_qint_square(RatFunc(p3 * p3), 3));
  CHECK_FALSE(val_qint_square(RatFunc(p3), 3));

  const LP q9 = qint_poly(9);
  const auto detail = qint_square_detail(RatFunc(q9 * q9, LP{{0, 1}, {1, 1}}), 9);
  CHECK(detail.holds);
  REQUIRE(detail.per_divisor.size() == 2);
  CHECK(detail.per_divisor[0].first == 3);
  CHECK(detail.per_divisor[1].first == 9);

  const auto bad = qint_square_detail(RatFunc(q9 * q9 * q9, p3 * p3 * p3 * p3), 9);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.den_coprime);
}

TEST_CASE("residues modulo Phi_n^e") {
  CHECK(res_from_rf(RatFunc(LP{{5, 1}}), 5, 1).rep() == LP(1));
  CHECK(res_from_rf(RatFunc(LP(1), LP{{0, 1}, {1, 1}}), 3, 1).rep() == LP{{1, -1}});

  const Residue r = res_from_rf(RatFunc(phi(3)), 3, 2);
  CHECK_FALSE(r.is_zero());
  CHECK(r.rep() == phi(3));
  CHECK(res_from_rf(RatFunc(phi(3)), 3, 1).is_zero());

  CHECK_THROWS_AS(res_from_rf(RatFunc(LP(1), phi(3)), 3, 1), NonUnitError);
}

TEST_CASE("residue inverses") {
  const Residue one_plus_q = res_from_rf(RatFunc(LP{{0, 1}, {1, 1}}), 3, 1);
  CHECK(res_inv(one_plus_q).rep() == LP{{1, -1}});
  const Residue one = res_from_rf(RatFunc(1), 7, 2);
  CHECK(res_inv(one) == one);

  for (long n : {4L, 7L, 9L, 12L}) {
    for (long e : {1L, 2L, 3L}) {
      const Residue x = res_from_rf(RatFunc(LP{{1, 1}}), n, e);
      const Residue inv = res_inv(x);
      CHECK((x * inv).rep() == LP(1));
    }
  }
  CHECK_THROWS_AS(res_inv(res_from_rf(RatFunc(phi(5)), 5, 2)), NonUnitError);
}

TEST_CASE("disk cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "qcong_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    CycloCache cache(dir);
    CHECK(cache.phi(30) == phi(30));
    CHECK(cache.phi(91) == phi(91));
  }
  CHECK(std::filesystem::exists(dir / "phi_30.txt"));
  {
    CycloCache reloaded(dir);
    CHECK(reloaded.phi(30) == phi(30));
    CHECK(reloaded.phi(91) == phi(91));
  }
  std::filesystem::remove_all(dir);
}
