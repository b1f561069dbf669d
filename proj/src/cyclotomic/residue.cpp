#include <qcong/errors.hpp>
#include <qcong/residue.hpp>

namespace qcong {

namespace {

std::shared_ptr<const LaurentPoly> modulus(long n, long e, CycloCache& cache) {
  if (e < 1) throw DomainError("residue exponent must be >= 1");
  if (n < 1) throw DomainError("cyclotomic index must be >= 1");
  LaurentPoly m(1);
  const LaurentPoly& p = cache.phi(n);
  for (long i = 0; i < e; ++i) m *= p;
  return std::make_shared<const LaurentPoly>(std::move(m));
}

LaurentPoly reduce(const LaurentPoly& x, const LaurentPoly& mod) {
  if (x.is_zero() || x.max_exp() < mod.max_exp()) return x;
  return divrem(x, mod).second;
}

// u with u*x = 1 mod `mod`, or nullopt when gcd(x, mod) != 1.
std::optional<LaurentPoly> inverse_mod(const LaurentPoly& x, const LaurentPoly& mod) {
  LaurentPoly old_r = x, r = mod;
  LaurentPoly old_s(1), s;
  while (!r.is_zero()) {
    auto [quot, rem] = divrem(old_r, r);
    old_r = std::exchange(r, std::move(rem));
    LaurentPoly next = old_s - quot * s;
    old_s = std::exchange(s, std::move(next));
  }
  if (old_r.is_zero() || !old_r.is_constant()) return std::nullopt;
  return reduce(old_s.scaled(1 / old_r.coeff(0)), mod);
}

// Reduction of a Laurent polynomial: q^-1 is a unit modulo Phi_n^e.
LaurentPoly reduce_laurent(const LaurentPoly& x, const LaurentPoly& mod) {
  if (x.is_ordinary()) return reduce(x, mod);
  const long s = -x.min_exp();
  auto inv = inverse_mod(reduce(LaurentPoly::monomial(1, s), mod), mod);
  return reduce(reduce(x.shifted(s), mod) * *inv, mod);
}

}  // namespace

Residue::Residue(long n, long e, const LaurentPoly& rep, CycloCache& cache)
    : n_(n), e_(e), mod_(modulus(n, e, cache)) {
  rep_ = reduce_laurent(rep, *mod_);
}

bool Residue::is_unit() const { return !rep_.is_zero() && inverse_mod(rep_, *mod_).has_value(); }

void Residue::check_compatible(const Residue& y) const {
  if (n_ != y.n_ || e_ != y.e_) throw DomainError("residues from different quotient rings");
}

Residue Residue::operator-() const { return Residue(n_, e_, mod_, -rep_); }

Residue& Residue::operator+=(const Residue& y) {
  check_compatible(y);
  rep_ += y.rep_;
  return *this;
}

Residue& Residue::operator-=(const Residue& y) {
  check_compatible(y);
  rep_ -= y.rep_;
  return *this;
}

Residue& Residue::operator*=(const Residue& y) {
  check_compatible(y);
  rep_ = reduce(rep_ * y.rep_, *mod_);
  return *this;
}

std::string Residue::str() const {
  return rep_.str() + " mod Phi_" + std::to_string(n_) + "^" + std::to_string(e_);
}

Residue res_inv(const Residue& x) {
  auto inv = x.rep_.is_zero() ? std::nullopt : inverse_mod(x.rep_, *x.mod_);
  if (!inv) throw NonUnitError("residue is not a unit modulo Phi_" + std::to_string(x.n_));
  return Residue(x.n_, x.e_, x.mod_, std::move(*inv));
}

Residue res_from_rf(const RatFunc& x, long n, long e, CycloCache& cache) {
  Residue num(n, e, x.num(), cache);
  if (x.den().is_constant()) return num;
  Residue den(n, e, x.den(), cache);
  if (!den.is_unit()) throw NonUnitError("denominator is divisible by Phi_" + std::to_string(n));
  return num * res_inv(den);
}

}  // namespace qcong
