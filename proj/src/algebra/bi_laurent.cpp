#include <qcong/bi_laurent.hpp>
#include <qcong/errors.hpp>

#include <algorithm>
#include <sstream>

namespace qcong {

namespace {

using Term = BiLaurent::Term;

bool lex_less(const Term& x, const Term& y) { return x.a != y.a ? x.a < y.a : x.q < y.q; }

std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, int sign) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && lex_less(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || lex_less(y[j], x[i])) {
      out.push_back({y[j].a, y[j].q, sign > 0 ? y[j].coeff : Rational(-y[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(x[i].coeff + y[j].coeff) : Rational(x[i].coeff - y[j].coeff);
      if (sgn(c) != 0) out.push_back({x[i].a, x[i].q, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BiLaurent::BiLaurent(long c) {
  if (c != 0) terms_.push_back({0, 0, Rational(c)});
}

BiLaurent::BiLaurent(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

BiLaurent::BiLaurent(const LaurentPoly& p) {
  terms_.reserve(p.size());
  for (const auto& t : p.terms()) terms_.push_back({0, t.exp, t.coeff});
}

BiLaurent BiLaurent::monomial(const Rational& c, long a_exp, long q_exp) {
  if (sgn(c) == 0) return {};
  return BiLaurent(std::vector<Term>{{a_exp, q_exp, c}});
}

BiLaurent BiLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), lex_less);
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().a == t.a && out.back().q == t.q)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  return BiLaurent(std::move(out));
}

bool BiLaurent::is_a_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.a == 0; });
}

long BiLaurent::min_q() const {
  long m = terms_.front().q;
  for (const auto& t : terms_) m = std::min(m, t.q);
  return m;
}

long BiLaurent::max_q() const {
  long m = terms_.front().q;
  for (const auto& t : terms_) m = std::max(m, t.q);
  return m;
}

BiLaurent BiLaurent::shifted(long da, long dq) const {
  BiLaurent out = *this;
  for (auto& t : out.terms_) {
    t.a += da;
    t.q += dq;
  }
  return out;
}

BiLaurent BiLaurent::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  BiLaurent out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

BiLaurent BiLaurent::times_binomial(long i, long j) const {
  if (i == 0 && j == 0) return {};
  return BiLaurent(merge(terms_, shifted(i, j).terms_, -1));
}

BiLaurent BiLaurent::operator-() const { return scaled(-1); }

BiLaurent& BiLaurent::operator+=(const BiLaurent& y) {
  terms_ = merge(terms_, y.terms_, +1);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& y) {
  terms_ = merge(terms_, y.terms_, -1);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& y) {
  *this = *this * y;
  return *this;
}

// Packs (a, q) into one exponent (a - amin) * W + (q - qmin) with W wide
// enough that the product's q-range never carries into the a-digit.
BiLaurent operator*(const BiLaurent& x, const BiLaurent& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_constant()) return y.scaled(x.terms_[0].coeff);
  if (y.is_constant()) return x.scaled(y.terms_[0].coeff);
  const long xa = x.min_a(), xq = x.min_q();
  const long ya = y.min_a(), yq = y.min_q();
  const long width = (x.max_q() - xq) + (y.max_q() - yq) + 1;
  auto pack = [width](const BiLaurent& p, long amin, long qmin) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms_) terms.push_back({(t.a - amin) * width + (t.q - qmin), t.coeff});
    return LaurentPoly::from_terms(std::move(terms));
  };
  const LaurentPoly prod = pack(x, xa, xq) * pack(y, ya, yq);
  std::vector<Term> out;
  out.reserve(prod.size());
  for (const auto& t : prod.terms()) out.push_back({t.exp / width + xa + ya, t.exp % width + xq + yq, t.coeff});
  return BiLaurent(std::move(out));
}

LaurentPoly BiLaurent::subst_a(long m) const {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({m * t.a + t.q, t.coeff});
  return LaurentPoly::from_terms(std::move(terms));
}

std::vector<std::pair<long, LaurentPoly>> BiLaurent::coeffs_in_a() const {
  std::vector<std::pair<long, LaurentPoly>> out;
  std::size_t i = 0;
  while (i < terms_.size()) {
    const long a = terms_[i].a;
    std::vector<LaurentPoly::Term> terms;
    for (; i < terms_.size() && terms_[i].a == a; ++i) terms.push_back({terms_[i].q, terms_[i].coeff});
    out.emplace_back(a, LaurentPoly::from_terms(std::move(terms)));
  }
  return out;
}

BiLaurent BiLaurent::from_coeffs_in_a(const std::vector<std::pair<long, LaurentPoly>>& coeffs) {
  std::vector<Term> terms;
  for (const auto& [a, c] : coeffs)
    for (const auto& t : c.terms()) terms.push_back({a, t.exp, t.coeff});
  return from_terms(std::move(terms));
}

LaurentPoly BiLaurent::to_laurent() const {
  if (!is_a_free()) throw DomainError("projection of a two-variable polynomial that depends on a");
  return subst_a(0);
}

Rational BiLaurent::eval(const Rational& a, const Rational& q) const {
  Rational sum = 0;
  for (const auto& [i, c] : coeffs_in_a()) {
    if (sgn(a) == 0 && i < 0) throw PoleError("evaluation at a = 0 with negative a-exponents");
    sum += c.eval(q) * LaurentPoly::monomial(1, i).eval(a);
  }
  return sum;
}

std::string BiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    c = abs(c);
    const bool bare = t.a == 0 && t.q == 0;
    if (bare || c != 1) os << c;
    if (bare) continue;
    if (c != 1) os << "*";
    if (t.a != 0) {
      os << "a";
      if (t.a != 1) os << "^" << t.a;
      if (t.q != 0) os << "*";
    }
    if (t.q != 0) {
      os << "q";
      if (t.q != 1) os << "^" << t.q;
    }
  }
  return os.str();
}

BiRatFunc::BiRatFunc(BiLaurent num, BiLaurent den) {
  if (den.is_zero()) throw DivisionByZero("two-variable rational function with zero denominator");
  if (num.is_zero()) {
    den_ = BiLaurent(1);
    return;
  }
  const long sa = -den.min_a();
  const long sq = -den.min_q();
  if (sa != 0 || sq != 0) {
    den = den.shifted(sa, sq);
    num = num.shifted(sa, sq);
  }
  Integer lcm_den = 1;
  Integer gcd_num = 0;
  for (const auto& t : den.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational factor = make_rational(lcm_den, gcd_num);
  if (sgn(den.lex_leading_coeff()) < 0) factor = -factor;
  if (factor != 1) {
    den = den.scaled(factor);
    num = num.scaled(factor);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

BiRatFunc BiRatFunc::operator-() const {
  BiRatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

BiRatFunc& BiRatFunc::operator+=(const BiRatFunc& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  if (den_ == y.den_) return *this = BiRatFunc(num_ + y.num_, den_);
  if (y.den_.is_constant()) return *this = BiRatFunc(num_ + y.num_ * den_, den_);
  if (den_.is_constant()) return *this = BiRatFunc(num_ * y.den_ + y.num_, y.den_);
  return *this = BiRatFunc(num_ * y.den_ + y.num_ * den_, den_ * y.den_);
}

BiRatFunc& BiRatFunc::operator-=(const BiRatFunc& y) { return *this += -y; }

BiRatFunc& BiRatFunc::operator*=(const BiRatFunc& y) {
  if (is_zero() || y.is_zero()) return *this = BiRatFunc();
  return *this = BiRatFunc(num_ * y.num_, den_ * y.den_);
}

BiRatFunc& BiRatFunc::operator/=(const BiRatFunc& y) {
  if (y.is_zero()) throw DivisionByZero("division by the zero two-variable rational function");
  return *this = BiRatFunc(num_ * y.den_, den_ * y.num_);
}

bool operator==(const BiRatFunc& x, const BiRatFunc& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.num_ * y.den_ == y.num_ * x.den_;
}

RatFunc BiRatFunc::subst_a(long m) const {
  LaurentPoly d = den_.subst_a(m);
  if (d.is_zero()) throw DegenerateInstance("denominator vanishes at a = q^" + std::to_string(m));
  return RatFunc(num_.subst_a(m), d);
}

Rational BiRatFunc::eval(const Rational& a, const Rational& q) const {
  const Rational d = den_.eval(a, q);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.eval(a, q) / d;
}

RatFunc BiRatFunc::to_ratfunc() const { return RatFunc(num_.to_laurent(), den_.to_laurent()); }

std::string BiRatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qcong
