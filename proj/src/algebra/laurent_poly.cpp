#include <qcong/errors.hpp>
#include <qcong/laurent_poly.hpp>

#include <algorithm>
#include <sstream>

namespace qcong {

namespace {

using Term = LaurentPoly::Term;

constexpr std::size_t kSortProductLimit = 4096;
constexpr std::size_t kMergeSideLimit = 12;
constexpr long kDenseSpanLimit = 50'000'000;

// a + sign*b for sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> combine_sorted(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  return out;
}

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

void require_ordinary(const LaurentPoly& p, const char* what) {
  if (!p.is_ordinary()) throw DomainError(std::string(what) + ": negative exponents in ordinary-polynomial operation");
}

// Dense rational long division for ordinary polynomials.
std::pair<std::vector<Rational>, std::vector<Rational>> dense_divrem(std::vector<Rational> r,
                                                                   const std::vector<Rational>& y) {
  const long dy = static_cast<long>(y.size()) - 1;
  const long dx = static_cast<long>(r.size()) - 1;
  if (dx < dy) return {{}, r};
  std::vector<Rational> quot(dx - dy + 1);
  const Rational inv_lc = 1 / y.back();
  for (long i = dx; i >= dy; --i) {
    if (sgn(r[i]) == 0) continue;
    const Rational c = r[i] * inv_lc;
    quot[i - dy] = c;
    for (long j = 0; j <= dy; ++j) r[i - dy + j] -= c * y[j];
  }
  r.resize(dy);
  return {quot, r};
}

std::vector<Rational> to_dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(p.max_exp() + 1);
  for (const auto& t : p.terms()) out[t.exp] = t.coeff;
  return out;
}

LaurentPoly from_dense_rational(const std::vector<Rational>& c) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) terms.push_back({static_cast<long>(i), c[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, Rational(c)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms) {
  std::vector<Term> raw;
  for (const auto& [e, c] : terms) raw.push_back({e, Rational(c)});
  terms_ = combine_sorted(std::move(raw));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  if (sgn(c) == 0) return {};
  return LaurentPoly(std::vector<Term>{{e, c}});
}

LaurentPoly LaurentPoly::binomial(Exponent m) {
  if (m == 0) return {};
  if (m > 0) return LaurentPoly(std::vector<Term>{{0, Rational(1)}, {m, Rational(-1)}});
  return LaurentPoly(std::vector<Term>{{m, Rational(-1)}, {0, Rational(1)}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) { return LaurentPoly(combine_sorted(std::move(terms))); }

LaurentPoly LaurentPoly::from_dense(const detail::ZPoly& coeffs, Exponent shift) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) terms.push_back({static_cast<Exponent>(i) + shift, Rational(coeffs[i])});
  return LaurentPoly(std::move(terms));
}

bool LaurentPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
}

Rational LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(Exponent s) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.exp += s;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::times_binomial(Exponent m) const {
  if (m == 0) return {};
  std::vector<Term> moved = terms_;
  for (auto& t : moved) t.exp += m;
  return LaurentPoly(merge(terms_, moved, -1));
}

LaurentPoly LaurentPoly::dilated(Exponent k) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp *= k;
  if (k < 0) std::reverse(out.begin(), out.end());
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& y) {
  terms_ = merge(terms_, y.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& y) {
  terms_ = merge(terms_, y.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& y) {
  *this = *this * y;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  if (small.size() * large.size() <= kSortProductLimit) {
    std::vector<Term> raw;
    raw.reserve(small.size() * large.size());
    for (const auto& a : small.terms_)
      for (const auto& b : large.terms_) raw.push_back({a.exp + b.exp, a.coeff * b.coeff});
    return LaurentPoly(combine_sorted(std::move(raw)));
  }
  const long span = (x.max_exp() - x.min_exp()) + (y.max_exp() - y.min_exp()) + 1;
  if (small.size() <= kMergeSideLimit || span > kDenseSpanLimit) {
    std::vector<Term> acc;
    for (const auto& a : small.terms_) {
      std::vector<Term> part = large.terms_;
      for (auto& t : part) {
        t.exp += a.exp;
        t.coeff *= a.coeff;
      }
      acc = merge(acc, part, +1);
    }
    return LaurentPoly(std::move(acc));
  }
  const auto sx = x.to_scaled();
  const auto sy = y.to_scaled();
  LaurentPoly::Scaled prod;
  prod.shift = sx.shift + sy.shift;
  prod.ints = detail::mul(sx.ints, sy.ints);
  prod.denom = sx.denom * sy.denom;
  return LaurentPoly::from_scaled(prod);
}

Rational LaurentPoly::eval(const Rational& point) const {
  if (terms_.empty()) return 0;
  if (sgn(point) == 0) {
    if (min_exp() < 0) throw PoleError("evaluation at 0 of a polynomial with negative exponents");
    return coeff(0);
  }
  Rational sum = 0;
  Rational power =
      min_exp() >= 0 ? rational_pow(point, min_exp()) : rational_pow(1 / point, static_cast<unsigned long>(-min_exp()));
  Exponent at = min_exp();
  for (const auto& t : terms_) {
    if (t.exp != at) {
      power *= rational_pow(point, static_cast<unsigned long>(t.exp - at));
      at = t.exp;
    }
    sum += t.coeff * power;
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (t.exp == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (t.exp != 1) os << "^" << t.exp;
  }
  return os.str();
}

LaurentPoly::Scaled LaurentPoly::to_scaled() const {
  Scaled s;
  if (terms_.empty()) return s;
  s.shift = min_exp();
  for (const auto& t : terms_) mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), t.coeff.get_den_mpz_t());
  s.ints.assign(max_exp() - min_exp() + 1, Integer(0));
  for (const auto& t : terms_) {
    Integer& dst = s.ints[t.exp - s.shift];
    mpz_divexact(dst.get_mpz_t(), s.denom.get_mpz_t(), t.coeff.get_den_mpz_t());
    dst *= t.coeff.get_num();
  }
  return s;
}

LaurentPoly LaurentPoly::from_scaled(const Scaled& s) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < s.ints.size(); ++i) {
    if (sgn(s.ints[i]) == 0) continue;
    terms.push_back({static_cast<Exponent>(i) + s.shift, s.denom == 1 ? Rational(s.ints[i]) : make_rational(s.ints[i], s.denom)});
  }
  return LaurentPoly(std::move(terms));
}

std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& x, const LaurentPoly& y) {
  if (y.is_zero()) throw DivisionByZero("polynomial division by zero");
  require_ordinary(x, "divrem");
  require_ordinary(y, "divrem");
  if (x.is_zero()) return {{}, {}};
  if (y.is_integral() && abs(y.leading_coeff()) == 1 && x.is_integral()) {
    const auto sx = x.to_scaled();
    const auto sy = y.to_scaled();
    detail::ZPoly xd(sx.shift, Integer(0));
    xd.insert(xd.end(), sx.ints.begin(), sx.ints.end());
    detail::ZPoly yd(sy.shift, Integer(0));
    yd.insert(yd.end(), sy.ints.begin(), sy.ints.end());
    const bool negate = sgn(yd.back()) < 0;
    if (negate)
      for (auto& c : yd) c = -c;
    auto [quot, rem] = detail::divrem_monic(xd, yd);
    if (negate)
      for (auto& c : quot) c = -c;
    return {LaurentPoly::from_dense(quot), LaurentPoly::from_dense(rem)};
  }
  auto [quot, rem] = dense_divrem(to_dense(x), to_dense(y));
  return {from_dense_rational(quot), from_dense_rational(rem)};
}

LaurentPoly monic(const LaurentPoly& x) {
  if (x.is_zero()) return x;
  return x.scaled(1 / x.leading_coeff());
}

LaurentPoly gcd(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() && y.is_zero()) throw UndefinedInput("gcd(0, 0) is undefined");
  if (y.is_zero()) return monic(x.shifted(-x.min_exp()));
  if (x.is_zero()) return monic(y.shifted(-y.min_exp()));
  const auto sx = x.to_scaled();
  const auto sy = y.to_scaled();
  detail::ZPoly g = detail::gcd_primitive(detail::primitive_part(sx.ints), detail::primitive_part(sy.ints));
  return monic(LaurentPoly::from_dense(g));
}

LaurentPoly exact_quotient(const LaurentPoly& x, const LaurentPoly& y) {
  auto [quot, rem] = divrem(x, y);
  if (!rem.is_zero()) throw InexactDivision("exact_quotient: nonzero remainder");
  return quot;
}

}  // namespace qcong
