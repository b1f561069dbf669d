#include <qcong/cyclotomic.hpp>
#include <qcong/errors.hpp>

#include <fstream>
#include <sstream>
#include <thread>

namespace qcong {

const CycloCache::Entry& CycloCache::entry(long n) {
  if (n < 1) throw DomainError("cyclotomic index must be >= 1, got " + std::to_string(n));
  {
    std::lock_guard lock(mutex_);
    auto it = table_.find(n);
    if (it != table_.end()) return it->second;
  }
  std::optional<detail::ZPoly> coeffs = load(n);
  if (!coeffs) {
    detail::ZPoly p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    for (long d : divisors(n)) {
      if (d == n) continue;
      auto [quot, rem] = detail::divrem_monic(p, entry(d).dense);
      if (!rem.empty()) throw InexactDivision("cyclotomic division left a remainder");
      p = std::move(quot);
    }
    coeffs = std::move(p);
    store(n, *coeffs);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = table_.try_emplace(n);
  if (inserted) {
    it->second.poly = LaurentPoly::from_dense(*coeffs);
    it->second.dense = std::move(*coeffs);
  }
  return it->second;
}

const LaurentPoly& CycloCache::phi(long n) { return entry(n).poly; }
const detail::ZPoly& CycloCache::phi_dense(long n) { return entry(n).dense; }

std::size_t CycloCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

std::optional<detail::ZPoly> CycloCache::load(long n) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(*dir_ / ("phi_" + std::to_string(n) + ".txt"));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  std::istringstream fields(line);
  long stored_n = 0;
  if (!(fields >> stored_n) || stored_n != n) return std::nullopt;
  detail::ZPoly coeffs;
  std::string tok;
  while (fields >> tok) {
    Integer c;
    if (c.set_str(tok, 10) != 0) return std::nullopt;
    coeffs.push_back(c);
  }
  if (static_cast<long>(coeffs.size()) != euler_phi(n) + 1 || coeffs.back() != 1) return std::nullopt;
  return coeffs;
}

void CycloCache::store(long n, const detail::ZPoly& coeffs) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto target = *dir_ / ("phi_" + std::to_string(n) + ".txt");
  std::ostringstream tag;
  tag << std::this_thread::get_id();
  const auto tmp = *dir_ / ("phi_" + std::to_string(n) + ".txt.tmp." + tag.str());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << n;
    for (const auto& c : coeffs) out << ' ' << c.get_str();
    out << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

CycloCache& default_cache() {
  static CycloCache cache;
  return cache;
}

LaurentPoly phi(long n, CycloCache& cache) { return cache.phi(n); }

LaurentPoly qint_poly(long m) {
  std::vector<LaurentPoly::Term> terms;
  if (m >= 0)
    for (long i = 0; i < m; ++i) terms.push_back({i, Rational(1)});
  else
    for (long i = m; i < 0; ++i) terms.push_back({i, Rational(-1)});
  return LaurentPoly::from_terms(std::move(terms));
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string Valuation::str() const {
  switch (kind) {
    case Kind::Infinite: return "inf";
    case Kind::AtLeast: return ">=" + std::to_string(value);
    case Kind::Finite: break;
  }
  return std::to_string(value);
}

long val_phi(const LaurentPoly& x, long n, CycloCache& cache) {
  if (x.is_zero()) throw UndefinedInput("valuation of the zero polynomial");
  const auto s = x.to_scaled();
  const auto& m = cache.phi_dense(n);
  return detail::valuation_monic(s.ints, m, static_cast<long>(s.ints.size()));
}

Valuation val_phi(const RatFunc& x, long n, CycloCache& cache) {
  if (x.is_zero()) return Valuation::infinite();
  if (n < 1) throw DomainError("cyclotomic index must be >= 1");
  long v = val_phi(x.num(), n, cache);
  if (!x.den().is_constant()) v -= val_phi(x.den(), n, cache);
  return Valuation::finite(v);
}

QIntSquareDetail qint_square_detail(const RatFunc& x, long n, CycloCache& cache) {
  QIntSquareDetail out;
  out.holds = true;
  for (long d : divisors(n)) {
    if (d == 1) continue;
    const Valuation v = val_phi(x, d, cache);
    if (v.kind == Valuation::Kind::Finite && v.value < 0) out.den_coprime = false;
    if (!v.reaches(2)) out.holds = false;
    out.per_divisor.emplace_back(d, v);
  }
  out.holds = out.holds && out.den_coprime;
  return out;
}

bool val_qint_square(const RatFunc& x, long n, CycloCache& cache) { return qint_square_detail(x, n, cache).holds; }

}  // namespace qcong
