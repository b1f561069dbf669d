#include <qcong/cyclo_jet.hpp>
#include <qcong/detail/sum_engine.hpp>

#include <stdexcept>

namespace qcong {

namespace {

// Reduce v (length n, read as a polynomial in zeta) modulo phi in place.
void reduce_row(Integer* v, long n, const detail::ZPoly& phi) {
  const long deg = static_cast<long>(phi.size()) - 1;
  for (long i = n - 1; i >= deg; --i) {
    if (sgn(v[i]) == 0) continue;
    const Integer c = v[i];
    for (long j = 0; j <= deg; ++j) mpz_submul(v[i - deg + j].get_mpz_t(), c.get_mpz_t(), phi[j].get_mpz_t());
  }
}

bool row_is_zero(const Integer* v, long n) {
  for (long j = 0; j < n; ++j)
    if (sgn(v[j]) != 0) return false;
  return true;
}

}  // namespace

CycloJet::CycloJet(long n, long cap, CycloCache& cache) : n_(n), cap_(cap), phi_(&cache.phi_dense(n)) {
  if (n < 2) throw DomainError("local arithmetic requires n >= 2");
}

long CycloJet::order(const Factor& f) const {
  if (f.a_exp != 0) throw std::logic_error("CycloJet received a factor depending on a");
  if (f.q_exp == 0) return detail::kZeroOrder;
  return f.q_exp % n_ == 0 ? 1 : 0;
}

long CycloJet::bracket_order(long m) const { return order({0, m}); }

bool CycloJet::set_precision(long vmin) {
  rows_ = cap_ - vmin;
  return rows_ > 0;
}

CycloJet::Elem CycloJet::one() const {
  Elem x = zero();
  x[0] = 1;
  return x;
}

void CycloJet::series_of_power(long m, long skip, std::vector<Integer>& coeff, std::vector<long>& rot_out) const {
  coeff.assign(rows_, Integer(0));
  rot_out.assign(rows_, 0);
  Integer c = 1;  // C(m, i)
  for (long i = 0; i < rows_ + skip; ++i) {
    if (i > 0) {
      c *= m - i + 1;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    }
    if (i < skip) continue;
    coeff[i - skip] = c;
    rot_out[i - skip] = rot(m - i);
  }
}

void CycloJet::mul_series(Elem& x, const std::vector<Integer>& coeff, const std::vector<long>& rots, long constant) const {
  Elem y = zero();
  std::vector<bool> live(rows_);
  for (long r = 0; r < rows_; ++r) live[r] = !row_is_zero(&x[r * n_], n_);
  for (long r = 0; r < rows_; ++r) {
    Integer* dst = &y[r * n_];
    for (long i = 0; i <= r; ++i) {
      const long src_row = r - i;
      if (!live[src_row]) continue;
      const Integer* src = &x[src_row * n_];
      const Integer& c = coeff[i];
      if (sgn(c) != 0) {
        const long s = rots[i];
        for (long j = 0; j < n_; ++j) {
          if (sgn(src[j]) == 0) continue;
          long k = j + s;
          if (k >= n_) k -= n_;
          mpz_addmul(dst[k].get_mpz_t(), c.get_mpz_t(), src[j].get_mpz_t());
        }
      }
      if (i == 0 && constant != 0)
        for (long j = 0; j < n_; ++j)
          if (sgn(src[j]) != 0) mpz_addmul_ui(dst[j].get_mpz_t(), src[j].get_mpz_t(), constant);
    }
  }
  x = std::move(y);
}

void CycloJet::mul_factor(Elem& x, const Factor& f) const {
  const long m = f.q_exp;
  const bool stripped = m % n_ == 0;
  std::vector<Integer> coeff;
  std::vector<long> rots;
  series_of_power(m, stripped ? 1 : 0, coeff, rots);
  for (auto& c : coeff) c = -c;
  mul_series(x, coeff, rots, stripped ? 0 : 1);
}

void CycloJet::mul_monomial(Elem& x, long e) const {
  std::vector<Integer> coeff;
  std::vector<long> rots;
  series_of_power(e, 0, coeff, rots);
  mul_series(x, coeff, rots, 0);
}

CycloJet::Elem CycloJet::times_bracket(const Elem& x, long m) const {
  Elem y = x;
  mul_factor(y, {0, m});
  return y;
}

void CycloJet::mul_t(Elem& x, long s) const {
  if (s == 0) return;
  for (long r = rows_ - 1; r >= 0; --r) {
    for (long j = 0; j < n_; ++j) {
      if (r >= s)
        x[r * n_ + j] = x[(r - s) * n_ + j];
      else
        x[r * n_ + j] = 0;
    }
  }
}

void CycloJet::add(Elem& x, const Elem& y) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) x[i] += y[i];
}

void CycloJet::tidy(Elem& x) const {
  for (long r = 0; r < rows_; ++r) reduce_row(&x[r * n_], n_, *phi_);
}

long CycloJet::order_of(const Elem& x) const {
  Elem y = x;
  tidy(y);
  for (long r = 0; r < rows_; ++r)
    if (!row_is_zero(&y[r * n_], n_)) return r;
  return rows_;
}

CycloAPoly::CycloAPoly(long n, CycloCache& cache) : n_(n), phi_(&cache.phi_dense(n)) {
  if (n < 2) throw DomainError("local arithmetic requires n >= 2");
}

long CycloAPoly::order(const Factor& f) const {
  return f.a_exp == 0 && f.q_exp % n_ == 0 ? detail::kZeroOrder : 0;
}

long CycloAPoly::bracket_order(long m) const { return m % n_ == 0 ? detail::kZeroOrder : 0; }

CycloAPoly::Elem CycloAPoly::one() const {
  Elem x;
  x.rows.assign(1, std::vector<Integer>(n_));
  x.rows[0][0] = 1;
  return x;
}

void CycloAPoly::mul_factor(Elem& x, const Factor& f) const {
  if (x.rows.empty()) return;
  const long len = static_cast<long>(x.rows.size());
  const long amin = std::min(x.amin, x.amin + f.a_exp);
  const long amax = std::max(x.amin + len - 1, x.amin + len - 1 + f.a_exp);
  std::vector<std::vector<Integer>> out(amax - amin + 1, std::vector<Integer>(n_));
  const long s = rot(f.q_exp);
  for (long i = 0; i < len; ++i) {
    const auto& src = x.rows[i];
    auto& keep = out[x.amin + i - amin];
    auto& moved = out[x.amin + i + f.a_exp - amin];
    for (long j = 0; j < n_; ++j) {
      if (sgn(src[j]) == 0) continue;
      keep[j] += src[j];
      long k = j + s;
      if (k >= n_) k -= n_;
      moved[k] -= src[j];
    }
  }
  x.amin = amin;
  x.rows = std::move(out);
}

void CycloAPoly::mul_monomial(Elem& x, long e) const {
  const long s = rot(e);
  if (s == 0) return;
  for (auto& row : x.rows) std::rotate(row.rbegin(), row.rbegin() + s, row.rend());
}

CycloAPoly::Elem CycloAPoly::times_bracket(const Elem& x, long m) const {
  Elem y = x;
  mul_factor(y, {0, m});
  return y;
}

void CycloAPoly::add(Elem& x, const Elem& y) const {
  if (y.rows.empty()) return;
  if (x.rows.empty()) {
    x = y;
    return;
  }
  const long xl = static_cast<long>(x.rows.size()), yl = static_cast<long>(y.rows.size());
  const long amin = std::min(x.amin, y.amin);
  const long amax = std::max(x.amin + xl, y.amin + yl);
  if (amin < x.amin) x.rows.insert(x.rows.begin(), x.amin - amin, std::vector<Integer>(n_));
  x.rows.resize(amax - amin, std::vector<Integer>(n_));
  x.amin = amin;
  for (long i = 0; i < yl; ++i) {
    auto& dst = x.rows[y.amin + i - amin];
    for (long j = 0; j < n_; ++j)
      if (sgn(y.rows[i][j]) != 0) dst[j] += y.rows[i][j];
  }
}

void CycloAPoly::tidy(Elem& x) const {
  for (auto& row : x.rows) reduce_row(row.data(), n_, *phi_);
  std::size_t lo = 0;
  while (lo < x.rows.size() && row_is_zero(x.rows[lo].data(), n_)) ++lo;
  if (lo == x.rows.size()) {
    x.rows.clear();
    x.amin = 0;
    return;
  }
  std::size_t hi = x.rows.size();
  while (row_is_zero(x.rows[hi - 1].data(), n_)) --hi;
  x.rows.erase(x.rows.begin() + hi, x.rows.end());
  x.rows.erase(x.rows.begin(), x.rows.begin() + lo);
  x.amin += static_cast<long>(lo);
}

bool CycloAPoly::is_zero(const Elem& x) const {
  Elem y = x;
  tidy(y);
  return y.rows.empty();
}

}  // namespace qcong
