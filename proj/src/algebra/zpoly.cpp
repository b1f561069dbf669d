#include <qcong/detail/zpoly.hpp>

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace qcong::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kSchoolbookCutoff = 32;

std::size_t max_bits(const ZPoly& p) {
  std::size_t bits = 0;
  for (const auto& c : p)
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::size_t bit_length(std::size_t v) {
  std::size_t bits = 0;
  while (v != 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

// Evaluate p at 2^(GMP_NUMB_BITS * slot_limbs); coefficients must fit in a slot.
Integer pack(const ZPoly& p, std::size_t slot_limbs) {
  std::vector<mp_limb_t> pos(p.size() * slot_limbs, 0);
  std::vector<mp_limb_t> neg(p.size() * slot_limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpz_srcptr z = p[i].get_mpz_t();
    const std::size_t n = mpz_size(z);
    assert(n <= slot_limbs);
    auto& dst = sgn(p[i]) < 0 ? neg : pos;
    if (sgn(p[i]) < 0) any_neg = true;
    for (std::size_t l = 0; l < n; ++l) dst[i * slot_limbs + l] = mpz_getlimbn(z, l);
  }
  Integer result;
  mpz_import(result.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (any_neg) {
    Integer n;
    mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
    result -= n;
  }
  return result;
}

ZPoly unpack(const Integer& value, std::size_t count, std::size_t slot_limbs) {
  ZPoly out(count);
  const int sign = sgn(value);
  if (sign == 0) return out;
  const mpz_srcptr z = value.get_mpz_t();
  const std::size_t size = mpz_size(z);
  const mp_limb_t* limbs = mpz_limbs_read(z);
  Integer half, full;
  mpz_setbit(full.get_mpz_t(), slot_limbs * GMP_NUMB_BITS);
  mpz_setbit(half.get_mpz_t(), slot_limbs * GMP_NUMB_BITS - 1);
  bool carry = false;
  Integer u;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t lo = i * slot_limbs;
    if (lo < size) {
      const std::size_t n = std::min(slot_limbs, size - lo);
      mpz_import(u.get_mpz_t(), n, -1, sizeof(mp_limb_t), 0, 0, limbs + lo);
    } else {
      u = 0;
    }
    if (carry) u += 1;
    if (u >= half) {
      u -= full;
      carry = true;
    } else {
      carry = false;
    }
    out[i] = sign > 0 ? u : Integer(-u);
  }
  assert(!carry);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

using PPoly = std::vector<u64>;

void trim_p(PPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

PPoly reduce_p(const ZPoly& a, u64 p) {
  PPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim_p(out);
  return out;
}

// r <- r mod b (b nonzero, trimmed)
void rem_p(PPoly& r, const PPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv_lc = invmod(b.back(), p);
  while (r.size() > db) {
    const u64 c = mulmod(r.back(), inv_lc, p);
    const std::size_t shift = r.size() - 1 - db;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) {
        const u64 t = mulmod(c, b[j], p);
        u64& dst = r[shift + j];
        dst = dst >= t ? dst - t : dst + p - t;
      }
    r.pop_back();
    trim_p(r);
  }
}

PPoly gcd_p(PPoly a, PPoly b, u64 p) {
  while (!b.empty()) {
    rem_p(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

class PrimeStream {
 public:
  PrimeStream() { mpz_setbit(current_.get_mpz_t(), 62); }
  u64 next() {
    mpz_nextprime(current_.get_mpz_t(), current_.get_mpz_t());
    return mpz_get_ui(current_.get_mpz_t());
  }

 private:
  Integer current_;
};

ZPoly symmetric_lift(const ZPoly& g, const Integer& modulus) {
  const Integer half = modulus / 2;
  ZPoly out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] > half ? Integer(g[i] - modulus) : g[i];
  return out;
}

void normalize_sign(ZPoly& p) {
  if (!p.empty() && sgn(p.back()) < 0)
    for (auto& c : p) c = -c;
}

}  // namespace

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t bits =
      max_bits(a) + max_bits(b) + bit_length(std::min(a.size(), b.size())) + 2;
  const std::size_t slot_limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  const Integer product = pack(a, slot_limbs) * pack(b, slot_limbs);
  ZPoly out = unpack(product, a.size() + b.size() - 1, slot_limbs);
  trim(out);
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (std::min(a.size(), b.size()) < kSchoolbookCutoff) return mul_schoolbook(a, b);
  return mul_kronecker(a, b);
}

std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& m) {
  assert(!m.empty() && m.back() == 1);
  const long dm = degree(m);
  if (degree(a) < dm) return {ZPoly{}, a};
  ZPoly r = a;
  ZPoly q(a.size() - m.size() + 1);
  for (long i = degree(a); i >= dm; --i) {
    if (sgn(r[i]) == 0) continue;
    const Integer c = r[i];
    q[i - dm] = c;
    for (long j = 0; j <= dm; ++j) mpz_submul(r[i - dm + j].get_mpz_t(), c.get_mpz_t(), m[j].get_mpz_t());
  }
  trim(r);
  trim(q);
  return {std::move(q), std::move(r)};
}

ZPoly rem_monic(const ZPoly& a, const ZPoly& m) {
  const long dm = degree(m);
  if (degree(a) < dm) return a;
  ZPoly r = a;
  for (long i = degree(a); i >= dm; --i) {
    if (sgn(r[i]) == 0) continue;
    const Integer c = r[i];
    for (long j = 0; j <= dm; ++j) mpz_submul(r[i - dm + j].get_mpz_t(), c.get_mpz_t(), m[j].get_mpz_t());
  }
  trim(r);
  return r;
}

std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b) {
  assert(!b.empty());
  if (a.empty()) return ZPoly{};
  const long db = degree(b);
  if (degree(a) < db) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lc = b.back();
  Integer c;
  for (long i = degree(a); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (long i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  trim(q);
  return q;
}

bool exact_div_binomial(ZPoly& a, long m) {
  assert(m >= 1);
  if (a.empty()) return true;
  const long da = degree(a);
  if (da < m) return false;
  const long dq = da - m;
  ZPoly q(dq + 1);
  for (long i = 0; i <= dq; ++i) {
    q[i] = a[i];
    if (i >= m) q[i] += q[i - m];
  }
  for (long i = dq + 1; i <= da; ++i) {
    Integer expected = -q[i - m];
    if (i <= dq) expected += q[i];
    if (expected != a[i]) return false;
  }
  a = std::move(q);
  return true;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return {};
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly gcd_primitive(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = primitive_part(a_in);
  ZPoly b = primitive_part(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  if (degree(b) == 0) return ZPoly{Integer(1)};
  if (a == b) return a;
  if (auto q = exact_div(a, b)) return b;

  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  PrimeStream primes;
  long current_degree = degree(b) + 1;
  ZPoly acc;  // residues in [0, modulus)
  Integer modulus;
  ZPoly last_lift;
  for (;;) {
    const u64 p = primes.next();
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
    PPoly g = gcd_p(reduce_p(a, p), reduce_p(b, p), p);
    const long dg = static_cast<long>(g.size()) - 1;
    if (dg == 0) return ZPoly{Integer(1)};
    if (dg > current_degree) continue;
    const u64 gamma_p = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = mulmod(c, gamma_p, p);
    if (dg < current_degree) {
      current_degree = dg;
      acc.assign(g.size(), Integer(0));
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = Integer(static_cast<unsigned long>(g[i]));
      modulus = Integer(static_cast<unsigned long>(p));
      last_lift.clear();
      continue;
    }
    const u64 m_inv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const u64 ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      const u64 diff = g[i] >= ai ? g[i] - ai : g[i] + p - ai;
      const u64 t = mulmod(diff, m_inv, p);
      acc[i] += modulus * Integer(static_cast<unsigned long>(t));
    }
    modulus *= Integer(static_cast<unsigned long>(p));
    ZPoly lift = symmetric_lift(acc, modulus);
    if (lift == last_lift) {
      ZPoly candidate = primitive_part(lift);
      if (exact_div(b, candidate) && exact_div(a, candidate)) {
        normalize_sign(candidate);
        return candidate;
      }
    }
    last_lift = std::move(lift);
  }
}

long valuation_monic(ZPoly a, const ZPoly& m, long cap) {
  long v = 0;
  while (v < cap && !a.empty()) {
    auto [q, r] = divrem_monic(a, m);
    if (!r.empty()) break;
    a = std::move(q);
    ++v;
  }
  return v;
}

}  // namespace qcong::detail
