#include <qcong/catalog.hpp>
#include <qcong/errors.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace qcong {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  std::string_view formula;
  std::string_view hypotheses;
  FamilyParams example;
};

FamilyParams ex(long d, std::optional<long> r = std::nullopt) {
  FamilyParams p;
  p.d = d;
  p.r = r;
  return p;
}

const std::array<FamilyInfo, 31>& registry() {
  static const std::array<FamilyInfo, 31> table{{
      {FamilyId::T_MAIN1, "T_MAIN1", "[2dk+1] (q;q^d)_k^d / (q^d;q^d)_k^d * q^(d(d-3)k/2)", "d odd, d >= 5", ex(5)},
      {FamilyId::T_MAIN2, "T_MAIN2", "[2dk-1] (q^-1;q^d)_k^d / (q^d;q^d)_k^d * q^(d(d-1)k/2)", "d odd, d >= 3; n > 1",
       ex(3)},
      {FamilyId::T_MAIN3, "T_MAIN3", "(q^-1;q^2)_k^2 / (q^2;q^2)_k^2 * q^(2k)", "n odd, n > 1", ex(0)},
      {FamilyId::T_MAIN4, "T_MAIN4", "(q^-1,q^-2;q^3)_k / (q^3;q^3)_k^2 * q^(3k)", "n >= 4, gcd(n,3) = 1", ex(0)},
      {FamilyId::T_GUO5, "T_GUO5", "[10k+1] (q;q^5)_k^5 / (q^5;q^5)_k^5 * q^(5k)", "none", ex(0)},
      {FamilyId::T_D1, "T_D1", "(q;q^d)_k^d / (q^d;q^d)_k^d * q^(dk)", "d >= 3", ex(3)},
      {FamilyId::T_D2, "T_D2", "(q^-1;q^d)_k^d / (q^d;q^d)_k^d * q^(dk)", "d >= 2", ex(2)},
      {FamilyId::T_MORE1, "T_MORE1", "(q^r,q^r,q^(d-2r);q^d)_k / (q^d;q^d)_k^3 * q^(dk)",
       "d >= 3, r != 0, |r| < d, 2r != +-d; n > 1, n >= d-r", ex(4, 1)},
      {FamilyId::T_MORE2, "T_MORE2", "(q^-r,q^-r,q^(2r-d);q^d)_k / (q^d;q^d)_k^3 * q^(dk)",
       "d >= 3, 0 < r < d, 2r != d; n >= d+r", ex(4, 1)},
      {FamilyId::T_SIX5, "T_SIX5", "(q,q,q^4;q^6)_k / (q^6;q^6)_k^3 * q^(6k)  [T_MORE1 with d=6, r=1]", "n > 1",
       ex(6, 1)},
      {FamilyId::T_SIX1, "T_SIX1", "(q^-1,q^-1,q^-4;q^6)_k / (q^6;q^6)_k^3 * q^(6k)  [T_MORE2 with d=6, r=1]", "n > 1",
       ex(6, 1)},
      {FamilyId::P_A1, "P_A1",
       "[2dk+1] prod_{j=d-1,d-3,..,2} (a^j q, a^-j q;q^d)_k (q;q^d)_k / prod_{j=d-2,..,1} (a^j q^d, a^-j q^d;q^d)_k "
       "(q^d;q^d)_k * q^(d(d-3)k/2)",
       "d odd, d >= 5", ex(5)},
      {FamilyId::P_A2, "P_A2",
       "[2dk+1] prod_{j=d-2,..,1} (a^j q, a^-j q;q^d)_k (q;q^d)_k / prod_{j=d-2,..,1} (a^j q^d, a^-j q^d;q^d)_k "
       "(q^d;q^d)_k * q^(d(d-3)k/2)",
       "d odd, d >= 3", ex(3)},
      {FamilyId::P_B1, "P_B1",
       "[2dk-1] prod_{j=d-1,..,2} (a^j q^-1, a^-j q^-1;q^d)_k (q^-1;q^d)_k / prod_{j=d-2,..,1} (a^j q^d, a^-j "
       "q^d;q^d)_k (q^d;q^d)_k * q^(d(d-1)k/2)",
       "d odd, d >= 3", ex(3)},
      {FamilyId::P_B2, "P_B2",
       "[2dk-1] prod_{j=d-2,..,1} (a^j q^-1, a^-j q^-1;q^d)_k (q^-1;q^d)_k / prod_{j=d-2,..,1} (a^j q^d, a^-j "
       "q^d;q^d)_k (q^d;q^d)_k * q^(d(d-1)k/2)",
       "d odd, d >= 3", ex(3)},
      {FamilyId::P_M1, "P_M1",
       "(a^(d-1) q^r, a^(1-d) q^r, q^(d-2r);q^d)_k / (a^(d-2) q^d, a^(2-d) q^d, q^d;q^d)_k * q^(dk)",
       "as T_MORE1", ex(4, 1)},
      {FamilyId::P_M2, "P_M2",
       "(a^(d-1) q^-r, a^(1-d) q^-r, q^(2r-d);q^d)_k / (a^(d-2) q^d, a^(2-d) q^d, q^d;q^d)_k * q^(dk)",
       "as T_MORE2", ex(4, 1)},
      {FamilyId::C_REFINE1, "C_REFINE1", "the T_MAIN1 sum, conjectured exponents 3 and 4", "d odd, d >= 5", ex(5)},
      {FamilyId::C_REFINE2, "C_REFINE2", "the T_MAIN2 sum, conjectured exponents 3 and 4", "d odd, d >= 5; n > 1",
       ex(5)},
      {FamilyId::C_123, "C_123", "(q,q^2,..,q^d;q^M)_k / (q^M;q^M)_k^d * q^(Mk), M = d(d+1)/2", "d >= 3; n > 1",
       ex(3)},
      {FamilyId::C_N123, "C_N123", "(q^-1,q^-2,..,q^-d;q^M)_k / (q^M;q^M)_k^d * q^(Mk), M = d(d+1)/2",
       "d >= 2; n > 1", ex(2)},
      {FamilyId::C_135, "C_135", "(q,q^3,..,q^(2d-1);q^M)_k / (q^M;q^M)_k^d * q^(Mk), M = d^2", "d >= 3; n > 1",
       ex(3)},
      {FamilyId::C_N135, "C_N135", "(q^-1,q^-3,..,q^(1-2d);q^M)_k / (q^M;q^M)_k^d * q^(Mk), M = d^2",
       "d >= 2; n > 1", ex(2)},
      {FamilyId::C_L1, "C_L1", "(q,q^2,..,q^d;q^M)_k^r / (q^M;q^M)_k^(dr) * q^(Mk), M = d(d+1)r/2",
       "d, r >= 1, dr >= 3; n > 1", ex(2, 2)},
      {FamilyId::C_L2, "C_L2", "(q^-1,q^-2,..,q^-d;q^M)_k^r / (q^M;q^M)_k^(dr) * q^(Mk), M = d(d+1)r/2",
       "d, r >= 1, dr >= 2; n > 1", ex(2, 1)},
      {FamilyId::C_L3, "C_L3", "(q,q^3,..,q^(2d-1);q^M)_k^r / (q^M;q^M)_k^(dr) * q^(Mk), M = d^2 r",
       "d, r >= 1, dr >= 3; n > 1", ex(2, 2)},
      {FamilyId::C_L4, "C_L4", "(q^-1,q^-3,..,q^(1-2d);q^M)_k^r / (q^M;q^M)_k^(dr) * q^(Mk), M = d^2 r",
       "d, r >= 1, dr >= 2; n > 1", ex(2, 1)},
      {FamilyId::CF_IND, "CF_IND",
       "sum_{k<N} T_MAIN3 term = (q;q^2)_{N-1}^2/(q^2;q^2)_{N-1}^2 * (2[2N-2] + q^(2N-2))", "N > 1", ex(0)},
      {FamilyId::CF_IND2, "CF_IND2",
       "sum_{k<n} T_MAIN4 term = (2+q^(3n)-q-q^2-q^(3n-3)) (q,q^2;q^3)_{n-1} / ((1-q)(1-q^2)(q^3;q^3)_{n-1}^2)",
       "n >= 1", ex(0)},
      {FamilyId::CF_D3A, "CF_D3A",
       "sum_{k<n} P_B2 term (d=3) = [3n-2][3n-4] (aq^2,q^2/a,q^-1;q^3)_{n-1} / (aq^3,q^3/a,q^3;q^3)_{n-1}", "n >= 1",
       ex(3)},
      {FamilyId::CF_Q4, "CF_Q4",
       "sum_{k<n} (q^-1,q^-3;q^4)_k/(q^4;q^4)_k^2 q^(4k) = (2+q^(4n)-q-q^3-q^(4n-4)) (q,q^3;q^4)_{n-1} / "
       "((1-q)(1-q^3)(q^4;q^4)_{n-1}^2)",
       "n >= 1", ex(0)},
  }};
  return table;
}

const FamilyInfo& info(FamilyId id) { return registry()[static_cast<std::size_t>(id)]; }

[[noreturn]] void bad(FamilyId id, const std::string& what) {
  throw InvalidParams(std::string(family_name(id)) + ": hypothesis violated: " + what);
}

long need_r(FamilyId id, const FamilyParams& p) {
  if (!p.r) bad(id, "parameter r is required");
  return *p.r;
}

PochSpec poch(long a, long q, long base, long power = 1) { return {MonomialArg{a, q}, base, power}; }

// prod_{j in js} (a^j x, a^-j x; q^d)_k
void add_pairs(std::vector<PochSpec>& out, long first, long last, long q_exp, long d) {
  for (long j = first; j >= last; j -= 2) {
    out.push_back(poch(j, q_exp, d));
    out.push_back(poch(-j, q_exp, d));
  }
}

Recipe parametric_main(long d, bool even_pairs, bool minus) {
  Recipe rc;
  const long x = minus ? -1 : 1;
  add_pairs(rc.num, even_pairs ? d - 1 : d - 2, even_pairs ? 2 : 1, x, d);
  rc.num.push_back(poch(0, x, d));
  add_pairs(rc.den, d - 2, 1, d, d);
  rc.den.push_back(poch(0, d, d));
  rc.has_bracket = true;
  rc.bracket_slope = 2 * d;
  rc.bracket_offset = minus ? -1 : 1;
  rc.q_slope = minus ? d * (d - 1) / 2 : d * (d - 3) / 2;
  return rc;
}

Recipe uniform(long arg, long d, long q_slope, std::optional<long> bracket_offset = std::nullopt) {
  Recipe rc;
  rc.num.push_back(poch(0, arg, d, d));
  rc.den.push_back(poch(0, d, d, d));
  rc.q_slope = q_slope;
  if (bracket_offset) {
    rc.has_bracket = true;
    rc.bracket_slope = 2 * d;
    rc.bracket_offset = *bracket_offset;
  }
  return rc;
}

Recipe more(long d, long r, bool minus, bool parametric) {
  Recipe rc;
  const long s = minus ? -r : r;
  const long third = minus ? 2 * r - d : d - 2 * r;
  if (parametric) {
    rc.num = {poch(d - 1, s, d), poch(1 - d, s, d), poch(0, third, d)};
    rc.den = {poch(d - 2, d, d), poch(2 - d, d, d), poch(0, d, d)};
  } else {
    rc.num = {poch(0, s, d, 2), poch(0, third, d)};
    rc.den = {poch(0, d, d, 3)};
  }
  rc.q_slope = d;
  return rc;
}

// (x_1,..,x_d; q^M)_k^power / (q^M;q^M)_k^(d*power) q^(Mk) with x_i = q^(sign*exps[i]).
Recipe conj_recipe(const std::vector<long>& exps, long sign, long M, long power) {
  Recipe rc;
  for (long e : exps) rc.num.push_back(poch(0, sign * e, M, power));
  rc.den.push_back(poch(0, M, M, static_cast<long>(exps.size()) * power));
  rc.q_slope = M;
  return rc;
}

std::vector<long> consecutive(long d) {
  std::vector<long> v(d);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::vector<long> odds(long d) {
  std::vector<long> v;
  for (long i = 1; i <= d; ++i) v.push_back(2 * i - 1);
  return v;
}

Recipe q4_recipe() {
  Recipe rc;
  rc.num = {poch(0, -1, 4), poch(0, -3, 4)};
  rc.den = {poch(0, 4, 4, 2)};
  rc.q_slope = 4;
  return rc;
}

ResidueCondition cond(long mult, long res, long mod) { return {mult, res, mod}; }

}  // namespace

std::string_view family_name(FamilyId id) { return info(id).name; }

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& f : registry())
    if (f.name == name) return f.id;
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& f : registry()) v.push_back(f.id);
    return v;
  }();
  return ids;
}

bool is_parametric_family(FamilyId id) {
  switch (id) {
    case FamilyId::P_A1:
    case FamilyId::P_A2:
    case FamilyId::P_B1:
    case FamilyId::P_B2:
    case FamilyId::P_M1:
    case FamilyId::P_M2:
    case FamilyId::CF_D3A: return true;
    default: return false;
  }
}

bool is_conjecture_family(FamilyId id) { return id >= FamilyId::C_REFINE1 && id <= FamilyId::C_L4; }
bool is_closed_form(FamilyId id) { return id >= FamilyId::CF_IND; }

bool uses_r(FamilyId id) {
  switch (id) {
    case FamilyId::T_MORE1:
    case FamilyId::T_MORE2:
    case FamilyId::P_M1:
    case FamilyId::P_M2:
    case FamilyId::C_L1:
    case FamilyId::C_L2:
    case FamilyId::C_L3:
    case FamilyId::C_L4: return true;
    default: return false;
  }
}

bool uses_d(FamilyId id) {
  switch (id) {
    case FamilyId::T_MAIN3:
    case FamilyId::T_MAIN4:
    case FamilyId::T_GUO5:
    case FamilyId::T_SIX5:
    case FamilyId::T_SIX1:
    case FamilyId::CF_IND:
    case FamilyId::CF_IND2:
    case FamilyId::CF_D3A:
    case FamilyId::CF_Q4: return false;
    default: return true;
  }
}

FamilyParams example_params(FamilyId id) { return info(id).example; }

void validate(FamilyId id, const FamilyParams& p) {
  const long d = p.d;
  auto odd_at_least = [&](long lo) {
    if (d < lo || d % 2 == 0) bad(id, "d must be odd and >= " + std::to_string(lo) + " (got d=" + std::to_string(d) + ")");
  };
  auto at_least = [&](long lo) {
    if (d < lo) bad(id, "d >= " + std::to_string(lo) + " (got d=" + std::to_string(d) + ")");
  };
  switch (id) {
    case FamilyId::T_MAIN1:
    case FamilyId::P_A1:
    case FamilyId::C_REFINE1:
    case FamilyId::C_REFINE2: odd_at_least(5); break;
    case FamilyId::T_MAIN2:
    case FamilyId::P_A2:
    case FamilyId::P_B1:
    case FamilyId::P_B2: odd_at_least(3); break;
    case FamilyId::T_D1:
    case FamilyId::C_123:
    case FamilyId::C_135: at_least(3); break;
    case FamilyId::T_D2:
    case FamilyId::C_N123:
    case FamilyId::C_N135: at_least(2); break;
    case FamilyId::T_MORE1:
    case FamilyId::P_M1: {
      at_least(3);
      const long r = need_r(id, p);
      if (r == 0) bad(id, "r != 0");
      if (std::abs(r) >= d) bad(id, "|r| < d");
      if (2 * r == d || 2 * r == -d) bad(id, "2r != +-d");
      break;
    }
    case FamilyId::T_MORE2:
    case FamilyId::P_M2: {
      at_least(3);
      const long r = need_r(id, p);
      if (r <= 0 || r >= d) bad(id, "0 < r < d");
      if (2 * r == d) bad(id, "2r != d");
      break;
    }
    case FamilyId::C_L1:
    case FamilyId::C_L3:
    case FamilyId::C_L2:
    case FamilyId::C_L4: {
      const long r = need_r(id, p);
      if (d < 1 || r < 1) bad(id, "d, r >= 1");
      const long lo = (id == FamilyId::C_L1 || id == FamilyId::C_L3) ? 3 : 2;
      if (d * r < lo) bad(id, "dr >= " + std::to_string(lo));
      break;
    }
    case FamilyId::CF_IND:
      if (p.n < 2) bad(id, "N > 1");
      break;
    case FamilyId::CF_IND2:
    case FamilyId::CF_Q4:
    case FamilyId::CF_D3A:
      if (p.n < 1) bad(id, "n >= 1");
      break;
    default: break;
  }
}

Recipe recipe(FamilyId id, const FamilyParams& p) {
  validate(id, p);
  const long d = p.d;
  Recipe rc;
  switch (id) {
    case FamilyId::T_MAIN1:
    case FamilyId::C_REFINE1: return uniform(1, d, d * (d - 3) / 2, 1);
    case FamilyId::T_MAIN2:
    case FamilyId::C_REFINE2: return uniform(-1, d, d * (d - 1) / 2, -1);
    case FamilyId::T_MAIN3:
    case FamilyId::CF_IND:
      rc.num = {poch(0, -1, 2, 2)};
      rc.den = {poch(0, 2, 2, 2)};
      rc.q_slope = 2;
      return rc;
    case FamilyId::T_MAIN4:
    case FamilyId::CF_IND2:
      rc.num = {poch(0, -1, 3), poch(0, -2, 3)};
      rc.den = {poch(0, 3, 3, 2)};
      rc.q_slope = 3;
      return rc;
    case FamilyId::T_GUO5: return uniform(1, 5, 5, 1);
    case FamilyId::T_D1: return uniform(1, d, d);
    case FamilyId::T_D2: return uniform(-1, d, d);
    case FamilyId::T_MORE1: return more(d, *p.r, false, false);
    case FamilyId::T_MORE2: return more(d, *p.r, true, false);
    case FamilyId::T_SIX5: return more(6, 1, false, false);
    case FamilyId::T_SIX1: return more(6, 1, true, false);
    case FamilyId::P_A1: rc = parametric_main(d, true, false); break;
    case FamilyId::P_A2: rc = parametric_main(d, false, false); break;
    case FamilyId::P_B1: rc = parametric_main(d, true, true); break;
    case FamilyId::P_B2: rc = parametric_main(d, false, true); break;
    case FamilyId::CF_D3A: rc = parametric_main(3, false, true); break;
    case FamilyId::P_M1: rc = more(d, *p.r, false, true); break;
    case FamilyId::P_M2: rc = more(d, *p.r, true, true); break;
    case FamilyId::C_123: return conj_recipe(consecutive(d), 1, d * (d + 1) / 2, 1);
    case FamilyId::C_N123: return conj_recipe(consecutive(d), -1, d * (d + 1) / 2, 1);
    case FamilyId::C_135: return conj_recipe(odds(d), 1, d * d, 1);
    case FamilyId::C_N135: return conj_recipe(odds(d), -1, d * d, 1);
    case FamilyId::C_L1: return conj_recipe(consecutive(d), 1, d * (d + 1) * *p.r / 2, *p.r);
    case FamilyId::C_L2: return conj_recipe(consecutive(d), -1, d * (d + 1) * *p.r / 2, *p.r);
    case FamilyId::C_L3: return conj_recipe(odds(d), 1, d * d * *p.r, *p.r);
    case FamilyId::C_L4: return conj_recipe(odds(d), -1, d * d * *p.r, *p.r);
    case FamilyId::CF_Q4: return q4_recipe();
  }
  return p.parametric ? rc : rc.specialized(0);
}

void Recipe::step_factors(long j, std::vector<Factor>& num_out, std::vector<Factor>& den_out) const {
  for (const auto& s : num)
    for (long i = 0; i < s.power; ++i) num_out.push_back({s.arg.a_exp, s.arg.q_exp + (j - 1) * s.base_exp});
  for (const auto& s : den)
    for (long i = 0; i < s.power; ++i) den_out.push_back({s.arg.a_exp, s.arg.q_exp + (j - 1) * s.base_exp});
}

Recipe Recipe::specialized(long m) const {
  Recipe rc = *this;
  for (auto* list : {&rc.num, &rc.den})
    for (auto& s : *list) s.arg = MonomialArg{0, m * s.arg.a_exp + s.arg.q_exp};
  return rc;
}

bool Recipe::is_a_free() const {
  auto free = [](const PochSpec& s) { return s.arg.a_exp == 0; };
  return std::all_of(num.begin(), num.end(), free) && std::all_of(den.begin(), den.end(), free);
}

long Recipe::den_degree(long upto) const {
  long deg = 0;
  for (long j = 1; j <= upto; ++j)
    for (const auto& s : den) deg += s.power * std::abs(s.arg.q_exp + (j - 1) * s.base_exp);
  return deg;
}

std::string Recipe::str() const {
  std::ostringstream os;
  auto list = [&](const std::vector<PochSpec>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ", ";
      os << "(a^" << v[i].arg.a_exp << " q^" << v[i].arg.q_exp << "; q^" << v[i].base_exp << ")^" << v[i].power;
    }
    os << "]";
  };
  os << "num=";
  list(num);
  os << " den=";
  list(den);
  if (has_bracket) os << " bracket=[" << bracket_slope << "k" << (bracket_offset < 0 ? "" : "+") << bracket_offset << "]";
  os << " q_slope=" << q_slope;
  return os.str();
}

std::string_view modulus_name(ModulusKind k) {
  switch (k) {
    case ModulusKind::PhiPower: return "PhiPower";
    case ModulusKind::QIntSquare: return "QIntSquare";
    case ModulusKind::BivarProduct: return "BivarProduct";
    case ModulusKind::PhiTimesBivar: return "PhiTimesBivar";
  }
  return "?";
}

std::string_view truncation_name(Truncation t) { return t == Truncation::NMinus1 ? "n-1" : "(n+1)/2"; }

long truncation_upto(Truncation t, long n) { return t == Truncation::NMinus1 ? n - 1 : (n + 1) / 2; }

bool ResidueCondition::holds(long n) const {
  const long v = ((multiplier * n - residue) % modulus + modulus) % modulus;
  return v == 0;
}

std::string ResidueCondition::str() const {
  std::ostringstream os;
  if (multiplier != 1) os << multiplier;
  os << "n=" << residue << " mod " << modulus;
  return os.str();
}

bool Claim::applies(long n) const {
  if (n < n_min) return false;
  return std::any_of(any_of.begin(), any_of.end(), [n](const ResidueCondition& c) { return c.holds(n); });
}

std::string Claim::condition_str() const {
  std::string s;
  for (std::size_t i = 0; i < any_of.size(); ++i) {
    if (i) s += " or ";
    s += any_of[i].str();
  }
  return s + ", n>=" + std::to_string(n_min);
}

std::string Claim::modulus_str() const {
  switch (kind) {
    case ModulusKind::PhiPower: return "Phi_n^" + std::to_string(exponent);
    case ModulusKind::QIntSquare: return "[n]^2";
    case ModulusKind::BivarProduct: return "(1-aq^n)(a-q^n)";
    case ModulusKind::PhiTimesBivar: return "Phi_n(1-aq^n)(a-q^n)";
  }
  return "?";
}

std::vector<Claim> claims_for(FamilyId id, const FamilyParams& p) {
  if (is_closed_form(id)) return {};
  validate(id, p);
  const long d = p.d;
  std::vector<Claim> out;
  auto add = [&](ModulusKind kind, long e, std::vector<ResidueCondition> conds, long n_min = 2,
                 Truncation t = Truncation::NMinus1) {
    Claim c;
    c.family = id;
    c.params = p;
    c.params.n = 0;
    c.kind = kind;
    c.exponent = e;
    c.any_of = std::move(conds);
    c.n_min = n_min;
    c.truncation = t;
    c.status = is_conjecture_family(id) ? ClaimStatus::Conjecture : ClaimStatus::Theorem;
    out.push_back(std::move(c));
  };
  const auto phi = ModulusKind::PhiPower;
  switch (id) {
    case FamilyId::T_MAIN1:
      add(phi, 2, {cond(1, -1, d)});
      add(phi, 3, {cond(2, -1, d)});
      break;
    case FamilyId::T_MAIN2:
      add(phi, 2, {cond(1, 1, d)});
      add(phi, 3, {cond(2, 1, d)});
      if (d == 3) add(phi, 3, {cond(1, 1, 3)});
      break;
    case FamilyId::T_MAIN3:
      add(ModulusKind::QIntSquare, 2, {cond(1, 1, 2)}, 3, Truncation::NMinus1);
      add(ModulusKind::QIntSquare, 2, {cond(1, 1, 2)}, 3, Truncation::HalfNPlus1);
      break;
    case FamilyId::T_MAIN4: add(phi, 2, {cond(1, 1, 3), cond(1, 2, 3)}, 4); break;
    case FamilyId::T_GUO5: add(phi, 2, {cond(1, 4, 5)}); break;
    case FamilyId::T_D1: add(phi, 2, {cond(1, -1, d)}); break;
    case FamilyId::T_D2: add(phi, 2, {cond(1, 1, d)}); break;
    case FamilyId::T_MORE1: add(phi, 2, {cond(1, -*p.r, d)}, std::max(2L, d - *p.r)); break;
    case FamilyId::T_MORE2: add(phi, 2, {cond(1, *p.r, d)}, std::max(2L, d + *p.r)); break;
    case FamilyId::T_SIX5: add(phi, 2, {cond(1, 5, 6)}); break;
    case FamilyId::T_SIX1: add(phi, 2, {cond(1, 1, 6)}); break;
    case FamilyId::P_A1: add(ModulusKind::BivarProduct, 2, {cond(1, -1, d)}); break;
    case FamilyId::P_A2: add(ModulusKind::PhiTimesBivar, 3, {cond(2, -1, d)}); break;
    case FamilyId::P_B1: add(ModulusKind::BivarProduct, 2, {cond(1, 1, d)}); break;
    case FamilyId::P_B2: add(ModulusKind::PhiTimesBivar, 3, {cond(2, 1, d)}); break;
    case FamilyId::P_M1:
      add(ModulusKind::BivarProduct, 2, {cond(1, -*p.r, d)}, std::max(2L, d - *p.r));
      break;
    case FamilyId::P_M2: add(ModulusKind::BivarProduct, 2, {cond(1, *p.r, d)}, std::max(2L, d + *p.r)); break;
    case FamilyId::C_REFINE1:
      add(phi, 3, {cond(1, -1, d)});
      add(phi, 4, {cond(2, -1, d)});
      break;
    case FamilyId::C_REFINE2:
      add(phi, 3, {cond(1, 1, d)});
      add(phi, 4, {cond(2, 1, d)});
      break;
    case FamilyId::C_123: add(phi, 2, {cond(1, -1, d * (d + 1) / 2)}); break;
    case FamilyId::C_N123: add(phi, 2, {cond(1, 1, d * (d + 1) / 2)}); break;
    case FamilyId::C_135: add(phi, 2, {cond(1, -1, d * d)}); break;
    case FamilyId::C_N135: add(phi, 2, {cond(1, 1, d * d)}); break;
    case FamilyId::C_L1: add(phi, 2, {cond(1, -1, d * (d + 1) * *p.r / 2)}); break;
    case FamilyId::C_L2: add(phi, 2, {cond(1, 1, d * (d + 1) * *p.r / 2)}); break;
    case FamilyId::C_L3: add(phi, 2, {cond(1, -1, d * d * *p.r)}); break;
    case FamilyId::C_L4: add(phi, 2, {cond(1, 1, d * d * *p.r)}); break;
    default: break;
  }
  return out;
}

std::string dump_catalog() {
  std::ostringstream os;
  for (const auto& f : registry()) {
    os << "family=" << f.name << "\n";
    os << "  kind=" << (is_closed_form(f.id)       ? "closed_form"
                        : is_conjecture_family(f.id) ? "conjecture"
                        : is_parametric_family(f.id) ? "parametric"
                                                     : "theorem")
       << "\n";
    os << "  term: " << f.formula << "\n";
    os << "  hypotheses: " << f.hypotheses << "\n";
    FamilyParams p = f.example;
    if (is_closed_form(f.id)) p.n = 2;
    os << "  example: d=" << p.d << " r=" << (p.r ? std::to_string(*p.r) : "-") << "\n";
    os << "  recipe: " << recipe(f.id, p).str() << "\n";
    for (const auto& c : claims_for(f.id, p))
      os << "  claim: modulus=" << c.modulus_str() << " when " << c.condition_str()
         << " truncation=" << truncation_name(c.truncation)
         << " status=" << (c.status == ClaimStatus::Theorem ? "theorem" : "conjecture") << "\n";
    if ((f.id == FamilyId::C_L1 || f.id == FamilyId::C_L2 || f.id == FamilyId::C_L3 || f.id == FamilyId::C_L4))
      os << "  note: d=1 reduces to " << ((f.id == FamilyId::C_L1 || f.id == FamilyId::C_L3) ? "T_D1" : "T_D2")
         << " with d replaced by r\n";
  }
  return os.str();
}

}  // namespace qcong
