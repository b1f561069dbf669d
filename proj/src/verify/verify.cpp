#include <qcong/cyclo_jet.hpp>
#include <qcong/detail/exact_rings.hpp>
#include <qcong/detail/sum_engine.hpp>
#include <qcong/errors.hpp>
#include <qcong/verify.hpp>

#include <algorithm>

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

CycloCache& cache_of(const CheckOptions& opt) { return opt.cache ? *opt.cache : default_cache(); }

// Ordering key: Finite(v) and AtLeast(v) by value, Infinite last.
bool val_less(const Valuation& x, const Valuation& y) {
  if (y.kind == Valuation::Kind::Infinite) return x.kind != Valuation::Kind::Infinite;
  if (x.kind == Valuation::Kind::Infinite) return false;
  return x.value < y.value;
}

// A full valuation and a capped local one describe the same number.
bool consistent(const Valuation& full, const Valuation& local, long cap) {
  if (full.kind == Valuation::Kind::Infinite || full.value >= cap)
    return local.kind != Valuation::Kind::Finite && (local.kind == Valuation::Kind::Infinite || local.value >= cap);
  return local.kind == Valuation::Kind::Finite && local.value == full.value;
}

Backend resolve(Backend requested, FamilyId id, const FamilyParams& p, long upto) {
  if (requested != Backend::Auto) return requested;
  return recipe(id, p).den_degree(upto) <= kFullDegreeBound ? Backend::Full : Backend::Residue;
}

Claim adhoc_claim(FamilyId id, const FamilyParams& p, ModulusKind kind, long e, Truncation t) {
  Claim c;
  c.family = id;
  c.params = p;
  c.params.n = 0;
  c.kind = kind;
  c.exponent = e;
  c.truncation = t;
  c.status = is_conjecture_family(id) ? ClaimStatus::Conjecture : ClaimStatus::Theorem;
  return c;
}

void finish_valuation(CongruenceReport& rep) {
  const Valuation& v = rep.observed;
  if (v.kind == Valuation::Kind::Finite && v.value < 0) {
    rep.verdict = Verdict::Fail;
    rep.reason = "denominator shares Phi_" + std::to_string(rep.n) + " (valuation " + std::to_string(v.value) + ")";
    return;
  }
  rep.verdict = v.reaches(rep.required) ? Verdict::Pass : Verdict::Fail;
}

void phi_power_into(CongruenceReport& rep, const CheckOptions& opt) {
  const Claim& c = rep.claim;
  const long n = rep.n;
  FamilyParams p = c.params;
  p.n = n;
  p.parametric = false;
  const long upto = truncation_upto(c.truncation, n);
  const long cap = c.exponent + 2;
  rep.required = c.exponent;
  rep.backend = resolve(opt.backend, c.family, p, upto);
  CycloCache& cache = cache_of(opt);
  try {
    switch (rep.backend) {
      case Backend::Full: rep.observed = sum_valuation_full(c.family, p, n, upto, cache); break;
      case Backend::Residue: rep.observed = sum_valuation_local(c.family, p, n, upto, cap, cache); break;
      default: {
        const Valuation full = sum_valuation_full(c.family, p, n, upto, cache);
        const Valuation local = sum_valuation_local(c.family, p, n, upto, cap, cache);
        rep.observed = full;
        if (!consistent(full, local, cap)) {
          rep.verdict = Verdict::Fail;
          rep.reason = "backends disagree: full " + full.str() + ", residue " + local.str();
          return;
        }
      }
    }
  } catch (const DegenerateInstance& e) {
    rep.observed = Valuation::finite(0);
    rep.verdict = Verdict::Fail;
    rep.reason = e.what();
    return;
  }
  finish_valuation(rep);
}

void qint_square_into(CongruenceReport& rep, const CheckOptions& opt) {
  const long n = rep.n;
  rep.required = 2;
  if (n < 3 || n % 2 == 0) {
    rep.verdict = Verdict::Skipped;
    rep.reason = "n must be odd and > 1";
    return;
  }
  const long upto = truncation_upto(rep.claim.truncation, n);
  FamilyParams p;
  p.n = n;
  rep.backend = resolve(opt.backend, FamilyId::T_MAIN3, p, upto);
  CycloCache& cache = cache_of(opt);
  constexpr long cap = 4;

  std::vector<std::pair<long, Valuation>> per;
  if (rep.backend != Backend::Residue) {
    detail::LaurentRing ring;
    const auto parts = detail::accumulate(ring, recipe(FamilyId::T_MAIN3, p), upto, true);
    for (long d : divisors(n)) {
      if (d == 1) continue;
      per.emplace_back(d, parts.num.is_zero() ? Valuation::infinite()
                                              : Valuation::finite(val_phi(parts.num, d, cache) -
                                                                  val_phi(parts.den, d, cache)));
    }
  }
  if (rep.backend != Backend::Full) {
    std::vector<std::pair<long, Valuation>> local;
    for (long d : divisors(n))
      if (d > 1) local.emplace_back(d, sum_valuation_local(FamilyId::T_MAIN3, p, d, upto, cap, cache));
    if (rep.backend == Backend::Both) {
      for (std::size_t i = 0; i < per.size(); ++i) {
        if (!consistent(per[i].second, local[i].second, cap)) {
          rep.observed = per[i].second;
          rep.verdict = Verdict::Fail;
          rep.reason = "backends disagree at Phi_" + std::to_string(per[i].first) + ": full " + per[i].second.str() +
                       ", residue " + local[i].second.str();
          return;
        }
      }
    } else {
      per = std::move(local);
    }
  }
  Valuation low = Valuation::infinite();
  long worst = 0;
  for (const auto& [d, v] : per)
    if (val_less(v, low)) {
      low = v;
      worst = d;
    }
  rep.observed = low;
  if (low.kind == Valuation::Kind::Finite && low.value < 0) {
    rep.verdict = Verdict::Fail;
    rep.reason = "denominator shares Phi_" + std::to_string(worst);
    return;
  }
  rep.verdict = low.reaches(2) ? Verdict::Pass : Verdict::Fail;
  if (rep.verdict == Verdict::Fail) rep.reason = "Phi_" + std::to_string(worst) + " valuation " + low.str();
}

// Number of roots a = q^(+-n) at which the specialized sum vanishes.
long roots_vanishing(const Claim& c, long n, std::string& reason) {
  FamilyParams p = c.params;
  p.n = n;
  p.parametric = true;
  long count = 0;
  for (long m : {n, -n}) {
    try {
      if (specialize_a(c.family, p, n - 1, m).is_zero())
        ++count;
      else if (reason.empty())
        reason = "nonzero at a = q^" + std::to_string(m);
    } catch (const DegenerateInstance& e) {
      if (reason.empty()) reason = "a = q^" + std::to_string(m) + ": " + e.what();
    }
  }
  return count;
}

void bivar_into(CongruenceReport& rep, const CheckOptions& opt, bool with_phi) {
  const Claim& c = rep.claim;
  const long n = rep.n;
  rep.backend = Backend::Full;
  rep.required = with_phi ? 3 : 2;
  long parts = roots_vanishing(c, n, rep.reason);
  if (with_phi) {
    FamilyParams p = c.params;
    p.n = n;
    p.parametric = true;
    try {
      CycloAPoly ring(n, cache_of(opt));
      const auto sum = detail::accumulate(ring, recipe(c.family, p), n - 1, false);
      if (sum.empty || ring.is_zero(sum.num))
        ++parts;
      else if (rep.reason.empty())
        rep.reason = "nonzero modulo Phi_" + std::to_string(n);
    } catch (const DegenerateInstance& e) {
      if (rep.reason.empty()) rep.reason = std::string("modulo Phi_n: ") + e.what();
    }
  }
  rep.observed = Valuation::finite(parts);
  rep.verdict = parts == rep.required ? Verdict::Pass : Verdict::Fail;
}

template <class F>
CongruenceReport timed(const Claim& claim, long n, F&& body) {
  CongruenceReport rep;
  rep.claim = claim;
  rep.n = n;
  const auto t0 = Clock::now();
  body(rep);
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
  return rep;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Full: return "full";
    case Backend::Residue: return "residue";
    case Backend::Both: return "both";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

Valuation sum_valuation_full(FamilyId id, const FamilyParams& p, long n, long upto, CycloCache& cache) {
  const Recipe rc = recipe(id, p);
  if (!rc.is_a_free()) throw PreconditionError(std::string(family_name(id)) + ": sum depends on a");
  detail::LaurentRing ring;
  const auto parts = detail::accumulate(ring, rc, upto, true);
  if (parts.num.is_zero()) return Valuation::infinite();
  return Valuation::finite(val_phi(parts.num, n, cache) - val_phi(parts.den, n, cache));
}

Valuation sum_valuation_local(FamilyId id, const FamilyParams& p, long n, long upto, long cap, CycloCache& cache) {
  const Recipe rc = recipe(id, p);
  if (!rc.is_a_free()) throw PreconditionError(std::string(family_name(id)) + ": sum depends on a");
  CycloJet ring(n, cap, cache);
  const auto parts = detail::accumulate(ring, rc, upto, false);
  if (parts.empty) return Valuation::infinite();
  if (!parts.computed) return Valuation::at_least(cap);
  const long v = parts.vmin + ring.order_of(parts.num);
  return v >= cap ? Valuation::at_least(cap) : Valuation::finite(v);
}

CongruenceReport run_claim(const Claim& claim, long n, const CheckOptions& opt) {
  return timed(claim, n, [&](CongruenceReport& rep) {
    if (!claim.applies(n)) {
      rep.required = claim.kind == ModulusKind::BivarProduct ? 2 : claim.kind == ModulusKind::PhiTimesBivar ? 3 : claim.exponent;
      rep.verdict = Verdict::Skipped;
      rep.reason = "n outside the claim's residue classes";
      return;
    }
    switch (claim.kind) {
      case ModulusKind::PhiPower: phi_power_into(rep, opt); break;
      case ModulusKind::QIntSquare: qint_square_into(rep, opt); break;
      case ModulusKind::BivarProduct: bivar_into(rep, opt, false); break;
      case ModulusKind::PhiTimesBivar: bivar_into(rep, opt, true); break;
    }
  });
}

CongruenceReport check_phi_power(FamilyId id, const FamilyParams& p, long n, long e, const CheckOptions& opt,
                                 Truncation truncation) {
  if (n < 2) throw PreconditionError("check_phi_power requires n >= 2");
  const Claim c = adhoc_claim(id, p, ModulusKind::PhiPower, e, truncation);
  return timed(c, n, [&](CongruenceReport& rep) { phi_power_into(rep, opt); });
}

CongruenceReport check_qint_square(long n, Truncation truncation, const CheckOptions& opt) {
  const Claim c = adhoc_claim(FamilyId::T_MAIN3, {}, ModulusKind::QIntSquare, 2, truncation);
  return timed(c, n, [&](CongruenceReport& rep) { qint_square_into(rep, opt); });
}

CongruenceReport check_bivar_vanish(FamilyId id, const FamilyParams& p, long n, const CheckOptions& opt) {
  const Claim c = adhoc_claim(id, p, ModulusKind::BivarProduct, 2, Truncation::NMinus1);
  return timed(c, n, [&](CongruenceReport& rep) { bivar_into(rep, opt, false); });
}

CongruenceReport check_bivar_phi(FamilyId id, const FamilyParams& p, long n, const CheckOptions& opt) {
  const Claim c = adhoc_claim(id, p, ModulusKind::PhiTimesBivar, 3, Truncation::NMinus1);
  return timed(c, n, [&](CongruenceReport& rep) { bivar_into(rep, opt, true); });
}

CongruenceReport measure_conjecture(const Claim& claim, long n, const CheckOptions& opt) {
  return run_claim(claim, n, opt);
}

std::string_view lemma_name(Lemma l) { return l == Lemma::L22 ? "L22" : "L32"; }

long lemma_k_max(Lemma lemma, long d, long n) {
  if (d < 1 || d % 2 == 0) throw PreconditionError("lemma: d must be a positive odd integer");
  if (lemma == Lemma::L22 && d < 3) throw PreconditionError("lemma L22: d >= 3");
  if (n < 1) throw PreconditionError("lemma: n >= 1");
  const long top = lemma == Lemma::L22 ? d * n - 2 * n - 1 : d * n - 2 * n + 1;
  if (((top % d) + d) % d != 0) throw PreconditionError("lemma: residue condition on n fails");
  if (top < 0) throw PreconditionError("lemma: empty k range");
  return top / d;
}

bool check_lemma(Lemma lemma, long d, long n, long k, CycloCache& cache) {
  const long M = lemma_k_max(lemma, d, n);
  if (k < 0 || k > M) throw PreconditionError("lemma: k out of range");
  const long shift = lemma == Lemma::L22 ? 1 : -1;
  // (a q^shift; q^d)_j and (q^d/a; q^d)_j
  auto top = [&](long j) { return q_poch({1, shift}, d, j); };
  auto bottom = [&](long j) { return q_poch({-1, d}, d, j); };
  const long E = lemma == Lemma::L22 ? (d * M - d + 2) * M / 2 + (d - 1) * k : (d * M - d - 2) * M / 2 + (d + 1) * k;
  const long s = M - 2 * k;
  const BiLaurent lhs_num = top(M - k), lhs_den = bottom(M - k);
  const BiLaurent rhs_num = BiLaurent::monomial(s % 2 == 0 ? 1 : -1, s, E) * top(k);
  const BiLaurent rhs_den = bottom(k);
  const BiLaurent diff = lhs_num * rhs_den - rhs_num * lhs_den;
  for (const auto& [i, c] : diff.coeffs_in_a())
    if (val_phi(c, n, cache) < 1) return false;
  return true;
}

}  // namespace qcong
