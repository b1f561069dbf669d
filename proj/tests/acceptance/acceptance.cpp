// Runs the full acceptance grid and prints one PASS/FAIL line per criterion.
#include <qcong/campaign.hpp>
#include <qcong/errors.hpp>
#include <qcong/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

using namespace qcong;
using LP = LaurentPoly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

unsigned workers() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

FamilyParams params(long d, long n = 0, std::optional<long> r = std::nullopt) {
  FamilyParams p;
  p.d = d;
  p.n = n;
  p.r = r;
  return p;
}

CampaignConfig grid(std::vector<FamilyId> families, std::vector<long> ds, long n_max, Backend backend = Backend::Auto) {
  CampaignConfig cfg;
  cfg.families = std::move(families);
  cfg.d_values = std::move(ds);
  cfg.n_max = n_max;
  cfg.backend = backend;
  cfg.jobs = workers();
  return cfg;
}

// Runs the tasks and records every report below its required exponent.
struct GridResult {
  long total = 0;
  long passed = 0;
  std::vector<std::string> failures;
};

GridResult run_grid(const std::vector<CampaignTask>& tasks, const CampaignConfig& cfg) {
  GridResult g;
  for (const auto& rep : run_tasks(tasks, cfg)) {
    ++g.total;
    if (rep.verdict == Verdict::Pass)
      ++g.passed;
    else
      g.failures.push_back(format_report(rep, false));
  }
  return g;
}

void absorb(Outcome& out, const std::string& label, const GridResult& g) {
  std::ostringstream os;
  os << label << " " << g.passed << "/" << g.total;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += os.str();
  if (g.total == 0 || !g.failures.empty()) out.pass = false;
  for (const auto& f : g.failures) out.detail += "\n    " + f;
}

void expect(Outcome& out, bool ok, const std::string& what) {
  if (ok) return;
  out.pass = false;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += "failed: " + what;
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Claims whose exponent or modulus the plan must contain.
bool plan_has(const std::vector<CampaignTask>& tasks, long d, long n, long exponent) {
  return std::any_of(tasks.begin(), tasks.end(), [&](const CampaignTask& t) {
    return t.claim.params.d == d && t.n == n && t.claim.exponent == exponent;
  });
}

Outcome main1_grid() {
  Outcome out;
  auto cfg = grid({FamilyId::T_MAIN1}, {5, 7}, 40, Backend::Residue);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  for (long d : {5L, 7L}) {
    for (long n = 2; n <= 40; ++n) {
      if ((n + 1) % d == 0) expect(out, plan_has(tasks, d, n, 2), "plan misses square claim");
      if ((2 * n + 1) % d == 0) expect(out, plan_has(tasks, d, n, 3), "plan misses cube claim");
    }
  }
  absorb(out, "T_MAIN1", run_grid(tasks, cfg));
  return out;
}

Outcome main2_grid() {
  Outcome out;
  auto cfg = grid({FamilyId::T_MAIN2}, {3, 5, 7}, 40, Backend::Residue);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  for (long d : {3L, 5L, 7L}) {
    for (long n = 2; n <= 40; ++n) {
      if ((n - 1) % d == 0) expect(out, plan_has(tasks, d, n, 2), "plan misses square claim");
      if ((2 * n - 1) % d == 0) expect(out, plan_has(tasks, d, n, 3), "plan misses cube claim");
      if (d == 3 && n % 3 == 1) expect(out, plan_has(tasks, d, n, 3), "plan misses d=3 cube claim");
    }
  }
  absorb(out, "T_MAIN2", run_grid(tasks, cfg));
  return out;
}

Outcome qint_square_grid() {
  Outcome out;
  auto cfg = grid({FamilyId::T_MAIN3}, {3}, 99);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  expect(out, tasks.size() == 98, "expected 49 odd n times 2 truncations");
  absorb(out, "T_MAIN3", run_grid(tasks, cfg));
  return out;
}

Outcome main4_grid() {
  Outcome out;
  auto cfg = grid({FamilyId::T_MAIN4}, {3}, 60);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  long expected = 0;
  for (long n = 4; n <= 60; ++n) expected += (n % 3 != 0);
  expect(out, static_cast<long>(tasks.size()) == expected, "T_MAIN4 plan size");
  absorb(out, "T_MAIN4", run_grid(tasks, cfg));
  long equal = 0;
  for (long n = 1; n <= 30; ++n) equal += check_closed_form(FamilyId::CF_IND2, n);
  expect(out, equal == 30, "CF_IND2 closed form");
  out.detail += "; CF_IND2 " + std::to_string(equal) + "/30";
  return out;
}

Outcome six_grid() {
  Outcome out;
  auto cfg = grid({FamilyId::T_MORE1, FamilyId::T_MORE2, FamilyId::T_SIX5, FamilyId::T_SIX1}, range(3, 8), 40);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  absorb(out, "T_MORE1/T_MORE2/T_SIX5/T_SIX1", run_grid(tasks, cfg));
  // r = 1, d = 6 specializations coincide with the two sextic families
  long same = 0, tried = 0;
  for (auto [general, special, residue] : {std::tuple{FamilyId::T_MORE1, FamilyId::T_SIX5, 5L},
                                           std::tuple{FamilyId::T_MORE2, FamilyId::T_SIX1, 1L}}) {
    for (long n = residue + 6; n <= 40; n += 6) {
      ++tried;
      same += partial_sum_univariate(general, params(6, n, 1), n - 1) == partial_sum_univariate(special, params(0, n), n - 1);
    }
  }
  expect(out, same == tried, "d=6, r=1 specialization");
  out.detail += "; d=6 r=1 specializations " + std::to_string(same) + "/" + std::to_string(tried);
  return out;
}

Outcome parametric_grid() {
  Outcome out;
  auto cfg = grid({FamilyId::P_A1, FamilyId::P_A2, FamilyId::P_B1, FamilyId::P_B2, FamilyId::P_M1, FamilyId::P_M2},
                  {3, 5}, 20);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  absorb(out, "P_*", run_grid(tasks, cfg));
  return out;
}

Outcome lemma_grid() {
  Outcome out;
  long checked = 0, held = 0;
  for (Lemma lemma : {Lemma::L22, Lemma::L32}) {
    for (long d : {3L, 5L}) {
      for (long n = 2; n <= 20; ++n) {
        long k_max = 0;
        try {
          k_max = lemma_k_max(lemma, d, n);
        } catch (const PreconditionError&) {
          continue;
        }
        for (long k = 0; k <= k_max; ++k) {
          ++checked;
          if (check_lemma(lemma, d, n, k))
            ++held;
          else
            out.detail += std::string(lemma_name(lemma)) + " d=" + std::to_string(d) + " n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + " fails; ";
        }
      }
    }
  }
  expect(out, checked > 0 && held == checked, "lemma instances");
  out.detail += "lemma instances " + std::to_string(held) + "/" + std::to_string(checked);
  return out;
}

Outcome identity_suite() {
  Outcome out;
  long qb = 0, qb_total = 0;
  for (long n = 1; n <= 30; ++n)
    for (long j = 0; j < n; ++j) {
      ++qb_total;
      qb += check_qbino(n, j);
    }
  expect(out, qb == qb_total, "q-binomial vanishing");
  out.detail += "qbino " + std::to_string(qb) + "/" + std::to_string(qb_total);

  long andrews_ok = 0;
  for (long m = 1; m <= 3; ++m)
    for (long N = 0; N <= 3; ++N) {
      const AndrewsTally t = check_andrews(m, N, 5, IdentityConfig{}.seed + 100 * m + N);
      const bool ok = t.equal >= 5 && t.unequal == 0;
      andrews_ok += ok;
      if (!ok) out.detail += "; Andrews m=" + std::to_string(m) + " N=" + std::to_string(N) + " failed";
    }
  expect(out, andrews_ok == 12, "Andrews instances");
  out.detail += "; Andrews cells " + std::to_string(andrews_ok) + "/12";

  long d3a = 0, q4 = 0, cat = 0;
  for (long n = 1; n <= 20; ++n) d3a += check_closed_form(FamilyId::CF_D3A, n);
  for (long n = 1; n <= 30; ++n) q4 += check_closed_form(FamilyId::CF_Q4, n);
  for (long N = 1; N <= 200; ++N) cat += q_catalan_divides(N);
  expect(out, d3a == 20, "CF_D3A");
  expect(out, q4 == 30, "CF_Q4");
  expect(out, cat == 200, "q-Catalan divisibility");
  out.detail += "; CF_D3A " + std::to_string(d3a) + "/20; CF_Q4 " + std::to_string(q4) + "/30; q-Catalan " +
                std::to_string(cat) + "/200";
  return out;
}

Outcome ind_resolution() {
  Outcome out;
  const BracketFit fit = derive_ind_bracket(10);
  expect(out, fit.found && fit.slope == 2 && fit.offset == -2, "bracket 2N-2 from the oracle");
  out.detail += "oracle bracket " + (fit.found ? std::to_string(fit.slope) + "N" + (fit.offset < 0 ? "" : "+") +
                                                     std::to_string(fit.offset)
                                               : std::string("none"));
  long equal = 0;
  for (long N = 2; N <= 50; ++N) equal += check_closed_form(FamilyId::CF_IND, N);
  expect(out, equal == 49, "CF_IND closed form");
  out.detail += "; closed form " + std::to_string(equal) + "/49";
  long divisible = 0, total = 0;
  for (long n = 3; n <= 99; n += 2) {
    for (long N : {n, (n + 3) / 2}) {
      ++total;
      divisible += ind_closed_form_qint_square(N, n).holds;
    }
  }
  expect(out, divisible == total, "[n]^2 from the closed form");
  out.detail += "; [n]^2 via closed form " + std::to_string(divisible) + "/" + std::to_string(total);
  return out;
}

Outcome conjecture_grid() {
  Outcome out;
  auto explore = [&](std::vector<FamilyId> fams, std::vector<long> ds, long n_max, const std::string& label,
                     std::function<bool(const CampaignTask&)> keep = {}) {
    auto cfg = grid(std::move(fams), std::move(ds), n_max);
    if (keep) cfg.r_values = range(1, 8);
    auto tasks = plan_campaign(cfg, ClaimStatus::Conjecture);
    if (keep) std::erase_if(tasks, [&](const CampaignTask& t) { return !keep(t); });
    absorb(out, label, run_grid(tasks, cfg));
  };
  explore({FamilyId::C_REFINE1, FamilyId::C_REFINE2}, {5, 7}, 30, "refinements");
  explore({FamilyId::C_123, FamilyId::C_N123}, {2, 3}, 30, "C_123/C_N123");
  explore({FamilyId::C_135, FamilyId::C_N135}, {2, 3}, 40, "C_135/C_N135");
  explore({FamilyId::C_L1, FamilyId::C_L2, FamilyId::C_L3, FamilyId::C_L4}, range(1, 8), 40, "C_L1-C_L4",
          [](const CampaignTask& t) { return t.claim.params.d * *t.claim.params.r <= 8; });

  long primes = 0, held = 0;
  for (FamilyId id : {FamilyId::C_123, FamilyId::C_N123, FamilyId::C_135, FamilyId::C_N135})
    for (long d : {2L, 3L})
      for (long p = 2; p <= 50; ++p)
        if (prime_case_applies(id, d, p)) {
          ++primes;
          if (check_prime_case(id, d, p))
            ++held;
          else
            out.detail += "; counterexample candidate " + std::string(family_name(id)) + " d=" + std::to_string(d) +
                          " p=" + std::to_string(p);
        }
  expect(out, primes > 0 && held == primes, "prime corollaries");
  out.detail += "; prime corollaries " + std::to_string(held) + "/" + std::to_string(primes);
  return out;
}

LP random_poly(std::mt19937_64& rng, long len, long lo, long coeff_range) {
  std::uniform_int_distribution<long> c(-coeff_range, coeff_range);
  std::vector<LP::Term> terms;
  for (long i = 0; i < len; ++i) terms.push_back({lo + i, Rational(c(rng))});
  return LP::from_terms(terms);
}

Outcome property_suite() {
  Outcome out;
  std::mt19937_64 rng(20240101);

  long additive = 0;
  {
    std::uniform_int_distribution<long> n_dist(1, 40), e_dist(0, 3), len(1, 6);
    for (int i = 0; i < 500; ++i) {
      const long n = n_dist(rng);
      LP f, g;
      while (f.is_zero()) f = random_poly(rng, len(rng), 0, 5);
      while (g.is_zero()) g = random_poly(rng, len(rng), -2, 5);
      for (long k = e_dist(rng); k > 0; --k) f *= phi(n);
      for (long k = e_dist(rng); k > 0; --k) g *= phi(n);
      additive += val_phi(f * g, n) == val_phi(f, n) + val_phi(g, n);
    }
  }
  expect(out, additive == 500, "valuation additivity");
  out.detail += "additivity " + std::to_string(additive) + "/500";

  long concat = 0;
  {
    std::uniform_int_distribution<long> a(-3, 3), qe(-8, 8), base(1, 5), len(0, 6);
    for (int i = 0; i < 200; ++i) {
      const MonomialArg x{a(rng), qe(rng)};
      const long b = base(rng), j = len(rng), k = len(rng);
      concat += q_poch(x, b, j + k) == q_poch(x, b, j) * q_poch(x.times(MonomialArg::q_pow(b * j)), b, k);
    }
  }
  expect(out, concat == 200, "Pochhammer concatenation");
  out.detail += "; concatenation " + std::to_string(concat) + "/200";

  long pascal = 0, pascal_total = 0;
  for (long n = 1; n <= 40; ++n)
    for (long k = 0; k <= n; ++k) {
      ++pascal_total;
      pascal += q_binom(n, k) == q_binom(n - 1, k - 1) + q_binom(n - 1, k).shifted(k);
    }
  expect(out, pascal == pascal_total, "Pascal recurrence");
  out.detail += "; Pascal " + std::to_string(pascal) + "/" + std::to_string(pascal_total);

  // Both backends on every claim with n <= 12; a disagreement fails the report.
  long agree = 0, both_total = 0;
  for (ClaimStatus status : {ClaimStatus::Theorem, ClaimStatus::Conjecture}) {
    auto cfg = grid({}, range(1, 8), 12, Backend::Both);
    const auto tasks = plan_campaign(cfg, status);
    for (const auto& rep : run_tasks(tasks, cfg)) {
      ++both_total;
      if (rep.reason.find("disagree") == std::string::npos)
        ++agree;
      else
        out.detail += "\n    " + format_report(rep, false);
    }
  }
  expect(out, both_total > 0 && agree == both_total, "backend cross-check");
  out.detail += "; backends agree " + std::to_string(agree) + "/" + std::to_string(both_total);

  long idem = 0;
  {
    std::uniform_int_distribution<long> len(1, 6), lo(-3, 3);
    for (int i = 0; i < 500; ++i) {
      const LP num = random_poly(rng, len(rng), lo(rng), 6);
      LP den;
      while (den.is_zero()) den = random_poly(rng, len(rng), lo(rng), 6);
      const LP common = random_poly(rng, 3, 0, 2);
      const RatFunc f = common.is_zero() ? RatFunc(num, den) : RatFunc(num * common, den * common);
      const RatFunc g(f.num(), f.den());
      idem += g == f && g.num() == f.num() && g.den() == f.den() && f == RatFunc(num, den);
    }
  }
  expect(out, idem == 500, "normalization idempotence");
  out.detail += "; idempotence " + std::to_string(idem) + "/500";

  {
    auto cfg = grid({FamilyId::T_MAIN1, FamilyId::T_MAIN3, FamilyId::T_MORE2, FamilyId::P_M1, FamilyId::C_L3},
                    range(2, 6), 16);
    std::vector<std::string> lines[2];
    for (int pass = 0; pass < 2; ++pass) {
      cfg.jobs = pass == 0 ? 1 : 4;
      for (ClaimStatus status : {ClaimStatus::Theorem, ClaimStatus::Conjecture})
        for (const auto& rep : run_tasks(plan_campaign(cfg, status), cfg)) lines[pass].push_back(format_report(rep, false));
    }
    expect(out, !lines[0].empty() && lines[0] == lines[1], "determinism across job counts");
    out.detail += "; determinism " + std::string(lines[0] == lines[1] ? "identical" : "differs") + " over " +
                  std::to_string(lines[0].size()) + " reports";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"T_MAIN1 grid d in {5,7}, n <= 40", main1_grid},
      {"T_MAIN2 grid d in {3,5,7}, n <= 40", main2_grid},
      {"[n]^2 divisibility, odd n in [3,99], both truncations", qint_square_grid},
      {"T_MAIN4 n in [4,60] and CF_IND2 closed form", main4_grid},
      {"r-parametrized families, d in 3..8, n <= 40", six_grid},
      {"parametric congruences, d in {3,5}, n <= 20", parametric_grid},
      {"residue-ring lemmas, d in {3,5}, n <= 20", lemma_grid},
      {"identity suite", identity_suite},
      {"inductive closed form bracket and consequences", ind_resolution},
      {"conjecture evidence and prime corollaries", conjecture_grid},
      {"property suites", property_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %2zu %s  %s (%.1fs)\n    %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
