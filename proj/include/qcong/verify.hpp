#pragma once

#include <qcong/catalog.hpp>
#include <qcong/cyclotomic.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcong {

// Auto picks Full for small denominators and Residue otherwise.
enum class Backend { Auto, Full, Residue, Both };
enum class Verdict { Pass, Fail, Skipped };

std::string_view backend_name(Backend b);
std::string_view verdict_name(Verdict v);

// Full-rational arithmetic is used by Auto when the denominator degree is at
// most this bound.
inline constexpr long kFullDegreeBound = 10000;

struct CongruenceReport {
  Claim claim;
  long n = 0;
  // For bivariate moduli this counts the satisfied parts (roots, then Phi_n).
  Valuation observed;
  long required = 0;
  Verdict verdict = Verdict::Skipped;
  std::string reason;
  Backend backend = Backend::Full;
  std::chrono::nanoseconds elapsed{0};
};

struct CheckOptions {
  Backend backend = Backend::Auto;
  CycloCache* cache = nullptr;  // default_cache() when null
};

// Dispatches on the claim's modulus kind.
CongruenceReport run_claim(const Claim& claim, long n, const CheckOptions& opt = {});

// Phi_n^e divides the sum truncated at `truncation`.
CongruenceReport check_phi_power(FamilyId id, const FamilyParams& p, long n, long e, const CheckOptions& opt = {},
                                 Truncation truncation = Truncation::NMinus1);
// [n]^2 divides the T_MAIN3 sum; n odd and > 1.
CongruenceReport check_qint_square(long n, Truncation truncation, const CheckOptions& opt = {});
// The sum vanishes at a = q^n and a = q^-n.
CongruenceReport check_bivar_vanish(FamilyId id, const FamilyParams& p, long n, const CheckOptions& opt = {});
// check_bivar_vanish plus vanishing of every a-coefficient modulo Phi_n.
CongruenceReport check_bivar_phi(FamilyId id, const FamilyParams& p, long n, const CheckOptions& opt = {});
// Same as run_claim on a conjecture claim.
CongruenceReport measure_conjecture(const Claim& claim, long n, const CheckOptions& opt = {});

// Phi_n-valuation of a univariate family sum.
Valuation sum_valuation_full(FamilyId id, const FamilyParams& p, long n, long upto, CycloCache& cache);
// Same at precision `cap`: values at or above cap come back as AtLeast(cap).
Valuation sum_valuation_local(FamilyId id, const FamilyParams& p, long n, long upto, long cap, CycloCache& cache);

enum class Lemma { L22, L32 };
std::string_view lemma_name(Lemma l);
// Upper end of the admissible k range; throws PreconditionError when the
// residue condition on n fails.
long lemma_k_max(Lemma lemma, long d, long n);
bool check_lemma(Lemma lemma, long d, long n, long k, CycloCache& cache = default_cache());

// sum_k (-1)^k [n,k] q^(C(n-k,2) + jk) == 0 for 0 <= j <= n-1.
bool check_qbino(long n, long j);

// Classical p-adic corollary of C_123, C_N123, C_135, C_N135.
bool prime_case_applies(FamilyId conj, long d, long p);
bool check_prime_case(FamilyId conj, long d, long p);
// p-adic valuation of a nonzero rational; zero yields a large sentinel.
long padic_valuation(const Rational& x, long p);
bool is_prime(long p);

// Identity checks.
struct IdentityResult {
  std::string instance;
  bool equal = false;
  std::string note;
};

// Searches bracket arguments b in [lo, hi] such that (q;q^2)_{N-1}^2/(q^2;q^2)_{N-1}^2 (2[b] + q^(2N-2))
// equals the truncated T_MAIN3 sum for every N in [2, n_max]; returns the
// affine fit b = slope*N + offset when one exists.
struct BracketFit {
  bool found = false;
  long slope = 0;
  long offset = 0;
  std::vector<long> per_n;  // matching b for N = 2..n_max, or LONG_MIN
};
BracketFit derive_ind_bracket(long n_max);

bool check_closed_form(FamilyId id, long n);
// [n]^2-divisibility of the CF_IND closed form at N, counted factor by factor.
QIntSquareDetail ind_closed_form_qint_square(long N, long n, CycloCache& cache = default_cache());

struct AndrewsTally {
  long tried = 0;
  long degenerate = 0;
  long equal = 0;
  long unequal = 0;
  std::vector<AndrewsInstance> failures;
};
// Random monomial assignments with q-power exponents in [-range, range].
AndrewsTally check_andrews(long m, long N, long want, std::uint64_t seed, long range = 6, long max_tries = 400);
std::string andrews_str(const AndrewsInstance& in);

}  // namespace qcong
