#pragma once

#include <qcong/bi_laurent.hpp>
#include <qcong/qkit.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcong {

enum class FamilyId {
  T_MAIN1,
  T_MAIN2,
  T_MAIN3,
  T_MAIN4,
  T_GUO5,
  T_D1,
  T_D2,
  T_MORE1,
  T_MORE2,
  T_SIX5,
  T_SIX1,
  P_A1,
  P_A2,
  P_B1,
  P_B2,
  P_M1,
  P_M2,
  C_REFINE1,
  C_REFINE2,
  C_123,
  C_N123,
  C_135,
  C_N135,
  C_L1,
  C_L2,
  C_L3,
  C_L4,
  CF_IND,
  CF_IND2,
  CF_D3A,
  CF_Q4,
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);
const std::vector<FamilyId>& all_families();

bool is_parametric_family(FamilyId id);
bool is_conjecture_family(FamilyId id);
bool is_closed_form(FamilyId id);
bool uses_r(FamilyId id);
bool uses_d(FamilyId id);

struct FamilyParams {
  long d = 0;
  std::optional<long> r;
  long n = 0;
  bool parametric = true;  // P_* families only: false substitutes a = 1
};

// Representative parameters for the family (n = 0).
FamilyParams example_params(FamilyId id);

// One q-shifted factorial (arg; q^base_exp)_k raised to `power`.
struct PochSpec {
  MonomialArg arg;
  long base_exp = 1;
  long power = 1;
};

// 1 - a^a_exp q^q_exp
struct Factor {
  long a_exp = 0;
  long q_exp = 0;
};

// Term k = [bracket_slope*k + bracket_offset] * prod(num)_k / prod(den)_k * q^(q_slope*k).
struct Recipe {
  std::vector<PochSpec> num;
  std::vector<PochSpec> den;
  bool has_bracket = false;
  long bracket_slope = 0;
  long bracket_offset = 0;
  long q_slope = 0;

  // Factors entering when k goes from j-1 to j (j >= 1).
  void step_factors(long j, std::vector<Factor>& num_out, std::vector<Factor>& den_out) const;
  long bracket_arg(long k) const { return bracket_slope * k + bracket_offset; }
  // Substitute a -> q^m into every factor.
  Recipe specialized(long m) const;
  bool is_a_free() const;
  // Degree of the product of all denominator factors up to `upto`.
  long den_degree(long upto) const;
  std::string str() const;
};

// Validates the family hypotheses on d and r; throws InvalidParams.
void validate(FamilyId id, const FamilyParams& p);
Recipe recipe(FamilyId id, const FamilyParams& p);

enum class ModulusKind { PhiPower, QIntSquare, BivarProduct, PhiTimesBivar };
enum class ClaimStatus { Theorem, Conjecture };
enum class Truncation { NMinus1, HalfNPlus1 };

std::string_view modulus_name(ModulusKind k);
std::string_view truncation_name(Truncation t);
long truncation_upto(Truncation t, long n);

// multiplier * n = residue (mod modulus).
struct ResidueCondition {
  long multiplier = 1;
  long residue = 0;
  long modulus = 1;

  bool holds(long n) const;
  std::string str() const;
};

struct Claim {
  FamilyId family;
  FamilyParams params;  // n unused
  ModulusKind kind = ModulusKind::PhiPower;
  long exponent = 2;  // PhiPower exponent; 2 for QIntSquare
  std::vector<ResidueCondition> any_of;  // at least one must hold
  long n_min = 2;
  Truncation truncation = Truncation::NMinus1;
  ClaimStatus status = ClaimStatus::Theorem;

  bool applies(long n) const;
  std::string condition_str() const;
  std::string modulus_str() const;
};

std::vector<Claim> claims_for(FamilyId id, const FamilyParams& p);

// Summands and truncated sums.
BiRatFunc term(FamilyId id, const FamilyParams& p, long k);
BiRatFunc partial_sum(FamilyId id, const FamilyParams& p, long upto);
RatFunc partial_sum_univariate(FamilyId id, const FamilyParams& p, long upto);
// The sum with a -> q^m substituted factor by factor; throws DegenerateInstance
// when a denominator factor vanishes before the sum truncates.
RatFunc specialize_a(FamilyId id, const FamilyParams& p, long upto, long m);

// Closed forms; CF_IND uses the bracket 2[2N-2] + q^(2N-2).
BiRatFunc closed_form(FamilyId id, const FamilyParams& p);
// CF_IND with a chosen bracket argument: (q;q^2)_{N-1}^2/(q^2;q^2)_{N-1}^2 * (2[b] + q^(2N-2)).
RatFunc ind_closed_form(long N, long bracket_arg);
// The sum side matching each closed form, for upto = n - 1 (N - 1 for CF_IND).
BiRatFunc closed_form_sum(FamilyId id, const FamilyParams& p);

// Structured description of the whole registry.
std::string dump_catalog();

struct AndrewsInstance {
  long m = 1;
  long N = 0;
  long a = 1;  // exponents of q for a, b_i, c_i
  std::vector<long> b;
  std::vector<long> c;
  long base_exp = 1;
};

enum class AndrewsSide { Left, Right };
RatFunc andrews_side(const AndrewsInstance& inst, AndrewsSide side);

}  // namespace qcong
