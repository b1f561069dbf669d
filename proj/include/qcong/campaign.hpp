#pragma once

#include <qcong/verify.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcong {

struct CampaignConfig {
  std::vector<FamilyId> families;          // empty: every family of the requested status
  std::vector<long> d_values{3, 4, 5, 6, 7, 8};
  std::optional<std::vector<long>> r_values;  // unset: every admissible r
  long n_max = 30;
  std::vector<Truncation> truncations;     // empty: all
  Backend backend = Backend::Auto;
  std::optional<std::filesystem::path> out;  // unset: standard output
  unsigned jobs = 1;
  bool timings = false;
  std::optional<std::filesystem::path> cache_dir;
};

// Throws InvalidParams on an unusable configuration.
void validate_config(const CampaignConfig& cfg);

struct CampaignTask {
  Claim claim;
  long n = 0;
};

// Tasks in report order: family, d, r, n, claim index.
std::vector<CampaignTask> plan_campaign(const CampaignConfig& cfg, ClaimStatus status);
// Runs the tasks on cfg.jobs threads; the result order matches the input.
std::vector<CongruenceReport> run_tasks(const std::vector<CampaignTask>& tasks, const CampaignConfig& cfg);

// One self-describing record: family d r n truncation modulus required
// observed verdict backend ms [note].
std::string format_report(const CongruenceReport& rep, bool timings);

// Exit codes: 0 when nothing failed.
int cmd_verify(const CampaignConfig& cfg, std::ostream& log);
int cmd_explore(const CampaignConfig& cfg, std::ostream& log);

enum class IdentityKind { CF_IND, CF_IND2, CF_D3A, CF_Q4, QBINO, ANDREWS, CATALAN };
std::string_view identity_name(IdentityKind k);
std::optional<IdentityKind> parse_identity(std::string_view s);

struct IdentityConfig {
  std::vector<IdentityKind> which;  // empty: all
  long n_max = 30;
  std::optional<std::filesystem::path> out;
  std::uint64_t seed = 20190501;
};
int cmd_identity(const IdentityConfig& cfg, std::ostream& log);

int cmd_dump_catalog(std::ostream& out);

}  // namespace qcong
