#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcong/campaign.hpp>
#include <qcong/errors.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace qcong;

namespace {

CampaignConfig config(std::vector<FamilyId> families, std::vector<long> ds, long n_max) {
  CampaignConfig cfg;
  cfg.families = std::move(families);
  cfg.d_values = std::move(ds);
  cfg.n_max = n_max;
  return cfg;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("plan for the [n]^2 family") {
  const auto tasks = plan_campaign(config({FamilyId::T_MAIN3}, {3}, 19), ClaimStatus::Theorem);
  CHECK(tasks.size() == 18);
  std::set<long> ns;
  for (const auto& t : tasks) ns.insert(t.n);
  CHECK(ns == std::set<long>{3, 5, 7, 9, 11, 13, 15, 17, 19});
}

TEST_CASE("plan follows residue classes") {
  const auto tasks = plan_campaign(config({FamilyId::T_MAIN1}, {5}, 12), ClaimStatus::Theorem);
  std::set<long> squares, cubes;
  for (const auto& t : tasks) (t.claim.exponent == 2 ? squares : cubes).insert(t.n);
  CHECK(squares == std::set<long>{4, 9});
  CHECK(cubes == std::set<long>{2, 7, 12});
}

TEST_CASE("empty plan") {
  CHECK(plan_campaign(config({FamilyId::T_MAIN4}, {3}, 3), ClaimStatus::Theorem).empty());
  const auto out = std::filesystem::temp_directory_path() / "qcong_empty_plan.txt";
  auto cfg = config({FamilyId::T_MAIN4}, {3}, 3);
  cfg.out = out;
  std::ostringstream log;
  CHECK(cmd_verify(cfg, log) == 0);
  CHECK(log.str().find("no claims") != std::string::npos);
  CHECK(slurp(out).empty());
  std::filesystem::remove(out);
}

TEST_CASE("status filter") {
  CHECK(plan_campaign(config({FamilyId::C_REFINE1}, {5}, 12), ClaimStatus::Theorem).empty());
  CHECK_FALSE(plan_campaign(config({FamilyId::C_REFINE1}, {5}, 12), ClaimStatus::Conjecture).empty());
}

TEST_CASE("configuration validation") {
  auto cfg = config({FamilyId::T_MAIN1}, {5}, 1);
  CHECK_THROWS_AS(validate_config(cfg), InvalidParams);
  cfg.n_max = 10;
  cfg.d_values.clear();
  CHECK_THROWS_AS(validate_config(cfg), InvalidParams);
  cfg.d_values = {5};
  cfg.r_values = std::vector<long>{};
  CHECK_THROWS_AS(validate_config(cfg), InvalidParams);
}

TEST_CASE("report format") {
  const auto tasks = plan_campaign(config({FamilyId::T_MAIN1}, {5}, 4), ClaimStatus::Theorem);
  REQUIRE(tasks.size() == 2);
  const auto reports = run_tasks(tasks, config({FamilyId::T_MAIN1}, {5}, 4));
  const std::string line = format_report(reports[0], false);
  CHECK(line.find("family=T_MAIN1 d=5 r=- n=2 truncation=n-1") == 0);
  CHECK(line.find("required=3") != std::string::npos);
  CHECK(line.find("verdict=pass") != std::string::npos);
  CHECK(line.find("ms=-") != std::string::npos);
  CHECK(format_report(reports[0], true).find("ms=-") == std::string::npos);

  const auto t3 = plan_campaign(config({FamilyId::T_MAIN3}, {3}, 3), ClaimStatus::Theorem);
  const auto r3 = run_tasks(t3, config({FamilyId::T_MAIN3}, {3}, 3));
  CHECK(format_report(r3[0], false).find("family=T_MAIN3 d=- r=- n=3") == 0);
}

TEST_CASE("reports do not depend on the number of jobs") {
  auto cfg = config({FamilyId::T_MAIN1, FamilyId::T_MORE1, FamilyId::T_MAIN3}, {5, 6}, 14);
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  cfg.jobs = 1;
  const auto serial = run_tasks(tasks, cfg);
  cfg.jobs = 4;
  const auto parallel = run_tasks(tasks, cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(format_report(serial[i], false) == format_report(parallel[i], false));
}

TEST_CASE("verify writes one line per claim") {
  const auto out = std::filesystem::temp_directory_path() / "qcong_verify_report.txt";
  auto cfg = config({FamilyId::T_MAIN1}, {5}, 12);
  cfg.out = out;
  cfg.jobs = 2;
  std::ostringstream log;
  CHECK(cmd_verify(cfg, log) == 0);
  const auto lines = lines_of(slurp(out));
  CHECK(lines.size() == 5);
  for (const auto& l : lines) CHECK(l.find("verdict=pass") != std::string::npos);
  std::filesystem::remove(out);
}

TEST_CASE("identity names") {
  for (auto k : {IdentityKind::CF_IND, IdentityKind::QBINO, IdentityKind::CATALAN}) {
    auto parsed = parse_identity(identity_name(k));
    REQUIRE(parsed);
    CHECK(*parsed == k);
  }
  CHECK_FALSE(parse_identity("NOPE"));
}

TEST_CASE("identity command reports the derived bracket") {
  const auto out = std::filesystem::temp_directory_path() / "qcong_identity.txt";
  IdentityConfig cfg;
  cfg.which = {IdentityKind::CF_IND};
  cfg.n_max = 8;
  cfg.out = out;
  std::ostringstream log;
  CHECK(cmd_identity(cfg, log) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("derived_bracket=2[2N-2]+q^(2N-2)") != std::string::npos);
  CHECK(text.find("printed_matches=no") != std::string::npos);
  std::filesystem::remove(out);
}
