#include <qcong/campaign.hpp>
#include <qcong/errors.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace qcong;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "5", "3..8", "3,5,7", "-2..2".
std::vector<long> parse_range(const std::string& s) {
  std::vector<long> out;
  for (const auto& part : split(s, ',')) {
    const auto dots = part.find("..", 1);
    if (dots == std::string::npos) {
      out.push_back(std::stol(part));
      continue;
    }
    const long lo = std::stol(part.substr(0, dots));
    const long hi = std::stol(part.substr(dots + 2));
    if (lo > hi) throw InvalidParams("empty range " + part);
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw InvalidParams("empty range '" + s + "'");
  return out;
}

std::vector<FamilyId> parse_families(const std::string& s) {
  std::vector<FamilyId> out;
  for (const auto& name : split(s, ',')) {
    auto id = parse_family(name);
    if (!id) throw InvalidParams("unknown family " + name);
    out.push_back(*id);
  }
  return out;
}

Backend parse_backend(const std::string& s) {
  if (s == "auto") return Backend::Auto;
  if (s == "full") return Backend::Full;
  if (s == "residue") return Backend::Residue;
  if (s == "both") return Backend::Both;
  throw InvalidParams("unknown backend " + s);
}

std::vector<Truncation> parse_truncations(const std::string& s) {
  std::vector<Truncation> out;
  for (const auto& t : split(s, ',')) {
    if (t == "n-1")
      out.push_back(Truncation::NMinus1);
    else if (t == "(n+1)/2" || t == "half")
      out.push_back(Truncation::HalfNPlus1);
    else if (t != "all")
      throw InvalidParams("unknown truncation " + t);
  }
  return out;
}

struct CampaignFlags {
  std::string families, d, r, truncation = "all", backend = "auto", out, cache_dir;
  long n_max = 30;
  unsigned jobs = 1;
  bool timings = false;

  void attach(CLI::App* sub) {
    sub->add_option("--families", families, "comma-separated family ids");
    sub->add_option("--d", d, "d values, e.g. 5 or 3..8 or 3,5");
    sub->add_option("--r", r, "r values (default: every admissible r)");
    sub->add_option("--n-max", n_max, "largest n")->check(CLI::Range(2L, 100000L));
    sub->add_option("--truncation", truncation, "n-1, (n+1)/2 or all");
    sub->add_option("--backend", backend, "auto, full, residue or both")
        ->check(CLI::IsMember({"auto", "full", "residue", "both"}));
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--out", out, "report file (default: stdout)");
    sub->add_option("--cache-dir", cache_dir, "directory for cached cyclotomic polynomials");
    sub->add_flag("--timings", timings, "record elapsed milliseconds in reports");
  }

  CampaignConfig config() const {
    CampaignConfig cfg;
    if (!families.empty()) cfg.families = parse_families(families);
    if (!d.empty()) cfg.d_values = parse_range(d);
    if (!r.empty()) cfg.r_values = parse_range(r);
    cfg.n_max = n_max;
    cfg.truncations = parse_truncations(truncation);
    cfg.backend = parse_backend(backend);
    if (!out.empty()) cfg.out = out;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    cfg.jobs = jobs;
    cfg.timings = timings;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-congruences for truncated basic hypergeometric sums"};
  app.set_config("--config", "", "read options from a TOML/INI file; command-line flags take precedence");
  app.require_subcommand(1);

  CampaignFlags verify_flags, explore_flags;
  auto* verify = app.add_subcommand("verify", "check every theorem claim in range");
  verify_flags.attach(verify);
  auto* explore = app.add_subcommand("explore", "measure valuations for conjecture claims");
  explore_flags.attach(explore);

  std::string which, identity_out;
  long identity_n_max = 30;
  std::uint64_t seed = IdentityConfig{}.seed;
  auto* identity = app.add_subcommand("identity", "check exact identities");
  identity->add_option("--which", which, "CF_IND,CF_IND2,CF_D3A,CF_Q4,QBINO,ANDREWS,CATALAN (default: all)");
  identity->add_option("--n-max", identity_n_max, "largest n (or N)")->check(CLI::Range(1L, 100000L));
  identity->add_option("--seed", seed, "seed for random Andrews instances");
  identity->add_option("--out", identity_out, "output file (default: stdout)");

  auto* dump = app.add_subcommand("dump-catalog", "print the family registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(verify_flags.config(), std::cerr);
    if (explore->parsed()) return cmd_explore(explore_flags.config(), std::cerr);
    if (identity->parsed()) {
      IdentityConfig cfg;
      for (const auto& w : split(which, ',')) {
        auto k = parse_identity(w);
        if (!k) throw InvalidParams("unknown identity " + w);
        cfg.which.push_back(*k);
      }
      cfg.n_max = identity_n_max;
      cfg.seed = seed;
      if (!identity_out.empty()) cfg.out = identity_out;
      return cmd_identity(cfg, std::cerr);
    }
    if (dump->parsed()) return cmd_dump_catalog(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
