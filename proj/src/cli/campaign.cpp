#include <qcong/campaign.hpp>
#include <qcong/errors.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace qcong {

namespace {

std::vector<std::optional<long>> r_choices(FamilyId id, long d, const CampaignConfig& cfg) {
  if (!uses_r(id)) return {std::nullopt};
  std::vector<long> candidates;
  if (cfg.r_values) {
    candidates = *cfg.r_values;
  } else {
    for (long r = -d; r <= d; ++r) candidates.push_back(r);
  }
  std::vector<std::optional<long>> out;
  for (long r : candidates) out.emplace_back(r);
  return out;
}

bool admissible(FamilyId id, const FamilyParams& p) {
  try {
    validate(id, p);
    return true;
  } catch (const InvalidParams&) {
    return false;
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

// Writes to cfg.out or standard output.
class Sink {
 public:
  explicit Sink(const std::optional<std::filesystem::path>& path) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InvalidParams("cannot open output file " + path->string());
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::unique_ptr<CycloCache> make_cache(const CampaignConfig& cfg) {
  if (!cfg.cache_dir) return nullptr;
  std::filesystem::create_directories(*cfg.cache_dir);
  return std::make_unique<CycloCache>(*cfg.cache_dir);
}

std::vector<CongruenceReport> run_with(const std::vector<CampaignTask>& tasks, const CampaignConfig& cfg,
                                       CycloCache* cache) {
  std::vector<CongruenceReport> out(tasks.size());
  CheckOptions opt{cfg.backend, cache};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      try {
        out[i] = run_claim(t.claim, t.n, opt);
      } catch (const std::exception& e) {
        CongruenceReport rep;
        rep.claim = t.claim;
        rep.n = t.n;
        rep.required = t.claim.exponent;
        rep.verdict = Verdict::Fail;
        rep.reason = std::string("error: ") + e.what();
        out[i] = std::move(rep);
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

std::string params_str(const Claim& c, long n) {
  std::ostringstream os;
  os << "family=" << family_name(c.family) << " d=";
  if (uses_d(c.family))
    os << c.params.d;
  else
    os << "-";
  os << " r=" << (c.params.r ? std::to_string(*c.params.r) : "-") << " n=" << n;
  return os.str();
}

}  // namespace

void validate_config(const CampaignConfig& cfg) {
  if (cfg.n_max < 2) throw InvalidParams("n-max must be >= 2");
  if (cfg.d_values.empty()) throw InvalidParams("d range must be non-empty");
  if (cfg.r_values && cfg.r_values->empty()) throw InvalidParams("r range must be non-empty");
  if (cfg.jobs < 1) throw InvalidParams("jobs must be >= 1");
}

std::vector<CampaignTask> plan_campaign(const CampaignConfig& cfg, ClaimStatus status) {
  validate_config(cfg);
  std::vector<FamilyId> families = cfg.families;
  if (families.empty()) families = all_families();
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<long> ds = cfg.d_values;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

  std::vector<CampaignTask> tasks;
  for (FamilyId id : families) {
    if (is_closed_form(id)) continue;
    if ((status == ClaimStatus::Conjecture) != is_conjecture_family(id)) continue;
    const std::vector<long> fam_ds = uses_d(id) ? ds : std::vector<long>{example_params(id).d};
    for (long d : fam_ds) {
      auto rs = r_choices(id, d, cfg);
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      for (const auto& r : rs) {
        FamilyParams p;
        p.d = d;
        p.r = r;
        if (!uses_d(id)) p = example_params(id);
        if (!admissible(id, p)) continue;
        const auto claims = claims_for(id, p);
        for (long n = 2; n <= cfg.n_max; ++n) {
          for (const auto& c : claims) {
            if (!cfg.truncations.empty() &&
                std::find(cfg.truncations.begin(), cfg.truncations.end(), c.truncation) == cfg.truncations.end())
              continue;
            if (c.applies(n)) tasks.push_back({c, n});
          }
        }
      }
    }
  }
  return tasks;
}

std::vector<CongruenceReport> run_tasks(const std::vector<CampaignTask>& tasks, const CampaignConfig& cfg) {
  auto cache = make_cache(cfg);
  return run_with(tasks, cfg, cache.get());
}

std::string format_report(const CongruenceReport& rep, bool timings) {
  const Claim& c = rep.claim;
  std::ostringstream os;
  os << params_str(c, rep.n) << " truncation=" << truncation_name(c.truncation) << " modulus=" << c.modulus_str()
     << " required=" << rep.required << " observed=" << rep.observed.str() << " verdict=" << verdict_name(rep.verdict)
     << " backend=" << backend_name(rep.backend) << " ms=";
  if (timings) {
    os << std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count();
  } else {
    os << "-";
  }
  if (!rep.reason.empty()) os << " note=" << quote(rep.reason);
  return os.str();
}

int cmd_verify(const CampaignConfig& cfg, std::ostream& log) {
  const auto tasks = plan_campaign(cfg, ClaimStatus::Theorem);
  Sink sink(cfg.out);
  if (tasks.empty()) {
    log << "no claims in range\n";
    return 0;
  }
  const auto reports = run_tasks(tasks, cfg);
  long fails = 0, passes = 0, skipped = 0;
  const CongruenceReport* first_fail = nullptr;
  for (const auto& rep : reports) {
    sink.os() << format_report(rep, cfg.timings) << "\n";
    switch (rep.verdict) {
      case Verdict::Pass: ++passes; break;
      case Verdict::Skipped: ++skipped; break;
      case Verdict::Fail:
        ++fails;
        if (!first_fail) first_fail = &rep;
        break;
    }
  }
  sink.os().flush();
  log << "claims: " << reports.size() << " pass: " << passes << " fail: " << fails << " skipped: " << skipped << "\n";
  if (first_fail) log << "first failure: " << format_report(*first_fail, false) << "\n";
  return fails == 0 ? 0 : 1;
}

int cmd_explore(const CampaignConfig& cfg, std::ostream& log) {
  const auto tasks = plan_campaign(cfg, ClaimStatus::Conjecture);
  Sink sink(cfg.out);
  for (FamilyId id : {FamilyId::C_L1, FamilyId::C_L2, FamilyId::C_L3, FamilyId::C_L4}) {
    const bool requested = cfg.families.empty() || std::count(cfg.families.begin(), cfg.families.end(), id) > 0;
    if (requested && std::count(cfg.d_values.begin(), cfg.d_values.end(), 1L) > 0)
      log << "note: " << family_name(id) << " with d=1 is "
          << ((id == FamilyId::C_L1 || id == FamilyId::C_L3) ? "T_D1" : "T_D2") << " with d replaced by r\n";
  }
  if (tasks.empty()) {
    log << "no claims in range\n";
    return 0;
  }
  const auto reports = run_tasks(tasks, cfg);
  // Smallest observed margin per family and required exponent.
  std::map<std::pair<FamilyId, long>, Valuation> lowest;
  std::vector<const CongruenceReport*> counter;
  for (const auto& rep : reports) {
    sink.os() << format_report(rep, cfg.timings) << "\n";
    if (rep.verdict == Verdict::Fail) counter.push_back(&rep);
    if (rep.verdict == Verdict::Skipped) continue;
    auto key = std::make_pair(rep.claim.family, rep.required);
    auto it = lowest.find(key);
    const auto rank = [](const Valuation& v) {
      return v.kind == Valuation::Kind::Infinite ? std::numeric_limits<long>::max() : v.value;
    };
    if (it == lowest.end() || rank(rep.observed) < rank(it->second)) lowest[key] = rep.observed;
  }
  sink.os().flush();
  log << "summary (family, conjectured exponent, minimal observed):\n";
  for (const auto& [key, v] : lowest)
    log << "  " << family_name(key.first) << " e=" << key.second << " min_observed=" << v.str() << "\n";
  for (const auto* rep : counter)
    log << "counterexample candidate: " << params_str(rep->claim, rep->n) << " truncation="
        << truncation_name(rep->claim.truncation) << " modulus=" << rep->claim.modulus_str()
        << " observed=" << rep->observed.str() << (rep->reason.empty() ? "" : " note=" + quote(rep->reason)) << "\n";
  return counter.empty() ? 0 : 1;
}

std::string_view identity_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::CF_IND: return "CF_IND";
    case IdentityKind::CF_IND2: return "CF_IND2";
    case IdentityKind::CF_D3A: return "CF_D3A";
    case IdentityKind::CF_Q4: return "CF_Q4";
    case IdentityKind::QBINO: return "QBINO";
    case IdentityKind::ANDREWS: return "ANDREWS";
    case IdentityKind::CATALAN: return "CATALAN";
  }
  return "?";
}

std::optional<IdentityKind> parse_identity(std::string_view s) {
  for (auto k : {IdentityKind::CF_IND, IdentityKind::CF_IND2, IdentityKind::CF_D3A, IdentityKind::CF_Q4,
                 IdentityKind::QBINO, IdentityKind::ANDREWS, IdentityKind::CATALAN})
    if (identity_name(k) == s) return k;
  return std::nullopt;
}

int cmd_identity(const IdentityConfig& cfg, std::ostream& log) {
  if (cfg.n_max < 1) throw InvalidParams("n-max must be >= 1");
  std::vector<IdentityKind> which = cfg.which;
  if (which.empty())
    which = {IdentityKind::CF_IND, IdentityKind::CF_IND2, IdentityKind::CF_D3A, IdentityKind::CF_Q4,
             IdentityKind::QBINO, IdentityKind::ANDREWS, IdentityKind::CATALAN};
  Sink sink(cfg.out);
  std::ostream& os = sink.os();
  long failures = 0;
  auto line = [&](IdentityKind k, const std::string& inst, bool ok, const std::string& extra = "") {
    os << "identity=" << identity_name(k) << " " << inst << " verdict=" << (ok ? "equal" : "unequal");
    if (!extra.empty()) os << " " << extra;
    os << "\n";
    if (!ok) ++failures;
  };
  for (IdentityKind k : which) {
    switch (k) {
      case IdentityKind::CF_IND: {
        const long oracle_max = std::min(cfg.n_max, 10L);
        const BracketFit fit = derive_ind_bracket(std::max(oracle_max, 3L));
        const FamilyParams none;
        bool printed = true;
        for (long N = 2; N <= 3; ++N)
          if (!(ind_closed_form(N, 2 * N - 3) == partial_sum_univariate(FamilyId::T_MAIN3, none, N - 1)))
            printed = false;
        os << "identity=CF_IND derived_bracket="
           << (fit.found ? "2[" + std::to_string(fit.slope) + "N" + (fit.offset < 0 ? "" : "+") +
                               std::to_string(fit.offset) + "]+q^(2N-2)"
                         : std::string("none"))
           << " printed_bracket=2[2N-3]+q^(2N-2) printed_matches=" << (printed ? "yes" : "no") << "\n";
        if (!fit.found) ++failures;
        for (long N = 2; N <= cfg.n_max; ++N) line(k, "N=" + std::to_string(N), check_closed_form(FamilyId::CF_IND, N));
        break;
      }
      case IdentityKind::CF_IND2:
      case IdentityKind::CF_D3A:
      case IdentityKind::CF_Q4: {
        const FamilyId id = k == IdentityKind::CF_IND2 ? FamilyId::CF_IND2
                            : k == IdentityKind::CF_D3A ? FamilyId::CF_D3A
                                                        : FamilyId::CF_Q4;
        for (long n = 1; n <= cfg.n_max; ++n) line(k, "n=" + std::to_string(n), check_closed_form(id, n));
        break;
      }
      case IdentityKind::QBINO:
        for (long n = 1; n <= cfg.n_max; ++n) {
          bool ok = true;
          for (long j = 0; j < n; ++j) ok = ok && check_qbino(n, j);
          line(k, "n=" + std::to_string(n) + " j=0.." + std::to_string(n - 1), ok);
        }
        break;
      case IdentityKind::ANDREWS:
        for (long m = 1; m <= 3; ++m) {
          for (long N = 0; N <= std::min(cfg.n_max, 3L); ++N) {
            const AndrewsTally t = check_andrews(m, N, 5, cfg.seed + static_cast<std::uint64_t>(100 * m + N));
            const bool ok = t.unequal == 0 && t.equal >= 5;
            std::ostringstream extra;
            extra << "checked=" << t.equal + t.unequal << " degenerate=" << t.degenerate;
            line(k, "m=" + std::to_string(m) + " N=" + std::to_string(N), ok, extra.str());
            for (const auto& f : t.failures) log << "andrews mismatch: " << andrews_str(f) << "\n";
          }
        }
        break;
      case IdentityKind::CATALAN:
        for (long N = 1; N <= cfg.n_max; ++N) line(k, "N=" + std::to_string(N), q_catalan_divides(N));
        break;
    }
  }
  os.flush();
  log << "identity checks: " << (failures == 0 ? "all equal" : std::to_string(failures) + " failing") << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_dump_catalog(std::ostream& out) {
  out << dump_catalog();
  return 0;
}

}  // namespace qcong
