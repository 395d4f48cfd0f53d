#ifndef SPC_CAMPAIGN_H_
#define SPC_CAMPAIGN_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spc/graph.h"

namespace spc {

enum class CampaignKind {
  kDagMerge,
  kUndirectedMerge,
  kDirectedRoundtrip,
  kReductionEquivalence,
  kSegmentLemma,
  kCycleLemma,
  kExclusivity,
  kSwapAlgebra,
  kBlowupSoundness,
  kDagDsp,
};

const char* campaign_name(CampaignKind kind);
// Accepts the full names and the short verify aliases (dag, undirected,
// directed, segments, reduction, ...).
std::optional<CampaignKind> parse_campaign_kind(const std::string& name);

struct CampaignConfig {
  CampaignKind kind = CampaignKind::kSegmentLemma;
  int trials = 100;
  std::uint64_t seed = 42;
  int min_nodes = 3;
  int max_nodes = 10;
  int max_pairs = 6;
  int max_slack = 1;  // d
  Weight min_weight = 1;
  Weight max_weight = 9;
  std::uint64_t budget = 5'000'000;  // brute-force expansions per solve
  int threads = 0;                   // 0: hardware concurrency
};

// Sizes used by the acceptance runs.
CampaignConfig default_campaign(CampaignKind kind);

struct TrialVerdict {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  bool vacuous = false;  // nothing to check (e.g. precondition failed)
  std::string detail;
  std::string instance;  // enough text to rebuild the trial by hand
  std::map<std::string, std::int64_t> stats;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<TrialVerdict> verdicts;  // by trial index

  std::size_t passes() const;
  std::size_t failures() const;
  std::size_t vacuous() const;
  std::map<std::string, std::int64_t> stats() const;
  const TrialVerdict* first_failure() const;
};

// Trial i only depends on (config, i); threads never change the outcome.
TrialVerdict run_trial(const CampaignConfig& config, std::size_t index);
CampaignResult run_campaign(const CampaignConfig& config);

std::string render_verdict(const TrialVerdict& v);
// Summary plus the first failure, if any.
std::string render_campaign(const CampaignResult& result);

}  // namespace spc

#endif  // SPC_CAMPAIGN_H_
