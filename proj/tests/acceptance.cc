// One pass/fail line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "spc/campaign.h"
#include "spc/counterexamples.h"
#include "spc/roundtrip.h"
#include "spc/spc.h"
#include "spc/supplier.h"

using namespace spc;

namespace {

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) c.require(secs < limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!c.ok) ++failures;
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs, c.note.empty() ? "" : ": ",
              c.note.c_str());
  std::fflush(stdout);
}

void campaign(Check& c, CampaignKind kind, int trials) {
  auto cfg = default_campaign(kind);
  c.require(cfg.trials == trials, "campaign size " + std::to_string(cfg.trials));
  auto res = run_campaign(cfg);
  c.require(res.verdicts.size() == static_cast<std::size_t>(trials), "wrong verdict count");
  c.require(res.failures() == 0, std::to_string(res.failures()) + " failures\n" + render_campaign(res));
  c.note = c.ok ? std::to_string(res.passes()) + " passed, " + std::to_string(res.vacuous()) + " vacuous" : c.note;
}

}  // namespace

int main() {
  criterion(1, "unit 8-cycle SPC instance: unique solution, congestion 7 everywhere, no single cover, two-path cover",
            1.0, [](Check& c) {
              auto inst = build_appendixB_instance(8);
              c.require(inst.k() == 8 && inst.c == 7 && inst.d() == 1, "parameters");
              auto o = all_pairs_distances(inst.graph);
              auto out = brute_force_spc(inst, o);
              c.require(out.status == SolveStatus::kSolved, "solver did not solve");
              auto rep = verify_appendixB(inst);
              c.require(rep.unique_solution == std::optional<bool>(true), "solution not unique");
              c.require(rep.solution_valid == std::optional<bool>(true), "solution invalid");
              c.require(rep.solver_agrees == std::optional<bool>(true), "solver returned another solution");
              c.require(rep.congestion_exact == std::optional<bool>(true), "congestion not exactly 7");
              if (out.solution) {
                auto m = congestion_map(out.solution->paths);
                for (int v = 0; v < 8; ++v) c.require(m.count(v) == 7, "node " + std::to_string(v) + " not at 7");
              }
              c.require(rep.max_congestion_nodes.size() == 8, "max-congestion set is not every node");
              c.require(!rep.single_cover_exists, "a single solution path covers everything");
              c.require(rep.two_path_cover_exists, "no two-path cover");
            });

  criterion(2, "bidirectional cycle B(16,11): 11-subset precondition, no single cover, roundtrip gives two paths",
            30.0, [](Check& c) {
              auto rep = verify_bidirectional_cycle(16, 11, 11);
              c.require(rep.precondition_holds == std::optional<bool>(true), "precondition fails");
              c.require(rep.precondition_subsets == 4368, "subset count " + std::to_string(rep.precondition_subsets));
              c.require(!rep.single_cover_exists, "single cover exists");
              c.require(rep.two_path_cover_exists, "no roundtrip cover by enumeration");
              auto g = build_bidirectional_cycle(16, 11);
              auto o = all_pairs_distances(g);
              std::vector<NodeId> W;
              for (int v = 0; v < 16; ++v) W.push_back(v);
              TheoremSupplier sup(g, o);
              auto r = roundtrip_cover(g, o, PathCollection{}, W, sup);
              c.require(r.outcome.kind == CoverOutcome::Kind::kTwoPaths, "outcome is not two paths");
              c.require(r.outcome.exact_boundary, "boundary not exact");
              c.require(check_cover(r.paths, r.outcome, W).empty(), check_cover(r.paths, r.outcome, W));
              c.require(r.iterations <= 17, "iteration cap");
              for (const auto& p : r.paths.paths()) c.require(validate_path(g, o, p), "invalid path " + to_string(p));
            });

  criterion(3, "segment partition on 500 random strongly connected digraphs", 0,
            [](Check& c) { campaign(c, CampaignKind::kSegmentLemma, 500); });
  criterion(4, "ordering exclusivity over all triples of 200 random graphs", 0,
            [](Check& c) { campaign(c, CampaignKind::kExclusivity, 200); });
  criterion(5, "1000 random swap sequences preserve congestion, terminals, shortest-ness", 0,
            [](Check& c) { campaign(c, CampaignKind::kSwapAlgebra, 1000); });
  criterion(6, "undirected merge on 200 instances with k > 4d", 300.0,
            [](Check& c) { campaign(c, CampaignKind::kUndirectedMerge, 200); });
  criterion(7, "DAG merge on 200 instances with k > 3d", 0,
            [](Check& c) { campaign(c, CampaignKind::kDagMerge, 200); });
  criterion(8, "DSP reduction agrees with brute force on 200 undirected instances", 0,
            [](Check& c) { campaign(c, CampaignKind::kReductionEquivalence, 200); });
  criterion(9, "congestion blow-up preserves feasibility on 200 instances", 0,
            [](Check& c) { campaign(c, CampaignKind::kBlowupSoundness, 200); });
  criterion(10, "directed roundtrip cover on B(16,11) and random digraphs", 0,
            [](Check& c) { campaign(c, CampaignKind::kDirectedRoundtrip, 200); });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
