#include "spc/campaign.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "spc/collection.h"
#include "spc/counterexamples.h"
#include "spc/error.h"
#include "spc/merge.h"
#include "spc/random_instances.h"
#include "spc/reduction.h"
#include "spc/roundtrip.h"
#include "spc/spc.h"
#include "spc/supplier.h"
#include "spc/text_format.h"

namespace spc {

namespace {

struct Trial {
  const CampaignConfig& cfg;
  Rng rng;
  TrialVerdict& v;

  void fail(const std::string& msg) {
    if (v.pass) v.detail = msg;
    v.pass = false;
  }
  void count(const std::string& key, std::int64_t n = 1) { v.stats[key] += n; }
  int nodes() { return static_cast<int>(rng.uniform(cfg.min_nodes, cfg.max_nodes)); }
  double density() { return static_cast<double>(rng.uniform(15, 50)) / 100.0; }
};

std::string node_list(const std::vector<NodeId>& nodes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i];
  return os.str();
}

std::string join_paths(const PathCollection& coll) {
  std::ostringstream os;
  for (const Path& p : coll.paths()) os << "path " << to_string(p) << "\n";
  return os.str();
}

// ---- segment lemma ---------------------------------------------------------

void classify_and_count(Trial& t, const Path& path, const std::vector<NodeId>& Wp,
                        const DistanceOracle& oracle) {
  SegmentPartition seg = classify_segments(path, Wp, oracle);
  t.count(std::string("kind.") + path_kind_name(seg.kind));
  t.count("paths");
}

void segment_lemma(Trial& t) {
  Graph g = random_graph(t.rng, t.nodes(), true, t.density(), t.cfg.min_weight, t.cfg.max_weight);
  t.v.instance = render_graph(g);
  DistanceOracle o = all_pairs_distances(g);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    for (NodeId e = 0; e < g.node_count(); ++e) {
      if (s == e) continue;
      PathEnumeration paths = enumerate_shortest_paths(g, o, s, e, 8);
      for (const Path& p : paths.paths) {
        if (p.size() < 3) continue;
        try {
          classify_and_count(t, p, p.nodes(), o);
          std::vector<NodeId> sub{p.front(), p.back()};
          for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (t.rng.chance(0.5)) sub.push_back(p[i]);
          }
          if (sub.size() > 2) classify_and_count(t, p, sub, o);
        } catch (const Error& err) {
          t.fail("path " + to_string(p) + ": " + err.what());
          return;
        }
      }
    }
  }
  if (t.v.stats["paths"] == 0) t.v.vacuous = true;
}

// ---- cycle-order lemma -----------------------------------------------------

// For a non-reversing a->b path with marked a, u', u, w, w', b in that order,
// every shortest-path ordering of the six with w before u is w, w', b, a, u', u.
void cycle_lemma(Trial& t) {
  int n = t.nodes();
  // Unit ring plus sparse heavier chords keeps long shortest paths around.
  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> used;
  for (NodeId i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, 1});
    used.insert({i, (i + 1) % n});
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w = 0; w < n; ++w) {
      if (u == w || used.count({u, w}) || !t.rng.chance(0.15)) continue;
      used.insert({u, w});
      edges.push_back({u, w, t.rng.uniform(1, t.cfg.max_weight)});
    }
  }
  Graph g(true, n, edges);
  t.v.instance = render_graph(g);
  DistanceOracle o = all_pairs_distances(g);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId e = 0; e < n; ++e) {
      if (s == e || !o.reachable(s, e)) continue;
      Path p = canonical_shortest_path(g, o, s, e);
      const std::size_t L = p.size();
      if (L < 6) continue;
      std::vector<NodeId> interior(p.nodes().begin() + 1, p.nodes().end() - 1);
      for_each_subset(interior, 4, [&](const std::vector<NodeId>& four) {
        // Subsets come in lexicographic id order; restore path order.
        std::vector<NodeId> mid = four;
        std::sort(mid.begin(), mid.end(),
                  [&](NodeId x, NodeId y) { return *p.position(x) < *p.position(y); });
        const NodeId a = p.front(), b = p.back();
        const NodeId u1 = mid[0], u = mid[1], w = mid[2], w1 = mid[3];
        std::vector<NodeId> six{a, u1, u, w, w1, b};
        SegmentPartition seg = classify_segments(p, six, o);
        if (seg.kind != PathKind::kNonReversing) return false;
        t.count("configurations");
        const std::vector<NodeId> expect{w, w1, b, a, u1, u};
        for_each_shortest_path_ordering(o, six, [&](const std::vector<NodeId>& ord) {
          auto pos = [&](NodeId x) { return std::find(ord.begin(), ord.end(), x) - ord.begin(); };
          if (pos(w) < pos(u)) {
            t.count("orderings");
            if (ord != expect) {
              t.fail("path " + to_string(p) + " ordering " + node_list(ord) + " expected " +
                     node_list(expect));
              return true;
            }
          }
          return false;
        });
        return !t.v.pass;
      });
      if (!t.v.pass) return;
    }
  }
  if (t.v.stats["configurations"] == 0) t.v.vacuous = true;
}

// ---- ordering exclusivity --------------------------------------------------

void exclusivity(Trial& t) {
  const bool directed = t.rng.chance(0.5);
  Graph g = random_graph(t.rng, t.nodes(), directed, t.density(), t.cfg.min_weight,
                         t.cfg.max_weight);
  t.v.instance = render_graph(g);
  DistanceOracle o = all_pairs_distances(g);
  const int n = g.node_count();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      for (NodeId w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        t.count("triples");
        if (!is_shortest_path_ordering(o, {u, v, w})) continue;
        t.count("orderings");
        if (is_shortest_path_ordering(o, {v, u, w}) || is_shortest_path_ordering(o, {u, w, v})) {
          t.fail("triple " + node_list({u, v, w}) + " admits a forbidden second ordering");
          return;
        }
      }
    }
  }
}

// ---- swap algebra ----------------------------------------------------------

void swap_algebra(Trial& t) {
  const bool directed = t.rng.chance(0.5);
  const int n = std::max(4, t.nodes());
  Graph g = random_graph(t.rng, n, directed, t.density(), t.cfg.min_weight, t.cfg.max_weight);
  DistanceOracle o = all_pairs_distances(g);
  const int k = static_cast<int>(t.rng.uniform(2, 6));
  std::vector<TerminalPair> pairs = overlapping_pairs(t.rng, g, o, k, k);
  std::vector<Path> paths;
  for (const TerminalPair& pr : pairs) {
    PathEnumeration all = enumerate_shortest_paths(g, o, pr.source, pr.target, 16);
    paths.push_back(t.rng.pick(all.paths));
  }
  const PathCollection start(paths, !directed);
  t.v.instance = render_graph(g) + join_paths(start);
  const CongestionMap cong = congestion_map(start);

  PathCollection cur = start;
  std::vector<TraceEvent> events;
  const int steps = static_cast<int>(t.rng.uniform(1, 20));
  for (int step = 0; step < steps; ++step) {
    std::vector<SwapRecord> options;
    for (std::size_t p = 0; p < cur.size(); ++p) {
      for (std::size_t q = 0; q < cur.size(); ++q) {
        if (p == q) continue;
        for (NodeId a : cur[p].nodes()) {
          for (NodeId b : cur[p].nodes()) {
            if (!cur[p].before(a, b) || !cur[q].contains(a) || !cur[q].contains(b)) continue;
            if (directed && !cur[q].before(a, b)) continue;
            options.push_back({p, q, a, b});
          }
        }
      }
    }
    if (options.empty()) break;
    const SwapRecord rec = t.rng.pick(options);
    PathCollection next = subpath_swap(cur, rec.p, rec.q, rec.a, rec.b).collection;
    t.count("swaps");
    if (congestion_map(next) != cong) return t.fail("congestion changed by " + format_event(rec));
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next.terminals(i) != start.terminals(i)) {
        return t.fail("terminals changed by " + format_event(rec));
      }
      if (!validate_path(g, o, next[i])) {
        return t.fail("path " + std::to_string(i) + " broken by " + format_event(rec));
      }
    }
    // The same swap undoes itself.
    SwapRecord back = rec;
    if (!next[rec.p].before(rec.a, rec.b)) std::swap(back.p, back.q);
    if (next[back.p].before(back.a, back.b) &&
        subpath_swap(next, back.p, back.q, back.a, back.b).collection != cur) {
      return t.fail("swap is not an involution: " + format_event(rec));
    }
    events.push_back(rec);
    cur = std::move(next);
  }
  if (replay(start, events) != cur) t.fail("replay disagrees with the swap sequence");
  if (events.empty()) t.v.vacuous = true;
}

// ---- blow-up soundness -----------------------------------------------------

std::vector<TerminalPair> random_pairs(Rng& rng, const DistanceOracle& o, int k,
                                       double same_terminal) {
  std::vector<TerminalPair> pairs;
  for (int i = 0; i < k; ++i) {
    if (rng.chance(same_terminal)) {
      NodeId v = static_cast<NodeId>(rng.uniform(0, o.node_count() - 1));
      pairs.push_back({v, v});
    } else if (!pairs.empty() && rng.chance(0.3)) {
      pairs.push_back(rng.pick(pairs));  // repeated pair: terminals shared
    } else if (auto pr = random_pair(rng, o)) {
      pairs.push_back(*pr);
    } else {
      pairs.push_back({0, 0});
    }
  }
  return pairs;
}

bool feasible(const SpcOutcome& out) { return out.status == SolveStatus::kSolved; }

void blowup_soundness(Trial& t) {
  const bool directed = t.rng.chance(0.5);
  Graph g = random_graph(t.rng, t.nodes(), directed, t.density(), t.cfg.min_weight,
                         t.cfg.max_weight);
  DistanceOracle o = all_pairs_distances(g);
  const int k = static_cast<int>(t.rng.uniform(1, t.cfg.max_pairs));
  SpcInstance inst{g, random_pairs(t.rng, o, k, 0.1),
                   static_cast<int>(t.rng.uniform(1, std::min(k, 3)))};
  t.v.instance = render_instance(inst);
  SearchLimits lim;
  lim.expansion_budget = t.cfg.budget;
  SpcOutcome direct = brute_force_spc(inst, o, lim);
  Blowup blown = congestion_blowup(inst);
  SpcOutcome via;
  via.status = SolveStatus::kInfeasible;
  if (blown.dsp) via = brute_force_spc(*blown.dsp, all_pairs_distances(blown.dsp->graph), lim);
  if (direct.status == SolveStatus::kBudgetExceeded || via.status == SolveStatus::kBudgetExceeded) {
    return t.fail("budget exceeded");
  }
  t.count(feasible(direct) ? "feasible" : "infeasible");
  if (feasible(direct) != feasible(via)) {
    return t.fail(std::string("SPC ") + solve_status_name(direct.status) + " but blown DSP " +
                  solve_status_name(via.status));
  }
  if (feasible(via)) {
    SpcSolution back{blown.mapping.project(via.solution->paths)};
    if (!validate_solution(inst, o, back).ok()) t.fail("projected DSP solution is invalid");
  }
}

// ---- DAG DSP against brute force -------------------------------------------

void dag_dsp_trial(Trial& t) {
  Graph g = random_dag(t.rng, t.nodes(), t.density(), t.cfg.min_weight, t.cfg.max_weight);
  DistanceOracle o = all_pairs_distances(g);
  const int k = static_cast<int>(t.rng.uniform(1, t.cfg.max_pairs));
  SpcInstance inst{g, random_pairs(t.rng, o, k, 0.05), 1};
  t.v.instance = render_instance(inst);
  SearchLimits lim;
  lim.expansion_budget = t.cfg.budget;
  SpcOutcome brute = brute_force_spc(inst, o, lim);
  SpcOutcome dp = dag_dsp(inst, o, t.cfg.budget);
  if (brute.status == SolveStatus::kBudgetExceeded || dp.status == SolveStatus::kBudgetExceeded) {
    return t.fail("budget exceeded");
  }
  t.count(feasible(brute) ? "feasible" : "infeasible");
  if (feasible(brute) != feasible(dp)) {
    return t.fail(std::string("brute force ") + solve_status_name(brute.status) + " but DAG DP " +
                  solve_status_name(dp.status));
  }
  if (feasible(dp) && !validate_solution(inst, o, *dp.solution).ok()) {
    t.fail("DAG DP solution is invalid");
  }
}

// ---- reduction equivalence -------------------------------------------------

void reduction_equivalence(Trial& t) {
  Graph g = random_graph(t.rng, t.nodes(), false, t.density(), t.cfg.min_weight,
                         t.cfg.max_weight);
  DistanceOracle o = all_pairs_distances(g);
  const int k = static_cast<int>(t.rng.uniform(1, t.cfg.max_pairs));
  const int d = static_cast<int>(t.rng.uniform(0, std::min(t.cfg.max_slack, k - 1)));
  const int spine = static_cast<int>(t.rng.uniform(0, k));
  SpcInstance inst{g, overlapping_pairs(t.rng, g, o, k, spine), k - d};
  t.v.instance = render_instance(inst);
  SearchLimits lim;
  lim.expansion_budget = t.cfg.budget;
  SpcOutcome brute = brute_force_spc(inst, o, lim);
  ReductionOutcome red = spc_via_dsp_reduction(inst, o, DspBackend::kBrute, lim);
  if (brute.status == SolveStatus::kBudgetExceeded ||
      red.outcome.status == SolveStatus::kBudgetExceeded) {
    return t.fail("budget exceeded");
  }
  t.count(feasible(brute) ? "feasible" : "infeasible");
  t.count(red.direct ? "direct" : "subsets");
  if (feasible(brute) != feasible(red.outcome)) {
    return t.fail(std::string("brute force ") + solve_status_name(brute.status) +
                  " but reduction " + solve_status_name(red.outcome.status));
  }
  if (feasible(red.outcome) && !validate_solution(inst, o, *red.outcome.solution).ok()) {
    t.fail("reduction solution is invalid");
  }
}

// ---- merges (undirected and DAG) -------------------------------------------

// Two rails joined by random rungs, mostly unit weights: lots of tied
// shortest paths. As a DAG the rails run left to right and rungs either way.
Graph ladder(Rng& rng, int n, bool dag) {
  const int cols = n / 2;
  std::vector<Edge> edges;
  auto top = [](int i) { return i; };
  auto bottom = [cols](int i) { return cols + i; };
  auto weight = [&] { return rng.chance(0.8) ? Weight{1} : Weight{2}; };
  for (int i = 0; i + 1 < cols; ++i) {
    edges.push_back({top(i), top(i + 1), weight()});
    edges.push_back({bottom(i), bottom(i + 1), weight()});
  }
  for (int i = 0; i < cols; ++i) {
    if (i != 0 && i != cols - 1 && !rng.chance(0.6)) continue;
    if (dag && rng.chance(0.5)) {
      edges.push_back({bottom(i), top(i), weight()});
    } else {
      edges.push_back({top(i), bottom(i), weight()});
    }
  }
  if (n % 2 == 1) edges.push_back({n - 1, static_cast<NodeId>(rng.uniform(0, n - 2)), 1});
  if (dag && n % 2 == 1) std::swap(edges.back().tail, edges.back().head);
  return Graph(dag, n, edges);
}

// A weighted line whose interior nodes can be bypassed by a detour node of the
// same total weight, ids shuffled. Solutions spread the line nodes over many
// paths, which is where merges have work to do.
struct Chain {
  Graph graph;
  std::vector<NodeId> line;
  std::vector<NodeId> detour;  // per line position, -1 when there is none
};

Chain bypass_chain(Rng& rng, int max_nodes, bool dag, double detour_p = 0.8, int min_line = 4) {
  const int m = static_cast<int>(
      rng.uniform(min_line, std::max(min_line, std::min(6, (max_nodes + 2) / 2))));
  std::vector<Edge> edges;
  std::vector<Weight> w(m - 1);
  for (int i = 0; i + 1 < m; ++i) {
    w[i] = rng.uniform(1, 3);
    edges.push_back({i, i + 1, w[i]});
  }
  std::vector<NodeId> detour(m, -1);
  int n = m;
  for (int i = 1; i + 1 < m && n < max_nodes; ++i) {
    if (!rng.chance(detour_p)) continue;
    const Weight total = w[i - 1] + w[i];
    const Weight first = rng.uniform(1, total - 1);
    edges.push_back({i - 1, n, first});
    edges.push_back({n, i + 1, total - first});
    detour[i] = n++;
  }
  std::vector<NodeId> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  rng.shuffle(label);
  for (Edge& e : edges) {
    e.tail = label[e.tail];
    e.head = label[e.head];
  }
  std::vector<NodeId> line(m);
  for (int i = 0; i < m; ++i) {
    line[i] = label[i];
    if (detour[i] >= 0) detour[i] = label[detour[i]];
  }
  return {Graph(dag, n, edges), line, detour};
}

// The line with position `skip` left out: cut off at an end, detoured inside.
Path skipping_path(const Chain& ch, std::size_t skip) {
  const std::size_t m = ch.line.size();
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == skip && (i == 0 || i + 1 == m)) continue;
    nodes.push_back(i == skip ? ch.detour[i] : ch.line[i]);
  }
  return Path(nodes);
}

// Every line node skipped by exactly one of k = |line| paths, c = k - 1: a
// solution in which no path holds all max-congestion nodes.
std::pair<SpcInstance, PathCollection> planted_chain_instance(Rng& rng, int max_nodes, bool dag,
                                                              int factor) {
  Chain ch = bypass_chain(rng, max_nodes, dag, 1.0, factor + 1);
  std::vector<Path> paths;
  std::vector<TerminalPair> pairs;
  for (std::size_t i = 0; i < ch.line.size(); ++i) {
    paths.push_back(skipping_path(ch, i));
    pairs.push_back({paths.back().front(), paths.back().back()});
  }
  const int k = static_cast<int>(pairs.size());
  return {SpcInstance{ch.graph, pairs, k - 1}, PathCollection(paths, !dag)};
}

// Random congestion-preserving swaps, so the merge starts from an arbitrary
// solution rather than the lexicographically first one.
PathCollection scramble(Rng& rng, PathCollection coll, int steps) {
  for (int step = 0; step < steps; ++step) {
    std::vector<SwapRecord> options;
    for (std::size_t p = 0; p < coll.size(); ++p) {
      for (std::size_t q = 0; q < coll.size(); ++q) {
        if (p == q) continue;
        for (NodeId a : coll[p].nodes()) {
          for (NodeId b : coll[p].nodes()) {
            if (!coll[p].before(a, b) || !coll[q].contains(a) || !coll[q].contains(b)) continue;
            if (!coll.undirected() && !coll[q].before(a, b)) continue;
            options.push_back({p, q, a, b});
          }
        }
      }
    }
    if (options.empty()) break;
    const SwapRecord rec = rng.pick(options);
    coll = subpath_swap(coll, rec.p, rec.q, rec.a, rec.b).collection;
  }
  return coll;
}

// Collections built to need real merging. On a bypass chain, each node of W
// is skipped by its own path (a detour, or a shortened end), so every
// `factor` nodes of W share a path once |W| > factor but no path holds all
// of W. On ladders W is grown greedily while the same property holds.
void free_merge(Trial& t, bool dag, int factor) {
  std::optional<Graph> graph;
  std::vector<Path> paths;
  std::vector<NodeId> W;
  if (t.rng.chance(0.6)) {
    Chain ch = bypass_chain(t.rng, t.cfg.max_nodes, dag);
    graph = ch.graph;
    const std::size_t m = ch.line.size();
    std::vector<std::size_t> skippable;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == 0 || i + 1 == m || ch.detour[i] >= 0) skippable.push_back(i);
    }
    t.rng.shuffle(skippable);
    const std::int64_t avail = static_cast<std::int64_t>(skippable.size());
    skippable.resize(static_cast<std::size_t>(t.rng.uniform(std::min<std::int64_t>(factor + 1, avail), avail)));
    for (std::size_t skip : skippable) {
      paths.push_back(skipping_path(ch, skip));
      W.push_back(ch.line[skip]);
    }
    // Bystanders: random shortest subpaths of the line.
    const int extra = static_cast<int>(t.rng.uniform(0, 2));
    for (int i = 0; i < extra; ++i) {
      std::int64_t lo = t.rng.uniform(0, static_cast<std::int64_t>(m) - 2);
      std::int64_t hi = t.rng.uniform(lo + 1, static_cast<std::int64_t>(m) - 1);
      paths.push_back(Path(std::vector<NodeId>(ch.line.begin() + lo, ch.line.begin() + hi + 1)));
    }
    t.rng.shuffle(paths);
  } else {
    graph = ladder(t.rng, std::max(4, t.nodes()), dag);
    DistanceOracle o = all_pairs_distances(*graph);
    const std::vector<TerminalPair> far = overlapping_pairs(t.rng, *graph, o, 1, 1);
    const Path spine = canonical_shortest_path(*graph, o, far[0].source, far[0].target);
    const std::int64_t len = static_cast<std::int64_t>(spine.size());
    const int k = static_cast<int>(t.rng.uniform(3, 8));
    for (int i = 0; i < k; ++i) {
      const std::int64_t lo = t.rng.uniform(0, std::min<std::int64_t>(1, len - 2));
      const std::int64_t hi = t.rng.uniform(std::max(len - 2, lo + 1), len - 1);
      paths.push_back(
          t.rng.pick(enumerate_shortest_paths(*graph, o, spine[lo], spine[hi], 32).paths));
    }
    std::vector<NodeId> pool;
    for (const Path& p : paths) pool.insert(pool.end(), p.nodes().begin(), p.nodes().end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    t.rng.shuffle(pool);
    const PathCollection probe(paths, !dag);
    for (NodeId v : pool) {
      W.push_back(v);
      if (!key_property_check(probe, W, factor).holds) W.pop_back();
    }
  }
  const Graph& g = *graph;
  const DistanceOracle o = all_pairs_distances(g);
  const PathCollection start(paths, !dag);
  t.v.instance += "free collection\n" + render_graph(g) + join_paths(start) + "W " +
                  node_list(W) + "\n";
  if (!key_property_check(start, W, factor).holds) {
    t.count("free_without_property");
    return;
  }
  bool covered = false;
  for (const Path& p : paths) covered = covered || p.contains_all(W);
  if (!covered) t.count("free_needs_merge");
  CollectionSupplier supplier;
  MergeResult res;
  try {
    res = dag ? merge_dag(g, o, start, W, supplier) : merge_undirected(g, o, start, W, supplier);
  } catch (const Error& e) {
    return t.fail(std::string("free collection: ") + e.what());
  }
  t.count("free_swaps", static_cast<std::int64_t>(res.trace.swap_count()));
  std::string why;
  if (congestion_map(res.paths) != congestion_map(start)) why = "congestion changed";
  if (!res.paths[res.index].contains_all(W)) why = "merged path misses part of W";
  if (replay(start, res.trace.events) != res.paths) why = "trace does not replay";
  for (std::size_t i = 0; i < res.paths.size(); ++i) {
    if (res.paths.terminals(i) != start.terminals(i)) why = "terminals changed";
    if (!validate_path(g, o, res.paths[i])) why = "path " + std::to_string(i) + " broken";
  }
  if (!why.empty()) t.fail("free collection: " + why);
}

void merge_trial(Trial& t, bool dag) {
  const int factor = dag ? 3 : 4;
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::optional<SpcInstance> inst;
    std::optional<PathCollection> planted;
    const std::int64_t family = t.rng.uniform(0, 3);
    if (family == 0 && (t.cfg.max_nodes + 2) / 2 >= factor + 1 && t.cfg.max_slack >= 1) {
      auto [i, p] = planted_chain_instance(t.rng, t.cfg.max_nodes, dag, factor);
      inst = std::move(i);
      planted = std::move(p);
    } else {
      const int n = std::max(4, t.nodes());
      Graph g = family == 1 ? bypass_chain(t.rng, t.cfg.max_nodes, dag).graph
                : family == 2 ? ladder(t.rng, n, dag)
                : dag ? random_dag(t.rng, n, t.density(), t.cfg.min_weight, t.cfg.max_weight)
                      : random_graph(t.rng, n, false, t.density(), t.cfg.min_weight,
                                     t.cfg.max_weight);
      DistanceOracle o = all_pairs_distances(g);
      // d = 0 makes every max-congestion node sit on every path; favour slack.
      const int d = t.rng.chance(0.8) ? t.cfg.max_slack
                                      : static_cast<int>(t.rng.uniform(0, t.cfg.max_slack));
      const int k = static_cast<int>(t.rng.uniform(factor * d + 1, factor * d + 3));
      const int spine = k - static_cast<int>(t.rng.uniform(0, 1));
      std::vector<TerminalPair> pairs = overlapping_pairs(t.rng, g, o, k, spine);
      inst = SpcInstance{std::move(g), std::move(pairs), k - d};
    }
    const Graph& g = inst->graph;
    const DistanceOracle o = all_pairs_distances(g);
    SearchLimits lim;
    lim.expansion_budget = t.cfg.budget;
    SpcOutcome sol = brute_force_spc(*inst, o, lim);
    if (sol.status != SolveStatus::kSolved) {
      if (planted) {
        t.v.instance = render_instance(*inst) + join_paths(*planted);
        return t.fail(std::string("brute force says ") + solve_status_name(sol.status) +
                      " on an instance with a planted solution");
      }
      t.count("unsolved_attempts");
      continue;
    }
    const PathCollection& base = planted ? *planted : sol.solution->paths;
    std::vector<NodeId> W = max_congestion_nodes(base, inst->c);
    if (W.size() < 2 && attempt + 1 < 60) {
      t.count("small_W_attempts");
      continue;
    }
    if (planted) t.count("planted");
    // Heavy scrambling tends to reassemble the full line on planted solutions.
    const int steps = planted ? static_cast<int>(t.rng.uniform(0, 2)) : 15;
    const PathCollection start = scramble(t.rng, PathCollection(base.paths(), !dag), steps);
    t.v.instance = render_instance(*inst) + join_paths(start) + "W " + node_list(W) + "\n";
    t.count("W_size", static_cast<std::int64_t>(W.size()));
    bool covered = false;
    for (const Path& p : start.paths()) covered = covered || p.contains_all(W);
    if (!covered) t.count("needs_merge");

    // Every `factor` max-congestion nodes share a solution path.
    KeyPropertyResult key = key_property_check(start, W, factor);
    if (!key.holds) return t.fail("key property fails on " + node_list(key.failing_subset));

    CollectionSupplier supplier;
    MergeResult res = dag ? merge_dag(g, o, start, W, supplier)
                          : merge_undirected(g, o, start, W, supplier);
    t.count("swaps", static_cast<std::int64_t>(res.trace.swap_count()));
    if (!validate_solution(*inst, o, SpcSolution{res.paths}).ok()) {
      return t.fail("merged collection is not a solution");
    }
    if (congestion_map(res.paths) != congestion_map(start)) return t.fail("congestion changed");
    if (!res.paths[res.index].contains_all(W)) return t.fail("merged path misses part of W");
    if (replay(start, res.trace.events) != res.paths) return t.fail("trace does not replay");
    for (std::size_t i = 1; i < res.trace.covered.size(); ++i) {
      const auto& before = res.trace.covered[i - 1];
      const auto& after = res.trace.covered[i];
      if (!std::includes(after.begin(), after.end(), before.begin(), before.end())) {
        return t.fail("covered set shrank");
      }
    }
    return free_merge(t, dag, factor);
  }
  t.v.vacuous = true;
}

// ---- directed roundtrip ----------------------------------------------------

// Planted digraph: a Hamiltonian chain stays shortest because every forward
// chord is at least as heavy as the chain it skips; backward edges are free.
Graph planted_digraph(Rng& rng, int n, double p, Weight wmax) {
  std::vector<NodeId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<Weight> prefix(n, 0);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    Weight w = rng.uniform(1, wmax);
    edges.push_back({order[i], order[i + 1], w});
    prefix[i + 1] = prefix[i] + w;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i + 1 || i == j || !rng.chance(p)) continue;
      Weight w = j > i ? prefix[j] - prefix[i] + rng.uniform(0, 2) : rng.uniform(1, wmax);
      edges.push_back({order[i], order[j], w});
    }
  }
  return Graph(true, n, edges);
}

void check_roundtrip(Trial& t, const Graph& g, const DistanceOracle& o,
                     const PathCollection& start, const std::vector<NodeId>& W) {
  TheoremSupplier supplier(g, o);
  RoundtripResult res = roundtrip_cover(g, o, start, W, supplier);
  const bool two = res.outcome.kind == CoverOutcome::Kind::kTwoPaths;
  t.count(two ? "two_paths" : "single_path");
  t.count("iterations", res.iterations);
  t.count("swaps", static_cast<std::int64_t>(res.trace.swap_count()));
  for (const std::string& line : res.case_log) {
    auto at = line.find("case=");
    if (at != std::string::npos) t.count("case." + line.substr(at + 5, line.find(' ', at) - at - 5));
  }
  if (res.iterations > static_cast<int>(W.size()) + 1) return t.fail("iteration cap exceeded");
  if (std::string why = check_cover(res.paths, res.outcome, W); !why.empty()) {
    return t.fail("invalid cover: " + why);
  }
  if (replay(start, res.trace.events) != res.paths) return t.fail("trace does not replay");
  // Swaps move congestion around but never change it; adds contribute their
  // own nodes.
  CongestionMap expect = congestion_map(start);
  std::vector<std::pair<NodeId, NodeId>> ends;
  for (std::size_t i = 0; i < start.size(); ++i) ends.push_back(start.terminals(i));
  for (const TraceEvent& e : res.trace.events) {
    if (const auto* add = std::get_if<AddRecord>(&e)) {
      for (NodeId v : add->path.nodes()) expect.add(v);
      ends.push_back({add->path.front(), add->path.back()});
    }
  }
  if (congestion_map(res.paths) != expect) return t.fail("congestion changed");
  for (std::size_t i = 0; i < res.paths.size(); ++i) {
    if (res.paths.terminals(i) != ends[i]) return t.fail("terminals changed");
    if (!validate_path(g, o, res.paths[i])) return t.fail("path " + std::to_string(i) + " broken");
  }
}

void directed_roundtrip(Trial& t) {
  if (t.v.index == 0) {
    Graph g = build_bidirectional_cycle(16, 11);
    t.v.instance = "bidirectional cycle n=16 a=11, W = all nodes\n";
    std::vector<NodeId> W(16);
    for (int i = 0; i < 16; ++i) W[i] = i;
    check_roundtrip(t, g, all_pairs_distances(g), PathCollection{}, W);
    if (t.v.pass && !t.v.stats.count("two_paths")) t.fail("expected two paths on the cycle");
    return;
  }
  const int n = static_cast<int>(t.rng.uniform(std::min(3, t.cfg.max_nodes), std::min(9, t.cfg.max_nodes)));
  const bool planted = t.rng.chance(0.75);
  Graph g = planted ? planted_digraph(t.rng, n, t.density(), t.cfg.max_weight)
                    : random_graph(t.rng, n, true, t.density(), t.cfg.min_weight, t.cfg.max_weight);
  DistanceOracle o = all_pairs_distances(g);
  std::vector<NodeId> W;
  const bool all = t.rng.chance(0.5);
  for (NodeId v = 0; v < n; ++v) {
    if (all || t.rng.chance(0.6)) W.push_back(v);
  }
  if (W.size() < 2) W = {0, 1};
  PathCollection start;
  const int seeds = static_cast<int>(t.rng.uniform(0, 3));
  for (int i = 0; i < seeds; ++i) {
    if (auto pr = random_pair(t.rng, o)) {
      start.add(canonical_shortest_path(g, o, pr->source, pr->target));
    }
  }
  t.v.instance = render_graph(g) + join_paths(start) + "W " + node_list(W) + "\n";
  if (!verify_local_precondition(o, 11, W).holds) {
    t.v.vacuous = true;
    t.count("precondition_fails");
    return;
  }
  check_roundtrip(t, g, o, start, W);
}

void dispatch(Trial& t) {
  switch (t.cfg.kind) {
    case CampaignKind::kSegmentLemma: return segment_lemma(t);
    case CampaignKind::kCycleLemma: return cycle_lemma(t);
    case CampaignKind::kExclusivity: return exclusivity(t);
    case CampaignKind::kSwapAlgebra: return swap_algebra(t);
    case CampaignKind::kBlowupSoundness: return blowup_soundness(t);
    case CampaignKind::kDagDsp: return dag_dsp_trial(t);
    case CampaignKind::kReductionEquivalence: return reduction_equivalence(t);
    case CampaignKind::kUndirectedMerge: return merge_trial(t, false);
    case CampaignKind::kDagMerge: return merge_trial(t, true);
    case CampaignKind::kDirectedRoundtrip: return directed_roundtrip(t);
  }
}

struct NameEntry {
  CampaignKind kind;
  const char* name;
  const char* alias;
};

constexpr NameEntry kNames[] = {
    {CampaignKind::kDagMerge, "dag-merge", "dag"},
    {CampaignKind::kUndirectedMerge, "undirected-merge", "undirected"},
    {CampaignKind::kDirectedRoundtrip, "directed-roundtrip", "directed"},
    {CampaignKind::kReductionEquivalence, "reduction-equivalence", "reduction"},
    {CampaignKind::kSegmentLemma, "segment-lemma", "segments"},
    {CampaignKind::kCycleLemma, "cycle-lemma", "cycle-lemma"},
    {CampaignKind::kExclusivity, "exclusivity", "exclusivity"},
    {CampaignKind::kSwapAlgebra, "swap-algebra", "swaps"},
    {CampaignKind::kBlowupSoundness, "blowup-soundness", "blowup"},
    {CampaignKind::kDagDsp, "dag-dsp", "dag-dsp"},
};

}  // namespace

const char* campaign_name(CampaignKind kind) {
  for (const NameEntry& e : kNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

std::optional<CampaignKind> parse_campaign_kind(const std::string& name) {
  for (const NameEntry& e : kNames) {
    if (name == e.name || name == e.alias) return e.kind;
  }
  return std::nullopt;
}

CampaignConfig default_campaign(CampaignKind kind) {
  CampaignConfig c;
  c.kind = kind;
  switch (kind) {
    case CampaignKind::kSegmentLemma: c.trials = 500; break;
    case CampaignKind::kCycleLemma: c.trials = 200; c.min_nodes = 6; break;
    case CampaignKind::kExclusivity: c.trials = 200; break;
    case CampaignKind::kSwapAlgebra: c.trials = 1000; break;
    case CampaignKind::kBlowupSoundness: c.trials = 200; c.max_nodes = 8; c.max_pairs = 3; break;
    case CampaignKind::kDagDsp: c.trials = 100; c.max_pairs = 3; break;
    case CampaignKind::kReductionEquivalence: c.trials = 200; c.max_pairs = 6; break;
    case CampaignKind::kUndirectedMerge: c.trials = 200; c.min_nodes = 4; break;
    case CampaignKind::kDagMerge: c.trials = 200; c.min_nodes = 4; break;
    case CampaignKind::kDirectedRoundtrip: c.trials = 200; c.max_nodes = 9; c.max_weight = 4; break;
  }
  return c;
}

std::size_t CampaignResult::passes() const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const TrialVerdict& v) { return v.pass; }));
}

std::size_t CampaignResult::failures() const { return verdicts.size() - passes(); }

std::size_t CampaignResult::vacuous() const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(), [](const TrialVerdict& v) { return v.vacuous; }));
}

std::map<std::string, std::int64_t> CampaignResult::stats() const {
  std::map<std::string, std::int64_t> total;
  for (const TrialVerdict& v : verdicts) {
    for (const auto& [key, n] : v.stats) total[key] += n;
  }
  return total;
}

const TrialVerdict* CampaignResult::first_failure() const {
  for (const TrialVerdict& v : verdicts) {
    if (!v.pass) return &v;
  }
  return nullptr;
}

TrialVerdict run_trial(const CampaignConfig& config, std::size_t index) {
  TrialVerdict v;
  v.index = index;
  v.seed = derive_seed(config.seed, index);
  Trial t{config, Rng(v.seed), v};
  try {
    dispatch(t);
  } catch (const Error& e) {
    t.fail(e.what());
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  return v;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.trials < 0) throw Error(ErrorCode::kInvalidArgument, "negative trial count");
  if (config.min_nodes < 1 || config.max_nodes < config.min_nodes || config.max_pairs < 1 ||
      config.max_slack < 0 || config.min_weight < 1 || config.max_weight < config.min_weight) {
    throw Error(ErrorCode::kInvalidArgument, "bad campaign bounds");
  }
  CampaignResult result;
  result.config = config;
  result.verdicts.resize(static_cast<std::size_t>(config.trials));
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, config.trials));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.verdicts.size(); i = next++) {
      result.verdicts[i] = run_trial(config, i);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return result;
}

std::string render_verdict(const TrialVerdict& v) {
  std::ostringstream os;
  os << "trial " << v.index << " seed " << v.seed << ": "
     << (v.pass ? (v.vacuous ? "vacuous" : "pass") : "FAIL");
  if (!v.detail.empty()) os << " (" << v.detail << ")";
  os << "\n";
  return os.str();
}

std::string render_campaign(const CampaignResult& r) {
  std::ostringstream os;
  os << "campaign " << campaign_name(r.config.kind) << " seed " << r.config.seed << " trials "
     << r.verdicts.size() << ": " << r.passes() << " passed, " << r.failures() << " failed, "
     << r.vacuous() << " vacuous\n";
  for (const auto& [key, n] : r.stats()) os << "  " << key << " = " << n << "\n";
  if (const TrialVerdict* f = r.first_failure()) {
    os << "first failure: " << render_verdict(*f);
    os << "reproduce: --seed " << r.config.seed << " --trial " << f->index << "\n";
    os << f->instance;
  }
  return os.str();
}

}  // namespace spc
