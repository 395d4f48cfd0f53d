#include "spc/roundtrip.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "spc/error.h"

namespace spc {

const char* path_kind_name(PathKind kind) {
  switch (kind) {
    case PathKind::kTrivial: return "trivial";
    case PathKind::kReversing: return "reversing";
    case PathKind::kNonReversing: return "non-reversing";
  }
  return "unknown";
}

int SegmentPartition::segment(NodeId v) const {
  for (const auto& [node, seg] : labels) {
    if (node == v) return seg;
  }
  return 0;
}

namespace {

std::string join(const std::vector<NodeId>& nodes) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) out << (i ? "," : "") << nodes[i];
  out << "}";
  return out.str();
}

std::vector<NodeId> unique_sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::kStructuralInconsistency, what);
}

struct Profile {
  bool back_front;   // b -> a -> w
  bool front_back;   // w -> b -> a
  bool reversing;    // b -> w -> a
};

}  // namespace

SegmentPartition classify_segments(const Path& path, const std::vector<NodeId>& Wp,
                                   const DistanceOracle& oracle) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "empty path");
  for (NodeId w : Wp) {
    if (!path.contains(w)) throw Error(ErrorCode::kInvalidArgument, "marked node not on path");
  }
  const NodeId a = path.front();
  const NodeId b = path.back();
  const std::set<NodeId> marked(Wp.begin(), Wp.end());

  SegmentPartition out;
  std::vector<NodeId> interior;
  std::vector<Profile> profile;
  for (NodeId w : path.nodes()) {
    if (w == a || w == b || !marked.count(w)) continue;
    interior.push_back(w);
    profile.push_back({is_shortest_path_ordering(oracle, {b, a, w}),
                       is_shortest_path_ordering(oracle, {w, b, a}),
                       is_shortest_path_ordering(oracle, {b, w, a})});
  }
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const Profile& pr = profile[i];
    if (!pr.back_front && !pr.front_back && !pr.reversing) {
      out.kind = PathKind::kTrivial;
      out.witness = interior[i];
      break;
    }
  }

  std::optional<std::size_t> last1, first3;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    if (profile[i].back_front && !profile[i].front_back) last1 = i;
    if (!first3 && profile[i].front_back && !profile[i].back_front) first3 = i;
  }
  if (last1) out.w1 = interior[*last1];
  if (first3) out.w2 = interior[*first3];

  out.labels.push_back({a, 1});
  bool any_reversing = false;
  bool any_both = false;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    int seg = 2;
    if (last1 && i <= *last1) seg = 1;
    if (first3 && i >= *first3) seg = (seg == 1) ? -1 : 3;
    out.labels.push_back({interior[i], seg});
    if (out.kind == PathKind::kTrivial) continue;
    const Profile& pr = profile[i];
    const std::string who = "node " + std::to_string(interior[i]) + " on path " + to_string(path);
    if (seg == -1) inconsistent("segments 1 and 3 overlap at " + who);
    if (seg == 1 && !(pr.back_front && !pr.front_back && !pr.reversing)) {
      inconsistent("segment 1 profile broken at " + who);
    }
    if (seg == 3 && !(pr.front_back && !pr.back_front && !pr.reversing)) {
      inconsistent("segment 3 profile broken at " + who);
    }
    if (seg == 2) {
      if (pr.reversing && !pr.back_front && !pr.front_back) {
        any_reversing = true;
      } else if (pr.back_front && pr.front_back && !pr.reversing) {
        any_both = true;
      } else {
        inconsistent("segment 2 profile broken at " + who);
      }
    }
  }
  if (a != b) out.labels.push_back({b, 3});
  if (out.kind == PathKind::kTrivial) return out;
  if (any_reversing && any_both) inconsistent("segment 2 mixes both kinds on " + to_string(path));
  out.kind = any_reversing ? PathKind::kReversing : PathKind::kNonReversing;
  return out;
}

TrapPair trapping_nodes(NodeId v, const std::vector<NodeId>& Wp, NodeId a,
                        const DistanceOracle& oracle) {
  if (Wp.empty()) throw Error(ErrorCode::kInvalidArgument, "no marked nodes");
  const Weight dv = oracle.dist(a, v);
  std::optional<NodeId> low, high;
  NodeId farthest = Wp.front();
  auto better = [](Weight d1, NodeId n1, Weight d2, NodeId n2, bool larger) {
    if (d1 != d2) return larger ? d1 > d2 : d1 < d2;
    return n1 < n2;
  };
  for (NodeId x : Wp) {
    const Weight dx = oracle.dist(a, x);
    if (better(dx, x, oracle.dist(a, farthest), farthest, true)) farthest = x;
    if (dx <= dv && (!low || better(dx, x, oracle.dist(a, *low), *low, true))) low = x;
    if (dx >= dv && (!high || better(dx, x, oracle.dist(a, *high), *high, false))) high = x;
  }
  TrapPair out{a, farthest};
  if (low) out.low = *low; else out.low_clamped = true;
  if (high) out.high = *high; else out.high_clamped = true;
  return out;
}

namespace {

std::size_t fetch_or_throw(Supplier& supplier, Workspace& ws, const OrderQuery& query) {
  auto hit = supplier.find(ws, query);
  if (!hit) throw Error(ErrorCode::kSupplierExhausted, "no path contains " + describe(query));
  return *hit;
}

void require_pair_order(const Path& path, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  for (const auto& [x, y] : pairs) {
    if (x != y && !path.before(x, y)) {
      throw Error(ErrorCode::kAssumptionViolated, "path " + to_string(path) + " does not visit " +
                                                      std::to_string(x) + " before " +
                                                      std::to_string(y));
    }
  }
}

}  // namespace

std::size_t critical_node_reroute(Workspace& ws, const CriticalSpec& spec, Supplier& supplier,
                                  const DistanceOracle& oracle,
                                  const std::function<void(const Path&)>& on_fetch) {
  std::vector<NodeId> T = spec.extra;
  for (const auto& [x, y] : spec.pairs) {
    T.push_back(x);
    T.push_back(y);
  }
  T = unique_sorted(T);
  if (T.size() > 9) throw Error(ErrorCode::kInvalidArgument, "more than 9 critical nodes");

  // Non-critical targets grouped by the pair whose shortest path they lie on,
  // each group sorted by distance from its a_i.
  std::vector<std::pair<std::size_t, NodeId>> labels;
  for (NodeId x : unique_sorted(spec.target)) {
    if (std::binary_search(T.begin(), T.end(), x)) continue;
    std::optional<std::size_t> group;
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
      const auto& [ai, bi] = spec.pairs[i];
      if (!on_shortest_path(oracle, ai, x, bi)) continue;
      if (group) {
        throw Error(ErrorCode::kPrecondition,
                    "node " + std::to_string(x) + " lies on shortest paths of two pairs");
      }
      group = i;
    }
    if (!group) {
      throw Error(ErrorCode::kPrecondition,
                  "node " + std::to_string(x) + " lies on no pair's shortest path");
    }
    labels.push_back({*group, x});
  }
  std::sort(labels.begin(), labels.end(), [&](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    NodeId a = spec.pairs[l.first].first;
    return oracle.dist(a, l.second) < oracle.dist(a, r.second);
  });

  auto fetch = [&](std::vector<NodeId> extra) {
    std::vector<NodeId> nodes = T;
    nodes.insert(nodes.end(), extra.begin(), extra.end());
    std::size_t i = fetch_or_throw(supplier, ws, {unique_sorted(nodes), {}});
    if (on_fetch) on_fetch(ws.paths[i]);
    require_pair_order(ws.paths[i], spec.pairs);
    return i;
  };

  std::size_t p = labels.empty() ? fetch({}) : fetch({labels.front().second});
  for (std::size_t m = 1; m < labels.size(); ++m) {
    const auto [j, x] = labels[m];
    if (ws.paths[p].contains(x)) continue;
    const NodeId aj = spec.pairs[j].first;
    const NodeId prev = labels[m - 1].first == j ? labels[m - 1].second : aj;
    std::size_t q = fetch({prev, x});
    for (std::size_t i = 0; i < j; ++i) {
      const auto [ai, bi] = spec.pairs[i];
      if (ai == bi) continue;
      require_pair_order(ws.paths[p], {spec.pairs[i]});
      require_pair_order(ws.paths[q], {spec.pairs[i]});
      ws.swap(p, q, ai, bi);
    }
    if (prev != aj) {
      require_pair_order(ws.paths[p], {{aj, prev}});
      require_pair_order(ws.paths[q], {{aj, prev}});
      ws.swap(p, q, aj, prev);
    }
    p = q;
  }
  std::vector<NodeId> all = T;
  all.insert(all.end(), spec.target.begin(), spec.target.end());
  if (!ws.paths[p].contains_all(all)) {
    inconsistent("reroute ended on " + to_string(ws.paths[p]) + " which misses part of " +
                 join(unique_sorted(all)));
  }
  return p;
}

MergeResult critical_node_reroute(PathCollection coll, const CriticalSpec& spec,
                                  Supplier& supplier, const DistanceOracle& oracle) {
  Workspace ws{std::move(coll), {}};
  std::size_t p = critical_node_reroute(ws, spec, supplier, oracle);
  return {std::move(ws.paths), p, std::move(ws.trace)};
}

namespace {

bool has_beginning(Supplier& supplier, const Workspace& ws, NodeId v, NodeId x, NodeId y) {
  return supplier.exists(ws, {{v, x, y}, {{v, x, y}}});
}

bool has_ending(Supplier& supplier, const Workspace& ws, NodeId v, NodeId x, NodeId y) {
  return supplier.exists(ws, {{v, x, y}, {{x, y, v}}});
}

}  // namespace

std::pair<std::size_t, std::size_t> find_cyclic_break(const std::vector<NodeId>& x, NodeId v,
                                                      Supplier& supplier, const Workspace& ws,
                                                      const DistanceOracle& oracle) {
  const std::size_t m = x.size();
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "cyclic list needs two nodes");
  std::size_t nearest = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (oracle.dist(v, x[i]) < oracle.dist(v, x[nearest])) nearest = i;
  }
  const std::size_t s = (nearest + m - 1) % m;
  auto gap = [&](std::size_t i) { return std::make_pair(x[i], x[(i + 1) % m]); };
  {
    auto [xs, xs1] = gap(s);
    if (!has_ending(supplier, ws, v, xs, xs1) && !has_beginning(supplier, ws, v, xs, xs1)) {
      throw Error(ErrorCode::kPrecondition, "neither a beginning nor an ending path at gap " +
                                                std::to_string(xs) + "," + std::to_string(xs1));
    }
  }
  for (std::size_t r = 1; r < m; ++r) {
    const std::size_t t = (s + r) % m;
    auto [xt, xt1] = gap(t);
    if (has_ending(supplier, ws, v, xt, xt1)) continue;
    if (!has_beginning(supplier, ws, v, xt, xt1)) {
      throw Error(ErrorCode::kPrecondition, "neither a beginning nor an ending path at gap " +
                                                std::to_string(xt) + "," + std::to_string(xt1));
    }
    return {s, t};
  }
  throw Error(ErrorCode::kPrecondition, "no break exists: every gap has an ending path");
}

namespace {

std::vector<NodeId> w_nodes_in_order(const Path& path, const std::set<NodeId>& W) {
  std::vector<NodeId> out;
  for (NodeId v : path.nodes()) {
    if (W.count(v)) out.push_back(v);
  }
  return out;
}

// Every order of a, b, v except b -> v -> a.
void permutations_except(NodeId a, NodeId b, NodeId v, std::vector<std::vector<NodeId>>& out) {
  std::vector<NodeId> base{a, b, v};
  std::sort(base.begin(), base.end());
  do {
    if (!(base[0] == b && base[1] == v && base[2] == a)) out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
}

class Roundtrip {
 public:
  Roundtrip(const DistanceOracle& oracle, PathCollection coll, std::vector<NodeId> W,
            Supplier& supplier)
      : oracle_(oracle), supplier_(supplier), W_(std::move(W)), Wset_(W_.begin(), W_.end()) {
    ws_.paths = std::move(coll);
  }

  RoundtripResult run();

 private:
  std::size_t best_path() const;
  std::size_t coverage(std::size_t i) const { return w_nodes_in_order(ws_.paths[i], Wset_).size(); }
  void log(const std::string& line) { log_.push_back("iteration=" + std::to_string(iteration_) + " " + line); }
  std::vector<NodeId> critical_set(std::vector<NodeId> nodes, NodeId v) const;

  bool simple_insertion(std::size_t p);
  bool trivial_insertion(std::size_t p, const SegmentPartition& seg);
  void reversing_case(std::size_t p, const SegmentPartition& seg);
  bool easy_non_reversing(std::size_t p);
  std::optional<NodeId> case_one_violator();
  void hard_non_reversing(std::size_t p, NodeId v);
  std::optional<RoundtripResult> create_two_paths(std::size_t p);
  RoundtripResult finish(CoverOutcome outcome);

  const DistanceOracle& oracle_;
  Supplier& supplier_;
  Workspace ws_;
  std::vector<NodeId> W_;
  std::set<NodeId> Wset_;
  std::vector<std::string> log_;
  int iteration_ = 0;

  // Per-iteration state.
  NodeId a_ = 0;
  NodeId b_ = 0;
  std::vector<NodeId> marked_;   // W' in path order
  std::vector<NodeId> missing_;  // W \ W', ascending
  std::vector<TrapPair> traps_;  // parallel to missing_
};

std::size_t Roundtrip::best_path() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < ws_.paths.size(); ++i) {
    if (coverage(i) > coverage(best)) best = i;
  }
  return best;
}

std::vector<NodeId> Roundtrip::critical_set(std::vector<NodeId> nodes, NodeId v) const {
  auto it = std::find(missing_.begin(), missing_.end(), v);
  const TrapPair& trap = traps_[it - missing_.begin()];
  nodes.push_back(v);
  nodes.push_back(trap.low);
  nodes.push_back(trap.high);
  return unique_sorted(nodes);
}

RoundtripResult Roundtrip::finish(CoverOutcome outcome) {
  RoundtripResult out;
  out.paths = std::move(ws_.paths);
  out.outcome = outcome;
  out.trace = std::move(ws_.trace);
  out.case_log = std::move(log_);
  out.iterations = iteration_;
  return out;
}

// Case 2: a path with a->b->v, v->a->b or trap1->v->trap2 lets v in directly.
bool Roundtrip::simple_insertion(std::size_t p) {
  for (std::size_t i = 0; i < missing_.size(); ++i) {
    const NodeId v = missing_[i];
    const TrapPair& trap = traps_[i];
    if (a_ == b_) {
      if (auto q = supplier_.find(ws_, {{a_, v}, {}})) {
        log("case=2 v=" + std::to_string(v) + " via=single");
        return true;
      }
      continue;
    }
    if (auto q = supplier_.find(ws_, {{a_, b_, v}, {{a_, b_, v}, {v, a_, b_}}})) {
      ws_.swap(p, *q, a_, b_);
      log("case=2 v=" + std::to_string(v) + " via=outside");
      return true;
    }
    if (trap.low != trap.high && trap.low != v && trap.high != v) {
      if (auto q = supplier_.find(ws_, {{trap.low, v, trap.high}, {{trap.low, v, trap.high}}})) {
        ws_.swap(p, *q, trap.low, trap.high);
        log("case=2 v=" + std::to_string(v) + " via=between K=" + join({trap.low, v, trap.high}));
        return true;
      }
    }
  }
  return false;
}

// A trivial P[a,b] forces every path through a, b and the witness to run
// a->b, which would have been a case-2 path. Reaching this means the supplier
// lacks the path the key property promises, or the case-2 search is wrong.
bool Roundtrip::trivial_insertion(std::size_t, const SegmentPartition& seg) {
  const NodeId v = missing_.front();
  std::vector<NodeId> K = critical_set({a_, b_, *seg.witness}, v);
  auto q = supplier_.find(ws_, {K, {}});
  if (!q) throw Error(ErrorCode::kSupplierExhausted, "no path contains " + join(K));
  inconsistent("P[a,b] is trivial w.r.t. " + std::to_string(*seg.witness) + " yet path " +
               to_string(ws_.paths[*q]) + " was not found as a simple insertion");
}

// Case 3.
void Roundtrip::reversing_case(std::size_t p, const SegmentPartition& seg) {
  const NodeId v = missing_.front();
  NodeId w = a_;
  NodeId z = b_;
  std::vector<NodeId> middle;
  for (const auto& [node, s] : seg.labels) {
    if (s == 1) w = node;
    if (s == 2) middle.push_back(node);
  }
  for (const auto& [node, s] : seg.labels) {
    if (s == 3) {
      z = node;
      break;
    }
  }
  if (middle.empty()) inconsistent("reversing path without segment-2 nodes");
  auto by_dist = [&](NodeId l, NodeId r) {
    Weight dl = oracle_.dist(b_, l), dr = oracle_.dist(b_, r);
    return dl != dr ? dl < dr : l < r;
  };
  NodeId pnode = *std::min_element(middle.begin(), middle.end(), by_dist);
  NodeId qnode = *std::max_element(middle.begin(), middle.end(), by_dist);
  std::vector<NodeId> K = critical_set({a_, b_, w, z, pnode, qnode}, v);
  std::vector<NodeId> target = marked_;
  target.push_back(v);
  CriticalSpec spec{{{z, b_}, {pnode, qnode}, {a_, w}}, K, target};
  log("case=3 v=" + std::to_string(v) + " K=" + join(K));
  (void)p;
  critical_node_reroute(ws_, spec, supplier_, oracle_);
}

// Case 4: consecutive marked u, w that every path through u, w, v visits as
// w before u.
bool Roundtrip::easy_non_reversing(std::size_t) {
  for (NodeId v : missing_) {
    for (std::size_t i = 0; i + 1 < marked_.size(); ++i) {
      const NodeId u = marked_[i];
      const NodeId w = marked_[i + 1];
      if (supplier_.exists(ws_, {{u, w, v}, {{u, w}}})) continue;
      std::vector<NodeId> K = unique_sorted({v, a_, b_, u, w});
      std::vector<NodeId> target = marked_;
      target.push_back(v);
      CriticalSpec spec{{{w, b_}, {a_, u}}, K, target};
      log("case=4 v=" + std::to_string(v) + " K=" + join(K));
      critical_node_reroute(ws_, spec, supplier_, oracle_);
      return true;
    }
  }
  return false;
}

// Case 1 holds unless some v has a path through {a,b,v} ∪ trap(v) that does
// not run b->v->a.
std::optional<NodeId> Roundtrip::case_one_violator() {
  for (NodeId v : missing_) {
    OrderQuery query{critical_set({a_, b_}, v), {}};
    permutations_except(a_, b_, v, query.patterns);
    if (supplier_.exists(ws_, query)) return v;
  }
  return std::nullopt;
}

// Case 5.
void Roundtrip::hard_non_reversing(std::size_t, NodeId v) {
  const std::vector<NodeId>& x = marked_;
  const std::size_t m = x.size();
  auto [s, t] = find_cyclic_break(x, v, supplier_, ws_, oracle_);
  auto at = [&](std::size_t i) { return x[i % m]; };
  const NodeId xs = at(s), xs1 = at(s + 1), xt = at(t), xt1 = at(t + 1);
  std::vector<NodeId> K = critical_set({a_, b_, xs, xs1, xt, xt1}, v);

  auto claims = [&](const Path& q) {
    if (xs != xt1 && q.before(xs, xt1)) {
      if (!(q.before(xs, v) && q.before(v, xt1))) {
        throw Error(ErrorCode::kClaimFailed, "v=" + std::to_string(v) + " is not between " +
                                                 std::to_string(xs) + " and " +
                                                 std::to_string(xt1) + " on " + to_string(q));
      }
      inconsistent("case 5(a) reached on " + to_string(q));
    }
    if (xs1 != xt && !q.before(xs1, xt)) {
      throw Error(ErrorCode::kClaimFailed, std::to_string(xs1) + " does not precede " +
                                               std::to_string(xt) + " on " + to_string(q));
    }
  };
  std::size_t qi = fetch_or_throw(supplier_, ws_, {K, {}});
  claims(ws_.paths[qi]);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::string subcase;
  if (s == m - 1 || t == m - 1) {
    subcase = "1";
    pairs = {{xt1, xs}, {xs1, xt}};
  } else if (t < s) {
    subcase = "2";
    pairs = {{a_, xt}, {xt1, xs}, {xs1, b_}};
  } else {
    subcase = "3";
    pairs = {{a_, xs}, {xs1, xt}, {xt1, b_}};
  }
  std::vector<NodeId> target = marked_;
  target.push_back(v);
  CriticalSpec spec{pairs, K, target};
  log("case=5b." + subcase + " v=" + std::to_string(v) + " s=" + std::to_string(s) +
      " t=" + std::to_string(t) + " K=" + join(K));
  critical_node_reroute(ws_, spec, supplier_, oracle_, claims);
}

std::optional<RoundtripResult> Roundtrip::create_two_paths(std::size_t p) {
  const NodeId v = missing_.front();
  std::vector<NodeId> K = critical_set({a_, b_}, v);
  CriticalSpec spec{{{b_, a_}}, K, missing_};
  log("case=1 v=" + std::to_string(v) + " K=" + join(K));
  const std::size_t q = critical_node_reroute(ws_, spec, supplier_, oracle_);
  std::vector<NodeId> wq = w_nodes_in_order(ws_.paths[q], Wset_);
  if (wq.front() == b_ && wq.back() == a_) {
    return finish({CoverOutcome::Kind::kTwoPaths, p, q, true});
  }
  if (supplier_.mode() == SupplierMode::kTheorem) {
    // Every shortest path is available, in particular the b..a stretch of q.
    std::size_t r = ws_.add(subpath(ws_.paths[q], b_, a_));
    log("case=1 trimmed path " + std::to_string(q) + " to its " + std::to_string(b_) + ".." +
        std::to_string(a_) + " stretch");
    return finish({CoverOutcome::Kind::kTwoPaths, p, r, true});
  }
  if (wq.size() > marked_.size()) {
    log("case=1 boundary mismatch on path " + std::to_string(q) + "; continuing from it");
    return std::nullopt;
  }
  return finish({CoverOutcome::Kind::kTwoPaths, p, q, false});
}

RoundtripResult Roundtrip::run() {
  if (W_.empty()) throw Error(ErrorCode::kInvalidArgument, "W is empty");
  bool seeded = false;
  for (const Path& path : ws_.paths.paths()) {
    if (!w_nodes_in_order(path, Wset_).empty()) seeded = true;
  }
  if (!seeded) fetch_or_throw(supplier_, ws_, {{W_.front()}, {}});

  const int cap = static_cast<int>(W_.size()) + 1;
  std::size_t previous = 0;
  while (true) {
    if (++iteration_ > cap) {
      throw Error(ErrorCode::kIterationCap, "no progress within " + std::to_string(cap) +
                                                " iterations");
    }
    const std::size_t p = best_path();
    marked_ = w_nodes_in_order(ws_.paths[p], Wset_);
    ws_.trace.covered.push_back(unique_sorted(marked_));
    if (marked_.size() <= previous) {
      inconsistent("coverage did not grow past " + std::to_string(previous));
    }
    previous = marked_.size();
    if (marked_.size() == W_.size()) {
      log("done single path " + std::to_string(p));
      return finish({CoverOutcome::Kind::kSinglePath, p, p, true});
    }
    a_ = marked_.front();
    b_ = marked_.back();
    missing_.clear();
    for (NodeId v : W_) {
      if (!ws_.paths[p].contains(v)) missing_.push_back(v);
    }
    traps_.clear();
    for (NodeId v : missing_) traps_.push_back(trapping_nodes(v, marked_, a_, oracle_));

    if (simple_insertion(p)) continue;
    SegmentPartition seg = classify_segments(subpath(ws_.paths[p], a_, b_), marked_, oracle_);
    if (seg.kind == PathKind::kTrivial) {
      trivial_insertion(p, seg);
      continue;
    }
    if (seg.kind == PathKind::kReversing) {
      reversing_case(p, seg);
      continue;
    }
    if (easy_non_reversing(p)) continue;
    if (auto v = case_one_violator()) {
      hard_non_reversing(p, *v);
      continue;
    }
    if (auto done = create_two_paths(p)) return std::move(*done);
  }
}

}  // namespace

RoundtripResult roundtrip_cover(const Graph& graph, const DistanceOracle& oracle,
                                PathCollection coll, std::vector<NodeId> W, Supplier& supplier) {
  if (!graph.directed()) throw Error(ErrorCode::kUnsupportedGraph, "graph is undirected");
  W = unique_sorted(std::move(W));
  for (NodeId v : W) {
    if (!graph.valid_node(v)) throw Error(ErrorCode::kInvalidArgument, "W node out of range");
  }
  Roundtrip run(oracle, std::move(coll), std::move(W), supplier);
  return run.run();
}

std::string check_cover(const PathCollection& paths, const CoverOutcome& outcome,
                        const std::vector<NodeId>& W) {
  const std::set<NodeId> Wset(W.begin(), W.end());
  if (outcome.first >= paths.size() || outcome.second >= paths.size()) return "index out of range";
  const Path& p = paths[outcome.first];
  if (outcome.kind == CoverOutcome::Kind::kSinglePath) {
    return p.contains_all(W) ? "" : "single path misses part of W";
  }
  const Path& q = paths[outcome.second];
  std::vector<NodeId> wp = w_nodes_in_order(p, Wset);
  std::vector<NodeId> wq = w_nodes_in_order(q, Wset);
  if (wp.empty() || wq.empty()) return "a path holds no W node";
  const NodeId a = wp.front();
  const NodeId b = wp.back();
  std::set<NodeId> seen(wp.begin(), wp.end());
  if (outcome.exact_boundary) {
    if (wq.front() != b || wq.back() != a) return "W-boundaries do not match";
    seen.insert(wq.begin(), wq.end());
  } else {
    if (!q.before(b, a)) return "second path does not run from b to a";
    Path stretch = subpath(q, b, a);
    for (NodeId v : stretch.nodes()) {
      if (Wset.count(v)) seen.insert(v);
    }
  }
  return seen.size() == Wset.size() ? "" : "paths miss part of W";
}

}  // namespace spc
