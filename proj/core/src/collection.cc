#include "spc/collection.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "spc/error.h"

namespace spc {

bool validate_path(const Graph& graph, const DistanceOracle& oracle, const Path& path) {
  if (path.empty()) return false;
  std::set<NodeId> seen;
  for (NodeId v : path.nodes()) {
    if (!graph.valid_node(v) || !seen.insert(v).second) return false;
  }
  Weight w = path_weight(graph, path);
  return w != kUnreachable && w == oracle.dist(path.front(), path.back());
}

namespace {

// The a..b stretch of `path` in its stored direction, plus its index range.
struct Segment {
  std::size_t lo;
  std::size_t hi;
  bool forward;  // a at lo
};

Segment locate(const Path& path, NodeId a, NodeId b, bool undirected, const char* which) {
  auto pa = path.position(a);
  auto pb = path.position(b);
  if (!pa || !pb) {
    throw Error(ErrorCode::kInvalidArgument, std::string("swap node missing from path ") + which);
  }
  if (*pa < *pb) return {*pa, *pb, true};
  if (undirected && *pb < *pa) return {*pb, *pa, false};
  throw Error(ErrorCode::kInvalidArgument,
              std::string("swap nodes out of order on path ") + which);
}

Path splice(const Path& host, const Segment& at, const Path& donor, const Segment& from) {
  std::vector<NodeId> piece(donor.nodes().begin() + from.lo, donor.nodes().begin() + from.hi + 1);
  if (at.forward != from.forward) std::reverse(piece.begin(), piece.end());
  std::vector<NodeId> nodes(host.nodes().begin(), host.nodes().begin() + at.lo);
  nodes.insert(nodes.end(), piece.begin(), piece.end());
  nodes.insert(nodes.end(), host.nodes().begin() + at.hi + 1, host.nodes().end());
  return Path(std::move(nodes));
}

}  // namespace

SwapResult subpath_swap(const PathCollection& coll, std::size_t p, std::size_t q, NodeId a,
                        NodeId b) {
  if (p >= coll.size() || q >= coll.size()) {
    throw Error(ErrorCode::kInvalidArgument, "swap path index out of range");
  }
  if (p == q) throw Error(ErrorCode::kInvalidArgument, "swap needs two distinct paths");
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "swap needs a strictly before b");
  Segment sp = locate(coll[p], a, b, coll.undirected(), "p");
  Segment sq = locate(coll[q], a, b, coll.undirected(), "q");
  PathCollection out = coll;
  out.replace(p, splice(coll[p], sp, coll[q], sq));
  out.replace(q, splice(coll[q], sq, coll[p], sp));
  return {std::move(out), {p, q, a, b}};
}

int CongestionMap::count(NodeId v) const {
  auto it = counts_.find(v);
  return it == counts_.end() ? 0 : it->second;
}

int CongestionMap::max() const {
  int best = 0;
  for (const auto& [v, c] : counts_) best = std::max(best, c);
  return best;
}

CongestionMap congestion_map(const PathCollection& coll) {
  CongestionMap map;
  for (const Path& path : coll.paths()) {
    for (NodeId v : path.nodes()) map.add(v);
  }
  return map;
}

std::vector<NodeId> max_congestion_nodes(const PathCollection& coll, int c) {
  if (c < 1) throw Error(ErrorCode::kInvalidArgument, "congestion bound must be positive");
  std::vector<NodeId> out;
  const CongestionMap cong = congestion_map(coll);
  for (const auto& [v, count] : cong.counts()) {
    if (count > c) {
      throw Error(ErrorCode::kCongestionViolation,
                  "node " + std::to_string(v) + " lies on " + std::to_string(count) +
                      " paths, bound is " + std::to_string(c));
    }
    if (count == c) out.push_back(v);
  }
  return out;
}

std::size_t MergeTrace::swap_count() const {
  return std::count_if(events.begin(), events.end(), [](const TraceEvent& e) {
    return std::holds_alternative<SwapRecord>(e);
  });
}

PathCollection replay(PathCollection coll, const std::vector<TraceEvent>& events) {
  for (const TraceEvent& event : events) {
    if (const auto* swap = std::get_if<SwapRecord>(&event)) {
      coll = subpath_swap(coll, swap->p, swap->q, swap->a, swap->b).collection;
    } else {
      coll.add(std::get<AddRecord>(event).path);
    }
  }
  return coll;
}

std::string format_event(const TraceEvent& event) {
  std::ostringstream out;
  if (const auto* swap = std::get_if<SwapRecord>(&event)) {
    out << "swap p=" << swap->p << " q=" << swap->q << " a=" << swap->a << " b=" << swap->b;
  } else {
    out << "add nodes=";
    const Path& path = std::get<AddRecord>(event).path;
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? "," : "") << path[i];
  }
  return out.str();
}

std::string format_trace(const std::vector<TraceEvent>& events) {
  std::string out;
  for (const TraceEvent& e : events) out += format_event(e) + "\n";
  return out;
}

namespace {

long long field(const std::string& token, const std::string& key, int line_no) {
  if (token.rfind(key + "=", 0) != 0) {
    throw Error(ErrorCode::kParse, "trace line " + std::to_string(line_no) + ": expected " + key);
  }
  try {
    std::size_t used = 0;
    long long value = std::stoll(token.substr(key.size() + 1), &used);
    if (used != token.size() - key.size() - 1 || value < 0) throw std::invalid_argument(token);
    return value;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParse, "trace line " + std::to_string(line_no) + ": bad " + key);
  }
}

}  // namespace

std::vector<TraceEvent> parse_trace(const std::string& text) {
  std::vector<TraceEvent> events;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "swap" && tokens.size() == 5) {
      events.push_back(SwapRecord{static_cast<std::size_t>(field(tokens[1], "p", line_no)),
                                  static_cast<std::size_t>(field(tokens[2], "q", line_no)),
                                  static_cast<NodeId>(field(tokens[3], "a", line_no)),
                                  static_cast<NodeId>(field(tokens[4], "b", line_no))});
    } else if (tokens[0] == "add" && tokens.size() == 2 && tokens[1].rfind("nodes=", 0) == 0) {
      std::vector<NodeId> nodes;
      std::istringstream list(tokens[1].substr(6));
      for (std::string item; std::getline(list, item, ',');) {
        nodes.push_back(static_cast<NodeId>(field("n=" + item, "n", line_no)));
      }
      if (nodes.empty()) throw Error(ErrorCode::kParse, "trace line " + std::to_string(line_no));
      events.push_back(AddRecord{Path(std::move(nodes))});
    } else {
      throw Error(ErrorCode::kParse, "trace line " + std::to_string(line_no) + ": " + line);
    }
  }
  return events;
}

}  // namespace spc
