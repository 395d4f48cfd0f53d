#ifndef SPC_COLLECTION_H_
#define SPC_COLLECTION_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spc/graph.h"
#include "spc/path.h"

namespace spc {

// Consecutive nodes joined by edges, no repeats, weight equal to the distance
// between the endpoints.
bool validate_path(const Graph& graph, const DistanceOracle& oracle, const Path& path);

// Indexed list of paths. Terminals are the endpoints of each path and never
// change under swaps. When `undirected` is set, a swap may meet a path that
// traverses b before a; the exchanged segment is then reversed to fit.
class PathCollection {
 public:
  PathCollection() = default;
  explicit PathCollection(std::vector<Path> paths, bool undirected = false)
      : paths_(std::move(paths)), undirected_(undirected) {}

  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }
  const Path& operator[](std::size_t i) const { return paths_[i]; }
  const std::vector<Path>& paths() const { return paths_; }
  bool undirected() const { return undirected_; }
  std::pair<NodeId, NodeId> terminals(std::size_t i) const {
    return {paths_[i].front(), paths_[i].back()};
  }

  std::size_t add(Path path) {
    paths_.push_back(std::move(path));
    return paths_.size() - 1;
  }
  void replace(std::size_t i, Path path) { paths_[i] = std::move(path); }

  friend bool operator==(const PathCollection& x, const PathCollection& y) {
    return x.paths_ == y.paths_;
  }

 private:
  std::vector<Path> paths_;
  bool undirected_ = false;
};

struct SwapRecord {
  std::size_t p;
  std::size_t q;
  NodeId a;
  NodeId b;
  friend bool operator==(const SwapRecord&, const SwapRecord&) = default;
};

struct SwapResult {
  PathCollection collection;
  SwapRecord record;
};

// Exchanges P[a,b] and Q[a,b]. Requires p != q and a strictly before b on both
// paths (either orientation on undirected collections).
SwapResult subpath_swap(const PathCollection& coll, std::size_t p, std::size_t q, NodeId a,
                        NodeId b);

class CongestionMap {
 public:
  int count(NodeId v) const;
  const std::map<NodeId, int>& counts() const { return counts_; }
  void add(NodeId v) { ++counts_[v]; }
  int max() const;
  friend bool operator==(const CongestionMap&, const CongestionMap&) = default;

 private:
  std::map<NodeId, int> counts_;
};

CongestionMap congestion_map(const PathCollection& coll);

// Nodes on exactly c paths, ascending. Throws kCongestionViolation if some node
// is on more than c paths.
std::vector<NodeId> max_congestion_nodes(const PathCollection& coll, int c);

// A path surfaced from an implicit collection (every shortest path, with
// unbounded multiplicity) and appended at the next index.
struct AddRecord {
  Path path;
  friend bool operator==(const AddRecord&, const AddRecord&) = default;
};

using TraceEvent = std::variant<SwapRecord, AddRecord>;

struct MergeTrace {
  std::vector<TraceEvent> events;
  // W-nodes the working path is guaranteed to hold after each step.
  std::vector<std::vector<NodeId>> covered;

  std::size_t swap_count() const;
};

PathCollection replay(PathCollection coll, const std::vector<TraceEvent>& events);

// "swap p=<i> q=<j> a=<u> b=<v>" and "add nodes=<u>,<v>,...".
std::string format_event(const TraceEvent& event);
std::string format_trace(const std::vector<TraceEvent>& events);
std::vector<TraceEvent> parse_trace(const std::string& text);

}  // namespace spc

#endif  // SPC_COLLECTION_H_
