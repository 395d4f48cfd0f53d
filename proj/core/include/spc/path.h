#ifndef SPC_PATH_H_
#define SPC_PATH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace spc {

using NodeId = int;

// A node sequence with O(1) occurrence lookup. Construction does not check
// simplicity or edges; validate_path does that against a graph.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<NodeId> nodes);
  Path(std::initializer_list<NodeId> nodes) : Path(std::vector<NodeId>(nodes)) {}

  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  NodeId front() const { return nodes_.front(); }
  NodeId back() const { return nodes_.back(); }
  NodeId operator[](std::size_t i) const { return nodes_[i]; }

  bool contains(NodeId v) const { return pos_.count(v) > 0; }
  // Position of the first occurrence of v.
  std::optional<std::size_t> position(NodeId v) const;
  // True iff both occur and a strictly precedes b.
  bool before(NodeId a, NodeId b) const;
  bool contains_all(const std::vector<NodeId>& vs) const;

  Path reversed() const;

  friend bool operator==(const Path& x, const Path& y) { return x.nodes_ == y.nodes_; }
  friend bool operator<(const Path& x, const Path& y) { return x.nodes_ < y.nodes_; }

 private:
  std::vector<NodeId> nodes_;
  std::unordered_map<NodeId, std::size_t> pos_;
};

// P[u,v]; throws when u or v is missing or v precedes u.
Path subpath(const Path& path, NodeId u, NodeId v);

// "0 1 2"
std::string to_string(const Path& path);

}  // namespace spc

#endif  // SPC_PATH_H_
