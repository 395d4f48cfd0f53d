#include "spc/path.h"

#include <algorithm>
#include <sstream>

#include "spc/error.h"

namespace spc {

Path::Path(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
  pos_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) pos_.emplace(nodes_[i], i);
}

std::optional<std::size_t> Path::position(NodeId v) const {
  auto it = pos_.find(v);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

bool Path::before(NodeId a, NodeId b) const {
  auto pa = pos_.find(a);
  auto pb = pos_.find(b);
  return pa != pos_.end() && pb != pos_.end() && pa->second < pb->second;
}

bool Path::contains_all(const std::vector<NodeId>& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](NodeId v) { return contains(v); });
}

Path Path::reversed() const {
  return Path(std::vector<NodeId>(nodes_.rbegin(), nodes_.rend()));
}

Path subpath(const Path& path, NodeId u, NodeId v) {
  auto pu = path.position(u);
  auto pv = path.position(v);
  if (!pu || !pv) {
    throw Error(ErrorCode::kInvalidArgument,
                "subpath endpoint missing from path " + to_string(path));
  }
  if (*pv < *pu) {
    throw Error(ErrorCode::kInvalidArgument,
                "subpath end " + std::to_string(v) + " precedes start " + std::to_string(u));
  }
  return Path(std::vector<NodeId>(path.nodes().begin() + *pu, path.nodes().begin() + *pv + 1));
}

std::string to_string(const Path& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out << ' ';
    out << path[i];
  }
  return out.str();
}

}  // namespace spc
