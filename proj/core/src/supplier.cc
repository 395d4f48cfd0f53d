#include "spc/supplier.h"

#include <algorithm>
#include <sstream>

#include "spc/error.h"

namespace spc {

namespace {

bool in_order(const std::vector<NodeId>& seq, const std::vector<NodeId>& pattern) {
  std::size_t next = 0;
  for (NodeId v : seq) {
    if (next < pattern.size() && v == pattern[next]) ++next;
  }
  return next == pattern.size();
}

bool pattern_match(const std::vector<NodeId>& seq, const OrderQuery& query) {
  if (query.patterns.empty()) return true;
  return std::any_of(query.patterns.begin(), query.patterns.end(),
                     [&](const std::vector<NodeId>& p) { return in_order(seq, p); });
}

}  // namespace

bool satisfies(const Path& path, const OrderQuery& query) {
  if (!path.contains_all(query.nodes)) return false;
  if (query.patterns.empty()) return true;
  return std::any_of(query.patterns.begin(), query.patterns.end(),
                     [&](const std::vector<NodeId>& pattern) {
                       for (std::size_t i = 0; i + 1 < pattern.size(); ++i) {
                         if (!path.before(pattern[i], pattern[i + 1])) return false;
                       }
                       return pattern.size() > 1 || path.contains_all(pattern);
                     });
}

std::string describe(const OrderQuery& query) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < query.nodes.size(); ++i) out << (i ? "," : "") << query.nodes[i];
  out << "}";
  for (const auto& p : query.patterns) {
    out << " [";
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "->" : "") << p[i];
    out << "]";
  }
  return out.str();
}

void Workspace::swap(std::size_t p, std::size_t q, NodeId a, NodeId b) {
  SwapResult r = subpath_swap(paths, p, q, a, b);
  paths = std::move(r.collection);
  trace.events.push_back(r.record);
}

std::size_t Workspace::add(Path path) {
  trace.events.push_back(AddRecord{path});
  return paths.add(std::move(path));
}

void Supplier::count_query() {
  ++queries_;
  if (limit_ != 0 && queries_ > limit_) {
    throw Error(ErrorCode::kBudgetExceeded, "supplier query limit reached");
  }
}

std::optional<std::size_t> CollectionSupplier::find(Workspace& ws, const OrderQuery& query) {
  count_query();
  for (std::size_t i = 0; i < ws.paths.size(); ++i) {
    if (satisfies(ws.paths[i], query)) return i;
  }
  return std::nullopt;
}

bool CollectionSupplier::exists(const Workspace& ws, const OrderQuery& query) {
  count_query();
  return std::any_of(ws.paths.paths().begin(), ws.paths.paths().end(),
                     [&](const Path& p) { return satisfies(p, query); });
}

std::optional<std::vector<NodeId>> TheoremSupplier::first_ordering(const OrderQuery& query) const {
  std::optional<std::vector<NodeId>> found;
  for_each_shortest_path_ordering(oracle_, query.nodes, [&](const std::vector<NodeId>& seq) {
    if (!pattern_match(seq, query)) return false;
    found = seq;
    return true;
  });
  return found;
}

std::optional<std::size_t> TheoremSupplier::find(Workspace& ws, const OrderQuery& query) {
  count_query();
  auto seq = first_ordering(query);
  if (!seq) return std::nullopt;
  return ws.add(path_through_ordering(graph_, oracle_, *seq));
}

bool TheoremSupplier::exists(const Workspace&, const OrderQuery& query) {
  count_query();
  return first_ordering(query).has_value();
}

}  // namespace spc
