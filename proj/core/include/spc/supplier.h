#ifndef SPC_SUPPLIER_H_
#define SPC_SUPPLIER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"

namespace spc {

// A path qualifies when it contains every node in `nodes` and, if `patterns`
// is nonempty, visits the nodes of at least one pattern in that order.
struct OrderQuery {
  std::vector<NodeId> nodes;
  std::vector<std::vector<NodeId>> patterns;
};

bool satisfies(const Path& path, const OrderQuery& query);
std::string describe(const OrderQuery& query);

// The collection being rewritten together with the trace of rewrites.
struct Workspace {
  PathCollection paths;
  MergeTrace trace;

  void swap(std::size_t p, std::size_t q, NodeId a, NodeId b);
  std::size_t add(Path path);
};

enum class SupplierMode { kTheorem, kCollection };

// Answers "is there a path with these nodes in one of these orders" against
// either the stored collection or the set of all shortest paths.
class Supplier {
 public:
  virtual ~Supplier() = default;
  virtual SupplierMode mode() const = 0;

  // Index of a qualifying path. An implicit supplier appends its witness to
  // the workspace first.
  virtual std::optional<std::size_t> find(Workspace& ws, const OrderQuery& query) = 0;
  // Same decision without materializing anything.
  virtual bool exists(const Workspace& ws, const OrderQuery& query) = 0;

  std::size_t queries() const { return queries_; }
  // Zero means unlimited; exceeding it throws kBudgetExceeded.
  void set_query_limit(std::size_t limit) { limit_ = limit; }

 protected:
  void count_query();

 private:
  std::size_t queries_ = 0;
  std::size_t limit_ = 0;
};

// Scans the stored paths; lowest index wins.
class CollectionSupplier : public Supplier {
 public:
  SupplierMode mode() const override { return SupplierMode::kCollection; }
  std::optional<std::size_t> find(Workspace& ws, const OrderQuery& query) override;
  bool exists(const Workspace& ws, const OrderQuery& query) override;
};

// Every shortest path of the graph, each available as often as needed.
// Existence is decided with the ordering predicate over permutations of the
// query nodes; the lexicographically first qualifying permutation is turned
// into a concrete path.
class TheoremSupplier : public Supplier {
 public:
  TheoremSupplier(const Graph& graph, const DistanceOracle& oracle)
      : graph_(graph), oracle_(oracle) {}
  SupplierMode mode() const override { return SupplierMode::kTheorem; }
  std::optional<std::size_t> find(Workspace& ws, const OrderQuery& query) override;
  bool exists(const Workspace& ws, const OrderQuery& query) override;

 private:
  std::optional<std::vector<NodeId>> first_ordering(const OrderQuery& query) const;

  const Graph& graph_;
  const DistanceOracle& oracle_;
};

}  // namespace spc

#endif  // SPC_SUPPLIER_H_
