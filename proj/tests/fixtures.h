#ifndef SPC_TESTS_FIXTURES_H_
#define SPC_TESTS_FIXTURES_H_

#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"

namespace fx {

using spc::Edge;
using spc::Graph;

// Directed unit 4-cycle 0->1->2->3->0.
inline Graph d4() { return Graph(true, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

// Undirected unit 4-cycle.
inline Graph c4() { return Graph(false, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

inline Graph chain3() { return Graph(true, 3, {{0, 1, 1}, {1, 2, 1}}); }
inline Graph chain4() { return Graph(true, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

// a=0, x=1, y=2, b=3; unit edges a-x, x-b, a-y, y-b.
inline constexpr int A = 0, X = 1, Y = 2, B = 3;
inline Graph diamond(bool directed) {
  return Graph(directed, 4, {{A, X, 1}, {X, B, 1}, {A, Y, 1}, {Y, B, 1}});
}
// Both directions of every diamond edge.
inline Graph symmetric_diamond() {
  return Graph(true, 4, {{A, X, 1}, {X, A, 1}, {X, B, 1}, {B, X, 1},
                         {A, Y, 1}, {Y, A, 1}, {Y, B, 1}, {B, Y, 1}});
}

// 0->1, 1->2, 2->1, 1->0.
inline Graph r3() { return Graph(true, 3, {{0, 1, 1}, {1, 2, 1}, {2, 1, 1}, {1, 0, 1}}); }

}  // namespace fx

#endif  // SPC_TESTS_FIXTURES_H_
