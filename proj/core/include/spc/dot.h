#ifndef SPC_DOT_H_
#define SPC_DOT_H_

#include <string>
#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"

namespace spc {

// Graphviz text: nodes labelled by id, W nodes double-circled, every edge
// used by path i drawn once more in colour i with the path index as label.
std::string export_dot(const Graph& graph, const PathCollection& paths,
                       const std::vector<NodeId>& W = {});

}  // namespace spc

#endif  // SPC_DOT_H_
