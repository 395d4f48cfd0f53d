#include "spc/dot.h"

#include <set>
#include <sstream>

namespace spc {

namespace {

constexpr const char* kPalette[] = {"red",    "blue",   "darkgreen", "orange", "purple",
                                    "brown",  "cyan4",  "magenta",   "gold3",  "gray40"};

}  // namespace

std::string export_dot(const Graph& graph, const PathCollection& paths,
                       const std::vector<NodeId>& W) {
  const bool directed = graph.directed();
  const char* arrow = directed ? " -> " : " -- ";
  const std::set<NodeId> marked(W.begin(), W.end());
  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " spc {\n";
  os << "  node [shape=circle];\n";
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    os << "  " << v << " [label=\"" << v << "\"";
    if (marked.count(v)) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const Edge& e : graph.edges()) {
    os << "  " << e.tail << arrow << e.head << " [label=\"" << e.weight << "\", color=gray70];\n";
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const char* colour = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const Path& p = paths[i];
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      os << "  " << p[j] << arrow << p[j + 1] << " [color=" << colour << ", penwidth=2, label=\"P"
         << i << "\", fontcolor=" << colour;
      if (!directed) os << ", dir=forward";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace spc
