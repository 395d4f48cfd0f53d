#ifndef SPC_TEXT_FORMAT_H_
#define SPC_TEXT_FORMAT_H_

#include <string>
#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"
#include "spc/spc.h"

namespace spc {

// Graph block:
//   directed N M        (or: undirected N M)
//   u v w               (M lines, 0-based ids, positive integer weights)
// Lines starting with '#' and blank lines are ignored everywhere.
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& graph);

// Instance: a graph block, or a line "graph <file>" naming one (resolved
// against `base_dir`), then "pairs K C" and K lines "s t".
SpcInstance parse_instance(const std::string& text, const std::string& base_dir = ".");
std::string render_instance(const SpcInstance& inst);

// One path per line, node ids separated by spaces.
std::vector<Path> parse_paths(const std::string& text);
std::string render_paths(const std::vector<Path>& paths);

// "1,2,3" or "1 2 3".
std::vector<NodeId> parse_node_list(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace spc

#endif  // SPC_TEXT_FORMAT_H_
