#include "spc/text_format.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spc/error.h"

namespace spc {

namespace {

// Non-comment, non-blank lines with their 1-based line numbers.
class Lines {
 public:
  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.push_back({no, line});
    }
  }

  bool done() const { return next_ >= lines_.size(); }
  const std::string& peek() const { return lines_[next_].second; }

  std::vector<std::string> take(const char* what) {
    if (done()) throw Error(ErrorCode::kParse, std::string("unexpected end of input, expected ") + what);
    no_ = lines_[next_].first;
    std::istringstream words(lines_[next_++].second);
    std::vector<std::string> out;
    for (std::string w; words >> w;) out.push_back(w);
    return out;
  }

  long long number(const std::string& token) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return v;
    } catch (const std::logic_error&) {
      throw fail("not an integer: '" + token + "'");
    }
  }

  Error fail(const std::string& msg) const {
    return Error(ErrorCode::kParse, "line " + std::to_string(no_) + ": " + msg);
  }

 private:
  std::vector<std::pair<int, std::string>> lines_;
  std::size_t next_ = 0;
  int no_ = 0;
};

Graph parse_graph_block(Lines& in) {
  auto header = in.take("graph header");
  if (header.size() != 3 || (header[0] != "directed" && header[0] != "undirected")) {
    throw in.fail("expected 'directed N M' or 'undirected N M'");
  }
  long long n = in.number(header[1]);
  long long m = in.number(header[2]);
  if (n < 0 || m < 0) throw in.fail("negative count");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    auto e = in.take("edge");
    if (e.size() != 3) throw in.fail("expected 'u v w'");
    edges.push_back({static_cast<NodeId>(in.number(e[0])), static_cast<NodeId>(in.number(e[1])),
                     in.number(e[2])});
  }
  try {
    return Graph(header[0] == "directed", static_cast<int>(n), std::move(edges));
  } catch (const Error& err) {
    throw Error(ErrorCode::kParse, err.what());
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  Lines in(text);
  Graph g = parse_graph_block(in);
  if (!in.done()) {
    in.take("");
    throw in.fail("trailing content after graph");
  }
  return g;
}

std::string render_graph(const Graph& graph) {
  std::ostringstream out;
  out << (graph.directed() ? "directed " : "undirected ") << graph.node_count() << " "
      << graph.edges().size() << "\n";
  for (const Edge& e : graph.edges()) out << e.tail << " " << e.head << " " << e.weight << "\n";
  return out.str();
}

SpcInstance parse_instance(const std::string& text, const std::string& base_dir) {
  Lines in(text);
  if (in.done()) throw Error(ErrorCode::kParse, "empty instance");
  std::optional<Graph> graph;
  std::istringstream first(in.peek());
  std::string word;
  first >> word;
  if (word == "graph") {
    auto ref = in.take("graph reference");
    if (ref.size() != 2) throw in.fail("expected 'graph <file>'");
    std::filesystem::path file = ref[1];
    if (file.is_relative()) file = std::filesystem::path(base_dir) / file;
    graph = parse_graph(read_file(file.string()));
  } else {
    graph = parse_graph_block(in);
  }
  auto header = in.take("pairs header");
  if (header.size() != 3 || header[0] != "pairs") throw in.fail("expected 'pairs K C'");
  long long k = in.number(header[1]);
  long long c = in.number(header[2]);
  if (k < 0) throw in.fail("negative pair count");
  SpcInstance inst{std::move(*graph), {}, static_cast<int>(c)};
  for (long long i = 0; i < k; ++i) {
    auto pr = in.take("pair");
    if (pr.size() != 2) throw in.fail("expected 's t'");
    NodeId s = static_cast<NodeId>(in.number(pr[0]));
    NodeId t = static_cast<NodeId>(in.number(pr[1]));
    if (!inst.graph.valid_node(s) || !inst.graph.valid_node(t)) throw in.fail("terminal out of range");
    inst.pairs.push_back({s, t});
  }
  if (!in.done()) {
    in.take("");
    throw in.fail("trailing content after pairs");
  }
  if (inst.c < 1 || inst.c > inst.k()) throw Error(ErrorCode::kParse, "need 1 <= C <= K");
  return inst;
}

std::string render_instance(const SpcInstance& inst) {
  std::ostringstream out;
  out << render_graph(inst.graph);
  out << "pairs " << inst.pairs.size() << " " << inst.c << "\n";
  for (const TerminalPair& pr : inst.pairs) out << pr.source << " " << pr.target << "\n";
  return out.str();
}

std::vector<Path> parse_paths(const std::string& text) {
  Lines in(text);
  std::vector<Path> out;
  while (!in.done()) {
    std::vector<NodeId> nodes;
    for (const std::string& w : in.take("path")) nodes.push_back(static_cast<NodeId>(in.number(w)));
    out.emplace_back(std::move(nodes));
  }
  return out;
}

std::string render_paths(const std::vector<Path>& paths) {
  std::string out;
  for (const Path& p : paths) out += to_string(p) + "\n";
  return out;
}

std::vector<NodeId> parse_node_list(const std::string& text) {
  std::string spaced = text;
  for (char& ch : spaced) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(spaced);
  std::vector<NodeId> out;
  for (std::string w; in >> w;) {
    try {
      std::size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParse, "bad node id '" + w + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace spc
