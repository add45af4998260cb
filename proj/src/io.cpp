#include "udom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace udom {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view text, bool hash_comments) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    pos = end + 1;
    if (tokens.empty()) continue;
    if (tokens[0] == "c" || (hash_comments && tokens[0].front() == '#')) continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

long long to_int(const Line& line, std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line.number, "expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Vertex to_vertex(const Line& line, std::string_view tok, int n, bool one_based) {
  long long v = to_int(line, tok) - (one_based ? 1 : 0);
  if (v < 0 || v >= n) {
    fail(line.number, "vertex " + std::string(tok) + " outside declared range of " + std::to_string(n));
  }
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(std::string_view text, const ParseOptions& opts) {
  const bool dimacs = opts.format == GraphFormat::dimacs_like;
  auto lines = content_lines(text, !dimacs);
  if (lines.empty()) throw FormatError("line 1: missing header");
  const Line& header = lines.front();
  std::size_t off = dimacs ? 1 : 0;
  if (dimacs && header.tokens[0] != "p") fail(header.number, "expected 'p <n> <m>' header");
  if (header.tokens.size() != off + 2) fail(header.number, "malformed header");
  long long n = to_int(header, header.tokens[off]);
  long long m = to_int(header, header.tokens[off + 1]);
  if (n < 0 || m < 0) fail(header.number, "negative size in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (dimacs && line.tokens[0] != "e") fail(line.number, "expected 'e <u> <v>'");
    if (line.tokens.size() != off + 2) fail(line.number, "edge line needs two endpoints");
    Vertex u = to_vertex(line, line.tokens[off], static_cast<int>(n), opts.one_based);
    Vertex v = to_vertex(line, line.tokens[off + 1], static_cast<int>(n), opts.one_based);
    if (u == v) fail(line.number, "self-loop at vertex " + std::string(line.tokens[off]));
    edges.emplace_back(u, v);
  }
  if (static_cast<long long>(edges.size()) != m) {
    fail(header.number, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path, const ParseOptions& opts) {
  return parse_graph(read_text_file(path), opts);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

Hypergraph parse_hypergraph(std::string_view text, bool one_based) {
  auto lines = content_lines(text, false);
  if (lines.empty()) throw FormatError("line 1: missing header");
  const Line& header = lines.front();
  if (header.tokens[0] != "p" || header.tokens.size() != 3) fail(header.number, "expected 'p <n> <k>' header");
  long long n = to_int(header, header.tokens[1]);
  long long k = to_int(header, header.tokens[2]);
  if (n < 0 || k < 0) fail(header.number, "negative size in header");
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "h") fail(line.number, "expected 'h <v1> ...'");
    if (line.tokens.size() < 2) fail(line.number, "empty hyperedge");
    VertexSet e(static_cast<int>(n));
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      e.insert(to_vertex(line, line.tokens[t], static_cast<int>(n), one_based));
    }
    edges.push_back(std::move(e));
  }
  if (static_cast<long long>(edges.size()) != k) {
    fail(header.number, "header declares " + std::to_string(k) + " hyperedges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path, bool one_based) {
  return parse_hypergraph(read_text_file(path), one_based);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  os << "p " << h.n() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    os << 'h';
    e.for_each([&](Vertex v) { os << ' ' << v; });
    os << '\n';
  }
  return os.str();
}

VertexSet parse_vertex_set(std::string_view text, int universe, bool one_based) {
  VertexSet s(universe);
  long long declared = -1;
  for (const Line& line : content_lines(text, true)) {
    std::size_t t = 0;
    if (line.tokens[0] == "s") {
      if (line.tokens.size() != 2) fail(line.number, "expected 's <size>'");
      declared = to_int(line, line.tokens[1]);
      continue;
    }
    for (; t < line.tokens.size(); ++t) s.insert(to_vertex(line, line.tokens[t], universe, one_based));
  }
  if (declared >= 0 && declared != s.size()) {
    throw FormatError("vertex set declares " + std::to_string(declared) + " members, found " +
                      std::to_string(s.size()));
  }
  return s;
}

std::string serialize_vertex_set(const VertexSet& s) {
  std::ostringstream os;
  os << "s " << s.size() << '\n';
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) os << ' ';
    os << v;
    first = false;
  });
  os << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace udom
