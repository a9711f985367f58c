#include "spectree/graph6.hpp"

#include <sstream>

#include "spectree/error.hpp"

namespace spectree {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxChar = 126;

long decode_size(const std::string& line, size_t& pos) {
  auto byte = [&](size_t i) -> long {
    if (i >= line.size()) fail(ErrorKind::kParse, "graph6 line truncated");
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < kOffset || c > kMaxChar)
      fail(ErrorKind::kParse, "invalid graph6 character");
    return c - kOffset;
  };
  if (byte(pos) != 63) return byte(pos++);
  ++pos;
  if (byte(pos) != 63) {
    long n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte(pos++);
    return n;
  }
  ++pos;
  long n = 0;
  for (int i = 0; i < 6; ++i) n = (n << 6) | byte(pos++);
  return n;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
  if (line.empty()) fail(ErrorKind::kParse, "empty graph6 line");
  size_t pos = 0;
  const long n_long = decode_size(line, pos);
  if (n_long > 100000) fail(ErrorKind::kParse, "graph6 order too large");
  const int n = static_cast<int>(n_long);
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const size_t body_bytes = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != body_bytes)
    fail(ErrorKind::kParse, "graph6 body length mismatch");
  Graph g;
  g.n = n;
  long bit = 0;
  for (size_t i = pos; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < kOffset || c > kMaxChar)
      fail(ErrorKind::kParse, "invalid graph6 character");
    const int group = c - kOffset;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1;
      if (bit >= bits) {
        if (set) fail(ErrorKind::kParse, "nonzero graph6 padding bits");
        continue;
      }
      if (set) {
        // Bit index -> (row, col) of the upper triangle, column-major.
        long k = bit;
        int col = 1;
        while (k >= col) {
          k -= col;
          ++col;
        }
        g.edges.emplace_back(static_cast<int>(k), col);
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const int n = g.n;
  if (n < 0) fail(ErrorKind::kInvalidArgument, "negative order");
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  } else {
    fail(ErrorKind::kInvalidArgument, "order too large for this encoder");
  }
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  std::vector<bool> adj(static_cast<size_t>(bits), false);
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      fail(ErrorKind::kInvalidArgument, "edge out of range");
    const int lo = std::min(u, v);
    const int hi = std::max(u, v);
    adj[static_cast<size_t>(hi) * (hi - 1) / 2 + lo] = true;
  }
  int group = 0;
  int filled = 0;
  for (long i = 0; i < bits; ++i) {
    group = (group << 1) | (adj[static_cast<size_t>(i)] ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + kOffset));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kOffset));
  }
  return out;
}

std::string emit_graph6(const Tree& t) { return emit_graph6(t.graph()); }

Graph parse_edge_list(const std::string& line) {
  std::istringstream in(line);
  std::string tag;
  in >> tag;
  if (tag != "el") fail(ErrorKind::kParse, "edge list must start with 'el'");
  Graph g;
  if (!(in >> g.n) || g.n < 0) fail(ErrorKind::kParse, "bad vertex count");
  int u, v;
  while (in >> u) {
    if (!(in >> v)) fail(ErrorKind::kParse, "odd number of endpoints");
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      fail(ErrorKind::kParse, "edge endpoint out of range");
    g.edges.emplace_back(u, v);
  }
  return g;
}

Graph parse_graph_line(const std::string& line) {
  if (line.rfind("el ", 0) == 0 || line == "el") return parse_edge_list(line);
  if (line[0] == 'C' || line[0] == 'E') {
    // Canonical codes as cited in reports; 'C'/'E' never start a graph6
    // line of order <= 62 followed by '(' anyway.
    if (line.size() > 1 && line[1] == '(')
      return tree_from_canonical_code(line).graph();
  }
  if (line.rfind(">>graph6<<", 0) == 0) return parse_graph6(line.substr(10));
  return parse_graph6(line);
}

}  // namespace spectree
