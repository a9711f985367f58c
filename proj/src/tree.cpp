#include "spectree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "spectree/error.hpp"

namespace spectree {

namespace {

// Union-find over 0..n-1.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> build_adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

IntMatrix laplacian(const Graph& g) {
  IntMatrix m = IntMatrix::Zero(g.n, g.n);
  for (const auto& [u, v] : g.edges) {
    m(u, u) += 1;
    m(v, v) += 1;
    m(u, v) -= 1;
    m(v, u) -= 1;
  }
  return m;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  Dsu dsu(g.n);
  int components = g.n;
  for (const auto& [u, v] : g.edges)
    if (dsu.unite(u, v)) --components;
  return components == 1;
}

bool is_tree(const Graph& g) {
  if (g.n < 1) return false;
  if (static_cast<int>(g.edges.size()) != g.n - 1) return false;
  for (const auto& [u, v] : g.edges)
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v) return false;
  return is_connected(g);
}

Tree::Tree(Graph g) : graph_(std::move(g)) {
  const int n = graph_.n;
  if (n < 1) fail(ErrorKind::kInvalidArgument, "tree order must be positive");
  if (static_cast<int>(graph_.edges.size()) != n - 1)
    fail(ErrorKind::kEdgeCount, "a tree on " + std::to_string(n) +
                                    " vertices needs " + std::to_string(n - 1) +
                                    " edges");
  std::set<Edge> seen;
  Dsu dsu(n);
  for (auto& e : graph_.edges) {
    auto& [u, v] = e;
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorKind::kVertexRange, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::kSelfLoop, "self-loop rejected");
    if (u > v) std::swap(u, v);
    if (!seen.insert(e).second)
      fail(ErrorKind::kDuplicateEdge, "duplicate edge rejected");
    if (!dsu.unite(u, v)) fail(ErrorKind::kCycle, "cycle detected");
  }
  // With n-1 edges and no cycle the graph is connected; kept as a guard.
  if (!is_connected(graph_) && n > 1)
    fail(ErrorKind::kDisconnected, "graph is disconnected");
  adj_ = build_adjacency(graph_);
}

bool Tree::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(graph_.edges.begin(), graph_.edges.end(),
                   Edge(u, v)) != graph_.edges.end();
}

Tree make_tree(int n, const std::vector<Edge>& edges) {
  return Tree(Graph{n, edges});
}

Tree spider(int s, int k) {
  if (k < 1 || k > s)
    fail(ErrorKind::kInvalidArgument, "spider requires 1 <= k <= s");
  std::vector<Edge> edges;
  for (int i = 1; i <= s; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= k; ++i) edges.emplace_back(i, s + i);
  return make_tree(s + k + 1, edges);
}

Tree h_tree(int s, int r, int t) {
  if (s < 1 || r < 1 || t < 1)
    fail(ErrorKind::kInvalidArgument, "h_tree requires s,r,t >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < s; ++i) edges.emplace_back(0, r + i);
  for (int i = 0; i < t; ++i) edges.emplace_back(r - 1, r + s + i);
  return make_tree(s + r + t, edges);
}

Tree t_star(int s, int k) {
  if (k < 2 || k > s)
    fail(ErrorKind::kInvalidArgument, "t_star requires s >= k >= 2");
  Tree base = spider(s, k);
  std::vector<Edge> edges = base.edges();
  edges.emplace_back(s + 1, s + k + 1);
  return make_tree(s + k + 2, edges);
}

Tree star(int m) {
  if (m < 1) fail(ErrorKind::kInvalidArgument, "star requires m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.emplace_back(0, i);
  return make_tree(m + 1, edges);
}

Tree path(int n) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_tree(n, edges);
}

Tree fork() {
  return make_tree(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
}

Tree named_tree(const std::string& name) {
  if (name == "fork") return fork();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    int arg = 0;
    try {
      arg = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::kUnknownName, "bad size in tree name: " + name);
    }
    if (head == "star") return star(arg);
    if (head == "path") return path(arg);
  }
  fail(ErrorKind::kUnknownName, "unknown tree name: " + name);
}

namespace {

// Distances from source by BFS; trees are small, O(n^2) overall is fine.
int eccentricity(const Tree& t, int source) {
  std::vector<int> dist(t.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  int furthest = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    furthest = std::max(furthest, dist[v]);
    for (int w : t.adjacency()[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return furthest;
}

}  // namespace

TreeStats stats(const Tree& t) {
  TreeStats s;
  const int n = t.order();
  s.degree_sequence.resize(n);
  for (int v = 0; v < n; ++v) s.degree_sequence[v] = t.degree(v);
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end(),
            std::greater<int>());
  s.max_degree = s.degree_sequence.front();
  s.min_degree = s.degree_sequence.back();
  std::vector<bool> quasi(n, false);
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) {
      ++s.pendant_count;
      quasi[t.adjacency()[v][0]] = true;
    }
  s.quasipendant_count = static_cast<int>(std::count(quasi.begin(), quasi.end(), true));
  for (int v = 0; v < n; ++v) s.diameter = std::max(s.diameter, eccentricity(t, v));
  return s;
}

IntMatrix laplacian(const Tree& t) { return laplacian(t.graph()); }

namespace {

Tree induced_subtree(const Tree& t, const std::vector<bool>& keep) {
  std::vector<int> index(t.order(), -1);
  int next = 0;
  for (int v = 0; v < t.order(); ++v)
    if (keep[v]) index[v] = next++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges())
    if (keep[u] && keep[v]) edges.emplace_back(index[u], index[v]);
  return make_tree(next, edges);
}

}  // namespace

Tree delete_pendant(const Tree& t, int v) {
  if (v < 0 || v >= t.order())
    fail(ErrorKind::kVertexRange, "vertex out of range");
  if (t.order() < 2 || t.degree(v) != 1)
    fail(ErrorKind::kNotPendant, "vertex is not pendant");
  std::vector<bool> keep(t.order(), true);
  keep[v] = false;
  return induced_subtree(t, keep);
}

std::pair<Tree, Tree> delete_edge(const Tree& t, Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!t.has_edge(e.first, e.second))
    fail(ErrorKind::kEdgeAbsent, "edge not present");
  // Vertices on the e.first side of the cut.
  std::vector<bool> side(t.order(), false);
  std::queue<int> q;
  side[e.first] = true;
  q.push(e.first);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.adjacency()[v]) {
      if (v == e.first && w == e.second) continue;
      if (v == e.second && w == e.first) continue;
      if (!side[w]) {
        side[w] = true;
        q.push(w);
      }
    }
  }
  std::vector<bool> other(t.order());
  for (int v = 0; v < t.order(); ++v) other[v] = !side[v];
  return {induced_subtree(t, side), induced_subtree(t, other)};
}

std::vector<int> tree_centers(const Tree& t) {
  const int n = t.order();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  std::queue<int> leaves;
  for (int v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  int remaining = n;
  while (remaining > 2) {
    int layer = static_cast<int>(leaves.size());
    for (int i = 0; i < layer; ++i) {
      int v = leaves.front();
      leaves.pop();
      removed[v] = true;
      --remaining;
      for (int w : t.adjacency()[v])
        if (!removed[w] && --degree[w] == 1) leaves.push(w);
    }
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

namespace {

std::string ahu_code(const Tree& t, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int w : t.adjacency()[root])
    if (w != parent) child_codes.push_back(ahu_code(t, w, root));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

}  // namespace

std::string canonical_code(const Tree& t) {
  std::vector<int> centers = tree_centers(t);
  if (centers.size() == 1) return "C" + ahu_code(t, centers[0], -1);
  // Bicentral: root each half at its center, with the other half removed.
  std::string a = ahu_code(t, centers[0], centers[1]);
  std::string b = ahu_code(t, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

namespace {

// Parses one parenthesized rooted subtree starting at code[pos]; adds its
// root (returned) and edges to the accumulators.
int parse_rooted(const std::string& code, size_t& pos, int& next_vertex,
                 std::vector<Edge>& edges) {
  if (pos >= code.size() || code[pos] != '(')
    fail(ErrorKind::kParse, "malformed canonical code");
  ++pos;
  const int root = next_vertex++;
  while (pos < code.size() && code[pos] == '(') {
    const int child = parse_rooted(code, pos, next_vertex, edges);
    edges.emplace_back(root, child);
  }
  if (pos >= code.size() || code[pos] != ')')
    fail(ErrorKind::kParse, "malformed canonical code");
  ++pos;
  return root;
}

}  // namespace

Tree tree_from_canonical_code(const std::string& code) {
  if (code.empty()) fail(ErrorKind::kParse, "empty canonical code");
  size_t pos = 1;
  int next_vertex = 0;
  std::vector<Edge> edges;
  if (code[0] == 'C') {
    parse_rooted(code, pos, next_vertex, edges);
  } else if (code[0] == 'E') {
    const int a = parse_rooted(code, pos, next_vertex, edges);
    const int b = parse_rooted(code, pos, next_vertex, edges);
    edges.emplace_back(a, b);
  } else {
    fail(ErrorKind::kParse, "canonical code must start with C or E");
  }
  if (pos != code.size())
    fail(ErrorKind::kParse, "trailing characters in canonical code");
  return make_tree(next_vertex, edges);
}

bool isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace spectree
