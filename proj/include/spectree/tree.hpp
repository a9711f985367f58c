#ifndef SPECTREE_TREE_HPP
#define SPECTREE_TREE_HPP

#include <string>
#include <utility>
#include <vector>

#include "spectree/numeric.hpp"

namespace spectree {

using Edge = std::pair<int, int>;

/// A simple undirected graph on vertices {0,...,n-1}. Not validated beyond
/// construction-time range/loop/duplicate checks done by its producers.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

IntMatrix laplacian(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// A validated tree: connected, acyclic, |edges| = n-1, no loops or
/// duplicates. Immutable after construction.
class Tree {
 public:
  /// Validates; throws Error with a kind naming the first defect found.
  explicit Tree(Graph g);

  int order() const { return graph_.n; }
  const std::vector<Edge>& edges() const { return graph_.edges; }
  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

 private:
  Graph graph_;
  std::vector<std::vector<int>> adj_;
};

struct TreeStats {
  std::vector<int> degree_sequence;  // non-increasing
  int max_degree = 0;
  int min_degree = 0;
  int pendant_count = 0;       // vertices of degree 1
  int quasipendant_count = 0;  // vertices adjacent to a pendant vertex
  int diameter = 0;
};

Tree make_tree(int n, const std::vector<Edge>& edges);

/// Spider T(s,k), 1 <= k <= s: star K_{1,s} with k rays extended by one
/// edge. Center is vertex 0, ray vertices 1..s, leg tips s+1..s+k (leg i
/// extends ray i). Order s+k+1.
Tree spider(int s, int k);

/// Double broom H(s,r,t), s,r,t >= 1: path on r vertices (0..r-1) with s
/// pendants on vertex 0 and t pendants on vertex r-1. Order s+r+t.
Tree h_tree(int s, int r, int t);

/// Spider T(s,k) with one extra pendant attached to the tip of leg 1
/// (vertex s+1); requires s >= k >= 2. Order s+k+2.
Tree t_star(int s, int k);

Tree star(int m);   // K_{1,m}, center 0, order m+1
Tree path(int n);   // P_n, vertices in path order
Tree fork();        // 6-vertex tree: center 0 ~ {1,2,3}, 3 ~ 4, 4 ~ 5

/// Dispatch by name: "star:m", "path:n", "fork".
Tree named_tree(const std::string& name);

TreeStats stats(const Tree& t);
IntMatrix laplacian(const Tree& t);

/// Removes a pendant vertex; remaining vertices are renumbered to
/// 0..n-2 preserving their relative order.
Tree delete_pendant(const Tree& t, int v);

/// Removes an edge; returns the two components as trees, the one holding
/// the smaller endpoint of the (normalized) edge first. Vertices of each
/// component are renumbered preserving relative order.
std::pair<Tree, Tree> delete_edge(const Tree& t, Edge e);

/// AHU canonical form rooted at the tree center(s): equal strings iff the
/// trees are isomorphic.
std::string canonical_code(const Tree& t);

/// Rebuilds a tree from a canonical code ("C(...)" or "E(...)(...)");
/// canonical_code(tree_from_canonical_code(c)) == c.
Tree tree_from_canonical_code(const std::string& code);

/// Centers (1 or 2) of the tree, by iterative leaf removal.
std::vector<int> tree_centers(const Tree& t);

bool isomorphic(const Tree& a, const Tree& b);

}  // namespace spectree

#endif  // SPECTREE_TREE_HPP
