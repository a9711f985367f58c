#include "spectree/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "spectree/error.hpp"

namespace spectree {

namespace {

// Level sequences in preorder: layout[i] is the depth of vertex i,
// layout[0] == 0, children directly follow their parent.

Tree layout_to_tree(const std::vector<int>& layout) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
    while (!stack.empty() &&
           layout[static_cast<size_t>(stack.back())] >=
               layout[static_cast<size_t>(i)])
      stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return make_tree(static_cast<int>(layout.size()), edges);
}

// Splits off the root's first subtree: left re-rooted at depth 0, rest is
// the original tree with that subtree removed.
void split_layout(const std::vector<int>& layout, std::vector<int>& left,
                  std::vector<int>& rest) {
  const int n = static_cast<int>(layout.size());
  int m = n;
  bool one_seen = false;
  for (int i = 0; i < n; ++i) {
    if (layout[static_cast<size_t>(i)] == 1) {
      if (one_seen) {
        m = i;
        break;
      }
      one_seen = true;
    }
  }
  left.clear();
  rest.clear();
  for (int i = 1; i < m; ++i) left.push_back(layout[static_cast<size_t>(i)] - 1);
  rest.push_back(0);
  for (int i = m; i < n; ++i) rest.push_back(layout[static_cast<size_t>(i)]);
}

// Beyer-Hedetniemi successor of a rooted level sequence; p, when given,
// truncates at that position first. Returns false at the last sequence.
bool next_rooted(std::vector<int>& layout, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(layout.size()) - 1;
    while (p >= 0 && layout[static_cast<size_t>(p)] == 1) --p;
  }
  if (p <= 0) return false;
  int q = p - 1;
  while (layout[static_cast<size_t>(q)] != layout[static_cast<size_t>(p)] - 1)
    --q;
  for (int i = p; i < static_cast<int>(layout.size()); ++i)
    layout[static_cast<size_t>(i)] = layout[static_cast<size_t>(i - p + q)];
  return true;
}

// Valid free-tree representation: the first subtree is no taller than the
// rest, with size and lexicographic tiebreaks on equal heights.
bool free_valid(const std::vector<int>& layout, std::vector<int>& left,
                std::vector<int>& rest) {
  split_layout(layout, left, rest);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  if (rest_height < left_height) return false;
  if (rest_height == left_height) {
    if (left.size() > rest.size()) return false;
    if (left.size() == rest.size() && left > rest) return false;
  }
  return true;
}

// Advances an invalid candidate to the next candidate in free-tree order.
// Returns false when the enumeration is finished.
bool jump(std::vector<int>& layout, const std::vector<int>& left) {
  const int p = static_cast<int>(left.size());
  const int level_at_p = layout[static_cast<size_t>(p)];
  if (!next_rooted(layout, p)) return false;
  if (level_at_p > 2) {
    std::vector<int> new_left, new_rest;
    split_layout(layout, new_left, new_rest);
    const int height = *std::max_element(new_left.begin(), new_left.end());
    const int suffix = height + 1;
    const int n = static_cast<int>(layout.size());
    for (int i = 0; i < suffix; ++i)
      layout[static_cast<size_t>(n - suffix + i)] = i + 1;
  }
  return true;
}

}  // namespace

TreeStream::TreeStream(int n, int shard_index, int shard_count)
    : n_(n), shard_index_(shard_index), shard_count_(shard_count) {
  if (n < 1 || n > kMaxEnumerationOrder)
    fail(ErrorKind::kOutOfRange,
         "enumeration order must be in 1.." + std::to_string(kMaxEnumerationOrder));
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    fail(ErrorKind::kOutOfRange, "shard index out of range");
  if (n_ > 2) {
    for (int i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
    for (int i = 1; i <= (n_ + 1) / 2 - 1; ++i) layout_.push_back(i);
  }
}

bool TreeStream::accepted_by_shard(int first_subtree_size) const {
  if (shard_count_ == 1) return true;
  return first_subtree_size % shard_count_ == shard_index_;
}

std::optional<Tree> TreeStream::next() {
  if (exhausted_) return std::nullopt;
  if (n_ <= 2) {
    exhausted_ = true;
    if (!accepted_by_shard(n_ - 1)) return std::nullopt;
    return n_ == 1 ? make_tree(1, {}) : path(2);
  }
  std::vector<int> left, rest;
  while (true) {
    while (!free_valid(layout_, left, rest)) {
      if (!jump(layout_, left)) {
        exhausted_ = true;
        return std::nullopt;
      }
    }
    const int first_subtree_size = static_cast<int>(left.size());
    std::optional<Tree> result;
    if (accepted_by_shard(first_subtree_size)) result = layout_to_tree(layout_);
    if (!next_rooted(layout_)) exhausted_ = true;
    if (result) return result;
    if (exhausted_) return std::nullopt;
  }
}

TreeStream free_trees(int n) { return TreeStream(n); }

TreeStream shard(int n, int shard_index, int shard_count) {
  return TreeStream(n, shard_index, shard_count);
}

Tree tree_from_pruefer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int v : seq) {
    if (v < 0 || v >= n)
      fail(ErrorKind::kInvalidArgument, "pruefer entry out of range");
    ++degree[static_cast<size_t>(v)];
  }
  std::vector<Edge> edges;
  // Smallest-leaf rule, kept linear with a moving pointer.
  int ptr = 0;
  while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    if (--degree[static_cast<size_t>(v)] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return make_tree(n, edges);
}

}  // namespace spectree
