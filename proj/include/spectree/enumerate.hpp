#ifndef SPECTREE_ENUMERATE_HPP
#define SPECTREE_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "spectree/tree.hpp"

namespace spectree {

/// Streams one representative per isomorphism class of free trees of a
/// given order, in the fixed order of the level-sequence generator
/// (Wright-Richmond-Odlyzko-McKay over Beyer-Hedetniemi rooted
/// successors). Deterministic given (n, shard_index, shard_count);
/// shards partition the stream by the size of the root's first subtree,
/// the generator's first branching decision.
class TreeStream {
 public:
  explicit TreeStream(int n, int shard_index = 0, int shard_count = 1);

  std::optional<Tree> next();

  int order() const { return n_; }
  int shard_index() const { return shard_index_; }
  int shard_count() const { return shard_count_; }

 private:
  bool accepted_by_shard(int first_subtree_size) const;

  int n_;
  int shard_index_;
  int shard_count_;
  bool exhausted_ = false;
  bool tiny_emitted_ = false;  // n <= 2 path
  std::vector<int> layout_;
};

inline constexpr int kMaxEnumerationOrder = 32;

TreeStream free_trees(int n);
TreeStream shard(int n, int shard_index, int shard_count);

/// Labeled tree from a Pruefer sequence (length n-2, entries in
/// {0,...,n-1}); the test oracle for the generator and the sampler for
/// randomized checks.
Tree tree_from_pruefer(const std::vector<int>& seq);

}  // namespace spectree

#endif  // SPECTREE_ENUMERATE_HPP
