#pragma once

// The tree T(q) and the invariant f(q).
//
// Every node carries a prime power p^e; the root is q itself (e = 1). The
// children of a node with base prime p are the unitary prime-power divisors
// of p - 1, so the leaves are the nodes whose base is 2. f(q) is the largest
// proper prime power reached through the recursion
//
//   f(2) = 1,  f(q) = max(f(p) for p || q-1,  p^e for p^e || q-1 with e >= 2).

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lamsol/arith.hpp"

namespace lamsol {

struct PrattNode {
  PrimePower value;
  std::vector<PrattNode> children;  // increasing base prime
};

struct PrattTree {
  PrattNode root;

  u64 prime() const { return root.value.p; }
  std::size_t node_count() const;
  /// Edges on the longest root-to-leaf path.
  std::size_t depth() const;
  /// Largest proper prime power anywhere in the tree, 1 when there is none.
  u64 max_proper_prime_power() const;
};

/// Throws std::invalid_argument when q is not prime.
PrattTree build_tree(u64 q);

/// Graphviz digraph with nodes numbered in preorder.
std::string export_dot(const PrattTree& tree);

/// p^a || n with the largest value p^a. Throws std::invalid_argument for n < 2.
PrimePower largest_prime_power_divisor(u64 n);

/// Memo table q -> f(q). Concurrent readers, serialized writers.
class FCache {
 public:
  FCache() = default;
  FCache(const FCache& other);
  FCache& operator=(const FCache& other);

  std::optional<u64> find(u64 q) const;

  /// Records f(q). Throws std::logic_error if a different value is already
  /// stored for q.
  void insert(u64 q, u64 f);

  std::size_t size() const;
  void clear();

  /// Sorted (q, f) pairs.
  std::vector<std::pair<u64, u64>> entries() const;

  /// Adds every entry of other; agreeing duplicates are fine.
  void merge(const FCache& other);

  /// Writes "q,f" lines sorted by q.
  void save(const std::filesystem::path& path) const;
  /// Merges the records of a cache file into this cache.
  void load(const std::filesystem::path& path);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<u64, u64> values_;
};

/// f(q), memoized in cache. Throws std::invalid_argument when q is not prime.
u64 f_of(u64 q, FCache& cache);

/// f(q) without any memo table shared with other calls.
u64 f_of(u64 q);

}  // namespace lamsol
