#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xprod {

// A noncrossing partition of {1..n}. Canonical form: every block strictly
// increasing, blocks ordered by least element, so structural equality is
// value equality. Construction validates that the blocks partition {1..n}
// and that no two blocks cross (a < b < c < d with a,c in one block and
// b,d in the other).
class NCPartition {
 public:
  NCPartition(int n, std::vector<std::vector<int>> blocks);

  // The discrete partition {(1),...,(n)} and the whole partition {(1,...,n)}.
  static NCPartition discrete(int n);
  static NCPartition whole(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // Index into blocks() of the block containing a 1-based element.
  int block_of(int element) const;

  bool operator==(const NCPartition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }
  bool operator!=(const NCPartition& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // element (1-based) -> block index
};

// Strict total order backing the documented enumeration order:
// lexicographic comparison of the canonical block lists.
bool partition_less(const NCPartition& a, const NCPartition& b);

inline constexpr int kNcEnumerationCeiling = 10;
inline constexpr int kNcMobiusCeiling = 8;

// Every noncrossing partition of {1..n}, each exactly once, sorted by
// partition_less. 1 <= n <= kNcEnumerationCeiling.
std::vector<NCPartition> enumerate_nc(int n);

// Refinement order: a <= b iff every block of a lies inside a block of b.
bool leq(const NCPartition& a, const NCPartition& b);

// Mobius value of the interval [a, b] in NC(n), computed by the interval
// recursion mu(a,a) = 1, mu(a,b) = -sum_{a <= t < b} mu(a,t), memoized per
// lattice. Requires leq(a, b) and n <= kNcMobiusCeiling.
long long mobius(const NCPartition& a, const NCPartition& b);

// Cached enumeration of NC(n) (documented order) and the column of Mobius
// values mu(pi, 1_n) aligned with it. Shared across threads; the memo
// table behind mobius() is mutex-guarded. n <= kNcMobiusCeiling.
const std::vector<NCPartition>& nc_partitions_cached(int n);
const std::vector<long long>& nc_mobius_to_top(int n);

// Catalan numbers by the convolution recurrence; n <= 35 (64-bit range).
std::uint64_t catalan(int n);

// Immediate-nesting forest over the blocks of a partition. A block's parent
// is the innermost block whose span strictly contains it; for noncrossing
// partitions such a block always holds it inside a single gap. Leaves are
// the innermost blocks and are always consecutive integer intervals.
struct NestingForest {
  struct Node {
    int parent = -1;            // block index, -1 for roots
    std::vector<int> children;  // ordered by block minimum
  };
  int n = 0;
  std::vector<Node> nodes;  // parallel to partition.blocks()
  std::vector<int> roots;   // ordered by block minimum

  bool is_leaf(int block) const { return nodes[block].children.empty(); }
};

NestingForest nesting_forest(const NCPartition& pi);

// Text form used by the CLI and configs: {(1,4),(2,3),(5)}.
std::string to_text(const NCPartition& pi);
NCPartition parse_partition(std::string_view text);

}  // namespace xprod
