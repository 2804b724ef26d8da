#include "xprod/nc_partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace xprod {

namespace {

std::string bad(const std::string& what) { return "NCPartition: " + what; }

}  // namespace

NCPartition::NCPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1) throw std::domain_error(bad("ground set must be nonempty"));
  if (blocks_.empty()) throw std::domain_error(bad("no blocks"));
  for (auto& b : blocks_) {
    if (b.empty()) throw std::domain_error(bad("empty block"));
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  block_of_.assign(static_cast<std::size_t>(n_) + 1, -1);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int e : blocks_[bi]) {
      if (e < 1 || e > n_) throw std::domain_error(bad("element out of range"));
      if (block_of_[static_cast<std::size_t>(e)] != -1)
        throw std::domain_error(bad("duplicate element"));
      block_of_[static_cast<std::size_t>(e)] = static_cast<int>(bi);
    }
  }
  for (int e = 1; e <= n_; ++e) {
    if (block_of_[static_cast<std::size_t>(e)] == -1)
      throw std::domain_error(bad("blocks do not cover the ground set"));
  }

  // Crossing test per block pair: merge the two blocks in order and count
  // label alternations; three or more switches yield an a < b < c < d
  // crossing pattern.
  for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      const auto& x = blocks_[i];
      const auto& y = blocks_[j];
      std::size_t xi = 0, yi = 0;
      int switches = 0, last = 0;  // 1 = from x, 2 = from y
      while (xi < x.size() || yi < y.size()) {
        int label;
        if (yi == y.size() || (xi < x.size() && x[xi] < y[yi])) {
          label = 1;
          ++xi;
        } else {
          label = 2;
          ++yi;
        }
        if (label != last) {
          if (last != 0) ++switches;
          last = label;
        }
      }
      if (switches >= 3) throw std::domain_error(bad("blocks cross"));
    }
  }
}

NCPartition NCPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) blocks.push_back({e});
  return NCPartition(n, std::move(blocks));
}

NCPartition NCPartition::whole(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) all[static_cast<std::size_t>(e - 1)] = e;
  return NCPartition(n, {std::move(all)});
}

int NCPartition::block_of(int element) const {
  if (element < 1 || element > n_)
    throw std::domain_error(bad("element out of range"));
  return block_of_[static_cast<std::size_t>(element)];
}

bool partition_less(const NCPartition& a, const NCPartition& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  return a.blocks() < b.blocks();
}

std::vector<NCPartition> enumerate_nc(int n) {
  if (n < 1 || n > kNcEnumerationCeiling)
    throw std::domain_error("enumerate_nc: n out of range 1.." +
                            std::to_string(kNcEnumerationCeiling));
  std::vector<NCPartition> out;
  out.reserve(catalan(n));
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;  // indices of blocks still extendable, innermost last

  // Each element either opens a new block or joins an open block; joining a
  // block permanently closes every block opened after it, which is exactly
  // the noncrossing condition. Every partition arises from one choice path.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > n) {
      out.emplace_back(n, blocks);
      return;
    }
    blocks.push_back({pos});
    open.push_back(static_cast<int>(blocks.size()) - 1);
    self(self, pos + 1);
    open.pop_back();
    blocks.pop_back();

    for (int depth = static_cast<int>(open.size()) - 1; depth >= 0; --depth) {
      std::vector<int> closed(open.begin() + depth + 1, open.end());
      open.resize(static_cast<std::size_t>(depth) + 1);
      blocks[static_cast<std::size_t>(open[static_cast<std::size_t>(depth)])].push_back(pos);
      self(self, pos + 1);
      blocks[static_cast<std::size_t>(open[static_cast<std::size_t>(depth)])].pop_back();
      open.insert(open.end(), closed.begin(), closed.end());
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

bool leq(const NCPartition& a, const NCPartition& b) {
  if (a.n() != b.n()) throw std::domain_error("leq: ground sets differ");
  for (const auto& block : a.blocks()) {
    const int target = b.block_of(block.front());
    for (int e : block) {
      if (b.block_of(e) != target) return false;
    }
  }
  return true;
}

std::uint64_t catalan(int n) {
  if (n < 0 || n > 35) throw std::domain_error("catalan: n out of range 0..35");
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> c(36, 0);
    c[0] = 1;
    for (int k = 0; k < 35; ++k) {
      std::uint64_t sum = 0;
      for (int i = 0; i <= k; ++i) sum += c[static_cast<std::size_t>(i)] *
                                          c[static_cast<std::size_t>(k - i)];
      c[static_cast<std::size_t>(k) + 1] = sum;
    }
    return c;
  }();
  return table[static_cast<std::size_t>(n)];
}

namespace {

// Per-n lattice: enumeration, pairwise order, and the memoized Mobius
// table. Cached globally; the memo is guarded so concurrent callers see a
// consistent map.
class NCLattice {
 public:
  explicit NCLattice(int n) : n_(n), parts_(enumerate_nc(n)) {
    const std::size_t count = parts_.size();
    leq_.assign(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        leq_[i][j] = leq(parts_[i], parts_[j]);
      }
    }
  }

  static const NCLattice& of(int n) {
    if (n < 1 || n > kNcMobiusCeiling)
      throw std::domain_error("mobius: n out of range 1.." +
                              std::to_string(kNcMobiusCeiling));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<NCLattice>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
      it = cache.emplace(n, std::make_unique<NCLattice>(n)).first;
    }
    return *it->second;
  }

  const std::vector<NCPartition>& partitions() const { return parts_; }

  int index_of(const NCPartition& p) const {
    const auto it = std::lower_bound(parts_.begin(), parts_.end(), p, partition_less);
    if (it == parts_.end() || !(*it == p))
      throw std::domain_error("mobius: partition not in lattice");
    return static_cast<int>(it - parts_.begin());
  }

  long long mobius_pair(int i, int j) const {
    std::lock_guard<std::mutex> lock(memo_mu_);
    return mobius_locked(i, j);
  }

  const std::vector<long long>& to_top() const {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (to_top_.empty()) {
      const int top = static_cast<int>(parts_.size()) - 1;
      // 1_n is the unique partition with one block; locate it.
      int top_idx = -1;
      for (int k = 0; k <= top; ++k) {
        if (parts_[static_cast<std::size_t>(k)].block_count() == 1) {
          top_idx = k;
          break;
        }
      }
      to_top_.resize(parts_.size());
      for (int i = 0; i < static_cast<int>(parts_.size()); ++i) {
        to_top_[static_cast<std::size_t>(i)] = mobius_locked(i, top_idx);
      }
    }
    return to_top_;
  }

 private:
  long long mobius_locked(int i, int j) const {
    if (i == j) return 1;
    const std::uint64_t key =
        static_cast<std::uint64_t>(i) * parts_.size() + static_cast<std::uint64_t>(j);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    long long sum = 0;
    for (int t = 0; t < static_cast<int>(parts_.size()); ++t) {
      if (t != j && leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] &&
          leq_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]) {
        sum += mobius_locked(i, t);
      }
    }
    memo_[key] = -sum;
    return -sum;
  }

  int n_;
  std::vector<NCPartition> parts_;
  std::vector<std::vector<bool>> leq_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<std::uint64_t, long long> memo_;
  mutable std::vector<long long> to_top_;
};

}  // namespace

long long mobius(const NCPartition& a, const NCPartition& b) {
  if (a.n() != b.n()) throw std::domain_error("mobius: ground sets differ");
  if (!leq(a, b)) throw std::domain_error("mobius: arguments are not ordered");
  const NCLattice& lat = NCLattice::of(a.n());
  return lat.mobius_pair(lat.index_of(a), lat.index_of(b));
}

const std::vector<NCPartition>& nc_partitions_cached(int n) {
  return NCLattice::of(n).partitions();
}

const std::vector<long long>& nc_mobius_to_top(int n) {
  return NCLattice::of(n).to_top();
}

NestingForest nesting_forest(const NCPartition& pi) {
  const auto& blocks = pi.blocks();
  const int count = pi.block_count();
  NestingForest forest;
  forest.n = pi.n();
  forest.nodes.resize(static_cast<std::size_t>(count));

  // Parent of b: among blocks whose span strictly contains b's span, the
  // one with the largest minimum (the immediate container). Noncrossing
  // makes span containment the same as sitting inside a single gap.
  for (int b = 0; b < count; ++b) {
    const int lo = blocks[static_cast<std::size_t>(b)].front();
    const int hi = blocks[static_cast<std::size_t>(b)].back();
    int parent = -1;
    for (int c = 0; c < count; ++c) {
      if (c == b) continue;
      const int clo = blocks[static_cast<std::size_t>(c)].front();
      const int chi = blocks[static_cast<std::size_t>(c)].back();
      if (clo < lo && hi < chi) {
        if (parent == -1 || clo > blocks[static_cast<std::size_t>(parent)].front()) {
          parent = c;
        }
      }
    }
    forest.nodes[static_cast<std::size_t>(b)].parent = parent;
  }
  // Blocks are ordered by minimum already, so children and roots come out
  // ordered by block minimum.
  for (int b = 0; b < count; ++b) {
    const int p = forest.nodes[static_cast<std::size_t>(b)].parent;
    if (p == -1) {
      forest.roots.push_back(b);
    } else {
      forest.nodes[static_cast<std::size_t>(p)].children.push_back(b);
    }
  }
  return forest;
}

std::string to_text(const NCPartition& pi) {
  std::string out = "{";
  for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
    if (b > 0) out += ",";
    out += "(";
    const auto& block = pi.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(block[i]);
    }
    out += ")";
  }
  out += "}";
  return out;
}

NCPartition parse_partition(std::string_view text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw std::domain_error("parse_partition: expected '" + std::string(1, c) +
                              "' in " + std::string(text));
    ++i;
  };
  const auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::domain_error("parse_partition: expected integer");
    return std::stoi(std::string(text.substr(start, i - start)));
  };

  expect('{');
  std::vector<std::vector<int>> blocks;
  int max_elem = 0;
  while (true) {
    expect('(');
    std::vector<int> block;
    while (true) {
      const int e = parse_int();
      block.push_back(e);
      max_elem = std::max(max_elem, e);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(')');
    blocks.push_back(std::move(block));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect('}');
  skip_ws();
  if (i != text.size())
    throw std::domain_error("parse_partition: trailing characters");
  return NCPartition(max_elem, std::move(blocks));
}

}  // namespace xprod
