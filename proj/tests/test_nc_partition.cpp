#include <doctest.h>

#include <algorithm>
#include <set>

#include "xprod/nc_partition.hpp"
#include "xprod/rng.hpp"

using namespace xprod;

namespace {

// Oracle: every set partition of {1..n}, generated from restricted growth
// strings. Independent of the library's enumerator.
std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  const auto emit = [&] {
    const int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> p(static_cast<std::size_t>(blocks));
    for (int e = 1; e <= n; ++e) p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(e - 1)])].push_back(e);
    out.push_back(std::move(p));
  };
  const auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

// Oracle: the literal crossing definition, scanning all quadruples
// a < b < c < d with a,c together and b,d together in different blocks.
bool crosses(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (int e : blocks[bi]) owner[static_cast<std::size_t>(e)] = static_cast<int>(bi);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
            return true;
        }
  return false;
}

// Oracle: Catalan numbers by the convolution recurrence, written here so
// the test does not trust the library's copy.
std::uint64_t catalan_rec(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 0; k < n; ++k) {
    std::uint64_t s = 0;
    for (int i = 0; i <= k; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
    c[static_cast<std::size_t>(k) + 1] = s;
  }
  return c[static_cast<std::size_t>(n)];
}

std::set<std::string> texts(const std::vector<NCPartition>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(to_text(p));
  return out;
}

}  // namespace

TEST_CASE("enumeration counts match the brute-force filter and Catalan") {
  for (int n = 1; n <= 7; ++n) {
    const auto mine = enumerate_nc(n);
    const auto all = all_set_partitions(n);
    std::set<std::string> oracle;
    for (const auto& p : all) {
      if (!crosses(p, n)) oracle.insert(to_text(NCPartition(n, p)));
    }
    CHECK(mine.size() == oracle.size());
    CHECK(mine.size() == catalan_rec(n));
    CHECK(texts(mine) == oracle);
  }
}

TEST_CASE("small enumerations") {
  const auto one = enumerate_nc(1);
  REQUIRE(one.size() == 1);
  CHECK(to_text(one[0]) == "{(1)}");

  CHECK(enumerate_nc(3).size() == 5);

  const auto four = enumerate_nc(4);
  CHECK(four.size() == 14);
  // The single crossing set partition of {1,2,3,4} never appears.
  for (const auto& p : four) CHECK(to_text(p) != "{(1,3),(2,4)}");
  const auto all4 = all_set_partitions(4);
  CHECK(all4.size() == 15);
  int crossing = 0;
  for (const auto& p : all4) {
    if (crosses(p, 4)) {
      ++crossing;
      std::vector<std::vector<int>> copy = p;
      for (auto& b : copy) std::sort(b.begin(), b.end());
      std::sort(copy.begin(), copy.end());
      CHECK(copy == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    }
  }
  CHECK(crossing == 1);
}

TEST_CASE("enumeration order is the documented lexicographic order") {
  for (int n : {3, 5}) {
    const auto ps = enumerate_nc(n);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      CHECK(partition_less(ps[i], ps[i + 1]));
    }
  }
}

TEST_CASE("enumeration domain errors") {
  CHECK_THROWS_AS(enumerate_nc(0), std::domain_error);
  CHECK_THROWS_AS(enumerate_nc(kNcEnumerationCeiling + 1), std::domain_error);
  CHECK(enumerate_nc(kNcEnumerationCeiling).size() == catalan_rec(kNcEnumerationCeiling));
}

TEST_CASE("partition construction rejects bad input") {
  CHECK_THROWS_AS(NCPartition(4, {{1, 3}, {2, 4}}), std::domain_error);  // crossing
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}}), std::domain_error);          // missing 3
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}, {2, 3}}), std::domain_error);  // duplicate
  CHECK_THROWS_AS(NCPartition(3, {{1, 2, 3}, {}}), std::domain_error);   // empty block
  CHECK_THROWS_AS(NCPartition(2, {{1, 2, 3}}), std::domain_error);       // out of range
}

TEST_CASE("refinement order") {
  const NCPartition top3 = NCPartition::whole(3);
  CHECK(leq(parse_partition("{(1,2),(3)}"), top3));
  CHECK(leq(NCPartition::discrete(4), parse_partition("{(1,4),(2,3)}")));
  CHECK_FALSE(leq(parse_partition("{(1,3),(2)}"), parse_partition("{(1,2),(3)}")));
  CHECK_THROWS_AS(leq(NCPartition::whole(3), NCPartition::whole(4)), std::domain_error);
}

TEST_CASE("refinement order is a partial order (exhaustive n = 4, 5)") {
  for (int n : {4, 5}) {
    const auto ps = enumerate_nc(n);
    for (const auto& a : ps) CHECK(leq(a, a));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i != j && leq(ps[i], ps[j])) CHECK_FALSE(leq(ps[j], ps[i]));
      }
    }
    // Transitivity.
    std::vector<std::vector<bool>> rel(ps.size(), std::vector<bool>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) rel[i][j] = leq(ps[i], ps[j]);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t k = 0; k < ps.size(); ++k) {
          if (rel[j][k]) CHECK(rel[i][k]);
        }
      }
  }
}

TEST_CASE("Mobius values on full intervals") {
  CHECK(mobius(NCPartition::whole(4), NCPartition::whole(4)) == 1);
  const long long expected[] = {1, -1, 2, -5, 14, -42, 132};
  for (int n = 1; n <= 7; ++n) {
    const long long got = mobius(NCPartition::discrete(n), NCPartition::whole(n));
    CHECK(got == expected[n - 1]);
    const long long sign = (n % 2 == 1) ? 1 : -1;
    CHECK(got == sign * static_cast<long long>(catalan_rec(n - 1)));
  }
  CHECK_THROWS_AS(mobius(NCPartition::whole(3), NCPartition::discrete(3)),
                  std::domain_error);
}

TEST_CASE("Mobius defining identity on random intervals") {
  SplitMix64 rng(2024);
  for (int n = 2; n <= 5; ++n) {
    const auto ps = enumerate_nc(n);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& a = ps[rng.below(ps.size())];
      const auto& b = ps[rng.below(ps.size())];
      if (a == b || !leq(a, b)) continue;
      long long sum = 0;
      for (const auto& t : ps) {
        if (leq(a, t) && leq(t, b)) sum += mobius(a, t);
      }
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("nesting forest shapes") {
  SUBCASE("a three-deep chain") {
    const NCPartition pi = parse_partition("{(1,6),(2,5),(3,4)}");
    const NestingForest f = nesting_forest(pi);
    REQUIRE(f.roots.size() == 1);
    const int outer = f.roots[0];
    CHECK(pi.blocks()[static_cast<std::size_t>(outer)] == std::vector<int>{1, 6});
    REQUIRE(f.nodes[static_cast<std::size_t>(outer)].children.size() == 1);
    const int mid = f.nodes[static_cast<std::size_t>(outer)].children[0];
    CHECK(pi.blocks()[static_cast<std::size_t>(mid)] == std::vector<int>{2, 5});
    REQUIRE(f.nodes[static_cast<std::size_t>(mid)].children.size() == 1);
    const int inner = f.nodes[static_cast<std::size_t>(mid)].children[0];
    CHECK(pi.blocks()[static_cast<std::size_t>(inner)] == std::vector<int>{3, 4});
    CHECK(f.is_leaf(inner));
  }
  SUBCASE("the discrete partition is all roots") {
    const NestingForest f = nesting_forest(NCPartition::discrete(5));
    CHECK(f.roots.size() == 5);
    for (const auto& node : f.nodes) CHECK(node.children.empty());
  }
  SUBCASE("the five-point example") {
    const NCPartition pi = parse_partition("{(1,4),(2,3),(5)}");
    const NestingForest f = nesting_forest(pi);
    REQUIRE(f.roots.size() == 2);
    CHECK(pi.blocks()[static_cast<std::size_t>(f.roots[0])] == std::vector<int>{1, 4});
    CHECK(pi.blocks()[static_cast<std::size_t>(f.roots[1])] == std::vector<int>{5});
    const auto& kids = f.nodes[static_cast<std::size_t>(f.roots[0])].children;
    REQUIRE(kids.size() == 1);
    CHECK(pi.blocks()[static_cast<std::size_t>(kids[0])] == std::vector<int>{2, 3});
  }
}

TEST_CASE("every leaf block is a consecutive interval (all of NC(6))") {
  for (const auto& pi : enumerate_nc(6)) {
    const NestingForest f = nesting_forest(pi);
    for (int b = 0; b < pi.block_count(); ++b) {
      if (!f.is_leaf(b)) continue;
      const auto& block = pi.blocks()[static_cast<std::size_t>(b)];
      for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        CHECK(block[i + 1] == block[i] + 1);
      }
    }
  }
}

TEST_CASE("text round trip") {
  for (const auto& pi : enumerate_nc(5)) {
    CHECK(parse_partition(to_text(pi)) == pi);
  }
  CHECK(parse_partition(" { ( 1 , 4 ) , ( 2 , 3 ) } ") == parse_partition("{(1,4),(2,3)}"));
  CHECK_THROWS_AS(parse_partition("{(1,4),(2,3)"), std::domain_error);
  CHECK_THROWS_AS(parse_partition("{(1,x)}"), std::domain_error);
  CHECK_THROWS_AS(parse_partition("{(1,3),(2,4)}"), std::domain_error);
}

TEST_CASE("catalan helper matches the recurrence oracle") {
  for (int n = 0; n <= 12; ++n) CHECK(catalan(n) == catalan_rec(n));
}
