#include <doctest.h>

#include "xprod/freeness.hpp"

using namespace xprod;

namespace {

ContextPtr f2_swap_ctx() {
  static const ContextPtr ctx = [] {
    GroupSpec g = GroupSpec::free_group(2);
    ActionSpec a = ActionSpec::permutations(g, 2, {Permutation({2, 1}), Permutation({1, 2})});
    return make_context(g, MatShape::diagonal, 2, ScalarMode::exact, std::move(a));
  }();
  return ctx;
}

CoeffMatrix diag_ll(std::initializer_list<long long> xs) {
  std::vector<Scalar> es;
  for (long long x : xs) es.push_back(Scalar::integer(x, ScalarMode::exact));
  return CoeffMatrix::diagonal(std::move(es));
}

GroupWord gw(const ContextPtr& ctx, std::string_view text) {
  return parse_word(ctx->group, text);
}

CrossedElement uelem(const ContextPtr& ctx, std::string_view word) {
  return embed_u(ctx, gw(ctx, word));
}

std::vector<Monomial> sample_monos(const ContextPtr& ctx, int n, SplitMix64& rng) {
  std::vector<int> all;
  for (int i = 0; i < ctx->group.factor_count(); ++i) all.push_back(i);
  std::vector<Monomial> ms;
  for (int i = 0; i < n; ++i) ms.push_back(sample_monomial(ctx, all, 3, rng));
  return ms;
}

std::vector<CrossedElement> as_elems(const ContextPtr& ctx, const std::vector<Monomial>& ms) {
  std::vector<CrossedElement> xs;
  for (const auto& m : ms) xs.push_back(to_element(ctx, m));
  return xs;
}

CrossedElement chain(const std::vector<CrossedElement>& xs) {
  CrossedElement p = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) p = x_mul(p, xs[i]);
  return p;
}

const CoeffMatrix kId2 = CoeffMatrix::identity(MatShape::diagonal, 2, ScalarMode::exact);

}  // namespace

TEST_CASE("partitioned moment: whole partition is the plain expectation") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    const auto xs = as_elems(ctx, sample_monos(ctx, n, rng));
    CHECK(partitioned_moment(xs, NCPartition::whole(n)) == cond_expect(chain(xs)));
  }
}

TEST_CASE("partitioned moment: nested bracketing") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(5);
  const NCPartition pi = parse_partition("{(1,4),(2,3)}");
  for (int t = 0; t < 30; ++t) {
    const auto xs = as_elems(ctx, sample_monos(ctx, 4, rng));
    const CoeffMatrix inner = cond_expect(x_mul(xs[1], xs[2]));
    const CoeffMatrix direct =
        cond_expect(x_mul(x_mul(xs[0], embed_m(ctx, inner)), xs[3]));
    CHECK(partitioned_moment(xs, pi) == direct);
  }
}

TEST_CASE("partitioned moment: five-point unit example") {
  const ContextPtr ctx = f2_swap_ctx();
  const std::vector<CrossedElement> us = {uelem(ctx, "g0"), uelem(ctx, "g1"),
                                          uelem(ctx, "g1^-1"), uelem(ctx, "g0^-1"),
                                          uelem(ctx, "e")};
  CHECK(partitioned_moment(us, parse_partition("{(1,4),(2,3),(5)}")) == kId2);
}

TEST_CASE("partitioned moment: length mismatch") {
  const ContextPtr ctx = f2_swap_ctx();
  const std::vector<CrossedElement> xs = {uelem(ctx, "g0")};
  CHECK_THROWS_AS(partitioned_moment(xs, NCPartition::whole(2)), std::domain_error);
}

TEST_CASE("trace over partitions") {
  const ContextPtr ctx = f2_swap_ctx();
  const GroupWord e = GroupWord::identity(ctx->group);
  {
    const std::vector<GroupWord> ws = {e, e, e};
    CHECK(trace_partitioned(ws, NCPartition::discrete(3)) == Scalar::one(ScalarMode::exact));
  }
  {
    const std::vector<GroupWord> ws = {e, gw(ctx, "g0"), e};
    CHECK(trace_partitioned(ws, NCPartition::discrete(3)) == Scalar::zero(ScalarMode::exact));
  }
  {
    const std::vector<GroupWord> ws = {gw(ctx, "g0"), gw(ctx, "g1"), gw(ctx, "g1^-1"),
                                       gw(ctx, "g0^-1"), e};
    CHECK(trace_partitioned(ws, parse_partition("{(1,4),(2,3),(5)}")) ==
          Scalar::one(ScalarMode::exact));
  }
}

TEST_CASE("cumulant basics") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto xs = as_elems(ctx, sample_monos(ctx, 1, rng));
    CHECK(cumulant(xs) == cond_expect(xs[0]));
  }
  {
    const std::vector<CrossedElement> pair = {uelem(ctx, "g0"), uelem(ctx, "g0^-1")};
    CHECK(cumulant(pair) == kId2);  // 1 - 0*0
  }
  {
    const std::vector<CrossedElement> mixed = {uelem(ctx, "g0"), uelem(ctx, "g1")};
    CHECK(is_zero_mat(cumulant(mixed)));
  }
  {
    std::vector<CrossedElement> too_many(7, uelem(ctx, "g0"));
    CHECK_THROWS_AS(cumulant(too_many), std::domain_error);
    CHECK_THROWS_AS(cumulant(std::span<const CrossedElement>{}), std::domain_error);
  }
}

TEST_CASE("partition factorization and cumulant factorization, random monomials") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    const auto parts = enumerate_nc(n);
    for (int t = 0; t < 25; ++t) {
      const auto ms = sample_monos(ctx, n, rng);
      const auto xs = as_elems(ctx, ms);
      std::vector<GroupWord> ws;
      for (const auto& m : ms) ws.push_back(m.word);
      for (const auto& pi : parts) {
        const CoeffMatrix lhs = partitioned_moment(xs, pi);
        const CoeffMatrix rhs =
            mat_scale(trace_partitioned(ws, pi).to_mode(ctx->mode),
                      twisted_coefficient_product(ctx, ms));
        CHECK(lhs == rhs);
      }
      CHECK(cumulant(xs) == cumulant_factorized(ctx, ms));
    }
  }
}

TEST_CASE("factorized cumulant examples") {
  const ContextPtr ctx = f2_swap_ctx();
  // All coefficients 1: the prefactor collapses to the identity.
  {
    const std::vector<Monomial> ms = {{kId2, gw(ctx, "g0")}, {kId2, gw(ctx, "g0^-1")}};
    std::vector<GroupWord> ws = {ms[0].word, ms[1].word};
    CHECK(scalar_trace_cumulant(ws) == 1);
    CHECK(cumulant_factorized(ctx, ms) == kId2);
  }
  // The worked pair: prefactor diag(4,6), scalar cumulant 1.
  {
    const std::vector<Monomial> ms = {{diag_ll({1, 2}), gw(ctx, "g0")},
                                      {diag_ll({3, 4}), gw(ctx, "g0^-1")}};
    CHECK(twisted_coefficient_product(ctx, ms) == diag_ll({4, 6}));
    CHECK(cumulant_factorized(ctx, ms) == diag_ll({4, 6}));
    CHECK(cumulant(as_elems(ctx, ms)) == diag_ll({4, 6}));
  }
}

TEST_CASE("moment reconstruction from cumulants") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(13);
  std::vector<int> all = {0, 1};
  for (int t = 0; t < 20; ++t) {
    std::vector<CrossedElement> xs;
    const int n = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < n; ++i) xs.push_back(sample_element(ctx, all, 3, 2, rng));
    CHECK(moments_from_cumulants(xs) == cond_expect(chain(xs)));
  }
  // n = 2 identity: E(x1 x2) = k2 + k1 k1.
  for (int t = 0; t < 20; ++t) {
    std::vector<CrossedElement> xs = {sample_element(ctx, all, 3, 2, rng),
                                      sample_element(ctx, all, 3, 2, rng)};
    const CoeffMatrix lhs = cond_expect(x_mul(xs[0], xs[1]));
    const CoeffMatrix rhs =
        mat_add(cumulant(xs), mat_mul(cond_expect(xs[0]), cond_expect(xs[1])));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cumulants of pure words match the scalar side") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(17);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 25; ++t) {
      std::vector<GroupWord> ws;
      std::vector<CrossedElement> us;
      for (int i = 0; i < n; ++i) {
        ws.push_back(sample_word(ctx->group, 3, rng));
        us.push_back(embed_u(ctx, ws.back()));
      }
      CHECK(cumulant(us) ==
            mat_scale(Scalar::integer(scalar_trace_cumulant(ws), ctx->mode), kId2));
      // Moments match too.
      CHECK(cond_expect(chain(us)) ==
            mat_scale(trace_partitioned(ws, NCPartition::whole(n)).to_mode(ctx->mode), kId2));
    }
  }
}

TEST_CASE("cumulant multilinearity and bimodule scaling") {
  const ContextPtr ctx = f2_swap_ctx();
  SplitMix64 rng(19);
  std::vector<int> all = {0, 1};
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng.below(2));
    std::vector<CrossedElement> xs;
    for (int i = 0; i < n; ++i) xs.push_back(sample_element(ctx, all, 2, 2, rng));
    const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const CrossedElement extra = sample_element(ctx, all, 2, 2, rng);

    // Additivity in one slot.
    std::vector<CrossedElement> sum = xs;
    sum[static_cast<std::size_t>(slot)] = x_add(xs[static_cast<std::size_t>(slot)], extra);
    std::vector<CrossedElement> swapped = xs;
    swapped[static_cast<std::size_t>(slot)] = extra;
    CHECK(cumulant(sum) == mat_add(cumulant(xs), cumulant(swapped)));

    // Left and right module scaling at the boundary slots.
    const CoeffMatrix m = sample_coeff_matrix(ctx->shape, ctx->dim, ctx->mode, rng);
    std::vector<CrossedElement> left = xs;
    left.front() = x_mul(embed_m(ctx, m), xs.front());
    CHECK(cumulant(left) == mat_mul(m, cumulant(xs)));
    std::vector<CrossedElement> right = xs;
    right.back() = x_mul(xs.back(), embed_m(ctx, m));
    CHECK(cumulant(right) == mat_mul(cumulant(xs), m));
  }
}

TEST_CASE("freeness checker verdicts") {
  const ContextPtr ctx = f2_swap_ctx();
  FreenessOptions opts;
  opts.max_order = 3;
  opts.instances_per_order = 40;
  opts.seed = 99;
  opts.tol = 0.0;

  const FreenessReport report = check_freeness(ctx, {0}, {1}, opts);
  CHECK(report.verdict);
  CHECK(report.violations.empty());
  CHECK(report.instances == 2 * 40);

  CHECK_THROWS_AS(check_freeness(ctx, {0}, {0}, opts), std::domain_error);
  CHECK_THROWS_AS(check_freeness(ctx, {0}, {5}, opts), std::domain_error);

  // Degenerate families: only identity words, so both sides live in the
  // coefficient algebra and every mixed cumulant of order >= 2 vanishes.
  FreenessOptions degenerate = opts;
  degenerate.max_word_len = 0;
  CHECK(check_freeness(ctx, {0}, {1}, degenerate).verdict);
}

TEST_CASE("cumulant is schedule-independent, bitwise, in floating mode") {
  GroupSpec g = GroupSpec::free_group(2);
  const CoeffMatrix u0 = CoeffMatrix::full(
      2, {Scalar::floating({0, 0}), Scalar::floating({1, 0}),
          Scalar::floating({1, 0}), Scalar::floating({0, 0})});
  const CoeffMatrix u1 = CoeffMatrix::full(
      2, {Scalar::floating({1, 0}), Scalar::floating({0, 0}),
          Scalar::floating({0, 0}), Scalar::floating({0, 1})});
  const ContextPtr ctx = make_context(
      g, MatShape::full, 2, ScalarMode::floating,
      ActionSpec::unitary_conjugations(g, {u0, u1}, 1e-12));
  SplitMix64 rng(202);
  std::vector<int> all = {0, 1};
  for (int t = 0; t < 10; ++t) {
    std::vector<CrossedElement> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(sample_element(ctx, all, 3, 2, rng));
    // Partition values land in per-index slots and reduce in enumeration
    // order, so the thread count cannot perturb even the last bit.
    CHECK(cumulant(xs, 1) == cumulant(xs, 4));
  }
}

TEST_CASE("within one factor the pair cumulant is not zero") {
  const ContextPtr ctx = f2_swap_ctx();
  const std::vector<CrossedElement> pair = {uelem(ctx, "g0"), uelem(ctx, "g0^-1")};
  const CoeffMatrix k2 = cumulant(pair);
  CHECK(k2 == kId2);
  CHECK_FALSE(is_zero_mat(k2));
}

TEST_CASE("alternating centered oracle") {
  const ContextPtr ctx = f2_swap_ctx();
  const std::vector<int> fa = {0}, fb = {1};

  SUBCASE("single centered element") {
    const CrossedElement x = centered(
        to_element(ctx, Monomial{diag_ll({2, -1}), gw(ctx, "g0")}));
    const std::vector<CrossedElement> xs = {x};
    CHECK(is_zero_mat(alternating_centered_oracle(xs, fa, fb)));
  }
  SUBCASE("centered unitaries") {
    const std::vector<CrossedElement> xs = {uelem(ctx, "g0"), uelem(ctx, "g1")};
    CHECK(is_zero_mat(alternating_centered_oracle(xs, fa, fb)));
  }
  SUBCASE("length-4 alternating monomials") {
    SplitMix64 rng(101);
    for (int t = 0; t < 40; ++t) {
      std::vector<CrossedElement> xs;
      bool from_a = rng.coin();
      for (int i = 0; i < 4; ++i) {
        const std::vector<int>& fam = from_a ? fa : fb;
        CrossedElement x = CrossedElement::zero(ctx);
        while (x.is_zero()) {
          const GroupWord w = sample_word_in(ctx->group, fam, 3, rng);
          if (w.is_identity()) continue;
          x = centered(to_element(
              ctx, Monomial{sample_coeff_matrix(ctx->shape, ctx->dim, ctx->mode, rng), w}));
        }
        xs.push_back(std::move(x));
        from_a = !from_a;
      }
      CHECK(is_zero_mat(alternating_centered_oracle(xs, fa, fb)));
    }
  }
  SUBCASE("rejects non-alternating input") {
    const std::vector<CrossedElement> xs = {uelem(ctx, "g0"), uelem(ctx, "g0^2")};
    CHECK_THROWS_AS(alternating_centered_oracle(xs, fa, fb), std::domain_error);
  }
  SUBCASE("rejects uncentered input") {
    const std::vector<CrossedElement> xs = {
        x_add(uelem(ctx, "g0"), embed_m(ctx, kId2))};
    CHECK_THROWS_AS(alternating_centered_oracle(xs, fa, fb), std::domain_error);
  }
  SUBCASE("rejects mixed-support input") {
    const std::vector<CrossedElement> xs = {uelem(ctx, "g0 g1")};
    CHECK_THROWS_AS(alternating_centered_oracle(xs, fa, fb), std::domain_error);
  }
}
