#include "xprod/freeness.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

#include "xprod/parallel.hpp"

namespace xprod {

CrossedElement to_element(ContextPtr ctx, const Monomial& m) {
  return CrossedElement::from_terms(std::move(ctx), {{m.word, m.coeff}});
}

namespace {

ContextPtr shared_context(std::span<const CrossedElement> xs, const char* who) {
  if (xs.empty()) throw std::domain_error(std::string(who) + ": empty argument list");
  const ContextPtr& ctx = xs.front().context();
  for (const auto& x : xs) {
    if (x.context() != ctx && !(*x.context() == *ctx))
      throw std::domain_error(std::string(who) + ": contexts differ");
  }
  return ctx;
}

// Shared skeleton of the two nested block evaluations: combine a block's
// member elements with the re-embedded values of its children, inserted at
// the gap each child occupies (children of one gap in order of minima).
// whole_block turns the assembled per-slot elements into the block value.
CoeffMatrix eval_blocks(
    std::span<const CrossedElement> xs, const NCPartition& pi, const ContextPtr& ctx,
    const std::function<CoeffMatrix(std::vector<CrossedElement>)>& whole_block) {
  const NestingForest forest = nesting_forest(pi);
  const auto& blocks = pi.blocks();

  std::function<CoeffMatrix(int)> eval = [&](int b) -> CoeffMatrix {
    const auto& members = blocks[static_cast<std::size_t>(b)];
    const auto& kids = forest.nodes[static_cast<std::size_t>(b)].children;
    std::vector<CrossedElement> slots;
    slots.reserve(members.size());
    slots.push_back(xs[static_cast<std::size_t>(members[0] - 1)]);
    std::size_t next_kid = 0;
    for (std::size_t j = 1; j < members.size(); ++j) {
      while (next_kid < kids.size() &&
             blocks[static_cast<std::size_t>(kids[next_kid])].front() < members[j]) {
        slots.back() =
            x_mul(slots.back(), embed_m(ctx, eval(kids[next_kid])));
        ++next_kid;
      }
      slots.push_back(xs[static_cast<std::size_t>(members[j] - 1)]);
    }
    assert(next_kid == kids.size());
    return whole_block(std::move(slots));
  };

  CoeffMatrix out = eval(forest.roots.front());
  for (std::size_t r = 1; r < forest.roots.size(); ++r) {
    out = mat_mul(out, eval(forest.roots[static_cast<std::size_t>(r)]));
  }
  return out;
}

}  // namespace

CoeffMatrix partitioned_moment(std::span<const CrossedElement> xs, const NCPartition& pi) {
  if (static_cast<int>(xs.size()) != pi.n())
    throw std::domain_error("partitioned_moment: argument count differs from partition size");
  ContextPtr ctx = shared_context(xs, "partitioned_moment");
  return eval_blocks(xs, pi, ctx, [](std::vector<CrossedElement> slots) {
    CrossedElement prod = std::move(slots.front());
    for (std::size_t i = 1; i < slots.size(); ++i) prod = x_mul(prod, slots[i]);
    return cond_expect(prod);
  });
}

Scalar trace_partitioned(std::span<const GroupWord> ws, const NCPartition& pi) {
  if (static_cast<int>(ws.size()) != pi.n())
    throw std::domain_error("trace_partitioned: word count differs from partition size");
  for (const auto& block : pi.blocks()) {
    GroupWord prod = ws[static_cast<std::size_t>(block.front() - 1)];
    for (std::size_t i = 1; i < block.size(); ++i) {
      prod = multiply(prod, ws[static_cast<std::size_t>(block[i] - 1)]);
    }
    if (!prod.is_identity()) return Scalar::integer(0, ScalarMode::exact);
  }
  return Scalar::integer(1, ScalarMode::exact);
}

CoeffMatrix twisted_coefficient_product(ContextPtr ctx, std::span<const Monomial> ms) {
  if (ms.empty())
    throw std::domain_error("twisted_coefficient_product: empty argument list");
  CoeffMatrix acc = ms.front().coeff;
  GroupWord prefix = ms.front().word;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    acc = mat_mul(acc, act(ctx->action, prefix, ms[i].coeff));
    prefix = multiply(prefix, ms[i].word);
  }
  return acc;
}

long long scalar_trace_cumulant(std::span<const GroupWord> ws) {
  const int n = static_cast<int>(ws.size());
  if (n < 1 || n > kCumulantCeiling)
    throw std::domain_error("scalar_trace_cumulant: order out of range 1.." +
                            std::to_string(kCumulantCeiling));
  const auto& parts = nc_partitions_cached(n);
  const auto& mu = nc_mobius_to_top(n);
  long long sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!trace_partitioned(ws, parts[i]).is_zero()) sum += mu[i];
  }
  return sum;
}

CoeffMatrix cumulant(std::span<const CrossedElement> xs, int threads) {
  const int n = static_cast<int>(xs.size());
  if (n < 1 || n > kCumulantCeiling)
    throw std::domain_error("cumulant: order out of range 1.." +
                            std::to_string(kCumulantCeiling));
  ContextPtr ctx = shared_context(xs, "cumulant");
  const auto& parts = nc_partitions_cached(n);
  const auto& mu = nc_mobius_to_top(n);
  std::vector<CoeffMatrix> vals(parts.size());
  parallel_for(parts.size(), threads, [&](std::size_t i) {
    vals[i] = mat_scale(Scalar::integer(mu[i], ctx->mode), partitioned_moment(xs, parts[i]));
  });
  // Fixed reduction order (enumeration order) so thread count cannot
  // change floating-point results.
  CoeffMatrix acc = vals.front();
  for (std::size_t i = 1; i < vals.size(); ++i) acc = mat_add(acc, vals[i]);
  return acc;
}

CoeffMatrix cumulant_factorized(ContextPtr ctx, std::span<const Monomial> ms) {
  const int n = static_cast<int>(ms.size());
  if (n < 1 || n > kCumulantCeiling)
    throw std::domain_error("cumulant_factorized: order out of range 1.." +
                            std::to_string(kCumulantCeiling));
  std::vector<GroupWord> ws;
  ws.reserve(ms.size());
  for (const auto& m : ms) ws.push_back(m.word);
  const long long k = scalar_trace_cumulant(ws);
  return mat_scale(Scalar::integer(k, ctx->mode),
                   twisted_coefficient_product(ctx, ms));
}

CoeffMatrix moments_from_cumulants(std::span<const CrossedElement> xs) {
  const int n = static_cast<int>(xs.size());
  if (n < 1 || n > kCumulantCeiling)
    throw std::domain_error("moments_from_cumulants: order out of range 1.." +
                            std::to_string(kCumulantCeiling));
  ContextPtr ctx = shared_context(xs, "moments_from_cumulants");
  const auto& parts = nc_partitions_cached(n);
  CoeffMatrix acc = CoeffMatrix::zero(ctx->shape, ctx->dim, ctx->mode);
  for (const auto& pi : parts) {
    acc = mat_add(acc, eval_blocks(xs, pi, ctx, [](std::vector<CrossedElement> slots) {
            return cumulant(slots);
          }));
  }
  return acc;
}

CrossedElement centered(const CrossedElement& x) {
  return x_sub(x, embed_m(x.context(), cond_expect(x)));
}

Monomial sample_monomial(const ContextPtr& ctx, const std::vector<int>& factors,
                         int max_word_len, SplitMix64& rng) {
  return Monomial{sample_coeff_matrix(ctx->shape, ctx->dim, ctx->mode, rng),
                  sample_word_in(ctx->group, factors, max_word_len, rng)};
}

CrossedElement sample_element(const ContextPtr& ctx, const std::vector<int>& factors,
                              int max_word_len, int max_terms, SplitMix64& rng) {
  const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                            std::max(1, max_terms))));
  std::vector<std::pair<GroupWord, CoeffMatrix>> list;
  list.reserve(static_cast<std::size_t>(terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m = sample_monomial(ctx, factors, max_word_len, rng);
    list.emplace_back(std::move(m.word), std::move(m.coeff));
  }
  return CrossedElement::from_terms(ctx, list);
}

namespace {

void validate_families(const ContextPtr& ctx, const std::vector<int>& a,
                       const std::vector<int>& b) {
  const int count = ctx->group.factor_count();
  for (int f : a) {
    if (f < 0 || f >= count)
      throw std::domain_error("check_freeness: factor index out of range");
  }
  for (int f : b) {
    if (f < 0 || f >= count)
      throw std::domain_error("check_freeness: factor index out of range");
  }
  std::set<int> sa(a.begin(), a.end());
  for (int f : b) {
    if (sa.count(f))
      throw std::domain_error(
          "check_freeness: factor subsets overlap; the families are not distinct over the base");
  }
}

}  // namespace

FreenessReport check_freeness(ContextPtr ctx, const std::vector<int>& family_a,
                              const std::vector<int>& family_b,
                              const FreenessOptions& opts) {
  validate_families(ctx, family_a, family_b);
  if (opts.min_order < 2 || opts.max_order > kCumulantCeiling ||
      opts.min_order > opts.max_order)
    throw std::domain_error("check_freeness: order range out of bounds");

  struct Instance {
    int order;
    std::string pattern;
    std::vector<CrossedElement> args;
  };

  // Sampling happens up front and sequentially, so the thread count can
  // only affect scheduling of the evaluations, never the inputs.
  SplitMix64 rng = SplitMix64(opts.seed);
  std::vector<Instance> instances;
  for (int order = opts.min_order; order <= opts.max_order; ++order) {
    const std::uint64_t mixed_patterns = (1ULL << order) - 2;
    // Every mixed pattern gets at least one instance per order.
    const int per_order =
        std::max<int>(opts.instances_per_order, static_cast<int>(mixed_patterns));
    for (int t = 0; t < per_order; ++t) {
      // Cycle through every mixed slot pattern before repeating any.
      const std::uint64_t mask =
          1 + (static_cast<std::uint64_t>(t) % mixed_patterns);
      Instance inst;
      inst.order = order;
      for (int s = 0; s < order; ++s) {
        const bool from_b = ((mask >> s) & 1) != 0;
        inst.pattern += from_b ? 'B' : 'A';
        const std::vector<int>& fam = from_b ? family_b : family_a;
        if (rng.coin()) {
          inst.args.push_back(to_element(ctx, sample_monomial(ctx, fam, opts.max_word_len, rng)));
        } else {
          inst.args.push_back(
              sample_element(ctx, fam, opts.max_word_len, opts.max_terms, rng));
        }
      }
      instances.push_back(std::move(inst));
    }
  }

  std::vector<CoeffMatrix> values(instances.size());
  parallel_for(instances.size(), resolve_threads(opts.threads), [&](std::size_t i) {
    values[i] = cumulant(instances[i].args);
  });

  FreenessReport report;
  report.max_order = opts.max_order;
  report.instances_per_order = opts.instances_per_order;
  report.seed = opts.seed;
  report.instances = static_cast<long long>(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!approx_zero(values[i], opts.tol)) {
      FreenessViolation v;
      v.order = instances[i].order;
      v.pattern = instances[i].pattern;
      for (const auto& arg : instances[i].args) v.args.push_back(to_text(arg));
      v.value = values[i];
      report.violations.push_back(std::move(v));
    }
  }
  report.verdict = report.violations.empty();
  return report;
}

CoeffMatrix alternating_centered_oracle(std::span<const CrossedElement> xs,
                                        const std::vector<int>& family_a,
                                        const std::vector<int>& family_b) {
  ContextPtr ctx = shared_context(xs, "alternating_centered_oracle");
  validate_families(ctx, family_a, family_b);
  const std::set<int> sa(family_a.begin(), family_a.end());
  const std::set<int> sb(family_b.begin(), family_b.end());

  int prev_family = 0;  // 1 = A, 2 = B
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!is_zero_mat(cond_expect(xs[i])))
      throw std::domain_error("alternating_centered_oracle: argument is not centered");
    std::set<int> support;
    for (const auto& [w, m] : xs[i].terms()) {
      for (const auto& l : w.letters()) support.insert(l.factor);
    }
    if (support.empty())
      throw std::domain_error("alternating_centered_oracle: argument has no group support");
    const bool in_a = std::includes(sa.begin(), sa.end(), support.begin(), support.end());
    const bool in_b = std::includes(sb.begin(), sb.end(), support.begin(), support.end());
    if (in_a == in_b)
      throw std::domain_error(
          "alternating_centered_oracle: argument is not supported in exactly one family");
    const int family = in_a ? 1 : 2;
    if (family == prev_family)
      throw std::domain_error("alternating_centered_oracle: arguments do not alternate");
    prev_family = family;
  }

  CrossedElement prod = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) prod = x_mul(prod, xs[i]);
  return cond_expect(prod);
}

}  // namespace xprod
