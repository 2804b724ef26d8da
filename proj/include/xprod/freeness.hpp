#pragma once

#include <span>
#include <string>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/nc_partition.hpp"

namespace xprod {

// A single term m u_w, the argument type of the factorization identities.
// A zero coefficient makes the monomial zero.
struct Monomial {
  CoeffMatrix coeff;
  GroupWord word;
};

CrossedElement to_element(ContextPtr ctx, const Monomial& m);

inline constexpr int kCumulantCeiling = 6;

// Partition-dependent moment: evaluated by recursion on the nesting forest
// of pi. A block's value is the conditional expectation of the product of
// its member elements with each child subtree's value re-embedded at the
// gap where the child sits; root-block values multiply in the order of
// block minima. For pi = 1_n this is cond_expect(x1 ... xn).
CoeffMatrix partitioned_moment(std::span<const CrossedElement> xs, const NCPartition& pi);

// Scalar counterpart on bare words: the product over blocks of the
// identity indicator of the blockwise word product (position order).
Scalar trace_partitioned(std::span<const GroupWord> ws, const NCPartition& pi);

// m_1 m_2^{w1} m_3^{w1 w2} ... : the coefficient that a product of
// monomials accumulates in front of its combined word.
CoeffMatrix twisted_coefficient_product(ContextPtr ctx, std::span<const Monomial> ms);

// Scalar cumulant of bare words: sum over NC(n) of trace_partitioned
// weighted by mu(pi, 1_n). Always an integer.
long long scalar_trace_cumulant(std::span<const GroupWord> ws);

// Amalgamated cumulant: sum over NC(n) of partitioned_moment(xs, pi)
// weighted by mu(pi, 1_n). 1 <= n <= kCumulantCeiling. The partition sum
// may be evaluated in parallel; reduction is in enumeration order.
CoeffMatrix cumulant(std::span<const CrossedElement> xs, int threads = 1);

// Factorized route for monomials: twisted coefficient product times the
// scalar cumulant of the words. Must agree with cumulant() elementwise.
CoeffMatrix cumulant_factorized(ContextPtr ctx, std::span<const Monomial> ms);

// Inverse direction: sum over NC(n) of nested blockwise cumulants (same
// insertion rule as partitioned_moment, with the expectation replaced by
// the cumulant). Reproduces cond_expect(x1 ... xn).
CoeffMatrix moments_from_cumulants(std::span<const CrossedElement> xs);

// x - embed_m(cond_expect(x)).
CrossedElement centered(const CrossedElement& x);

struct FreenessOptions {
  int min_order = 2;
  int max_order = 4;
  int instances_per_order = 100;
  int max_word_len = 3;
  int max_terms = 2;           // general elements get up to this many terms
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int threads = 1;
};

struct FreenessViolation {
  int order = 0;
  std::string pattern;  // e.g. "ABBA": which family each slot drew from
  std::vector<std::string> args;
  CoeffMatrix value;
};

struct FreenessReport {
  int max_order = 0;
  int instances_per_order = 0;
  std::uint64_t seed = 0;
  long long instances = 0;
  std::vector<FreenessViolation> violations;
  bool verdict = false;  // true iff violations is empty
};

// Samples monomials and short general elements supported on the two factor
// subsets and evaluates every mixed cumulant pattern per order, cycling
// through the 2^n - 2 patterns. Nonzero is structural in exact mode and
// |entry| > tol in floating mode. Overlapping subsets are a domain error.
FreenessReport check_freeness(ContextPtr ctx, const std::vector<int>& family_a,
                              const std::vector<int>& family_b,
                              const FreenessOptions& opts);

// Independent freeness characterization sharing no code with the cumulant
// engine: for a strictly alternating tuple of centered elements (supports
// inside family_a and family_b in turn), returns cond_expect of the plain
// product, which must vanish when the families are free.
CoeffMatrix alternating_centered_oracle(std::span<const CrossedElement> xs,
                                        const std::vector<int>& family_a,
                                        const std::vector<int>& family_b);

// Sampling helpers shared by the checker, the verification suites, and
// tests. All deterministic given the generator.
Monomial sample_monomial(const ContextPtr& ctx, const std::vector<int>& factors,
                         int max_word_len, SplitMix64& rng);
CrossedElement sample_element(const ContextPtr& ctx, const std::vector<int>& factors,
                              int max_word_len, int max_terms, SplitMix64& rng);

}  // namespace xprod
