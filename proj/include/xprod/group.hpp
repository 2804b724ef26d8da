#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xprod/bigmath.hpp"
#include "xprod/rng.hpp"

namespace xprod {

// One factor of a free product: either an infinite cyclic group or a
// finite cyclic group of order k >= 2.
struct Factor {
  bool is_finite = false;
  int order = 0;  // meaningful only when is_finite

  bool operator==(const Factor& o) const {
    return is_finite == o.is_finite && (!is_finite || order == o.order);
  }
};

// A group presented as a free product of cyclic factors. Free groups are
// the special case where every factor is infinite cyclic.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<Factor> factors);
  static GroupSpec free_group(int generators);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool all_infinite() const;

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

 private:
  std::vector<Factor> factors_;
};

// One syllable of a reduced word: generator index and exponent. Exponents
// of finite factors are normalized into 1..k-1; infinite-factor exponents
// are arbitrary-precision so repeated multiplication cannot overflow.
struct Letter {
  int factor = 0;
  BigInt exp;

  bool operator==(const Letter& o) const { return factor == o.factor && exp == o.exp; }
};

// A reduced word in the free product: adjacent letters have distinct
// factors and no letter has exponent zero. The empty word is the identity.
class GroupWord {
 public:
  static GroupWord identity(GroupSpec spec);
  // Single-syllable word g_factor^exp, reduced (may come out as identity).
  static GroupWord generator(GroupSpec spec, int factor, BigInt exp = 1);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const GroupWord& o) const {
    return spec_ == o.spec_ && letters_ == o.letters_;
  }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }

 private:
  GroupWord(GroupSpec spec, std::vector<Letter> letters)
      : spec_(std::move(spec)), letters_(std::move(letters)) {}
  friend GroupWord reduce(const GroupSpec&, std::vector<Letter>);

  GroupSpec spec_;
  std::vector<Letter> letters_;
};

// Free-product normal form: merges adjacent same-factor letters (exponents
// added, mod k for finite factors), drops vanished letters, and cascades
// the cancellation. The result represents the same group element.
GroupWord reduce(const GroupSpec& spec, std::vector<Letter> raw);

GroupWord multiply(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& w);

// Canonical order on words of one spec: by length, then lexicographically
// by (factor, exponent). Used for term maps and serialization.
bool word_less(const GroupWord& a, const GroupWord& b);

// Deterministic reduced word of length <= max_len; length 0 (the identity)
// has probability 1/(max_len+1). Letters are drawn from allowed_factors
// (all factors for sample_word), with small nonzero exponents.
GroupWord sample_word(const GroupSpec& spec, int max_len, SplitMix64& rng);
GroupWord sample_word_in(const GroupSpec& spec, const std::vector<int>& allowed_factors,
                         int max_len, SplitMix64& rng);

// Text form: generators g0, g1, ... with caret exponents ("g0^2 g1^-1");
// "e" is the identity. Exponent 1 is rendered without the caret.
std::string to_text(const GroupWord& w);
GroupWord parse_word(const GroupSpec& spec, std::string_view text);

}  // namespace xprod
