#include "xprod/group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace xprod {

GroupSpec::GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::domain_error("GroupSpec: at least one factor");
  for (const auto& f : factors_) {
    if (f.is_finite && f.order < 2)
      throw std::domain_error("GroupSpec: finite cyclic order must be >= 2");
  }
}

GroupSpec GroupSpec::free_group(int generators) {
  if (generators < 1) throw std::domain_error("GroupSpec: free group needs >= 1 generator");
  return GroupSpec(std::vector<Factor>(static_cast<std::size_t>(generators), Factor{}));
}

bool GroupSpec::all_infinite() const {
  return std::none_of(factors_.begin(), factors_.end(),
                      [](const Factor& f) { return f.is_finite; });
}

GroupWord GroupWord::identity(GroupSpec spec) {
  return GroupWord(std::move(spec), {});
}

GroupWord GroupWord::generator(GroupSpec spec, int factor, BigInt exp) {
  return reduce(spec, {Letter{factor, std::move(exp)}});
}

namespace {

// Exponent of a finite factor normalized into 0..k-1.
BigInt normalize_exp(const Factor& f, const BigInt& e) {
  if (!f.is_finite) return e;
  BigInt m = e % f.order;
  if (m < 0) m += f.order;
  return m;
}

}  // namespace

GroupWord reduce(const GroupSpec& spec, std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (auto& l : raw) {
    if (l.factor < 0 || l.factor >= spec.factor_count())
      throw std::domain_error("reduce: factor index out of range");
    BigInt e = normalize_exp(spec.factor(l.factor), l.exp);
    if (e == 0) continue;
    if (!out.empty() && out.back().factor == l.factor) {
      // Merge with the exposed letter; a vanishing merge may expose a
      // previous letter of the same factor as the *next* incoming one.
      BigInt merged = normalize_exp(spec.factor(l.factor), out.back().exp + e);
      out.pop_back();
      if (merged != 0) out.push_back(Letter{l.factor, std::move(merged)});
    } else {
      out.push_back(Letter{l.factor, std::move(e)});
    }
  }
  return GroupWord(spec, std::move(out));
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
  if (a.spec() != b.spec()) throw std::domain_error("multiply: group specs differ");
  std::vector<Letter> concat = a.letters();
  concat.insert(concat.end(), b.letters().begin(), b.letters().end());
  return reduce(a.spec(), std::move(concat));
}

GroupWord inverse(const GroupWord& w) {
  std::vector<Letter> rev;
  rev.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    rev.push_back(Letter{it->factor, -it->exp});
  }
  return reduce(w.spec(), std::move(rev));
}

bool word_less(const GroupWord& a, const GroupWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.letters().size(); ++i) {
    const Letter& la = a.letters()[i];
    const Letter& lb = b.letters()[i];
    if (la.factor != lb.factor) return la.factor < lb.factor;
    if (la.exp != lb.exp) return la.exp < lb.exp;
  }
  return false;
}

GroupWord sample_word(const GroupSpec& spec, int max_len, SplitMix64& rng) {
  std::vector<int> all(static_cast<std::size_t>(spec.factor_count()));
  for (int i = 0; i < spec.factor_count(); ++i) all[static_cast<std::size_t>(i)] = i;
  return sample_word_in(spec, all, max_len, rng);
}

GroupWord sample_word_in(const GroupSpec& spec, const std::vector<int>& allowed_factors,
                         int max_len, SplitMix64& rng) {
  if (max_len < 0) throw std::domain_error("sample_word: negative max_len");
  for (int f : allowed_factors) {
    if (f < 0 || f >= spec.factor_count())
      throw std::domain_error("sample_word: factor index out of range");
  }
  const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
  std::vector<Letter> letters;
  int prev = -1;
  for (int j = 0; j < len; ++j) {
    std::vector<int> candidates;
    for (int f : allowed_factors) {
      if (f != prev) candidates.push_back(f);
    }
    if (candidates.empty()) break;  // a single-factor subset caps the length at 1
    const int f = candidates[rng.below(candidates.size())];
    BigInt e;
    if (spec.factor(f).is_finite) {
      e = 1 + static_cast<long long>(rng.below(
              static_cast<std::uint64_t>(spec.factor(f).order) - 1));
    } else {
      static const int palette[4] = {-2, -1, 1, 2};
      e = palette[rng.below(4)];
    }
    letters.push_back(Letter{f, std::move(e)});
    prev = f;
  }
  return reduce(spec, std::move(letters));
}

std::string to_text(const GroupWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i > 0) out += " ";
    const Letter& l = w.letters()[i];
    out += "g" + std::to_string(l.factor);
    if (l.exp != 1) out += "^" + l.exp.str();
  }
  return out;
}

GroupWord parse_word(const GroupSpec& spec, std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw std::domain_error("parse_word: empty input");
  if (tokens.size() == 1 && tokens[0] == "e") return GroupWord::identity(spec);

  std::vector<Letter> letters;
  for (const auto& tok : tokens) {
    if (tok.size() < 2 || tok[0] != 'g')
      throw std::domain_error("parse_word: bad token '" + tok + "'");
    const std::size_t caret = tok.find('^');
    const std::string idx_part = tok.substr(1, caret == std::string::npos
                                                   ? std::string::npos
                                                   : caret - 1);
    if (idx_part.empty() ||
        !std::all_of(idx_part.begin(), idx_part.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::domain_error("parse_word: bad generator index in '" + tok + "'");
    const int factor = std::stoi(idx_part);
    BigInt e = 1;
    if (caret != std::string::npos) {
      const std::string exp_part = tok.substr(caret + 1);
      if (exp_part.empty()) throw std::domain_error("parse_word: missing exponent");
      std::size_t k = (exp_part[0] == '-' || exp_part[0] == '+') ? 1 : 0;
      if (k == exp_part.size() ||
          !std::all_of(exp_part.begin() + static_cast<long>(k), exp_part.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::domain_error("parse_word: bad exponent in '" + tok + "'");
      e = BigInt(exp_part);
    }
    letters.push_back(Letter{factor, std::move(e)});
  }
  return reduce(spec, std::move(letters));
}

}  // namespace xprod
