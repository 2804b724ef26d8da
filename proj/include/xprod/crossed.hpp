#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "xprod/group.hpp"
#include "xprod/matrix.hpp"

namespace xprod {

// A permutation of {1..d}, stored as 0-based images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_based_images);
  static Permutation identity(int d);

  int dim() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<int>& images() const { return img_; }

  Permutation compose(const Permutation& inner) const;  // this after inner
  Permutation inverse() const;
  Permutation power(const BigInt& e) const;  // exponent taken mod order()
  int order() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  explicit Permutation(std::vector<int> zero_based, int)
      : img_(std::move(zero_based)) {}
  std::vector<int> img_;
};

// The action data for one group: per generator either a permutation of the
// diagonal coordinates (diagonal coefficients) or conjugation by a unitary
// (full coefficients). Construction validates, per finite factor of order
// k, that applying the generator k times fixes a basis of the coefficient
// algebra, and that each conjugation matrix is unitary (the adjoint laws
// need the inverse action to be the adjoint).
class ActionSpec {
 public:
  enum class Kind { permutation, unitary_conjugation };

  static ActionSpec permutations(const GroupSpec& group, int dim,
                                 std::vector<Permutation> per_factor);
  static ActionSpec unitary_conjugations(const GroupSpec& group,
                                         std::vector<CoeffMatrix> per_factor,
                                         double tol);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  ScalarMode unitary_mode() const;  // unitary kind only
  const std::vector<Permutation>& perms() const { return perms_; }
  const std::vector<CoeffMatrix>& unitaries() const { return unitaries_; }
  // The group the order constraints were validated against.
  const GroupSpec& group() const { return group_; }
  int factor_count() const;

  // One syllable g_factor^exp applied to m.
  CoeffMatrix apply_letter(const Letter& l, const CoeffMatrix& m) const;

  bool operator==(const ActionSpec& o) const;

 private:
  ActionSpec() : group_(GroupSpec::free_group(1)) {}
  Kind kind_ = Kind::permutation;
  int dim_ = 0;
  GroupSpec group_;
  std::vector<Permutation> perms_;
  std::vector<CoeffMatrix> unitaries_;
};

// Everything a crossed-product element needs to interpret its terms: the
// group, the coefficient algebra (shape, dimension, scalar mode), and the
// action. Permutation actions pair with diagonal coefficients, unitary
// conjugation with full ones.
struct CrossedContext {
  GroupSpec group;
  MatShape shape;
  int dim;
  ScalarMode mode;
  ActionSpec action;

  CrossedContext(GroupSpec group, MatShape shape, int dim, ScalarMode mode,
                 ActionSpec action);

  bool operator==(const CrossedContext& o) const;
};

using ContextPtr = std::shared_ptr<const CrossedContext>;

ContextPtr make_context(GroupSpec group, MatShape shape, int dim, ScalarMode mode,
                        ActionSpec action);

// m^w: the word's automorphism applied to m, composing per-letter actions
// so that act(w1 w2, m) = act(w1, act(w2, m)) and act(e, m) = m.
CoeffMatrix act(const ActionSpec& action, const GroupWord& w, const CoeffMatrix& m);

struct WordLess {
  bool operator()(const GroupWord& a, const GroupWord& b) const {
    return word_less(a, b);
  }
};

// A finitely supported sum of terms coeff * u_word. Normal form invariant:
// words reduced (guaranteed by GroupWord), no stored zero coefficient, all
// coefficients matching the context. Operations return new values.
class CrossedElement {
 public:
  using TermMap = std::map<GroupWord, CoeffMatrix, WordLess>;

  static CrossedElement zero(ContextPtr ctx);
  static CrossedElement from_terms(
      ContextPtr ctx, const std::vector<std::pair<GroupWord, CoeffMatrix>>& terms);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

 private:
  explicit CrossedElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  ContextPtr ctx_;
  TermMap terms_;

  friend CrossedElement x_add(const CrossedElement&, const CrossedElement&);
  friend CrossedElement x_sub(const CrossedElement&, const CrossedElement&);
  friend CrossedElement x_mul(const CrossedElement&, const CrossedElement&);
  friend CrossedElement x_scale(const Scalar&, const CrossedElement&);
  friend CrossedElement x_adjoint(const CrossedElement&);
  friend CrossedElement embed_m(ContextPtr, const CoeffMatrix&);
  friend CrossedElement embed_u(ContextPtr, const GroupWord&);
};

CrossedElement x_add(const CrossedElement& a, const CrossedElement& b);
CrossedElement x_sub(const CrossedElement& a, const CrossedElement& b);

// Bilinear extension of (m1 u_w1)(m2 u_w2) = (m1 * m2^w1) u_{w1 w2}.
CrossedElement x_mul(const CrossedElement& a, const CrossedElement& b);
CrossedElement x_scale(const Scalar& s, const CrossedElement& x);

// Termwise (m u_w)* = (m*)^{w^-1} u_{w^-1}; involutive, anti-multiplicative.
CrossedElement x_adjoint(const CrossedElement& x);

// m |-> m u_e (a unital *-isomorphism onto the identity-fiber subalgebra)
// and w |-> 1 u_w (multiplicative on words).
CrossedElement embed_m(ContextPtr ctx, const CoeffMatrix& m);
CrossedElement embed_u(ContextPtr ctx, const GroupWord& w);

// The coefficient at the group identity, or the zero matrix when absent.
// This is the conditional expectation onto the coefficient algebra.
CoeffMatrix cond_expect(const CrossedElement& x);

// Identity indicator of a single word, as an exact scalar (1 or 0).
Scalar word_trace(const GroupWord& w);

// For elements whose every coefficient is a scalar multiple of the
// identity: the scalar at the group identity. Domain error otherwise.
Scalar group_trace(const CrossedElement& x);

std::string to_text(const CrossedElement& x);

}  // namespace xprod
