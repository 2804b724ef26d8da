#include "xprod/crossed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xprod {

Permutation::Permutation(std::vector<int> one_based_images) {
  const int d = static_cast<int>(one_based_images.size());
  if (d < 1) throw std::domain_error("Permutation: empty image list");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  img_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const int v = one_based_images[static_cast<std::size_t>(i)];
    if (v < 1 || v > d || seen[static_cast<std::size_t>(v - 1)])
      throw std::domain_error("Permutation: images are not a bijection of 1..d");
    seen[static_cast<std::size_t>(v - 1)] = true;
    img_[static_cast<std::size_t>(i)] = v - 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> img(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (dim() != inner.dim()) throw std::domain_error("Permutation: dimension mismatch");
  std::vector<int> img(img_.size());
  for (int i = 0; i < dim(); ++i) {
    img[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(inner.image(i))];
  }
  return Permutation(std::move(img), 0);
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < dim(); ++i) {
    img[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  }
  return Permutation(std::move(img), 0);
}

int Permutation::order() const {
  long long result = 1;
  std::vector<bool> visited(img_.size(), false);
  for (int start = 0; start < dim(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int cur = start;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      cur = img_[static_cast<std::size_t>(cur)];
      ++len;
    }
    result = std::lcm(result, static_cast<long long>(len));
  }
  return static_cast<int>(result);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < dim(); ++i) {
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::power(const BigInt& e) const {
  const int ord = order();
  BigInt m = e % ord;
  if (m < 0) m += ord;
  long long reps = m.convert_to<long long>();
  Permutation acc = identity(dim());
  for (long long i = 0; i < reps; ++i) acc = compose(acc);
  return acc;
}

namespace {

CoeffMatrix unitary_power(const CoeffMatrix& u, const BigInt& e) {
  // Binary exponentiation; negative exponents use the adjoint (validated
  // unitary, so the adjoint is the inverse).
  if (e == 0) return CoeffMatrix::identity(u.shape(), u.dim(), u.mode());
  CoeffMatrix base = e < 0 ? adjoint(u) : u;
  BigInt k = e < 0 ? BigInt(-e) : e;
  CoeffMatrix acc = CoeffMatrix::identity(u.shape(), u.dim(), u.mode());
  while (k > 0) {
    if ((k & 1) != 0) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace

ActionSpec ActionSpec::permutations(const GroupSpec& group, int dim,
                                    std::vector<Permutation> per_factor) {
  if (static_cast<int>(per_factor.size()) != group.factor_count())
    throw std::domain_error("ActionSpec: one permutation per factor required");
  if (dim < 1) throw std::domain_error("ActionSpec: dimension must be >= 1");
  for (int f = 0; f < group.factor_count(); ++f) {
    const Permutation& p = per_factor[static_cast<std::size_t>(f)];
    if (p.dim() != dim) throw std::domain_error("ActionSpec: permutation dimension mismatch");
    const Factor& fac = group.factor(f);
    if (fac.is_finite) {
      // Generator applied k times must fix every coordinate.
      Permutation acc = Permutation::identity(dim);
      for (int i = 0; i < fac.order; ++i) acc = p.compose(acc);
      if (!acc.is_identity())
        throw std::domain_error(
            "ActionSpec: permutation order does not divide the cyclic factor order");
    }
  }
  ActionSpec a;
  a.kind_ = Kind::permutation;
  a.dim_ = dim;
  a.group_ = group;
  a.perms_ = std::move(per_factor);
  return a;
}

ActionSpec ActionSpec::unitary_conjugations(const GroupSpec& group,
                                            std::vector<CoeffMatrix> per_factor,
                                            double tol) {
  if (static_cast<int>(per_factor.size()) != group.factor_count())
    throw std::domain_error("ActionSpec: one unitary per factor required");
  if (per_factor.empty()) throw std::domain_error("ActionSpec: no generators");
  const int dim = per_factor.front().dim();
  const ScalarMode mode = per_factor.front().mode();
  const CoeffMatrix id = CoeffMatrix::identity(MatShape::full, dim, mode);
  for (int f = 0; f < group.factor_count(); ++f) {
    const CoeffMatrix& u = per_factor[static_cast<std::size_t>(f)];
    if (u.shape() != MatShape::full || u.dim() != dim || u.mode() != mode)
      throw std::domain_error("ActionSpec: conjugation matrices must be full, same dim/mode");
    if (!mat_eq(mat_mul(u, adjoint(u)), id, tol))
      throw std::domain_error("ActionSpec: conjugation matrix is not unitary");
    const Factor& fac = group.factor(f);
    if (fac.is_finite) {
      // Apply the generator's conjugation k times to the matrix-unit basis.
      const CoeffMatrix w = unitary_power(u, BigInt(fac.order));
      const CoeffMatrix winv = adjoint(w);
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          std::vector<Scalar> unit(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                                   Scalar::zero(mode));
          unit[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) +
               static_cast<std::size_t>(c)] = Scalar::one(mode);
          const CoeffMatrix basis = CoeffMatrix::full(dim, std::move(unit));
          if (!mat_eq(mat_mul(mat_mul(w, basis), winv), basis, tol))
            throw std::domain_error(
                "ActionSpec: conjugation order does not divide the cyclic factor order");
        }
      }
    }
  }
  ActionSpec a;
  a.kind_ = Kind::unitary_conjugation;
  a.dim_ = dim;
  a.group_ = group;
  a.unitaries_ = std::move(per_factor);
  return a;
}

ScalarMode ActionSpec::unitary_mode() const {
  if (kind_ != Kind::unitary_conjugation)
    throw std::domain_error("ActionSpec: no unitary mode for permutation actions");
  return unitaries_.front().mode();
}

int ActionSpec::factor_count() const {
  return static_cast<int>(kind_ == Kind::permutation ? perms_.size() : unitaries_.size());
}

CoeffMatrix ActionSpec::apply_letter(const Letter& l, const CoeffMatrix& m) const {
  if (l.factor < 0 || l.factor >= factor_count())
    throw std::domain_error("act: factor index out of range");
  if (m.dim() != dim_) throw std::domain_error("act: coefficient dimension mismatch");
  if (kind_ == Kind::permutation) {
    if (m.shape() != MatShape::diagonal)
      throw std::domain_error("act: permutation actions require diagonal coefficients");
    const Permutation q = perms_[static_cast<std::size_t>(l.factor)].power(l.exp);
    std::vector<Scalar> out(static_cast<std::size_t>(dim_), Scalar::zero(m.mode()));
    // alpha moves the value at slot i to slot q(i).
    for (int i = 0; i < dim_; ++i) {
      out[static_cast<std::size_t>(q.image(i))] = m.stored()[static_cast<std::size_t>(i)];
    }
    return CoeffMatrix::diagonal(std::move(out));
  }
  if (m.shape() != MatShape::full)
    throw std::domain_error("act: unitary conjugation requires full coefficients");
  if (m.mode() != unitaries_.front().mode())
    throw std::domain_error("act: scalar mode mismatch");
  const CoeffMatrix v = unitary_power(unitaries_[static_cast<std::size_t>(l.factor)], l.exp);
  return mat_mul(mat_mul(v, m), adjoint(v));
}

bool ActionSpec::operator==(const ActionSpec& o) const {
  if (kind_ != o.kind_ || dim_ != o.dim_ || !(group_ == o.group_)) return false;
  if (kind_ == Kind::permutation) return perms_ == o.perms_;
  return unitaries_ == o.unitaries_;
}

CrossedContext::CrossedContext(GroupSpec group_in, MatShape shape_in, int dim_in,
                               ScalarMode mode_in, ActionSpec action_in)
    : group(std::move(group_in)),
      shape(shape_in),
      dim(dim_in),
      mode(mode_in),
      action(std::move(action_in)) {
  if (!(action.group() == group))
    throw std::domain_error("CrossedContext: action was validated for a different group");
  if (action.dim() != dim)
    throw std::domain_error("CrossedContext: action dimension mismatch");
  if (action.kind() == ActionSpec::Kind::permutation) {
    if (shape != MatShape::diagonal)
      throw std::domain_error("CrossedContext: permutation actions pair with diagonal coefficients");
  } else {
    if (shape != MatShape::full)
      throw std::domain_error("CrossedContext: unitary conjugation pairs with full coefficients");
    if (action.unitary_mode() != mode)
      throw std::domain_error("CrossedContext: action scalar mode mismatch");
  }
}

bool CrossedContext::operator==(const CrossedContext& o) const {
  return group == o.group && shape == o.shape && dim == o.dim && mode == o.mode &&
         action == o.action;
}

ContextPtr make_context(GroupSpec group, MatShape shape, int dim, ScalarMode mode,
                        ActionSpec action) {
  return std::make_shared<const CrossedContext>(std::move(group), shape, dim, mode,
                                                std::move(action));
}

CoeffMatrix act(const ActionSpec& action, const GroupWord& w, const CoeffMatrix& m) {
  // alpha_{w1 w2} = alpha_{w1} o alpha_{w2}: letters apply right to left.
  CoeffMatrix cur = m;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    cur = action.apply_letter(*it, cur);
  }
  return cur;
}

namespace {

void require_same_context(const CrossedElement& a, const CrossedElement& b, const char* who) {
  if (a.context() == b.context()) return;
  if (a.context() && b.context() && *a.context() == *b.context()) return;
  throw std::domain_error(std::string(who) + ": crossed-product contexts differ");
}

void require_matches_context(const CrossedContext& ctx, const CoeffMatrix& m, const char* who) {
  if (m.shape() != ctx.shape || m.dim() != ctx.dim || m.mode() != ctx.mode)
    throw std::domain_error(std::string(who) + ": coefficient does not match the context");
}

void require_matches_context(const CrossedContext& ctx, const GroupWord& w, const char* who) {
  if (w.spec() != ctx.group)
    throw std::domain_error(std::string(who) + ": word group does not match the context");
}

}  // namespace

CrossedElement CrossedElement::zero(ContextPtr ctx) {
  if (!ctx) throw std::domain_error("CrossedElement: null context");
  return CrossedElement(std::move(ctx));
}

CrossedElement CrossedElement::from_terms(
    ContextPtr ctx, const std::vector<std::pair<GroupWord, CoeffMatrix>>& terms) {
  CrossedElement out = zero(std::move(ctx));
  for (const auto& [w, m] : terms) {
    require_matches_context(*out.ctx_, w, "from_terms");
    require_matches_context(*out.ctx_, m, "from_terms");
    auto it = out.terms_.find(w);
    if (it == out.terms_.end()) {
      out.terms_.emplace(w, m);
    } else {
      it->second = mat_add(it->second, m);
    }
  }
  // Normal form: never keep a zero coefficient.
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = is_zero_mat(it->second) ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

CrossedElement x_add(const CrossedElement& a, const CrossedElement& b) {
  require_same_context(a, b, "x_add");
  CrossedElement out = a;
  for (const auto& [w, m] : b.terms_) {
    auto it = out.terms_.find(w);
    if (it == out.terms_.end()) {
      out.terms_.emplace(w, m);
    } else {
      it->second = mat_add(it->second, m);
      if (is_zero_mat(it->second)) out.terms_.erase(it);
    }
  }
  return out;
}

CrossedElement x_sub(const CrossedElement& a, const CrossedElement& b) {
  return x_add(a, x_scale(Scalar::integer(-1, b.context()->mode), b));
}

CrossedElement x_scale(const Scalar& s, const CrossedElement& x) {
  if (s.mode() != x.context()->mode)
    throw std::domain_error("x_scale: scalar mode mismatch");
  CrossedElement out = CrossedElement::zero(x.context());
  if (s.is_zero()) return out;
  for (const auto& [w, m] : x.terms_) {
    CoeffMatrix scaled = mat_scale(s, m);
    if (!is_zero_mat(scaled)) out.terms_.emplace(w, std::move(scaled));
  }
  return out;
}

CrossedElement x_mul(const CrossedElement& a, const CrossedElement& b) {
  require_same_context(a, b, "x_mul");
  CrossedElement out = CrossedElement::zero(a.context());
  const ActionSpec& action = a.context()->action;
  for (const auto& [w1, m1] : a.terms_) {
    for (const auto& [w2, m2] : b.terms_) {
      CoeffMatrix coeff = mat_mul(m1, act(action, w1, m2));
      if (is_zero_mat(coeff)) continue;
      GroupWord w = multiply(w1, w2);
      auto it = out.terms_.find(w);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(w), std::move(coeff));
      } else {
        it->second = mat_add(it->second, coeff);
        if (is_zero_mat(it->second)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

CrossedElement x_adjoint(const CrossedElement& x) {
  CrossedElement out = CrossedElement::zero(x.context());
  const ActionSpec& action = x.context()->action;
  for (const auto& [w, m] : x.terms_) {
    GroupWord winv = inverse(w);
    CoeffMatrix coeff = act(action, winv, adjoint(m));
    if (!is_zero_mat(coeff)) out.terms_.emplace(std::move(winv), std::move(coeff));
  }
  return out;
}

CrossedElement embed_m(ContextPtr ctx, const CoeffMatrix& m) {
  CrossedElement out = CrossedElement::zero(std::move(ctx));
  require_matches_context(*out.ctx_, m, "embed_m");
  if (!is_zero_mat(m)) out.terms_.emplace(GroupWord::identity(out.ctx_->group), m);
  return out;
}

CrossedElement embed_u(ContextPtr ctx, const GroupWord& w) {
  CrossedElement out = CrossedElement::zero(std::move(ctx));
  require_matches_context(*out.ctx_, w, "embed_u");
  out.terms_.emplace(w, CoeffMatrix::identity(out.ctx_->shape, out.ctx_->dim, out.ctx_->mode));
  return out;
}

CoeffMatrix cond_expect(const CrossedElement& x) {
  const auto it = x.terms().find(GroupWord::identity(x.context()->group));
  if (it == x.terms().end()) {
    return CoeffMatrix::zero(x.context()->shape, x.context()->dim, x.context()->mode);
  }
  return it->second;
}

Scalar word_trace(const GroupWord& w) {
  return Scalar::integer(w.is_identity() ? 1 : 0, ScalarMode::exact);
}

Scalar group_trace(const CrossedElement& x) {
  for (const auto& [w, m] : x.terms()) {
    if (!scalar_of_identity_multiple(m).has_value())
      throw std::domain_error("group_trace: coefficient is not a scalar multiple of 1");
  }
  const auto it = x.terms().find(GroupWord::identity(x.context()->group));
  if (it == x.terms().end()) return Scalar::zero(x.context()->mode);
  return *scalar_of_identity_multiple(it->second);
}

std::string to_text(const CrossedElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, m] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(m) + "*u(" + to_text(w) + ")";
  }
  return out;
}

}  // namespace xprod
