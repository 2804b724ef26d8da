#include "xprod/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace xprod {

namespace {

void require_same_mode(const Scalar& a, const Scalar& b, const char* who) {
  if (a.mode() != b.mode())
    throw std::domain_error(std::string(who) + ": scalar modes differ");
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Scalar Scalar::exact(BigRat re, BigRat im) {
  Scalar s;
  s.mode_ = ScalarMode::exact;
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::floating(std::complex<double> v) {
  Scalar s;
  s.mode_ = ScalarMode::floating;
  s.f_ = v;
  return s;
}

Scalar Scalar::zero(ScalarMode mode) { return integer(0, mode); }
Scalar Scalar::one(ScalarMode mode) { return integer(1, mode); }

Scalar Scalar::integer(long long v, ScalarMode mode) {
  if (mode == ScalarMode::exact) return exact(BigRat(v));
  return floating(std::complex<double>(static_cast<double>(v), 0.0));
}

Scalar Scalar::rational(long long num, long long den, ScalarMode mode) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  if (mode == ScalarMode::exact) return exact(BigRat(num, den));
  return floating(std::complex<double>(static_cast<double>(num) / static_cast<double>(den), 0.0));
}

const BigRat& Scalar::re() const {
  if (mode_ != ScalarMode::exact) throw std::domain_error("Scalar: not exact");
  return re_;
}

const BigRat& Scalar::im() const {
  if (mode_ != ScalarMode::exact) throw std::domain_error("Scalar: not exact");
  return im_;
}

std::complex<double> Scalar::value_f() const {
  if (mode_ != ScalarMode::floating) throw std::domain_error("Scalar: not floating");
  return f_;
}

Scalar Scalar::to_mode(ScalarMode target) const {
  if (target == mode_) return *this;
  if (mode_ == ScalarMode::exact) {
    return floating(std::complex<double>(re_.convert_to<double>(), im_.convert_to<double>()));
  }
  throw std::domain_error("Scalar: cannot convert floating to exact");
}

Scalar Scalar::conj() const {
  if (mode_ == ScalarMode::exact) return exact(re_, -im_);
  return floating(std::conj(f_));
}

bool Scalar::is_zero() const {
  if (mode_ == ScalarMode::exact) return re_ == 0 && im_ == 0;
  return f_.real() == 0.0 && f_.imag() == 0.0;
}

bool Scalar::approx_eq(const Scalar& o, double tol) const {
  require_same_mode(*this, o, "approx_eq");
  if (mode_ == ScalarMode::exact) return re_ == o.re_ && im_ == o.im_;
  return std::abs(f_ - o.f_) <= tol;
}

double Scalar::abs_approx() const {
  if (mode_ == ScalarMode::exact) {
    return std::abs(std::complex<double>(re_.convert_to<double>(), im_.convert_to<double>()));
  }
  return std::abs(f_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "scalar add");
  if (a.mode_ == ScalarMode::exact) return Scalar::exact(a.re_ + b.re_, a.im_ + b.im_);
  return Scalar::floating(a.f_ + b.f_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "scalar sub");
  if (a.mode_ == ScalarMode::exact) return Scalar::exact(a.re_ - b.re_, a.im_ - b.im_);
  return Scalar::floating(a.f_ - b.f_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b, "scalar mul");
  if (a.mode_ == ScalarMode::exact) {
    return Scalar::exact(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  return Scalar::floating(a.f_ * b.f_);
}

Scalar Scalar::operator-() const {
  if (mode_ == ScalarMode::exact) return exact(-re_, -im_);
  return floating(-f_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode_ != o.mode_) return false;
  if (mode_ == ScalarMode::exact) return re_ == o.re_ && im_ == o.im_;
  return f_ == o.f_;
}

std::string Scalar::to_string() const {
  if (mode_ == ScalarMode::floating) {
    return "(" + fmt17(f_.real()) + "," + fmt17(f_.imag()) + ")";
  }
  if (im_ == 0) return rat_to_string(re_);
  std::string out = rat_to_string(re_);
  if (im_ > 0) {
    out += "+" + rat_to_string(im_) + "*i";
  } else {
    out += "-" + rat_to_string(-im_) + "*i";
  }
  return out;
}

Scalar Scalar::parse_exact(std::string_view text) {
  if (text.empty()) throw std::domain_error("Scalar: empty literal");
  // Forms: "p/q", "p/q+r/s*i", "p/q-r/s*i", "r/s*i".
  const std::size_t star = text.rfind("*i");
  if (star == std::string_view::npos) {
    return exact(rat_from_string(text));
  }
  if (star + 2 != text.size())
    throw std::domain_error("Scalar: trailing characters after *i");
  const std::string_view head = text.substr(0, star);
  // Split head into real part and imaginary coefficient at the last
  // top-level sign (positions > 0; signs right after '/' cannot occur in
  // valid rationals, so any '+'/'-' beyond index 0 separates the parts).
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return exact(BigRat(0), rat_from_string(head));
  }
  const BigRat re = rat_from_string(head.substr(0, split));
  BigRat im = rat_from_string(head.substr(split + 1));
  if (head[split] == '-') im = -im;
  return exact(re, im);
}

namespace {

std::size_t storage_size(MatShape shape, int dim) {
  return shape == MatShape::diagonal ? static_cast<std::size_t>(dim)
                                     : static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
}

void require_compatible(const CoeffMatrix& x, const CoeffMatrix& y, const char* who) {
  if (x.shape() != y.shape() || x.dim() != y.dim() || x.mode() != y.mode())
    throw std::domain_error(std::string(who) + ": shape/dimension/mode mismatch");
}

}  // namespace

CoeffMatrix CoeffMatrix::zero(MatShape shape, int dim, ScalarMode mode) {
  if (dim < 1) throw std::domain_error("CoeffMatrix: dimension must be >= 1");
  CoeffMatrix m;
  m.shape_ = shape;
  m.dim_ = dim;
  m.mode_ = mode;
  m.entries_.assign(storage_size(shape, dim), Scalar::zero(mode));
  return m;
}

CoeffMatrix CoeffMatrix::identity(MatShape shape, int dim, ScalarMode mode) {
  CoeffMatrix m = zero(shape, dim, mode);
  if (shape == MatShape::diagonal) {
    for (int i = 0; i < dim; ++i) m.entries_[static_cast<std::size_t>(i)] = Scalar::one(mode);
  } else {
    for (int i = 0; i < dim; ++i)
      m.entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                 static_cast<std::size_t>(i)] = Scalar::one(mode);
  }
  return m;
}

CoeffMatrix CoeffMatrix::diagonal(std::vector<Scalar> entries) {
  if (entries.empty()) throw std::domain_error("CoeffMatrix: dimension must be >= 1");
  const ScalarMode mode = entries.front().mode();
  for (const auto& e : entries) {
    if (e.mode() != mode) throw std::domain_error("CoeffMatrix: mixed scalar modes");
  }
  CoeffMatrix m;
  m.shape_ = MatShape::diagonal;
  m.dim_ = static_cast<int>(entries.size());
  m.mode_ = mode;
  m.entries_ = std::move(entries);
  return m;
}

CoeffMatrix CoeffMatrix::full(int dim, std::vector<Scalar> row_major) {
  if (dim < 1) throw std::domain_error("CoeffMatrix: dimension must be >= 1");
  if (row_major.size() != storage_size(MatShape::full, dim))
    throw std::domain_error("CoeffMatrix: entry count does not match dimension");
  const ScalarMode mode = row_major.front().mode();
  for (const auto& e : row_major) {
    if (e.mode() != mode) throw std::domain_error("CoeffMatrix: mixed scalar modes");
  }
  CoeffMatrix m;
  m.shape_ = MatShape::full;
  m.dim_ = dim;
  m.mode_ = mode;
  m.entries_ = std::move(row_major);
  return m;
}

Scalar CoeffMatrix::entry(int r, int c) const {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    throw std::domain_error("CoeffMatrix: index out of range");
  if (shape_ == MatShape::diagonal) {
    if (r != c) return Scalar::zero(mode_);
    return entries_[static_cast<std::size_t>(r)];
  }
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(c)];
}

bool CoeffMatrix::operator==(const CoeffMatrix& o) const {
  if (shape_ != o.shape_ || dim_ != o.dim_ || mode_ != o.mode_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i] == o.entries_[i])) return false;
  }
  return true;
}

CoeffMatrix mat_add(const CoeffMatrix& x, const CoeffMatrix& y) {
  require_compatible(x, y, "mat_add");
  CoeffMatrix out = x;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] = out.entries_[i] + y.entries_[i];
  }
  return out;
}

CoeffMatrix mat_sub(const CoeffMatrix& x, const CoeffMatrix& y) {
  require_compatible(x, y, "mat_sub");
  CoeffMatrix out = x;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] = out.entries_[i] - y.entries_[i];
  }
  return out;
}

CoeffMatrix mat_mul(const CoeffMatrix& x, const CoeffMatrix& y) {
  require_compatible(x, y, "mat_mul");
  const int d = x.dim();
  CoeffMatrix out = CoeffMatrix::zero(x.shape(), d, x.mode());
  if (x.shape() == MatShape::diagonal) {
    for (int i = 0; i < d; ++i) {
      out.entries_[static_cast<std::size_t>(i)] =
          x.entries_[static_cast<std::size_t>(i)] * y.entries_[static_cast<std::size_t>(i)];
    }
    return out;
  }
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Scalar sum = Scalar::zero(x.mode());
      for (int k = 0; k < d; ++k) {
        sum = sum + x.entry(r, k) * y.entry(k, c);
      }
      out.entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) +
                   static_cast<std::size_t>(c)] = sum;
    }
  }
  return out;
}

CoeffMatrix mat_scale(const Scalar& s, const CoeffMatrix& x) {
  if (s.mode() != x.mode()) throw std::domain_error("mat_scale: scalar mode mismatch");
  CoeffMatrix out = x;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

CoeffMatrix adjoint(const CoeffMatrix& x) {
  CoeffMatrix out = x;
  if (x.shape() == MatShape::diagonal) {
    for (auto& e : out.entries_) e = e.conj();
    return out;
  }
  const int d = x.dim();
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      out.entries_[static_cast<std::size_t>(c) * static_cast<std::size_t>(d) +
                   static_cast<std::size_t>(r)] = x.entry(r, c).conj();
    }
  }
  return out;
}

bool mat_eq(const CoeffMatrix& x, const CoeffMatrix& y, double tol) {
  require_compatible(x, y, "mat_eq");
  for (std::size_t i = 0; i < x.stored().size(); ++i) {
    if (!x.stored()[i].approx_eq(y.stored()[i], tol)) return false;
  }
  return true;
}

bool is_zero_mat(const CoeffMatrix& x) {
  for (const auto& e : x.stored()) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool approx_zero(const CoeffMatrix& x, double tol) {
  if (x.mode() == ScalarMode::exact) return is_zero_mat(x);
  return max_abs_entry(x) <= tol;
}

double max_abs_entry(const CoeffMatrix& x) {
  double best = 0.0;
  for (const auto& e : x.stored()) best = std::max(best, e.abs_approx());
  return best;
}

std::optional<Scalar> scalar_of_identity_multiple(const CoeffMatrix& x) {
  const Scalar first = x.entry(0, 0);
  for (int r = 0; r < x.dim(); ++r) {
    for (int c = 0; c < x.dim(); ++c) {
      const Scalar e = x.entry(r, c);
      if (r == c) {
        if (!(e == first)) return std::nullopt;
      } else if (!e.is_zero()) {
        return std::nullopt;
      }
    }
  }
  return first;
}

CoeffMatrix to_full(const CoeffMatrix& x) {
  if (x.shape() == MatShape::full) return x;
  CoeffMatrix out = CoeffMatrix::zero(MatShape::full, x.dim(), x.mode());
  std::vector<Scalar> entries = out.stored();
  for (int i = 0; i < x.dim(); ++i) {
    entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(x.dim()) +
            static_cast<std::size_t>(i)] = x.stored()[static_cast<std::size_t>(i)];
  }
  return CoeffMatrix::full(x.dim(), std::move(entries));
}

CoeffMatrix sample_coeff_matrix(MatShape shape, int dim, ScalarMode mode, SplitMix64& rng) {
  static const std::pair<long long, long long> palette[7] = {
      {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}};
  const auto draw = [&]() -> std::pair<long long, long long> {
    return palette[rng.below(7)];
  };
  const auto draw_scalar = [&](bool with_imag) -> Scalar {
    const auto re = draw();
    if (mode == ScalarMode::exact) {
      BigRat im(0);
      if (with_imag) {
        const auto imp = draw();
        im = BigRat(imp.first, imp.second);
      }
      return Scalar::exact(BigRat(re.first, re.second), im);
    }
    double im = 0.0;
    if (with_imag) {
      const auto imp = draw();
      im = static_cast<double>(imp.first) / static_cast<double>(imp.second);
    }
    return Scalar::floating(
        {static_cast<double>(re.first) / static_cast<double>(re.second), im});
  };

  const bool with_imag = shape == MatShape::full;
  std::vector<Scalar> entries(storage_size(shape, dim), Scalar::zero(mode));
  for (auto& e : entries) e = draw_scalar(with_imag);
  return shape == MatShape::diagonal ? CoeffMatrix::diagonal(std::move(entries))
                                     : CoeffMatrix::full(dim, std::move(entries));
}

std::string to_string(const CoeffMatrix& x) {
  std::string out;
  if (x.shape() == MatShape::diagonal) {
    out = "diag(";
    for (int i = 0; i < x.dim(); ++i) {
      if (i > 0) out += ",";
      out += x.stored()[static_cast<std::size_t>(i)].to_string();
    }
    out += ")";
    return out;
  }
  out = "[";
  for (int r = 0; r < x.dim(); ++r) {
    if (r > 0) out += ",";
    out += "[";
    for (int c = 0; c < x.dim(); ++c) {
      if (c > 0) out += ",";
      out += x.entry(r, c).to_string();
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace xprod
