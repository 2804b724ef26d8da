#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xprod/bigmath.hpp"
#include "xprod/rng.hpp"

namespace xprod {

enum class ScalarMode { exact, floating };

// A complex scalar in one of two modes: exact Gaussian rationals (both
// parts arbitrary-precision rationals in lowest terms) or a complex double
// pair. Mixing modes in arithmetic is a domain error.
class Scalar {
 public:
  Scalar() = default;  // exact zero

  static Scalar exact(BigRat re, BigRat im = BigRat(0));
  static Scalar floating(std::complex<double> v);
  static Scalar zero(ScalarMode mode);
  static Scalar one(ScalarMode mode);
  static Scalar integer(long long v, ScalarMode mode);
  static Scalar rational(long long num, long long den, ScalarMode mode);

  ScalarMode mode() const { return mode_; }
  const BigRat& re() const;                // exact mode only
  const BigRat& im() const;                // exact mode only
  std::complex<double> value_f() const;    // floating mode only

  // exact -> floating converts (integers and dyadics stay exact);
  // floating -> exact is a domain error.
  Scalar to_mode(ScalarMode target) const;

  Scalar conj() const;
  bool is_zero() const;  // structural in both modes

  // Exact mode compares structurally and ignores tol; floating mode
  // compares |a - b| <= tol.
  bool approx_eq(const Scalar& o, double tol) const;

  // |value| as a double (approximate in exact mode); used for reporting.
  double abs_approx() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  bool operator==(const Scalar& o) const;

  // Exact scalars render as "p/q", with "+r/s*i" appended when the
  // imaginary part is nonzero; denominator 1 is omitted. Floating scalars
  // render as "(re,im)" with 17 significant digits.
  std::string to_string() const;
  static Scalar parse_exact(std::string_view text);

 private:
  ScalarMode mode_ = ScalarMode::exact;
  BigRat re_;
  BigRat im_;
  std::complex<double> f_{0.0, 0.0};
};

enum class MatShape { diagonal, full };

// An element of the coefficient algebra: a d x d matrix, stored densely
// for full shape and as the diagonal for diagonal shape. All entries share
// one scalar mode. Shape, dimension, and mode must agree across operands.
class CoeffMatrix {
 public:
  CoeffMatrix() = default;

  static CoeffMatrix zero(MatShape shape, int dim, ScalarMode mode);
  static CoeffMatrix identity(MatShape shape, int dim, ScalarMode mode);
  static CoeffMatrix diagonal(std::vector<Scalar> entries);
  static CoeffMatrix full(int dim, std::vector<Scalar> row_major);

  MatShape shape() const { return shape_; }
  int dim() const { return dim_; }
  ScalarMode mode() const { return mode_; }

  // Entry by value; off-diagonal positions of a diagonal matrix are zero.
  Scalar entry(int r, int c) const;
  const std::vector<Scalar>& stored() const { return entries_; }

  bool operator==(const CoeffMatrix& o) const;

 private:
  MatShape shape_ = MatShape::diagonal;
  int dim_ = 0;
  ScalarMode mode_ = ScalarMode::exact;
  std::vector<Scalar> entries_;  // dim (diagonal) or dim*dim row-major (full)

  friend CoeffMatrix mat_add(const CoeffMatrix&, const CoeffMatrix&);
  friend CoeffMatrix mat_sub(const CoeffMatrix&, const CoeffMatrix&);
  friend CoeffMatrix mat_mul(const CoeffMatrix&, const CoeffMatrix&);
  friend CoeffMatrix mat_scale(const Scalar&, const CoeffMatrix&);
  friend CoeffMatrix adjoint(const CoeffMatrix&);
};

CoeffMatrix mat_add(const CoeffMatrix& x, const CoeffMatrix& y);
CoeffMatrix mat_sub(const CoeffMatrix& x, const CoeffMatrix& y);
CoeffMatrix mat_mul(const CoeffMatrix& x, const CoeffMatrix& y);
CoeffMatrix mat_scale(const Scalar& s, const CoeffMatrix& x);

// Conjugate transpose. Involutive; adjoint(xy) = adjoint(y) adjoint(x).
CoeffMatrix adjoint(const CoeffMatrix& x);

// Exact mode compares structurally (tol ignored); floating mode compares
// entrywise with absolute tolerance tol.
bool mat_eq(const CoeffMatrix& x, const CoeffMatrix& y, double tol);

bool is_zero_mat(const CoeffMatrix& x);                   // structural
bool approx_zero(const CoeffMatrix& x, double tol);       // mode-aware
double max_abs_entry(const CoeffMatrix& x);

// The scalar s with x == s * identity, when x has that form (structural
// check); nullopt otherwise.
std::optional<Scalar> scalar_of_identity_multiple(const CoeffMatrix& x);

// Embedding of a diagonal matrix into full shape (zeros off-diagonal).
// A *-homomorphism: it commutes with all the arithmetic above.
CoeffMatrix to_full(const CoeffMatrix& x);

// Entries drawn from the palette {0, +-1, +-2, +-1/2}; full shape draws an
// imaginary part from the same palette. Deterministic given the generator.
CoeffMatrix sample_coeff_matrix(MatShape shape, int dim, ScalarMode mode, SplitMix64& rng);

std::string to_string(const CoeffMatrix& x);

}  // namespace xprod
