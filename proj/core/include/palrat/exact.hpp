// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "palrat/rmatrix.hpp"
#include "palrat/structural.hpp"

/// Exact arithmetic over Q(i) for small instances. Used as an oracle for the
/// floating-point structural computations.
namespace palrat::exact {

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  GaussRat(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  /// Exact conversion of both double components.
  static GaussRat from(Complex c);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussRat conj() const { return GaussRat(re_, -im_); }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Polynomial with ascending coefficients; the zero polynomial has none.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRat> coeffs);
  Poly(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  static Poly monomial(const GaussRat& c, int degree);
  /// z - root
  static Poly linear(const GaussRat& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussRat>& coeffs() const { return c_; }
  const GaussRat& lead() const { return c_.back(); }
  GaussRat eval(const GaussRat& x) const;
  Poly derivative() const;
  Poly monic() const;
  /// Coefficients reversed against the degree: z^deg p(1/z).
  Poly reversed() const;
  /// Multiplicity of the root x.
  int valuation(const GaussRat& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Quotient and remainder of a / b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws InvalidInput on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// num / den with gcd(num, den) = 1 and den monic.
class Rational {
 public:
  Rational() : den_(GaussRat(1)) {}
  Rational(Poly num, Poly den);
  Rational(const Poly& p) : Rational(p, Poly(GaussRat(1))) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

class Matrix {
 public:
  Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Rational& operator()(Index i, Index j) { return e_[i * cols_ + j]; }
  const Rational& operator()(Index i, Index j) const { return e_[i * cols_ + j]; }
  Complex eval(Complex z, Index i, Index j) const;

 private:
  Index rows_;
  Index cols_;
  std::vector<Rational> e_;
};

inline constexpr Index kMaxExactSize = 4;

/// Exact image of a floating-point rational matrix (coefficients converted
/// exactly, no rounding).
Matrix to_exact(const RationalMatrix& r);

/// Transfer function D + C A^{-1} B of a pencil in exact arithmetic,
/// optionally divided by (1 + z).
Matrix exact_transfer(const Pencil& l, bool divide_by_one_plus_z);

/// R(1/t).
Matrix at_infinity(const Matrix& r);

struct SmithMcMillanForm {
  int normal_rank = 0;
  std::vector<Poly> numerators;    // e_1 | e_2 | ...
  std::vector<Poly> denominators;  // ... | psi_2 | psi_1
  Poly zero_polynomial;            // prod e_k
  Poly pole_polynomial;            // prod psi_k
  // Cleared form used by the local computations.
  Poly lcd;
  std::vector<Poly> invariant_factors;  // of lcd * R
};

/// Throws TooLarge beyond 4 x 4.
SmithMcMillanForm smith_mcmillan_form(const Matrix& r);

/// Invariant orders at a finite exact point or at infinity.
StructuralIndices smith_mcmillan_exact(const Matrix& r, const GaussRat& point);
StructuralIndices smith_mcmillan_exact_at_infinity(const Matrix& r);

/// Square-free factorization p = c * prod f_k^k (Yun); returns (f_k, k).
std::vector<std::pair<Poly, int>> squarefree(const Poly& p);

/// Roots with multiplicity: exact square-free factorization followed by a
/// numerical root solve of each square-free factor.
std::vector<std::pair<Complex, int>> roots(const Poly& p);

}  // namespace palrat::exact
