// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/exact.hpp"

#include <algorithm>
#include <functional>

#include <Eigen/Eigenvalues>

#include "palrat/errors.hpp"

namespace palrat::exact {

GaussRat GaussRat::from(Complex c) {
  // mpq_class(double) is exact for finite doubles.
  return GaussRat(mpq_class(c.real()), mpq_class(c.imag()));
}

std::string GaussRat::str() const { return re_.get_str() + (sgn(im_) < 0 ? "" : "+") + im_.get_str() + "i"; }

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
  return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
}
GaussRat operator-(const GaussRat& a, const GaussRat& b) {
  return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
}
GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "exact division by zero");
  mpq_class n2 = b.re_ * b.re_ + b.im_ * b.im_;
  return GaussRat((a.re_ * b.re_ + a.im_ * b.im_) / n2, (a.im_ * b.re_ - a.re_ * b.im_) / n2);
}

Poly::Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }
Poly::Poly(const GaussRat& c) : c_{c} { trim(); }

Poly Poly::monomial(const GaussRat& c, int degree) {
  std::vector<GaussRat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const GaussRat& root) { return Poly({-root, GaussRat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat Poly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<GaussRat> v;
  for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * GaussRat(static_cast<long>(k)));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<GaussRat> v;
  for (const auto& c : c_) v.push_back(c / lead());
  return Poly(std::move(v));
}

Poly Poly::reversed() const {
  std::vector<GaussRat> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

int Poly::valuation(const GaussRat& x) const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "valuation of the zero polynomial");
  int v = 0;
  Poly p = *this;
  const Poly lin = linear(x);
  while (true) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) return v;
    p = std::move(q);
    ++v;
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] - b.c_[k];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GaussRat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussRat> rem = a.coeffs();
  std::vector<GaussRat> quo(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    GaussRat f = rem[k] / b.lead();
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - f * b.coeffs()[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Rational::Rational(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidInput, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(GaussRat(1));
    return;
  }
  Poly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  const GaussRat lc = den.lead();
  num_ = num * Poly(GaussRat(1) / lc);
  den_ = den.monic();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero rational function");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Complex Matrix::eval(Complex z, Index i, Index j) const {
  const Rational& e = (*this)(i, j);
  auto ev = [&](const Poly& p) {
    Complex acc{};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
  };
  return ev(e.num()) / ev(e.den());
}

Matrix to_exact(const RationalMatrix& r) {
  Matrix out(r.rows(), r.cols());
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) {
      std::vector<GaussRat> pc;
      for (const auto& c : r.poly()) pc.push_back(GaussRat::from(c(i, j)));
      Rational acc{Poly(std::move(pc))};
      for (const auto& t : r.terms()) {
        const Poly lin = Poly::linear(GaussRat::from(t.lambda));
        Poly den(GaussRat(1));
        for (const auto& c : t.coeffs) {
          den = den * lin;
          acc = acc + Rational(Poly(GaussRat::from(c(i, j))), den);
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix exact_transfer(const Pencil& l, bool divide_by_one_plus_z) {
  l.validate();
  const Index n = l.state_dim, p = l.io_rows, q = l.io_cols;
  auto entry = [&](Index i, Index j) {
    return Rational(Poly({GaussRat::from(l.M0(i, j)), GaussRat::from(l.M1(i, j))}));
  };
  // Augmented system [A | B] with A = -L_11.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + q));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) aug[i][j] = Rational(Poly()) - entry(i, j);
    for (Index j = 0; j < q; ++j) aug[i][n + j] = entry(i, n + j);
  }
  for (Index c = 0; c < n; ++c) {
    Index piv = c;
    while (piv < n && aug[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularPencil, "state block is singular");
    std::swap(aug[c], aug[piv]);
    const Rational inv = Rational(Poly(GaussRat(1))) / aug[c][c];
    for (Index j = c; j < n + q; ++j) aug[c][j] = aug[c][j] * inv;
    for (Index i = 0; i < n; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      const Rational f = aug[i][c];
      for (Index j = c; j < n + q; ++j) aug[i][j] = aug[i][j] - f * aug[c][j];
    }
  }
  const Rational scale = divide_by_one_plus_z
                             ? Rational(Poly(GaussRat(1)), Poly({GaussRat(1), GaussRat(1)}))
                             : Rational(Poly(GaussRat(1)));
  Matrix out(p, q);
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < q; ++j) {
      Rational acc = entry(n + i, n + j);
      for (Index k = 0; k < n; ++k) acc = acc + entry(n + i, k) * aug[k][n + j];
      out(i, j) = acc * scale;
    }
  }
  return out;
}

Matrix at_infinity(const Matrix& r) {
  Matrix out(r.rows(), r.cols());
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) {
      const Rational& e = r(i, j);
      if (e.is_zero()) continue;
      // num(1/t)/den(1/t) = t^(dd - dn) rev(num) / rev(den)
      const int shift = e.den().degree() - e.num().degree();
      Poly num = e.num().reversed(), den = e.den().reversed();
      if (shift >= 0) {
        num = num * Poly::monomial(GaussRat(1), shift);
      } else {
        den = den * Poly::monomial(GaussRat(1), -shift);
      }
      out(i, j) = Rational(num, den);
    }
  }
  return out;
}

namespace {

Poly lcm(const Poly& a, const Poly& b) { return exact_div(a * b, gcd(a, b)).monic(); }

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Poly acc;
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      sub.push_back(std::move(row));
    }
    Poly term = m[0][j] * determinant(sub);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

void for_each_subset(Index n, Index k, const std::function<void(const std::vector<Index>&)>& f) {
  std::vector<Index> idx(k);
  for (Index i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    Index i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SmithMcMillanForm smith_mcmillan_form(const Matrix& r) {
  if (r.rows() > kMaxExactSize || r.cols() > kMaxExactSize) {
    throw Error(ErrorCode::TooLarge, "exact oracle is limited to 4 x 4");
  }
  SmithMcMillanForm f;
  f.lcd = Poly(GaussRat(1));
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) f.lcd = lcm(f.lcd, r(i, j).den());
  }
  std::vector<std::vector<Poly>> n(r.rows(), std::vector<Poly>(r.cols()));
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) {
      n[i][j] = r(i, j).num() * exact_div(f.lcd, r(i, j).den());
    }
  }
  Poly prev(GaussRat(1));
  f.zero_polynomial = Poly(GaussRat(1));
  f.pole_polynomial = Poly(GaussRat(1));
  for (Index k = 1; k <= std::min(r.rows(), r.cols()); ++k) {
    Poly dk;
    for_each_subset(r.rows(), k, [&](const std::vector<Index>& rows) {
      for_each_subset(r.cols(), k, [&](const std::vector<Index>& cols) {
        std::vector<std::vector<Poly>> sub(k, std::vector<Poly>(k));
        for (Index a = 0; a < k; ++a) {
          for (Index b = 0; b < k; ++b) sub[a][b] = n[rows[a]][cols[b]];
        }
        Poly minor = determinant(sub);
        if (!minor.is_zero()) dk = gcd(dk, minor);
      });
    });
    if (dk.is_zero()) break;
    const Poly eps = exact_div(dk, prev);
    f.invariant_factors.push_back(eps);
    const Poly g = gcd(eps, f.lcd);
    f.numerators.push_back(exact_div(eps, g).monic());
    f.denominators.push_back(exact_div(f.lcd, g).monic());
    f.zero_polynomial = f.zero_polynomial * f.numerators.back();
    f.pole_polynomial = f.pole_polynomial * f.denominators.back();
    prev = dk;
    f.normal_rank = static_cast<int>(k);
  }
  return f;
}

StructuralIndices smith_mcmillan_exact(const Matrix& r, const GaussRat& point) {
  const SmithMcMillanForm f = smith_mcmillan_form(r);
  StructuralIndices out;
  out.point = ExtComplex(point.to_complex());
  const int base = f.lcd.valuation(point);
  for (const auto& eps : f.invariant_factors) out.orders.push_back(eps.valuation(point) - base);
  std::sort(out.orders.begin(), out.orders.end());
  return out;
}

StructuralIndices smith_mcmillan_exact_at_infinity(const Matrix& r) {
  StructuralIndices out = smith_mcmillan_exact(at_infinity(r), GaussRat(0));
  out.point = ExtComplex::infinity();
  return out;
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  const Poly a0 = gcd(p, p.derivative());
  Poly b = exact_div(p, a0);
  Poly c = exact_div(p.derivative(), a0);
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const Poly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() >= 1) out.emplace_back(a, i);
  }
  return out;
}

std::vector<std::pair<Complex, int>> roots(const Poly& p) {
  std::vector<std::pair<Complex, int>> out;
  for (const auto& [f, mult] : squarefree(p)) {
    const Poly g = f.monic();
    const int deg = g.degree();
    std::vector<Complex> c;
    for (const auto& x : g.coeffs()) c.push_back(x.to_complex());
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (Index k = 0; k < deg; ++k) {
      Complex z = es.eigenvalues()(k);
      // Newton polish on the square-free factor.
      for (int it = 0; it < 3; ++it) {
        Complex v{}, dv{};
        for (int i = deg; i >= 0; --i) {
          dv = dv * z + v;
          v = v * z + c[i];
        }
        if (std::abs(dv) == 0.0) break;
        z -= v / dv;
      }
      out.emplace_back(z, mult);
    }
  }
  return out;
}

}  // namespace palrat::exact
