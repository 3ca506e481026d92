// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "palrat/errors.hpp"

namespace palrat {
namespace {

// Poles this close to the origin are treated as sitting at it when
// reflecting through the unit circle.
constexpr double kZeroPole = 1e-12;

bool same_pole(Complex a, Complex b) {
  return std::abs(a - b) <= kPoleTol * std::max(1.0, std::abs(a));
}

void accumulate(std::vector<CMatrix>& dst, std::size_t index, const CMatrix& value) {
  if (dst.size() <= index) {
    Index r = value.rows(), c = value.cols();
    dst.resize(index + 1, CMatrix::Zero(r, c));
  }
  dst[index] += value;
}

// Appends coefficient c to the term at lambda with order j (1-based).
void add_pole_coeff(std::vector<PoleTerm>& terms, Complex lambda, int j, const CMatrix& c) {
  for (auto& t : terms) {
    if (same_pole(t.lambda, lambda)) {
      accumulate(t.coeffs, j - 1, c);
      return;
    }
  }
  PoleTerm t;
  t.lambda = lambda;
  accumulate(t.coeffs, j - 1, c);
  terms.push_back(std::move(t));
}

}  // namespace

RationalMatrix::RationalMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::ShapeError, "negative dimension");
}

RationalMatrix::RationalMatrix(Index rows, Index cols, std::vector<CMatrix> poly,
                               std::vector<PoleTerm> terms)
    : rows_(rows), cols_(cols), poly_(std::move(poly)), terms_(std::move(terms)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::ShapeError, "negative dimension");
  canonicalize();
}

RationalMatrix RationalMatrix::constant(const CMatrix& c) {
  return RationalMatrix(c.rows(), c.cols(), {c}, {});
}

void RationalMatrix::canonicalize() {
  auto check = [&](const CMatrix& c) {
    if (c.rows() != rows_ || c.cols() != cols_) {
      throw Error(ErrorCode::ShapeError, "coefficient shape does not match the rational matrix");
    }
    if (!all_finite(c)) throw Error(ErrorCode::InvalidInput, "non-finite coefficient");
  };
  for (const auto& c : poly_) check(c);
  std::vector<PoleTerm> merged;
  for (auto& t : terms_) {
    if (!std::isfinite(t.lambda.real()) || !std::isfinite(t.lambda.imag())) {
      throw Error(ErrorCode::InvalidInput, "non-finite pole location");
    }
    for (std::size_t j = 0; j < t.coeffs.size(); ++j) {
      check(t.coeffs[j]);
      add_pole_coeff(merged, t.lambda, static_cast<int>(j) + 1, t.coeffs[j]);
    }
  }
  for (auto& t : merged) {
    while (!t.coeffs.empty() && max_abs(t.coeffs.back()) == 0.0) t.coeffs.pop_back();
    if (t.order() > kDegreeCap) throw Error(ErrorCode::DegreeCap, "pole order exceeds the cap");
  }
  std::erase_if(merged, [](const PoleTerm& t) { return t.coeffs.empty(); });
  std::sort(merged.begin(), merged.end(), [](const PoleTerm& a, const PoleTerm& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  terms_ = std::move(merged);
  while (!poly_.empty() && max_abs(poly_.back()) == 0.0) poly_.pop_back();
  if (poly_degree() > kDegreeCap) throw Error(ErrorCode::DegreeCap, "polynomial degree exceeds the cap");
}

int RationalMatrix::finite_pole_order() const {
  int s = 0;
  for (const auto& t : terms_) s += t.order();
  return s;
}

double RationalMatrix::coeff_norm() const {
  double m = 0.0;
  for (const auto& c : poly_) m = std::max(m, max_abs(c));
  for (const auto& t : terms_) {
    for (const auto& c : t.coeffs) m = std::max(m, max_abs(c));
  }
  return m;
}

CMatrix eval(const RationalMatrix& r, Complex z0) {
  CMatrix out = CMatrix::Zero(r.rows(), r.cols());
  for (auto it = r.poly().rbegin(); it != r.poly().rend(); ++it) out = out * z0 + *it;
  for (const auto& t : r.terms()) {
    if (same_pole(t.lambda, z0)) {
      throw Error(ErrorCode::EvalAtPole, "evaluation point coincides with a pole");
    }
    Complex w = 1.0 / (z0 - t.lambda);
    Complex wj = w;
    for (const auto& c : t.coeffs) {
      out += wj * c;
      wj *= w;
    }
  }
  return out;
}

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeError, "add: shape mismatch");
  }
  std::vector<CMatrix> poly = a.poly();
  for (std::size_t k = 0; k < b.poly().size(); ++k) {
    if (poly.size() <= k) poly.push_back(CMatrix::Zero(a.rows(), a.cols()));
    poly[k] += b.poly()[k];
  }
  std::vector<PoleTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return RationalMatrix(a.rows(), a.cols(), std::move(poly), std::move(terms));
}

RationalMatrix scale(const RationalMatrix& r, Complex s) {
  std::vector<CMatrix> poly = r.poly();
  for (auto& c : poly) c *= s;
  std::vector<PoleTerm> terms = r.terms();
  for (auto& t : terms) {
    for (auto& c : t.coeffs) c *= s;
  }
  return RationalMatrix(r.rows(), r.cols(), std::move(poly), std::move(terms));
}

RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b) {
  return add(a, scale(b, -1.0));
}

RationalMatrix paraconjugate(const RationalMatrix& r) {
  const Index m = r.cols(), n = r.rows();
  std::vector<CMatrix> poly;
  std::vector<PoleTerm> terms;
  // P_k z^k -> P_k^* z^{-k}
  for (std::size_t k = 0; k < r.poly().size(); ++k) {
    CMatrix c = r.poly()[k].adjoint();
    if (k == 0) {
      accumulate(poly, 0, c);
    } else {
      add_pole_coeff(terms, Complex(0.0), static_cast<int>(k), c);
    }
  }
  for (const auto& t : r.terms()) {
    if (std::abs(t.lambda) <= kZeroPole) {
      // R_j z^{-j} -> R_j^* z^j
      for (int j = 1; j <= t.order(); ++j) accumulate(poly, j, t.coeffs[j - 1].adjoint());
      continue;
    }
    // R_j / (1/z - conj(lambda))^j = R_j (-conj(lambda))^{-j} z^j / (z - mu)^j
    const Complex mu = 1.0 / std::conj(t.lambda);
    const Complex f = -1.0 / std::conj(t.lambda);
    for (int j = 1; j <= t.order(); ++j) {
      CMatrix rj = t.coeffs[j - 1].adjoint() * std::pow(f, j);
      // z^j / (z - mu)^j = sum_k C(j,k) mu^k (z - mu)^{-k}
      accumulate(poly, 0, rj);
      Complex muk = 1.0;
      for (int k = 1; k <= j; ++k) {
        muk *= mu;
        add_pole_coeff(terms, mu, k, rj * (binomial(j, k) * muk));
      }
    }
  }
  return RationalMatrix(m, n, std::move(poly), std::move(terms));
}

RationalMatrix conj_transpose(const RationalMatrix& r) {
  std::vector<CMatrix> poly;
  for (const auto& c : r.poly()) poly.push_back(c.adjoint());
  std::vector<PoleTerm> terms;
  for (const auto& t : r.terms()) {
    PoleTerm u;
    u.lambda = std::conj(t.lambda);
    for (const auto& c : t.coeffs) u.coeffs.push_back(c.adjoint());
    terms.push_back(std::move(u));
  }
  return RationalMatrix(r.cols(), r.rows(), std::move(poly), std::move(terms));
}

RationalMatrix negate_variable(const RationalMatrix& r) {
  std::vector<CMatrix> poly = r.poly();
  for (std::size_t k = 1; k < poly.size(); k += 2) poly[k] = -poly[k];
  std::vector<PoleTerm> terms = r.terms();
  for (auto& t : terms) {
    t.lambda = -t.lambda;
    for (std::size_t j = 0; j < t.coeffs.size(); j += 2) t.coeffs[j] = -t.coeffs[j];
  }
  return RationalMatrix(r.rows(), r.cols(), std::move(poly), std::move(terms));
}

RationalMatrix scale_by_linear(const RationalMatrix& r, Complex alpha) {
  if (alpha == 0.0) throw Error(ErrorCode::InvalidAlpha, "alpha must be nonzero");
  const Complex ab = std::conj(alpha);
  std::vector<CMatrix> poly;
  for (std::size_t k = 0; k < r.poly().size(); ++k) {
    accumulate(poly, k, alpha * r.poly()[k]);
    accumulate(poly, k + 1, ab * r.poly()[k]);
  }
  std::vector<PoleTerm> terms;
  // (alpha + conj(alpha) z) = (alpha + conj(alpha) lambda) + conj(alpha)(z - lambda)
  for (const auto& t : r.terms()) {
    const Complex c0 = alpha + ab * t.lambda;
    PoleTerm u;
    u.lambda = t.lambda;
    for (int j = 1; j <= t.order(); ++j) {
      accumulate(u.coeffs, j - 1, c0 * t.coeffs[j - 1]);
      if (j == 1) {
        accumulate(poly, 0, ab * t.coeffs[0]);
      } else {
        accumulate(u.coeffs, j - 2, ab * t.coeffs[j - 1]);
      }
    }
    terms.push_back(std::move(u));
  }
  return RationalMatrix(r.rows(), r.cols(), std::move(poly), std::move(terms));
}

RationalMatrix prune(const RationalMatrix& r, double tol) {
  const double thr = tol * std::max(1.0, r.coeff_norm());
  std::vector<CMatrix> poly = r.poly();
  for (auto& c : poly) {
    if (max_abs(c) <= thr) c.setZero();
  }
  std::vector<PoleTerm> terms = r.terms();
  for (auto& t : terms) {
    for (auto& c : t.coeffs) {
      if (max_abs(c) <= thr) c.setZero();
    }
  }
  return RationalMatrix(r.rows(), r.cols(), std::move(poly), std::move(terms));
}

Index normal_rank(const RationalMatrix& r, double rel_tol) {
  Index best = 0;
  const double golden = 2.399963229728653;
  int taken = 0;
  for (int k = 0; taken < 6 && k < 64; ++k) {
    const Complex z = std::polar(0.55 + 0.17 * (k % 7), 0.3 + golden * k);
    bool near_pole = false;
    for (const auto& t : r.terms()) near_pole |= std::abs(z - t.lambda) < 1e-3;
    if (near_pole) continue;
    best = std::max(best, svd_rank(eval(r, z), rel_tol).rank);
    ++taken;
  }
  return best;
}

double coefficient_distance(const RationalMatrix& a, const RationalMatrix& b) {
  return subtract(a, b).coeff_norm();
}

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::palindromic: return "palindromic";
    case StructureKind::anti_palindromic: return "anti_palindromic";
    case StructureKind::hermitian: return "hermitian";
    case StructureKind::skew_hermitian: return "skew_hermitian";
    case StructureKind::even: return "even";
    case StructureKind::odd: return "odd";
    case StructureKind::para_hermitian: return "para_hermitian";
    case StructureKind::para_skew_hermitian: return "para_skew_hermitian";
    case StructureKind::none: return "none";
  }
  return "none";
}

StructureKind structure_kind_from_string(std::string_view name) {
  for (auto k : {StructureKind::palindromic, StructureKind::anti_palindromic,
                 StructureKind::hermitian, StructureKind::skew_hermitian, StructureKind::even,
                 StructureKind::odd, StructureKind::para_hermitian,
                 StructureKind::para_skew_hermitian, StructureKind::none}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::InvalidInput, "unknown structure kind '" + std::string(name) + "'");
}

std::string_view to_string(ParaKind kind) {
  return kind == ParaKind::hermitian ? "hermitian" : "skew";
}

ParaKind para_kind_from_string(std::string_view name) {
  if (name == "hermitian") return ParaKind::hermitian;
  if (name == "skew") return ParaKind::skew;
  throw Error(ErrorCode::InvalidInput, "kind must be 'hermitian' or 'skew'");
}

StructureKind rational_kind(ParaKind kind) {
  return kind == ParaKind::hermitian ? StructureKind::para_hermitian
                                     : StructureKind::para_skew_hermitian;
}

StructureKind pencil_kind(ParaKind kind) {
  return kind == ParaKind::hermitian ? StructureKind::palindromic
                                     : StructureKind::anti_palindromic;
}

StructureTag is_structured(const RationalMatrix& r, StructureKind kind, double tol) {
  if (!r.square()) throw Error(ErrorCode::NotSquare, "structure test needs a square matrix");
  RationalMatrix image;
  double sign = -1.0;  // image - r for the symmetric kinds, image + r otherwise
  switch (kind) {
    case StructureKind::para_hermitian: image = paraconjugate(r); break;
    case StructureKind::para_skew_hermitian: image = paraconjugate(r); sign = 1.0; break;
    case StructureKind::hermitian: image = conj_transpose(r); break;
    case StructureKind::skew_hermitian: image = conj_transpose(r); sign = 1.0; break;
    case StructureKind::even: image = conj_transpose(negate_variable(r)); break;
    case StructureKind::odd: image = conj_transpose(negate_variable(r)); sign = 1.0; break;
    default:
      throw Error(ErrorCode::InvalidInput, "is_structured: unsupported kind for rational matrices");
  }
  StructureTag tag;
  tag.deviation = add(image, scale(r, sign)).coeff_norm();
  if (tag.deviation <= tol * std::max(1.0, r.coeff_norm())) tag.kind = kind;
  return tag;
}

Pencil Pencil::plain(const CMatrix& m1, const CMatrix& m0) {
  Pencil p{m1, m0, 0, m1.rows(), m1.cols()};
  p.validate();
  return p;
}

void Pencil::validate() const {
  if (M1.rows() != M0.rows() || M1.cols() != M0.cols()) {
    throw Error(ErrorCode::ShapeError, "pencil coefficients differ in shape");
  }
  if (state_dim < 0 || io_rows < 0 || io_cols < 0 || state_dim + io_rows != M1.rows() ||
      state_dim + io_cols != M1.cols()) {
    throw Error(ErrorCode::ShapeError, "pencil partition does not match its size");
  }
  if (!all_finite(M1) || !all_finite(M0)) {
    throw Error(ErrorCode::InvalidInput, "pencil has non-finite entries");
  }
}

Pencil Pencil::state_pencil() const {
  const Index n = state_dim;
  return Pencil::plain(-M1.topLeftCorner(n, n), -M0.topLeftCorner(n, n));
}

CMatrix transfer(const Pencil& l, Complex z0) {
  l.validate();
  const Index n = l.state_dim;
  const CMatrix lz = l.at(z0);
  const CMatrix d = lz.bottomRightCorner(l.io_rows, l.io_cols);
  if (n == 0) return d;
  const CMatrix a = -lz.topLeftCorner(n, n);
  try {
    return d + lz.bottomLeftCorner(l.io_rows, n) * solve(a, lz.topRightCorner(n, l.io_cols));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularSolve) throw;
    throw Error(ErrorCode::EvalAtSystemPole, "A(z0) is singular", e.value());
  }
}

double pencil_deviation(const Pencil& l, StructureKind kind) {
  if (l.M1.rows() != l.M1.cols()) return std::numeric_limits<double>::infinity();
  const CMatrix& a = l.M1;
  const CMatrix& b = l.M0;
  auto herm = [](const CMatrix& x) { return max_abs(x - x.adjoint()); };
  auto skew = [](const CMatrix& x) { return max_abs(x + x.adjoint()); };
  switch (kind) {
    case StructureKind::palindromic: return max_abs(b - a.adjoint());
    case StructureKind::anti_palindromic: return max_abs(b + a.adjoint());
    case StructureKind::hermitian: return std::max(herm(a), herm(b));
    case StructureKind::skew_hermitian: return std::max(skew(a), skew(b));
    case StructureKind::even: return std::max(herm(b), skew(a));
    case StructureKind::odd: return std::max(skew(b), herm(a));
    default: return std::numeric_limits<double>::infinity();
  }
}

StructureTag pencil_structure(const Pencil& l, double tol) {
  const double thr = tol * std::max({1.0, max_abs(l.M1), max_abs(l.M0)});
  for (auto k : {StructureKind::palindromic, StructureKind::anti_palindromic,
                 StructureKind::hermitian, StructureKind::skew_hermitian, StructureKind::even,
                 StructureKind::odd}) {
    double dev = pencil_deviation(l, k);
    if (dev <= thr) return {k, dev};
  }
  return {StructureKind::none, pencil_deviation(l, StructureKind::palindromic)};
}

CMatrix Realization::eval(Complex z) const {
  if (state_dim() == 0) return CMatrix::Zero(C.rows(), B.cols());
  try {
    return C * solve(z * E - A, B);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularSolve) throw;
    throw Error(ErrorCode::EvalAtSystemPole, "zE - A is singular", e.value());
  }
}

Pencil Realization::pencil() const {
  const Index n = state_dim(), p = C.rows(), q = B.cols();
  Pencil l;
  l.M1 = CMatrix::Zero(n + p, n + q);
  l.M0 = CMatrix::Zero(n + p, n + q);
  l.M1.topLeftCorner(n, n) = -E;
  l.M0.topLeftCorner(n, n) = A;
  l.M0.topRightCorner(n, q) = B;
  l.M0.bottomLeftCorner(p, n) = C;
  l.state_dim = n;
  l.io_rows = p;
  l.io_cols = q;
  return l;
}

}  // namespace palrat
