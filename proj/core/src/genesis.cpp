// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/genesis.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "palrat/errors.hpp"

namespace palrat {
namespace {

constexpr double kMargin = 1e-3;

Complex unit_alpha(Complex alpha) {
  if (!(std::abs(alpha) > 0.0) || !std::isfinite(std::abs(alpha))) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must be nonzero");
  }
  return alpha / std::abs(alpha);
}

struct Eigenparts {
  std::vector<Complex> mu;
  std::vector<CMatrix> a, b, c;  // N_i(z) = z^2 a_i + z b_i + c_i
};

// (zB^* + sC^*)(zA + sA^*)^{-1}(zC + sB) = sum_i N_i(z)/(z - mu_i).
Eigenparts eigenparts(const CMatrix& a, const CMatrix& b, const CMatrix& c, double s) {
  Eigenparts out;
  const Index n = a.rows();
  if (n == 0) return out;
  Eigen::PartialPivLU<CMatrix> lu(a);
  const double smin = sigma_min(a);
  if (!(smin > 1e-10 * std::max(1.0, max_abs(a)))) {
    throw Error(ErrorCode::DegenerateDraw, "A is singular", smin);
  }
  const CMatrix ainv = lu.inverse();
  const CMatrix m = -s * ainv * a.adjoint();
  Eigen::ComplexEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::DegenerateDraw, "eigensolver failed");
  const CMatrix& v = es.eigenvectors();
  const double sv = sigma_min(v);
  if (!(sv > 1e-8 * std::max(1.0, max_abs(v)))) {
    throw Error(ErrorCode::DegenerateDraw, "A^{-1}A^* is not diagonalizable", sv);
  }
  const CMatrix w = v.partialPivLu().solve(ainv);
  for (Index i = 0; i < n; ++i) {
    const CMatrix vw = v.col(i) * w.row(i);
    out.mu.push_back(es.eigenvalues()(i));
    out.a.push_back(b.adjoint() * vw * c);
    out.b.push_back(s * (b.adjoint() * vw * b + c.adjoint() * vw * c));
    out.c.push_back(c.adjoint() * vw * b);
  }
  return out;
}

CMatrix eval_n(const Eigenparts& e, std::size_t i, Complex z) {
  return z * z * e.a[i] + z * e.b[i] + e.c[i];
}

CMatrix eval_h(const Eigenparts& e, Complex z, Index m) {
  CMatrix h = CMatrix::Zero(m, m);
  for (std::size_t i = 0; i < e.mu.size(); ++i) h += eval_n(e, i, z) / (z - e.mu[i]);
  return h;
}

GeneratedInstance build(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d,
                        Complex alpha, ParaKind kind, const Eigenparts& e) {
  const Index n = a.rows(), m = d.rows();
  const double s = kind == ParaKind::hermitian ? 1.0 : -1.0;
  const Complex ab = std::conj(alpha);
  const Complex z0 = -alpha / ab;

  CMatrix poly = d / ab;
  std::vector<PoleTerm> terms;
  CMatrix res0 = (z0 * d + s * d.adjoint()) / ab;
  CMatrix res0_sq = CMatrix::Zero(m, m);
  for (std::size_t i = 0; i < e.mu.size(); ++i) {
    poly += e.a[i] / ab;
    const Complex gap = e.mu[i] - z0;
    if (std::abs(gap) <= kPoleTol) {
      // N_i(z)/(z - z0)^2 = a_i + N_i'(z0)/(z - z0) + N_i(z0)/(z - z0)^2
      res0 += (2.0 * z0 * e.a[i] + e.b[i]) / ab;
      res0_sq += eval_n(e, i, z0) / ab;
    } else {
      terms.push_back({e.mu[i], {eval_n(e, i, e.mu[i]) / (ab * gap)}});
      res0 -= eval_n(e, i, z0) / (ab * gap);
    }
  }
  terms.push_back({z0, {res0, res0_sq}});

  GeneratedInstance out;
  out.r = RationalMatrix(m, m, {poly}, std::move(terms));
  out.alpha = alpha;
  out.kind = kind;
  Pencil& l = out.pencil;
  l.state_dim = n;
  l.io_rows = l.io_cols = m;
  l.M1.resize(n + m, n + m);
  l.M1 << -a, c, b.adjoint(), d;
  l.M0 = s * l.M1.adjoint();
  return out;
}

void check_shapes(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const Index n = a.rows(), m = d.rows();
  if (a.cols() != n || d.cols() != m || b.rows() != n || b.cols() != m || c.rows() != n ||
      c.cols() != m) {
    throw Error(ErrorCode::ShapeError, "A, B, C, D do not fit together");
  }
}

CMatrix gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  CMatrix out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = nd(rng);
      out(i, j) = Complex(re, nd(rng));
    }
  }
  return out;
}

bool well_separated(const std::vector<Complex>& mu, Complex z0, bool avoid_z0) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (avoid_z0 && std::abs(mu[i] - z0) < kMargin) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(mu[i] - mu[j]) < kMargin * std::max(1.0, std::abs(mu[i]))) return false;
    }
  }
  return true;
}

}  // namespace

GeneratedInstance para_structured_from(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                                       const CMatrix& d, Complex alpha, ParaKind kind) {
  check_shapes(a, b, c, d);
  const Complex al = unit_alpha(alpha);
  const double s = kind == ParaKind::hermitian ? 1.0 : -1.0;
  return build(a, b, c, d, al, kind, eigenparts(a, b, c, s));
}

GeneratedInstance random_para_structured(Index n, Index m, Complex alpha, ParaKind kind,
                                         std::uint64_t seed, const GeneratorOptions& options) {
  if (n < 0 || m < 1) throw Error(ErrorCode::InvalidInput, "need n >= 0 and m >= 1");
  if (options.off_circle && n % 2 != 0) {
    throw Error(ErrorCode::InvalidInput, "off-circle generation needs an even state size");
  }
  const Complex al = unit_alpha(alpha);
  const Complex z0 = -al / std::conj(al);
  const double s = kind == ParaKind::hermitian ? 1.0 : -1.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.3, 0.7), phase(0.0, 2.0 * M_PI);

  for (int draw = 0; draw < options.max_draws; ++draw) {
    CMatrix a;
    if (options.off_circle) {
      // W blockdiag([[0, a_k], [1, 0]]) W^*: pencil eigenvalues -s/a_k and -s conj(a_k).
      CMatrix core = CMatrix::Zero(n, n);
      for (Index k = 0; k < n; k += 2) {
        core(k, k + 1) = std::polar(radius(rng), phase(rng));
        core(k + 1, k) = 1.0;
      }
      const CMatrix w = gaussian(rng, n, n);
      a = w * core * w.adjoint();
    } else {
      a = gaussian(rng, n, n);
    }
    const CMatrix b = gaussian(rng, n, m);
    const CMatrix c = gaussian(rng, n, m);
    CMatrix d = gaussian(rng, m, m);
    Eigenparts e;
    try {
      e = eigenparts(a, b, c, s);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::DegenerateDraw) continue;
      throw;
    }
    if (!well_separated(e.mu, z0, true)) continue;
    if (options.off_circle) {
      // Cancels the residue at z0: z0 D + s D^* = -H_g(z0) since H_g(z0)^* = s H_g(z0)/z0.
      d = -(std::conj(z0) / 2.0) * eval_h(e, z0, m);
    }
    GeneratedInstance inst = build(a, b, c, d, al, kind, e);
    if (options.off_circle) {
      std::vector<PoleTerm> terms;
      for (const auto& t : inst.r.terms()) {
        if (std::abs(t.lambda - z0) > kPoleTol) terms.push_back(t);
      }
      inst.r = RationalMatrix(m, m, inst.r.poly(), std::move(terms));
    }
    if (is_structured(inst.r, rational_kind(kind), 1e-9).kind == StructureKind::none) continue;
    return inst;
  }
  throw Error(ErrorCode::DegenerateDraw, "resampling budget exhausted");
}

}  // namespace palrat
