// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/realize.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "palrat/errors.hpp"
#include "palrat/structural.hpp"

namespace palrat {
namespace {

CMatrix hankel_matrix(const std::vector<CMatrix>& coeffs, int k, int shift) {
  const Index m = coeffs.front().rows(), n = coeffs.front().cols();
  CMatrix h(k * m, k * n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) h.block(i * m, j * n, m, n) = coeffs[i + j + shift];
  }
  return h;
}

}  // namespace

std::vector<CMatrix> taylor_coeffs(const RationalMatrix& r_in, int count) {
  if (!r_in.strictly_proper()) {
    throw Error(ErrorCode::NotStrictlyProper, "Taylor expansion needs a strictly proper matrix");
  }
  std::vector<CMatrix> out(count, CMatrix::Zero(r_in.rows(), r_in.cols()));
  // 1/(z - lambda)^i = sum_{j >= i} C(j-1, i-1) lambda^{j-i} z^{-j}
  for (const auto& t : r_in.terms()) {
    for (int i = 1; i <= t.order(); ++i) {
      for (int j = i; j <= count; ++j) {
        out[j - 1] += (binomial(j - 1, i - 1) * std::pow(t.lambda, j - i)) * t.coeffs[i - 1];
      }
    }
  }
  return out;
}

HankelPair build_hankel(const std::vector<CMatrix>& coeffs, int k, double rel_tol) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "Hankel order must be positive");
  if (static_cast<int>(coeffs.size()) < 2 * k) {
    throw Error(ErrorCode::NeedMoreCoeffs, "need 2k Taylor coefficients");
  }
  const Index m = coeffs.front().rows(), n = coeffs.front().cols();
  HankelPair hp;
  hp.k = k;
  hp.H = hankel_matrix(coeffs, k, 0);
  hp.H_sigma = hankel_matrix(coeffs, k, 1);
  Eigen::BDCSVD<CMatrix> svd(hp.H, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  hp.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double thr = rel_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  hp.r_f = std::count_if(hp.singular_values.begin(), hp.singular_values.end(),
                         [&](double s) { return s > thr; });
  hp.U1 = svd.matrixU().leftCols(hp.r_f);
  hp.V1 = svd.matrixV().leftCols(hp.r_f);
  hp.U11 = hp.U1.topRows(m);
  hp.V11 = hp.V1.topRows(n);
  hp.H_hat = hp.U1.adjoint() * hp.H * hp.V1;
  return hp;
}

RealizationResult minimal_realization(const RationalMatrix& r_in, double rel_tol) {
  if (!r_in.strictly_proper()) {
    throw Error(ErrorCode::NotStrictlyProper, "realization needs a strictly proper matrix");
  }
  const Index m = r_in.rows(), n = r_in.cols();
  const int k_floor = std::max(1, r_in.finite_pole_order());
  if (k_floor > kMaxHankelOrder) {
    throw Error(ErrorCode::NoConvergence, "denominator degree exceeds the Hankel order cap");
  }
  std::vector<CMatrix> coeffs = taylor_coeffs(r_in, 2 * kMaxHankelOrder + 2);
  auto rank_of = [&](int k) {
    return svd_rank(hankel_matrix(coeffs, k, 0), rel_tol).rank;
  };
  int k = 1;
  Index rk = rank_of(1);
  for (;; ++k) {
    if (k > kMaxHankelOrder) throw Error(ErrorCode::NoConvergence, "Hankel rank did not stagnate");
    Index rnext = rank_of(k + 1);
    if (rnext == rk && k >= k_floor) break;
    rk = rnext;
  }

  RealizationResult res;
  res.hankel = build_hankel(coeffs, k, rel_tol);
  const HankelPair& hp = res.hankel;
  Realization& real = res.realization;
  real.E = hp.H_hat;
  real.A = hp.U1.adjoint() * hp.H_sigma * hp.V1;
  real.B = hp.H_hat * hp.V11.adjoint();
  real.C = hp.U11 * hp.H_hat;
  res.pencil = real.pencil();

  // Certification on |z| in [1.5, 3].
  const double golden = 2.399963229728653;
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    const Complex z = std::polar(1.5 + 0.15 * s, 0.4 + golden * s);
    const CMatrix expected = eval(r_in, z);
    const CMatrix got = m * n == 0 ? expected : transfer(res.pencil, z);
    worst = std::max(worst, (got - expected).norm() / std::max(1.0, expected.norm()));
  }
  res.transfer_residual = worst;
  if (!(worst <= 1e-9)) {
    throw Error(ErrorCode::NoConvergence, "realization fails transfer certification", worst);
  }
  res.strongly_minimal = check_strong_minimality(res.pencil).ok();
  return res;
}

Realization normalize_descriptor(const Realization& r) {
  Realization out;
  const Index n = r.state_dim();
  out.E = CMatrix::Identity(n, n);
  out.A = solve(r.E, r.A);
  out.B = solve(r.E, r.B);
  out.C = r.C;
  return out;
}

}  // namespace palrat
