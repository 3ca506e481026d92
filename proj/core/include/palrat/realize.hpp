// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "palrat/rmatrix.hpp"

namespace palrat {

inline constexpr int kMaxHankelOrder = 64;

/// Coefficients R_{-1}, ..., R_{-count} of the expansion at infinity of a
/// strictly proper R. Throws NotStrictlyProper otherwise.
std::vector<CMatrix> taylor_coeffs(const RationalMatrix& r_in, int count);

/// Block Hankel data of order k.
/// H(i, j) = R_{-(i+j+1)}, H_sigma(i, j) = R_{-(i+j+2)} for 0-based blocks.
struct HankelPair {
  int k = 0;
  CMatrix H;
  CMatrix H_sigma;
  Index r_f = 0;
  std::vector<double> singular_values;
  CMatrix U1;   // km x r_f
  CMatrix V1;   // kn x r_f
  CMatrix U11;  // m x r_f
  CMatrix V11;  // n x r_f
  CMatrix H_hat;
};

/// Needs at least 2k coefficients (NeedMoreCoeffs).
HankelPair build_hankel(const std::vector<CMatrix>& coeffs, int k, double rel_tol = kRankTol);

struct RealizationResult {
  Realization realization;  // E = H_hat, A = U1^* H_sigma V1, B = H_hat V11^*, C = U11 H_hat
  Pencil pencil;            // [[A - zE, B], [C, 0]]
  HankelPair hankel;
  double transfer_residual = 0.0;  // relative, over the certification samples
  bool strongly_minimal = false;
};

/// Ho-Kalman realization of a strictly proper r_in. The block order grows
/// until rank(H_k) = rank(H_{k+1}), and not below the degree of the least
/// common denominator of r_in (which bounds the observability index).
/// Throws NoConvergence if no order up to the cap is accepted, or if the
/// transfer certification fails.
RealizationResult minimal_realization(const RationalMatrix& r_in, double rel_tol = kRankTol);

/// The same realization rescaled to E = I.
Realization normalize_descriptor(const Realization& r);

}  // namespace palrat
