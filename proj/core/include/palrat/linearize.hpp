// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "palrat/decompose.hpp"
#include "palrat/moebius.hpp"
#include "palrat/realize.hpp"
#include "palrat/rmatrix.hpp"

namespace palrat {

// Every constructor below returns a pencil with M0 = M1^* (hermitian kind)
// or M0 = -M1^* (skew kind) exactly as stored, whose transfer function is
// (1+z)R(z), or (alpha + conj(alpha) z)R(z) for the B_alpha route.

struct LinearizeOptions {
  double band = kDefaultBand;      // unit-circle classification
  double rank_tol = kRankTol;      // Hankel and compression ranks
  double structure_tol = 1e-9;     // input structure checks
  double invertible_tol = 1e-8;    // sigma_min(R_d) > tol * |R_d| selects the full one-pole route
};

/// Three-by-three block pencil built from a realization of the stable part
/// R_in(z) = C (zE - A)^{-1} B and a constant corner r0:
///   [[0, A - zE, B], [zA^* - E^*, 0, (1+z)C^*], [zB^*, (1+z)C, (1+z)r0]]
/// (signs of the second block row and of zB^* flip for the skew kind).
Pencil assemble_inout(const Realization& real, const CMatrix& r0, ParaKind kind);

/// R_out(z) = z B^* (E^* - z A^*)^{-1} C^*  (hermitian)
///          = z B^* (z A^* - E^*)^{-1} C^*  (skew)
struct AntiStablePart {
  Realization source;
  ParaKind kind = ParaKind::hermitian;

  CMatrix eval(Complex z) const;
};

/// Throws NotMinimalAtInfinity if E is singular.
AntiStablePart realization_antistable(const Realization& real_in, ParaKind kind);

/// Split route: realization of r_in normalized to E = I.
Pencil linearize_stable_split(const RationalMatrix& r, ParaKind kind,
                              const LinearizeOptions& options = {});

/// Taylor route: the Hankel factors used verbatim (E = H_hat).
Pencil linearize_taylor(const RationalMatrix& r, ParaKind kind,
                        const LinearizeOptions& options = {});

/// Block-diagonal states with shared input/output rows and summed corners.
Pencil combine_with_unit_circle_part(const Pencil& inout, const Pencil& unit_part, ParaKind kind);

/// One pole term R_lambda(z) = sum_j R_j/(z - lambda)^j with |lambda| < 1,
/// linearizing (1+z)[R_lambda(z) + r0 + R_lambda^*(1/z)].
Pencil linearize_one_pole(const PoleTerm& term, const CMatrix& r0, ParaKind kind,
                          double invertible_tol = 1e-8);

/// Block Hankel matrix with R_d on the anti-diagonal and R_1 in the corner.
CMatrix pole_hankel(const PoleTerm& term);

/// The (I, H, I) congruence of linearize_one_pole, assembled directly.
Pencil linearize_one_pole_hankel(const PoleTerm& term, const CMatrix& r0, ParaKind kind,
                                 double invertible_tol = 1e-8);

struct CompressionReport {
  Index rank = 0;
  double discarded_residual = 0.0;  // entries that must vanish after the congruence
  double spectral_gap = 0.0;        // distance between spectra of A_c and rev A_c^*
  double pole_deviation = 0.0;      // max distance of eig(A_c) from lambda
  double transfer_residual = 0.0;
  bool passed = false;
};

/// Compressed pencil for a possibly singular R_d, with state dimension
/// 2 rank(H). Throws InvalidTerm if R_d = 0, CompressionFailed if the
/// certification fails.
Pencil linearize_one_pole_compressed(const PoleTerm& term, const CMatrix& r0, ParaKind kind,
                                     double tol = kRankTol, CompressionReport* report = nullptr);

struct PoleBlock {
  Complex lambda;
  Pencil pencil;  // zero corner
};

/// Block-diagonal assembly of per-pole pencils plus the (1+z)r0 corner.
Pencil combine_poles(const std::vector<PoleBlock>& blocks, const CMatrix& r0, ParaKind kind);

/// Partial-fraction route over all stable poles.
Pencil linearize_pfd(const RationalMatrix& r, ParaKind kind, const LinearizeOptions& options = {});

/// R(z) = sum_{i=-d}^{d} R_i z^i via the one-pole routes at lambda = 0.
Pencil linearize_laurent(const RationalMatrix& r, ParaKind kind,
                         const LinearizeOptions& options = {});

/// Palindromizes a caller-supplied linearization S of substitute(R, map)
/// after certifying it. Throws BadInputLinearization.
Pencil linearize_via_moebius(const RationalMatrix& r, const Pencil& s, const MoebiusMap& map,
                             const LinearizeOptions& options = {});

/// Full pipeline for R with unit-circle poles: the stable and anti-stable
/// parts by the pfd route, the unit-circle part from a caller-supplied S
/// for substitute(r_s1 + r0, B) (alpha = 1).
Pencil linearize_with_unit_part(const RationalMatrix& r, const Pencil& s_unit, ParaKind kind,
                                const LinearizeOptions& options = {});

}  // namespace palrat
