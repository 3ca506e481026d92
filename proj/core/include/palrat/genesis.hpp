// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "palrat/rmatrix.hpp"

namespace palrat {

/// R(z) = [(zD + sD^*) + (zB^* + sC^*)(zA + sA^*)^{-1}(zC + sB)] / (alpha + conj(alpha) z)
/// with s = +1 (hermitian) or -1 (skew), together with the pencil
/// M1 = [[-A, C], [B^*, D]], M0 = s M1^*, whose transfer function is
/// (alpha + conj(alpha) z) R(z).
struct GeneratedInstance {
  RationalMatrix r;
  Pencil pencil;
  Complex alpha;  // unit modulus
  ParaKind kind = ParaKind::hermitian;
};

/// A is n x n and invertible, B and C are n x m, D is m x m.
/// Throws InvalidAlpha, ShapeError, DegenerateDraw (A singular or
/// A^{-1}A^* not diagonalizable to working accuracy).
GeneratedInstance para_structured_from(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                                       const CMatrix& d, Complex alpha, ParaKind kind);

struct GeneratorOptions {
  // Place the poles in reciprocal pairs off the unit circle and choose D so
  // that R has no pole at -alpha/conj(alpha). Needs even n.
  bool off_circle = false;
  int max_draws = 100;
};

/// Standard complex Gaussian draws, resampled until the poles are simple,
/// separated by 1e-3 and at least 1e-3 from -alpha/conj(alpha).
/// Throws DegenerateDraw when the budget runs out.
GeneratedInstance random_para_structured(Index n, Index m, Complex alpha, ParaKind kind,
                                         std::uint64_t seed, const GeneratorOptions& options = {});

}  // namespace palrat
