// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "palrat/rmatrix.hpp"
#include "palrat/structural.hpp"

namespace palrat {

/// Random points with modulus in [0.4, 2.5], at least 1e-2 away from every
/// pole of r. Deterministic in the seed.
std::vector<Complex> sample_points(const RationalMatrix& r, int count, std::uint64_t seed);

struct TransferCheck {
  double residual = 0.0;  // max |T(z) - w(z)R(z)|_F / ((1 + |z|) |R|_samples)
  double r_scale = 0.0;   // |R|_samples
  int samples = 0;
  bool passed = false;
};

/// Compares transfer(l, z) with w(z) R(z), where w(z) = alpha + conj(alpha) z,
/// or w = 1 when weight_alpha is empty.
TransferCheck check_transfer(const Pencil& l, const RationalMatrix& r,
                             std::optional<Complex> weight_alpha, int count = 20,
                             std::uint64_t seed = 0x5eed, double tol = 1e-9);

struct CertifyOptions {
  double structure_tol = 1e-12;
  double transfer_tol = 1e-9;
  double rank_tol = 1e-8;
  double pair_tol = 1e-8;
  int samples = 20;
  std::uint64_t seed = 0x5eed;
};

struct Certificate {
  StructureTag structure;
  bool structure_ok = false;
  TransferCheck transfer;
  MinimalityReport minimality;
  std::vector<Eigenvalue> eigenvalues;
  SymmetryReport symmetry;
  bool symmetry_ok = false;

  bool ok() const { return structure_ok && transfer.passed && minimality.ok() && symmetry_ok; }
};

/// Structure, transfer sampling, strong minimality and eigenvalue symmetry.
Certificate certify(const Pencil& l, const RationalMatrix& r, ParaKind kind,
                    std::optional<Complex> weight_alpha, const CertifyOptions& options = {});

}  // namespace palrat
