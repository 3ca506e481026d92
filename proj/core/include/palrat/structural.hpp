// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "palrat/rmatrix.hpp"

namespace palrat {

/// Invariant orders at a point: negative entries are pole orders, positive
/// entries zero orders. Sorted nondecreasing.
struct StructuralIndices {
  ExtComplex point;
  std::vector<int> orders;
};

/// Jordan block sizes of the square regular pencil at a finite point or at
/// infinity (blocks of the reversal z M0 + M1 at 0). Throws SingularPencil or
/// RankAmbiguous.
StructuralIndices partial_multiplicities(const Pencil& p, ExtComplex point, double tol = 1e-8);

enum class OrderPoint { minus_one, infinity };
enum class OrderTarget { of_h, of_r };  // (1+z)R(z) or R(z)

/// Invariant orders at -1 or infinity from the partial multiplicities of the
/// state block (at -1, resp. of its reversal at 0) and of the whole pencil.
/// Pure integer arithmetic; throws InconsistentInput if s + u > normal_rank.
StructuralIndices recover_invariant_orders(const StructuralIndices& a_mults,
                                           const StructuralIndices& l_mults, int normal_rank,
                                           OrderPoint point, OrderTarget target);

/// Partial multiplicities of the state block and of the pencil at the point,
/// followed by recover_invariant_orders.
StructuralIndices invariant_orders(const Pencil& l, int normal_rank, OrderPoint point,
                                   OrderTarget target, double tol = 1e-8);

/// Normal rank of the transfer function of l, from random samples.
Index transfer_normal_rank(const Pencil& l, double rel_tol = 1e-8);

struct MinimalityReport {
  bool finite_ok = true;
  bool infinity_ok = true;
  ExtComplex worst_point;  // finite point with the largest rank gap
  Index rank_gap = 0;
  Index infinity_gap = 0;
  std::vector<ExtComplex> tested_points;

  bool ok() const { return finite_ok && infinity_ok; }
};

/// Full-rank tests on [-A(z0) B(z0)] and [-A(z0); C(z0)] at every finite
/// eigenvalue of the state block, and on the leading coefficients at infinity.
MinimalityReport check_strong_minimality(const Pencil& l, double tol = 1e-8);

struct SymmetryPair {
  ExtComplex lambda;
  ExtComplex partner;
  double gap = 0.0;  // |lambda * conj(partner) - 1|, 0 for the (0, inf) pair
};

struct SymmetryReport {
  std::vector<SymmetryPair> pairs;
  std::vector<ExtComplex> unimodular;
  std::vector<ExtComplex> unpaired;
};

/// Greedy minimal-gap matching of lambda against 1/conj(lambda). 0 pairs
/// with infinity; eigenvalues within tol of the unit circle are self-paired.
SymmetryReport symmetry_report(const std::vector<ExtComplex>& eigs, double tol = 1e-8);

}  // namespace palrat
