// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "palrat/rmatrix.hpp"

namespace palrat {

inline constexpr double kDefaultBand = 1e-8;

/// R = r_in + r_out + r_s1 + r0, with r_in strictly proper and stable,
/// r_s1 strictly proper with poles on the unit circle, and r_out holding the
/// remaining poles (including infinity) normalized so that r_out(0) = 0.
struct StabilitySplit {
  RationalMatrix r_in;
  RationalMatrix r_out;
  RationalMatrix r_s1;
  CMatrix r0;
};

/// Poles with ||lambda| - 1| <= band are classified as unit-circle poles.
StabilitySplit split_stability(const RationalMatrix& r, double band = kDefaultBand);

/// Sum of the four parts.
RationalMatrix recombine(const StabilitySplit& split);

struct SplitSymmetryReport {
  double inout_deviation = 0.0;      // paraconjugate(r_in) -+ r_out
  double unit_part_deviation = 0.0;  // structure of r_s1 + r0
  double scale = 1.0;
  bool passed = false;
};

SplitSymmetryReport check_split_symmetry(const StabilitySplit& split, ParaKind kind,
                                         double tol = 1e-9);

/// Laurent data of R(z) = sum_{i=-d}^{d} R_i z^i.
struct LaurentData {
  int degree = 0;
  std::vector<CMatrix> positive;  // R_1 ... R_d
  std::vector<CMatrix> negative;  // R_{-1} ... R_{-d}
  CMatrix constant;               // R_0
};

/// Throws NotLaurentForm if R has a pole away from 0 and SymmetryViolation
/// if the two sections do not mirror each other.
LaurentData polar_sections(const RationalMatrix& r, ParaKind kind = ParaKind::hermitian,
                           double tol = 1e-10);

}  // namespace palrat
