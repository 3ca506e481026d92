// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace palrat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// A point of the extended complex plane.
struct ExtComplex {
  Complex value{};
  bool infinite = false;

  ExtComplex() = default;
  ExtComplex(Complex v) : value(v) {}  // NOLINT(google-explicit-constructor)
  ExtComplex(double v) : value(v) {}   // NOLINT(google-explicit-constructor)

  static ExtComplex infinity() {
    ExtComplex p;
    p.infinite = true;
    return p;
  }
};

inline constexpr double kRankTol = 1e-10;

struct RankDecision {
  Index rank = 0;
  std::vector<double> singular_values;  // nonincreasing
  double tolerance_used = 0.0;          // absolute threshold
};

/// Numerical rank with absolute threshold rel_tol * max(1, sigma_max).
RankDecision svd_rank(const CMatrix& m, double rel_tol = kRankTol);

/// Smallest singular value; 0 for empty matrices.
double sigma_min(const CMatrix& m);

/// Solves a * x = b. Throws SingularSolve (value = smallest singular value)
/// if a is numerically singular.
CMatrix solve(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);
bool all_finite(const CMatrix& m);

/// Jordan block sizes of the pencil z*m1 + m0 at z0, from the nullity
/// sequence of the block Toeplitz matrices built on P(z0) and m1.
struct LocalStructure {
  std::vector<int> block_sizes;  // nondecreasing
  bool ambiguous = false;        // a singular value sat within 10x of the threshold
  int algebraic_multiplicity() const;
};

LocalStructure local_structure(const CMatrix& m1, const CMatrix& m0, Complex z0,
                               double rel_tol = 1e-8);

/// True unless det(z*m1 + m0) vanishes identically (tested at random shifts).
bool is_regular(const CMatrix& m1, const CMatrix& m0);

struct EigenOptions {
  double rank_tol = 1e-8;     // multiplicity verification
  double cluster_tol = 1e-8;  // finest clustering radius (relative)
};

struct Eigenvalue {
  ExtComplex value;
  int multiplicity = 1;
};

/// Eigenvalues of the square pencil z*m1 + m0. Finite values come first,
/// sorted by real then imaginary part; infinity (if any) is last.
std::vector<Eigenvalue> generalized_eigenvalues(const CMatrix& m1, const CMatrix& m0,
                                                const EigenOptions& options = {});

/// Expands multiplicities into a flat multiset.
std::vector<ExtComplex> flatten(const std::vector<Eigenvalue>& eigs);

/// Binomial coefficient as a double (exact for the degree cap used here).
double binomial(int n, int k);

}  // namespace palrat
