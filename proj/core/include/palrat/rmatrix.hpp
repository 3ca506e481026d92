// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "palrat/numerics.hpp"

namespace palrat {

inline constexpr int kDegreeCap = 64;
inline constexpr double kPoleTol = 1e-8;

/// Sum_j coeffs[j-1] / (z - lambda)^j.
struct PoleTerm {
  Complex lambda{};
  std::vector<CMatrix> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
};

/// R(z) = poly[0] + poly[1] z + ... + sum over pole terms.
///
/// The constructor canonicalizes: poles closer than kPoleTol are merged,
/// exactly-zero trailing coefficients are dropped, empty terms removed.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(Index rows, Index cols);
  RationalMatrix(Index rows, Index cols, std::vector<CMatrix> poly, std::vector<PoleTerm> terms);

  static RationalMatrix constant(const CMatrix& c);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const std::vector<CMatrix>& poly() const { return poly_; }
  const std::vector<PoleTerm>& terms() const { return terms_; }

  /// Degree of the polynomial part, -1 if it is zero.
  int poly_degree() const { return static_cast<int>(poly_.size()) - 1; }
  bool strictly_proper() const { return poly_.empty(); }
  bool is_zero() const { return poly_.empty() && terms_.empty(); }

  /// Sum of pole orders at finite points.
  int finite_pole_order() const;

  /// Largest coefficient max-norm over all blocks (0 for the zero matrix).
  double coeff_norm() const;

 private:
  void canonicalize();

  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<CMatrix> poly_;
  std::vector<PoleTerm> terms_;
};

CMatrix eval(const RationalMatrix& r, Complex z0);

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scale(const RationalMatrix& r, Complex s);

/// z -> [R(1/conj(z))]^*.
RationalMatrix paraconjugate(const RationalMatrix& r);
/// z -> [R(conj(z))]^*.
RationalMatrix conj_transpose(const RationalMatrix& r);
/// z -> R(-z).
RationalMatrix negate_variable(const RationalMatrix& r);

/// (alpha + conj(alpha) z) R(z).
RationalMatrix scale_by_linear(const RationalMatrix& r, Complex alpha);

/// Rank over the field of rational functions, estimated as the maximal
/// numerical rank over a fixed set of sample points away from the poles.
Index normal_rank(const RationalMatrix& r, double rel_tol = 1e-8);

/// Drops coefficients with max-norm <= tol * max(1, coeff_norm()).
RationalMatrix prune(const RationalMatrix& r, double tol);

/// Evaluates the maximum coefficient deviation between two representations.
double coefficient_distance(const RationalMatrix& a, const RationalMatrix& b);

enum class StructureKind {
  palindromic,
  anti_palindromic,
  hermitian,
  skew_hermitian,
  even,
  odd,
  para_hermitian,
  para_skew_hermitian,
  none,
};

std::string_view to_string(StructureKind kind);
StructureKind structure_kind_from_string(std::string_view name);

/// Para-Hermitian (R^*(1/z) = R(z)) or para-skew-Hermitian (= -R(z)).
enum class ParaKind { hermitian, skew };

std::string_view to_string(ParaKind kind);
ParaKind para_kind_from_string(std::string_view name);
/// The rational structure kind matching a ParaKind.
StructureKind rational_kind(ParaKind kind);
/// The pencil structure kind a linearization of that ParaKind carries.
StructureKind pencil_kind(ParaKind kind);

struct StructureTag {
  StructureKind kind = StructureKind::none;
  double deviation = 0.0;  // deviation of the tested identity
};

/// Tests one of hermitian, skew_hermitian, even, odd, para_hermitian,
/// para_skew_hermitian for a square R. kind == none in the result means the
/// identity failed at tol * max(1, coeff_norm()).
StructureTag is_structured(const RationalMatrix& r, StructureKind kind, double tol = 1e-9);

/// L(z) = z M1 + M0 partitioned as [[-A(z), B(z)], [C(z), D(z)]], with the
/// state block of size state_dim.
struct Pencil {
  CMatrix M1;
  CMatrix M0;
  Index state_dim = 0;
  Index io_rows = 0;
  Index io_cols = 0;

  Index rows() const { return M1.rows(); }
  Index cols() const { return M1.cols(); }

  /// A square pencil with no state partition.
  static Pencil plain(const CMatrix& m1, const CMatrix& m0);

  /// Throws ShapeError unless the stored sizes are consistent.
  void validate() const;

  CMatrix at(Complex z) const { return z * M1 + M0; }

  /// The state block as a plain pencil, sign flipped to A(z) = z A1 - A0.
  Pencil state_pencil() const;
};

/// D(z0) + C(z0) A(z0)^{-1} B(z0).
CMatrix transfer(const Pencil& l, Complex z0);

/// Deviation of a particular pencil identity, as max-abs of the residual.
double pencil_deviation(const Pencil& l, StructureKind kind);

/// First kind in the order palindromic, anti_palindromic, hermitian,
/// skew_hermitian, even, odd that holds at tol * max(1, max coefficient).
StructureTag pencil_structure(const Pencil& l, double tol = 1e-12);

inline std::vector<Eigenvalue> generalized_eigenvalues(const Pencil& l,
                                                       const EigenOptions& options = {}) {
  return generalized_eigenvalues(l.M1, l.M0, options);
}

/// R(z) = C (z E - A)^{-1} B with E invertible.
/// E, A: n x n; B: n x inputs; C: outputs x n.
struct Realization {
  CMatrix E;
  CMatrix A;
  CMatrix B;
  CMatrix C;

  Index state_dim() const { return E.rows(); }
  CMatrix eval(Complex z) const;
  /// [[A - zE, B], [C, 0]]
  Pencil pencil() const;
};

}  // namespace palrat
