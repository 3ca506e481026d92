// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/decompose.hpp"

#include <cmath>

#include "palrat/errors.hpp"

namespace palrat {

StabilitySplit split_stability(const RationalMatrix& r, double band) {
  if (!(band >= 0)) throw Error(ErrorCode::InvalidInput, "band must be nonnegative");
  const Index m = r.rows(), n = r.cols();
  std::vector<PoleTerm> inner, unit, outer;
  for (const auto& t : r.terms()) {
    const double gap = std::abs(t.lambda) - 1.0;
    if (std::abs(gap) <= band) {
      unit.push_back(t);
    } else if (gap < 0) {
      inner.push_back(t);
    } else {
      outer.push_back(t);
    }
  }
  StabilitySplit s;
  s.r_in = RationalMatrix(m, n, {}, std::move(inner));
  s.r_s1 = RationalMatrix(m, n, {}, std::move(unit));
  // r0 = S(0) with S = outer terms + polynomial part.
  s.r0 = r.poly().empty() ? CMatrix::Zero(m, n) : CMatrix(r.poly()[0]);
  CMatrix outer_at_zero = CMatrix::Zero(m, n);
  for (const auto& t : outer) {
    const Complex w = -1.0 / t.lambda;
    Complex wj = w;
    for (const auto& c : t.coeffs) {
      outer_at_zero += wj * c;
      wj *= w;
    }
  }
  s.r0 += outer_at_zero;
  std::vector<CMatrix> poly = r.poly();
  if (poly.empty()) poly.push_back(CMatrix::Zero(m, n));
  poly[0] = -outer_at_zero;
  s.r_out = RationalMatrix(m, n, std::move(poly), std::move(outer));
  return s;
}

RationalMatrix recombine(const StabilitySplit& split) {
  return add(add(split.r_in, split.r_out), add(split.r_s1, RationalMatrix::constant(split.r0)));
}

SplitSymmetryReport check_split_symmetry(const StabilitySplit& split, ParaKind kind,
                                         double tol) {
  SplitSymmetryReport rep;
  const double sign = kind == ParaKind::hermitian ? -1.0 : 1.0;
  rep.inout_deviation = add(paraconjugate(split.r_in), scale(split.r_out, sign)).coeff_norm();
  const RationalMatrix unit_part = add(split.r_s1, RationalMatrix::constant(split.r0));
  rep.unit_part_deviation = is_structured(unit_part, rational_kind(kind), tol).deviation;
  rep.scale = std::max({1.0, split.r_in.coeff_norm(), split.r_out.coeff_norm(),
                        unit_part.coeff_norm()});
  rep.passed = rep.inout_deviation <= tol * rep.scale && rep.unit_part_deviation <= tol * rep.scale;
  return rep;
}

LaurentData polar_sections(const RationalMatrix& r, ParaKind kind, double tol) {
  if (!r.square()) throw Error(ErrorCode::NotSquare, "polar sections need a square matrix");
  const Index m = r.rows();
  LaurentData out;
  int neg_order = 0;
  for (const auto& t : r.terms()) {
    if (std::abs(t.lambda) > 1e-12) {
      throw Error(ErrorCode::NotLaurentForm, "pole away from the origin", std::abs(t.lambda));
    }
    out.negative = t.coeffs;
    neg_order = t.order();
  }
  const int pos_order = std::max(0, r.poly_degree());
  if (neg_order != pos_order) {
    throw Error(ErrorCode::SymmetryViolation, "polar sections at 0 and infinity differ in degree");
  }
  out.degree = neg_order;
  out.constant = r.poly().empty() ? CMatrix::Zero(m, m) : CMatrix(r.poly()[0]);
  for (int i = 1; i <= out.degree; ++i) out.positive.push_back(r.poly()[i]);
  const double sign = kind == ParaKind::hermitian ? 1.0 : -1.0;
  const double thr = tol * std::max(1.0, r.coeff_norm());
  double dev = max_abs(out.constant - sign * out.constant.adjoint());
  for (int i = 0; i < out.degree; ++i) {
    dev = std::max(dev, max_abs(out.negative[i] - sign * out.positive[i].adjoint()));
  }
  if (dev > thr) {
    throw Error(ErrorCode::SymmetryViolation, "R_{-i} does not mirror R_i", dev);
  }
  return out;
}

}  // namespace palrat
