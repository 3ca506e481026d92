// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "palrat/errors.hpp"
#include "palrat/rmatrix.hpp"

namespace palrat {
namespace {

using testing::e1;
using testing::e2;
using testing::kI;
using testing::mat;
using testing::scalar;

Complex at(const RationalMatrix& r, Complex z) { return eval(r, z)(0, 0); }

TEST(Eval, E1) {
  EXPECT_NEAR(std::abs(at(e1(), 1.0) - 4.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(at(e1(), kI) - 2.0), 0.0, 1e-15);
}

TEST(Eval, E2) { EXPECT_NEAR(std::abs(at(e2(), 1.0) - 5.0), 0.0, 1e-14); }

TEST(Eval, AtPoleThrows) {
  try {
    eval(e2(), 0.5 + 1e-10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvalAtPole);
  }
}

TEST(Canonical, MergesAndTrims) {
  const RationalMatrix r(1, 1, {scalar(1.0), scalar(0.0)},
                         {{0.5, {scalar(1.0)}}, {0.5 + 1e-12, {scalar(2.0), scalar(0.0)}}});
  EXPECT_EQ(r.poly_degree(), 0);
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.terms()[0].order(), 1);
  EXPECT_NEAR(std::abs(r.terms()[0].coeffs[0](0, 0) - 3.0), 0.0, 1e-15);
}

TEST(Canonical, DegreeCap) {
  std::vector<CMatrix> coeffs(kDegreeCap + 1, scalar(1.0));
  try {
    RationalMatrix(1, 1, {}, {{0.1, coeffs}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCap);
  }
}

TEST(Paraconjugate, LaurentFixedPoint) {
  const CMatrix r1 = mat({{1.0, kI}, {2.0, 0.0}});
  const RationalMatrix r = testing::laurent({r1}, mat({{1.0, 2.0 - kI}, {2.0 + kI, 3.0}}));
  EXPECT_LT(coefficient_distance(paraconjugate(r), r), 1e-15);
}

TEST(Paraconjugate, SimplePole) {
  // 1/(z - 1/2) -> -2z/(z - 2) = -2 - 4/(z - 2)
  const RationalMatrix p = paraconjugate(RationalMatrix(1, 1, {}, {{0.5, {scalar(1.0)}}}));
  const RationalMatrix expected(1, 1, {scalar(-2.0)}, {{2.0, {scalar(-4.0)}}});
  EXPECT_LT(coefficient_distance(p, expected), 1e-14);
}

TEST(Paraconjugate, Constant) {
  const CMatrix c = mat({{1.0 + kI, 2.0}, {3.0, kI}});
  const RationalMatrix p = paraconjugate(RationalMatrix::constant(c));
  EXPECT_LT(coefficient_distance(p, RationalMatrix::constant(c.adjoint())), 1e-15);
}

RationalMatrix messy() {
  const CMatrix a = testing::random_matrix(2, 3, 1), b = testing::random_matrix(2, 3, 2);
  const CMatrix c = testing::random_matrix(2, 3, 3), d = testing::random_matrix(2, 3, 4);
  return RationalMatrix(2, 3, {a, b},
                        {{Complex(0.3, 0.2), {c, d}}, {0.0, {b}}, {Complex(-1.5, 0.5), {a}}});
}

TEST(Paraconjugate, InvolutionAndPointwise) {
  const RationalMatrix r = messy();
  const RationalMatrix p = paraconjugate(r);
  EXPECT_LT(coefficient_distance(paraconjugate(p), r), 1e-12);
  for (const Complex z : testing::random_points(20, 7)) {
    const CMatrix lhs = eval(p, z);
    const CMatrix rhs = eval(r, 1.0 / std::conj(z)).adjoint();
    EXPECT_LT(max_abs(lhs - rhs), 1e-10 * std::max(1.0, max_abs(rhs)));
  }
}

TEST(Paraconjugate, HermitianOnCircle) {
  const RationalMatrix r = testing::compressed_example();
  for (const Complex z : testing::random_points(10, 8, 1.0, 1.0)) {
    const CMatrix v = eval(r, z);
    EXPECT_LT(max_abs(v - v.adjoint()), 1e-10);
  }
}

TEST(Structure, Examples) {
  EXPECT_EQ(is_structured(e1(), StructureKind::para_hermitian).kind, StructureKind::para_hermitian);
  EXPECT_EQ(is_structured(e1(), StructureKind::para_hermitian).deviation, 0.0);
  EXPECT_EQ(is_structured(e2(), StructureKind::para_hermitian).kind, StructureKind::para_hermitian);
  // z + 2 - 1/z is neither.
  const RationalMatrix bad(1, 1, {scalar(2.0), scalar(1.0)}, {{0.0, {scalar(-1.0)}}});
  EXPECT_EQ(is_structured(bad, StructureKind::para_hermitian).kind, StructureKind::none);
  EXPECT_EQ(is_structured(bad, StructureKind::para_skew_hermitian).kind, StructureKind::none);
  // i z + i/z is para-skew-Hermitian.
  const RationalMatrix skew(1, 1, {scalar(0.0), scalar(kI)}, {{0.0, {scalar(kI)}}});
  EXPECT_EQ(is_structured(skew, StructureKind::para_skew_hermitian).kind,
            StructureKind::para_skew_hermitian);
}

TEST(Structure, NotSquare) {
  try {
    is_structured(messy(), StructureKind::para_hermitian);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(Structure, HermitianAndEven) {
  // 1/(x - i) + 1/(x + i) is Hermitian on the real line.
  const RationalMatrix herm(1, 1, {}, {{kI, {scalar(1.0)}}, {-kI, {scalar(1.0)}}});
  EXPECT_EQ(is_structured(herm, StructureKind::hermitian).kind, StructureKind::hermitian);
  EXPECT_EQ(is_structured(herm, StructureKind::even).kind, StructureKind::none);
  // G(s) = s^2 + 1/(s - 1) - 1/(s + 1) satisfies G^*(-conj s) = G(s).
  const RationalMatrix even(1, 1, {scalar(0.0), scalar(0.0), scalar(1.0)},
                            {{1.0, {scalar(1.0)}}, {-1.0, {scalar(-1.0)}}});
  EXPECT_EQ(is_structured(even, StructureKind::even).kind, StructureKind::even);
  const RationalMatrix odd(1, 1, {scalar(0.0), scalar(1.0)}, {});
  EXPECT_EQ(is_structured(odd, StructureKind::odd).kind, StructureKind::odd);
  EXPECT_EQ(is_structured(odd, StructureKind::even).kind, StructureKind::none);
}

TEST(ScaleByLinear, Examples) {
  const RationalMatrix inv_z(1, 1, {}, {{0.0, {scalar(1.0)}}});
  EXPECT_LT(coefficient_distance(scale_by_linear(inv_z, 1.0),
                                 RationalMatrix(1, 1, {scalar(1.0)}, {{0.0, {scalar(1.0)}}})),
            1e-15);
  const RationalMatrix h = scale_by_linear(e1(), 1.0);
  const RationalMatrix expected(1, 1, {scalar(3.0), scalar(3.0), scalar(1.0)},
                                {{0.0, {scalar(1.0)}}});
  EXPECT_LT(coefficient_distance(h, expected), 1e-15);
  const RationalMatrix s = scale_by_linear(RationalMatrix::constant(scalar(1.0)), kI);
  EXPECT_LT(coefficient_distance(s, RationalMatrix(1, 1, {scalar(kI), scalar(-kI)}, {})), 1e-15);
}

TEST(ScaleByLinear, ZeroAlpha) {
  try {
    scale_by_linear(e1(), 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAlpha);
  }
}

TEST(ScaleByLinear, Pointwise) {
  const RationalMatrix r = messy();
  const Complex alpha(0.6, -0.8);
  const RationalMatrix s = scale_by_linear(r, alpha);
  for (const Complex z : testing::random_points(20, 9)) {
    const CMatrix expected = (alpha + std::conj(alpha) * z) * eval(r, z);
    EXPECT_LT(max_abs(eval(s, z) - expected), 1e-12 * std::max(1.0, max_abs(expected)));
  }
}

Pencil e1_pencil() {
  Pencil l;
  l.M1 = mat({{0.0, -1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 1.0, 2.0}});
  l.M0 = l.M1.adjoint();
  l.state_dim = 2;
  l.io_rows = l.io_cols = 1;
  return l;
}

TEST(Transfer, E1AtOne) { EXPECT_NEAR(std::abs(transfer(e1_pencil(), 1.0)(0, 0) - 8.0), 0.0, 1e-14); }

TEST(Transfer, E2AtOne) {
  Pencil l;
  l.M1 = mat({{0.0, -1.0, 0.0}, {0.5, 0.0, 1.0}, {1.0, 1.0, 1.0}});
  l.M0 = l.M1.adjoint();
  l.state_dim = 2;
  l.io_rows = l.io_cols = 1;
  EXPECT_NEAR(std::abs(transfer(l, 1.0)(0, 0) - 10.0), 0.0, 1e-14);
}

TEST(Transfer, StateFree) {
  const Pencil l = Pencil::plain(mat({{2.0}}), mat({{3.0}}));
  EXPECT_NEAR(std::abs(transfer(l, 2.0)(0, 0) - 7.0), 0.0, 1e-15);
}

TEST(Transfer, AtSystemPole) {
  try {
    transfer(e1_pencil(), 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvalAtSystemPole);
  }
}

TEST(Transfer, PalindromicSymmetry) {
  const Pencil l = e1_pencil();
  for (const Complex z : testing::random_points(10, 11)) {
    const CMatrix lhs = z * transfer(l, 1.0 / std::conj(z)).adjoint();
    EXPECT_LT(max_abs(lhs - transfer(l, z)), 1e-10 * std::max(1.0, max_abs(lhs)));
  }
}

TEST(PencilStructure, Examples) {
  const CMatrix x = testing::random_matrix(4, 4, 12);
  const StructureTag t = pencil_structure(Pencil::plain(x, x.adjoint()));
  EXPECT_EQ(t.kind, StructureKind::palindromic);
  EXPECT_EQ(t.deviation, 0.0);
  EXPECT_EQ(pencil_structure(e1_pencil()).kind, StructureKind::palindromic);
  const Pencil zi = Pencil::plain(CMatrix::Identity(2, 2), -CMatrix::Identity(2, 2));
  // zI - I satisfies the hermitian identity but not the even one. The
  // anti-palindromic identity also holds, and comes first in the priority order.
  EXPECT_EQ(pencil_structure(zi).kind, StructureKind::anti_palindromic);
  EXPECT_EQ(pencil_deviation(zi, StructureKind::hermitian), 0.0);
  EXPECT_GT(pencil_deviation(zi, StructureKind::even), 0.0);
}

TEST(NormalRank, RankDeficient) {
  EXPECT_EQ(normal_rank(testing::compressed_example()), 2);
  const RationalMatrix r(2, 2, {CMatrix::Ones(2, 2)}, {{0.5, {CMatrix::Ones(2, 2)}}});
  EXPECT_EQ(normal_rank(r), 1);
}

TEST(Realization, PencilTransfer) {
  Realization r{mat({{1.0}}), mat({{0.5}}), mat({{1.0}}), mat({{1.0}})};
  EXPECT_NEAR(std::abs(r.eval(1.0)(0, 0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(transfer(r.pencil(), 1.0)(0, 0) - 2.0), 0.0, 1e-15);
}

}  // namespace
}  // namespace palrat
