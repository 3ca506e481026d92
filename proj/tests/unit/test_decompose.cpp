// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "palrat/decompose.hpp"
#include "palrat/errors.hpp"
#include "palrat/genesis.hpp"

namespace palrat {
namespace {

using testing::kI;
using testing::scalar;

RationalMatrix simple_pole(Complex lambda, Complex c) {
  return RationalMatrix(1, 1, {}, {{lambda, {scalar(c)}}});
}

TEST(Split, E1) {
  const StabilitySplit s = split_stability(testing::e1());
  EXPECT_LT(coefficient_distance(s.r_in, simple_pole(0.0, 1.0)), 1e-15);
  EXPECT_LT(coefficient_distance(s.r_out, RationalMatrix(1, 1, {scalar(0.0), scalar(1.0)}, {})),
            1e-15);
  EXPECT_TRUE(s.r_s1.is_zero());
  EXPECT_NEAR(std::abs(s.r0(0, 0) - 2.0), 0.0, 1e-15);
}

TEST(Split, E2) {
  const StabilitySplit s = split_stability(testing::e2());
  EXPECT_LT(coefficient_distance(s.r_in, simple_pole(0.5, 1.0)), 1e-15);
  // -2z/(z - 2) = -2 - 4/(z - 2)
  EXPECT_LT(coefficient_distance(s.r_out, RationalMatrix(1, 1, {scalar(-2.0)}, {{2.0, {scalar(-4.0)}}})),
            1e-14);
  EXPECT_TRUE(s.r_s1.is_zero());
  EXPECT_NEAR(std::abs(s.r0(0, 0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(eval(s.r_out, 0.0)(0, 0)), 0.0, 1e-14);
}

TEST(Split, UnitPole) {
  const StabilitySplit s = split_stability(simple_pole(1.0, 1.0));
  EXPECT_TRUE(s.r_in.is_zero());
  EXPECT_TRUE(s.r_out.is_zero());
  EXPECT_LT(coefficient_distance(s.r_s1, simple_pole(1.0, 1.0)), 1e-15);
  EXPECT_EQ(max_abs(s.r0), 0.0);
}

TEST(Split, BandClassification) {
  const StabilitySplit s = split_stability(simple_pole(1.0 - 1e-10, 1.0), 1e-8);
  EXPECT_FALSE(s.r_s1.is_zero());
  const StabilitySplit t = split_stability(simple_pole(1.0 - 1e-6, 1.0), 1e-8);
  EXPECT_FALSE(t.r_in.is_zero());
}

TEST(Split, SumAndProjection) {
  const RationalMatrix r(2, 2, {testing::random_matrix(2, 2, 1), testing::random_matrix(2, 2, 2)},
                         {{Complex(0.2, 0.1), {testing::random_matrix(2, 2, 3), testing::random_matrix(2, 2, 4)}},
                          {Complex(0.0, 1.0), {testing::random_matrix(2, 2, 5)}},
                          {Complex(-3.0, 1.0), {testing::random_matrix(2, 2, 6), testing::random_matrix(2, 2, 7)}}});
  const StabilitySplit s = split_stability(r);
  for (const Complex z : testing::random_points(10, 3)) {
    const CMatrix v = eval(r, z);
    EXPECT_LT(max_abs(eval(recombine(s), z) - v), 1e-10 * std::max(1.0, max_abs(v)));
  }
  const StabilitySplit a = split_stability(s.r_in);
  EXPECT_LT(coefficient_distance(a.r_in, s.r_in), 1e-12);
  EXPECT_TRUE(a.r_out.is_zero() && a.r_s1.is_zero());
  const StabilitySplit b = split_stability(s.r_out);
  EXPECT_LT(coefficient_distance(b.r_out, s.r_out), 1e-12);
  EXPECT_LT(max_abs(b.r0), 1e-12);
  const StabilitySplit c = split_stability(s.r_s1);
  EXPECT_LT(coefficient_distance(c.r_s1, s.r_s1), 1e-12);
  const StabilitySplit d = split_stability(RationalMatrix::constant(s.r0));
  EXPECT_LT(max_abs(d.r0 - s.r0), 1e-15);
  EXPECT_TRUE(d.r_in.is_zero() && d.r_out.is_zero() && d.r_s1.is_zero());
}

TEST(Split, OrderIndependent) {
  const PoleTerm p{0.5, {scalar(1.0)}}, q{2.0, {scalar(-4.0)}};
  const StabilitySplit a = split_stability(RationalMatrix(1, 1, {scalar(-1.0)}, {p, q}));
  const StabilitySplit b = split_stability(RationalMatrix(1, 1, {scalar(-1.0)}, {q, p}));
  EXPECT_LT(coefficient_distance(a.r_in, b.r_in), 1e-12);
  EXPECT_LT(coefficient_distance(a.r_out, b.r_out), 1e-12);
  EXPECT_LT(max_abs(a.r0 - b.r0), 1e-12);
}

TEST(SplitSymmetry, Examples) {
  EXPECT_TRUE(check_split_symmetry(split_stability(testing::e1()), ParaKind::hermitian).passed);
  const SplitSymmetryReport e2 = check_split_symmetry(split_stability(testing::e2()), ParaKind::hermitian);
  EXPECT_TRUE(e2.passed);
  EXPECT_LT(e2.inout_deviation, 1e-14);
  EXPECT_FALSE(check_split_symmetry(split_stability(simple_pole(0.0, 1.0)), ParaKind::hermitian).passed);
}

TEST(SplitSymmetry, GeneratorAndPerturbation) {
  for (ParaKind kind : {ParaKind::hermitian, ParaKind::skew}) {
    const auto inst = random_para_structured(4, 2, Complex(0.3, -0.4), kind, 5);
    EXPECT_TRUE(check_split_symmetry(split_stability(inst.r), kind).passed);
    std::vector<PoleTerm> terms = inst.r.terms();
    terms[0].coeffs[0](0, 0) += 1e-3;
    const RationalMatrix bad(2, 2, inst.r.poly(), terms);
    EXPECT_FALSE(check_split_symmetry(split_stability(bad), kind).passed);
  }
}

TEST(PolarSections, E1) {
  const LaurentData d = polar_sections(testing::e1());
  EXPECT_EQ(d.degree, 1);
  EXPECT_NEAR(std::abs(d.positive[0](0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d.negative[0](0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d.constant(0, 0) - 2.0), 0.0, 1e-15);
}

TEST(PolarSections, ImaginaryCoefficients) {
  // i z - i/z
  const RationalMatrix r(1, 1, {scalar(0.0), scalar(kI)}, {{0.0, {scalar(-kI)}}});
  const LaurentData d = polar_sections(r);
  EXPECT_NEAR(std::abs(d.negative[0](0, 0) - std::conj(d.positive[0](0, 0))), 0.0, 1e-15);
  EXPECT_EQ(max_abs(d.constant), 0.0);
}

TEST(PolarSections, Errors) {
  const RationalMatrix mismatch(1, 1, {scalar(0.0), scalar(0.0), scalar(1.0)}, {{0.0, {scalar(1.0)}}});
  try {
    polar_sections(mismatch);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SymmetryViolation);
  }
  try {
    polar_sections(testing::e2());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLaurentForm);
  }
}

}  // namespace
}  // namespace palrat
