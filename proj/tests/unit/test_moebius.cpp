// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "palrat/errors.hpp"
#include "palrat/genesis.hpp"
#include "palrat/moebius.hpp"

namespace palrat {
namespace {

using testing::kI;
using testing::mat;
using testing::scalar;

Complex fwd(const MoebiusMap& m, Complex t) { return map_point(m, t, Direction::forward).value; }

TEST(MapPoint, CayleyExamples) {
  const MoebiusMap t = MoebiusMap::cayley();
  EXPECT_NEAR(std::abs(fwd(t, 0.0) - 1.0), 0.0, 1e-15);
  const ExtComplex at_inf = map_point(t, ExtComplex::infinity(), Direction::forward);
  EXPECT_FALSE(at_inf.infinite);
  EXPECT_NEAR(std::abs(at_inf.value + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fwd(t, 1.0) - kI), 0.0, 1e-15);
  EXPECT_TRUE(map_point(t, -1.0, Direction::inverse).infinite);
}

TEST(MapPoint, BilinearInverseOfI) {
  const ExtComplex s = map_point(MoebiusMap::bilinear(), kI, Direction::inverse);
  EXPECT_NEAR(std::abs(s.value - kI), 0.0, 1e-15);
}

TEST(MapPoint, RoundTrip) {
  for (const MoebiusMap& m :
       {MoebiusMap::cayley(), MoebiusMap::bilinear(), MoebiusMap::general(Complex(2.0, -1.0))}) {
    for (const Complex t : testing::random_points(100, 3)) {
      const ExtComplex z = map_point(m, t, Direction::forward);
      const ExtComplex back = map_point(m, z, Direction::inverse);
      ASSERT_FALSE(back.infinite);
      EXPECT_LT(std::abs(back.value - t), 1e-12 * std::max(1.0, std::abs(t)));
    }
  }
}

TEST(MapPoint, UnitCircleImage) {
  // T sends the real line to the unit circle, B and B_alpha send the imaginary axis there.
  for (double x : {-3.0, -0.5, 0.1, 2.0}) {
    EXPECT_NEAR(std::abs(fwd(MoebiusMap::cayley(), x)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(fwd(MoebiusMap::bilinear(), Complex(0.0, x))), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(fwd(MoebiusMap::general(Complex(1.0, 3.0)), Complex(0.0, x))), 1.0, 1e-14);
  }
}

TEST(General, Normalizes) {
  EXPECT_NEAR(std::abs(MoebiusMap::general(Complex(3.0, 4.0)).alpha() - Complex(0.6, 0.8)), 0.0,
              1e-15);
  try {
    MoebiusMap::general(0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAlpha);
  }
}

TEST(Substitute, E1UnderCayley) {
  const RationalMatrix g = substitute(testing::e1(), MoebiusMap::cayley(), Direction::forward);
  EXPECT_NEAR(std::abs(eval(g, 0.0)(0, 0) - 4.0), 0.0, 1e-13);
  EXPECT_EQ(is_structured(g, StructureKind::hermitian).kind, StructureKind::hermitian);
  for (const Complex x : testing::random_points(10, 4)) {
    const Complex z = (kI - x) / (kI + x);
    EXPECT_LT(std::abs(eval(g, x)(0, 0) - (z + 2.0 + 1.0 / z)), 1e-12 * (1.0 + std::abs(z) + 1.0 / std::abs(z)));
  }
}

TEST(Substitute, Constant) {
  const CMatrix c = mat({{1.0, kI}, {-kI, 2.0}});
  const RationalMatrix g =
      substitute(RationalMatrix::constant(c), MoebiusMap::bilinear(), Direction::forward);
  EXPECT_LT(coefficient_distance(g, RationalMatrix::constant(c)), 1e-15);
}

TEST(Substitute, InverseZUnderBilinear) {
  // 1/z at z = (1+s)/(1-s) is (1-s)/(1+s) = -1 + 2/(s+1).
  const RationalMatrix g = substitute(RationalMatrix(1, 1, {}, {{0.0, {scalar(1.0)}}}),
                                      MoebiusMap::bilinear(), Direction::forward);
  const RationalMatrix expected(1, 1, {scalar(-1.0)}, {{-1.0, {scalar(2.0)}}});
  EXPECT_LT(coefficient_distance(g, expected), 1e-14);
}

TEST(Substitute, PreservesPoleOrders) {
  const RationalMatrix r(1, 1, {scalar(1.0), scalar(2.0)},
                         {{0.5, {scalar(1.0), scalar(0.0), scalar(3.0)}}});
  const RationalMatrix g = substitute(r, MoebiusMap::cayley(), Direction::forward);
  const ExtComplex p = map_point(MoebiusMap::cayley(), 0.5, Direction::inverse);
  bool found = false;
  for (const auto& t : g.terms()) {
    if (std::abs(t.lambda - p.value) < 1e-12) {
      EXPECT_EQ(t.order(), 3);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  for (const Complex x : testing::random_points(20, 5)) {
    const Complex z = fwd(MoebiusMap::cayley(), x);
    EXPECT_LT(std::abs(eval(g, x)(0, 0) - eval(r, z)(0, 0)), 1e-9 * (1.0 + std::abs(eval(r, z)(0, 0))));
  }
}

TEST(Substitute, RoundTrip) {
  const auto inst = random_para_structured(3, 2, 1.0, ParaKind::hermitian, 17);
  for (const MoebiusMap& m : {MoebiusMap::cayley(), MoebiusMap::general(Complex(0.3, 0.7))}) {
    const RationalMatrix back =
        substitute(substitute(inst.r, m, Direction::forward), m, Direction::inverse);
    for (const Complex z : testing::random_points(20, 6)) {
      const CMatrix v = eval(inst.r, z);
      EXPECT_LT(max_abs(eval(back, z) - v), 1e-10 * std::max(1.0, max_abs(v)));
    }
  }
}

TEST(Palindromize, CayleyOneTerm) {
  // S(x) = x I: L(z) = i(1 - z) I
  const Pencil s = Pencil::plain(CMatrix::Identity(2, 2), CMatrix::Zero(2, 2));
  const Pencil l = palindromize_pencil(s, MoebiusMap::cayley());
  EXPECT_LT(max_abs(l.M1 + kI * CMatrix::Identity(2, 2)), 1e-15);
  EXPECT_LT(max_abs(l.M0 - kI * CMatrix::Identity(2, 2)), 1e-15);
  EXPECT_EQ(pencil_deviation(l, StructureKind::palindromic), 0.0);
}

TEST(Palindromize, ConstantPart) {
  const Pencil s = Pencil::plain(CMatrix::Zero(2, 2), CMatrix::Identity(2, 2));
  const Pencil l = palindromize_pencil(s, MoebiusMap::cayley());
  EXPECT_LT(max_abs(l.M1 - CMatrix::Identity(2, 2)), 1e-15);
  EXPECT_LT(max_abs(l.M0 - CMatrix::Identity(2, 2)), 1e-15);
}

TEST(Palindromize, EvenPencilAlphaOne) {
  const CMatrix s0 = CMatrix::Identity(2, 2), s1 = mat({{0.0, 1.0}, {-1.0, 0.0}});
  const Pencil l = palindromize_pencil(Pencil::plain(s1, s0), MoebiusMap::general(1.0));
  EXPECT_LT(max_abs(l.M1 - (s0 + s1)), 1e-15);
  EXPECT_LT(max_abs(l.M0 - (s0 - s1)), 1e-15);
  EXPECT_EQ(pencil_deviation(l, StructureKind::palindromic), 0.0);
}

TEST(Palindromize, WrongStructure) {
  const CMatrix x = testing::random_matrix(2, 2, 8);
  try {
    palindromize_pencil(Pencil::plain(x, x), MoebiusMap::cayley());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StructureMismatch);
  }
}

TEST(Palindromize, SkewInputsGiveAntiPalindromic) {
  const CMatrix x = testing::random_matrix(3, 3, 9), y = testing::random_matrix(3, 3, 10);
  // Skew-Hermitian S1 and S0 for T.
  const Pencil s = Pencil::plain(x - x.adjoint(), y - y.adjoint());
  const Pencil l = palindromize_pencil(s, MoebiusMap::cayley());
  EXPECT_EQ(pencil_deviation(l, StructureKind::anti_palindromic), 0.0);
}

TEST(Palindromize, PointwiseTransfer) {
  // Hermitian S with one state: S(x) = [[-(x a1 + a0), b], [b^*, d]].
  const CMatrix x = testing::random_matrix(4, 4, 13), y = testing::random_matrix(4, 4, 14);
  Pencil s;
  s.M1 = x + x.adjoint();
  s.M0 = y + y.adjoint();
  s.state_dim = 2;
  s.io_rows = s.io_cols = 2;
  for (const MoebiusMap& m : {MoebiusMap::cayley()}) {
    const Pencil l = palindromize_pencil(s, m);
    EXPECT_EQ(pencil_deviation(l, StructureKind::palindromic), 0.0);
    for (const Complex z : testing::random_points(20, 15)) {
      const Complex t = map_point(m, z, Direction::inverse).value;
      const CMatrix expected = (1.0 + z) * transfer(s, t);
      EXPECT_LT(max_abs(transfer(l, z) - expected), 1e-10 * std::max(1.0, max_abs(expected)));
    }
  }
  // *-even S for B_alpha.
  Pencil e = s;
  e.M1 = x - x.adjoint();
  const MoebiusMap ba = MoebiusMap::general(Complex(0.2, -0.9));
  const Pencil l = palindromize_pencil(e, ba);
  EXPECT_EQ(pencil_deviation(l, StructureKind::palindromic), 0.0);
  for (const Complex z : testing::random_points(20, 16)) {
    const Complex t = map_point(ba, z, Direction::inverse).value;
    const CMatrix expected = ba.weight(z) * transfer(e, t);
    EXPECT_LT(max_abs(transfer(l, z) - expected), 1e-10 * std::max(1.0, max_abs(expected)));
  }
  const Pencil back = pencil_preimage(l, ba);
  EXPECT_LT(max_abs(back.M1 - e.M1) + max_abs(back.M0 - e.M0), 1e-14);
}

TEST(PickAlpha, Examples) {
  EXPECT_EQ(pick_alpha(RationalMatrix::constant(scalar(1.0)), 10, 1), Complex(1.0));
  // z + 2 + 1/z vanishes at -1.
  const Complex a = pick_alpha(testing::e1(), 10, 1);
  EXPECT_NE(a, Complex(1.0));
  EXPECT_NEAR(std::abs(a), 1.0, 1e-14);
  const Complex p = -a * a;
  EXPECT_GT(std::abs(p + 2.0 + 1.0 / p), 1e-6);
  // Pole at -1.
  const RationalMatrix pole(1, 1, {}, {{-1.0, {scalar(1.0)}}});
  EXPECT_NE(pick_alpha(pole, 10, 1), Complex(1.0));
  EXPECT_EQ(pick_alpha(testing::e2(), 10, 1), Complex(1.0));
}

TEST(PickAlpha, Exhausted) {
  try {
    pick_alpha(testing::e1(), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoAlphaFound);
  }
}

TEST(Equivalences, HermitianAndEven) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (ParaKind kind : {ParaKind::hermitian, ParaKind::skew}) {
      const auto inst = random_para_structured(2, 2, Complex(0.4, 0.3), kind, seed);
      const bool herm = kind == ParaKind::hermitian;
      const RationalMatrix gt = substitute(inst.r, MoebiusMap::cayley(), Direction::forward);
      const RationalMatrix gb = substitute(inst.r, MoebiusMap::bilinear(), Direction::forward);
      EXPECT_NE(is_structured(gt, herm ? StructureKind::hermitian : StructureKind::skew_hermitian).kind,
                StructureKind::none);
      EXPECT_NE(is_structured(gb, herm ? StructureKind::even : StructureKind::odd).kind,
                StructureKind::none);
      const RationalMatrix ga =
          substitute(inst.r, MoebiusMap::general(Complex(-0.6, 0.2)), Direction::forward);
      EXPECT_NE(is_structured(ga, herm ? StructureKind::even : StructureKind::odd).kind,
                StructureKind::none);
    }
  }
  // A perturbed copy loses both properties.
  const auto inst = random_para_structured(2, 2, 1.0, ParaKind::hermitian, 3);
  const RationalMatrix bad = add(inst.r, RationalMatrix(2, 2, {}, {{0.25, {CMatrix::Identity(2, 2)}}}));
  EXPECT_EQ(is_structured(substitute(bad, MoebiusMap::cayley(), Direction::forward),
                          StructureKind::hermitian).kind,
            StructureKind::none);
  EXPECT_EQ(is_structured(substitute(bad, MoebiusMap::bilinear(), Direction::forward),
                          StructureKind::even).kind,
            StructureKind::none);
}

}  // namespace
}  // namespace palrat
