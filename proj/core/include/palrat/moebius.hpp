// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "palrat/rmatrix.hpp"

namespace palrat {

enum class MapKind { cayley_T, bilinear_B, general_Balpha };

/// z = (i - x)/(i + x)         (cayley_T)
/// z = (1 + s)/(1 - s)         (bilinear_B)
/// z = alpha (1 + s) / (conj(alpha)(1 - s))   (general_Balpha, |alpha| = 1)
class MoebiusMap {
 public:
  static MoebiusMap cayley();
  static MoebiusMap bilinear();
  /// alpha is normalized to unit modulus. Throws InvalidAlpha for 0.
  static MoebiusMap general(Complex alpha);

  MapKind kind() const { return kind_; }
  Complex alpha() const { return alpha_; }

  /// (a, b, c, d) with z = (a t + b)/(c t + d).
  std::array<Complex, 4> forward_coefficients() const;
  std::array<Complex, 4> inverse_coefficients() const;

  /// The scalar weight w(z) with L(z) = w(z) S(map^{-1}(z)):
  /// 1 + z for T and B, alpha + conj(alpha) z for B_alpha.
  Complex weight(Complex z) const;
  /// The alpha with w(z) = alpha + conj(alpha) z.
  Complex weight_alpha() const;

 private:
  MoebiusMap(MapKind kind, Complex alpha) : kind_(kind), alpha_(alpha) {}
  MapKind kind_;
  Complex alpha_;
};

std::string_view to_string(MapKind kind);

enum class Direction { forward, inverse };

ExtComplex map_point(const MoebiusMap& map, ExtComplex t, Direction direction);

/// G(t) = R(phi(t)), phi the forward map (or its inverse).
RationalMatrix substitute(const RationalMatrix& r, const MoebiusMap& map, Direction direction);

/// Composition with an arbitrary Moebius map z = (a t + b)/(c t + d).
RationalMatrix compose(const RationalMatrix& r, const std::array<Complex, 4>& abcd);

/// Turns a Hermitian (T) or *-even (B, B_alpha) pencil S into a
/// *-palindromic one; skew-Hermitian / *-odd inputs give *-anti-palindromic.
/// The output satisfies M0 = +-M1^* exactly.
Pencil palindromize_pencil(const Pencil& s, const MoebiusMap& map, double tol = 1e-10);

/// Inverse of palindromize_pencil: the pencil S with palindromize_pencil(S) = L.
Pencil pencil_preimage(const Pencil& l, const MoebiusMap& map);

struct AlphaMargins {
  double pole_distance = 1e-3;
  double zero_indicator = 1e-6;
};

/// A unimodular alpha such that -alpha^2 is neither a pole nor a zero of R.
/// alpha = 1 is tried first, the remaining candidates are random phases.
Complex pick_alpha(const RationalMatrix& r, int trials, std::uint64_t seed,
                   const AlphaMargins& margins = {});

}  // namespace palrat
