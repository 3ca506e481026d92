// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/moebius.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "palrat/errors.hpp"

namespace palrat {
namespace {

constexpr Complex kI{0.0, 1.0};

void accumulate(std::vector<CMatrix>& dst, std::size_t index, const CMatrix& value) {
  if (dst.size() <= index) dst.resize(index + 1, CMatrix::Zero(value.rows(), value.cols()));
  dst[index] += value;
}

void add_term(std::vector<PoleTerm>& terms, Complex lambda, int order, const CMatrix& c) {
  if (order > kDegreeCap) throw Error(ErrorCode::DegreeCap, "substitution exceeds the degree cap");
  PoleTerm t;
  t.lambda = lambda;
  t.coeffs.assign(order, CMatrix::Zero(c.rows(), c.cols()));
  t.coeffs[order - 1] = c;
  terms.push_back(std::move(t));
}

}  // namespace

MoebiusMap MoebiusMap::cayley() { return MoebiusMap(MapKind::cayley_T, 1.0); }
MoebiusMap MoebiusMap::bilinear() { return MoebiusMap(MapKind::bilinear_B, 1.0); }

MoebiusMap MoebiusMap::general(Complex alpha) {
  if (!(std::abs(alpha) > 0) || !std::isfinite(std::abs(alpha))) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must be finite and nonzero");
  }
  return MoebiusMap(MapKind::general_Balpha, alpha / std::abs(alpha));
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::cayley_T: return "T";
    case MapKind::bilinear_B: return "B";
    case MapKind::general_Balpha: return "B_alpha";
  }
  return "?";
}

std::array<Complex, 4> MoebiusMap::forward_coefficients() const {
  switch (kind_) {
    case MapKind::cayley_T: return {-1.0, kI, 1.0, kI};
    case MapKind::bilinear_B: return {1.0, 1.0, -1.0, 1.0};
    case MapKind::general_Balpha: return {alpha_, alpha_, -std::conj(alpha_), std::conj(alpha_)};
  }
  return {};
}

std::array<Complex, 4> MoebiusMap::inverse_coefficients() const {
  switch (kind_) {
    case MapKind::cayley_T: return {-kI, kI, 1.0, 1.0};
    case MapKind::bilinear_B: return {1.0, -1.0, 1.0, 1.0};
    case MapKind::general_Balpha: return {std::conj(alpha_), -alpha_, std::conj(alpha_), alpha_};
  }
  return {};
}

Complex MoebiusMap::weight_alpha() const {
  return kind_ == MapKind::general_Balpha ? alpha_ : Complex(1.0);
}

Complex MoebiusMap::weight(Complex z) const {
  Complex a = weight_alpha();
  return a + std::conj(a) * z;
}

ExtComplex map_point(const MoebiusMap& map, ExtComplex t, Direction direction) {
  auto [a, b, c, d] =
      direction == Direction::forward ? map.forward_coefficients() : map.inverse_coefficients();
  if (t.infinite) {
    if (c == 0.0) return ExtComplex::infinity();
    return ExtComplex(a / c);
  }
  Complex den = c * t.value + d;
  if (den == 0.0) return ExtComplex::infinity();
  return ExtComplex((a * t.value + b) / den);
}

RationalMatrix compose(const RationalMatrix& r, const std::array<Complex, 4>& abcd) {
  auto [a, b, c, d] = abcd;
  if (a * d - b * c == 0.0) throw Error(ErrorCode::InvalidInput, "degenerate Moebius map");
  const Index m = r.rows(), n = r.cols();
  std::vector<CMatrix> poly;
  std::vector<PoleTerm> terms;

  if (c == 0.0) {
    // z = s t + beta
    const Complex s = a / d, beta = b / d;
    for (std::size_t k = 0; k < r.poly().size(); ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        Complex f = binomial(static_cast<int>(k), static_cast<int>(i)) * std::pow(s, static_cast<int>(i)) *
                    std::pow(beta, static_cast<int>(k - i));
        accumulate(poly, i, f * r.poly()[k]);
      }
    }
    for (const auto& t : r.terms()) {
      const Complex q = (t.lambda - beta) / s;
      for (int j = 1; j <= t.order(); ++j) {
        add_term(terms, q, j, t.coeffs[j - 1] * std::pow(s, -j));
      }
    }
    return RationalMatrix(m, n, std::move(poly), std::move(terms));
  }

  // z = z_inf + kappa / (t - p)
  const Complex p = -d / c;
  const Complex z_inf = a / c;
  const Complex kappa = (b * c - a * d) / (c * c);
  for (std::size_t k = 0; k < r.poly().size(); ++k) {
    const int kk = static_cast<int>(k);
    accumulate(poly, 0, std::pow(z_inf, kk) * r.poly()[k]);
    for (int j = 1; j <= kk; ++j) {
      Complex f = binomial(kk, j) * std::pow(z_inf, kk - j) * std::pow(kappa, j);
      add_term(terms, p, j, f * r.poly()[k]);
    }
  }
  for (const auto& t : r.terms()) {
    const Complex gap = z_inf - t.lambda;
    if (std::abs(gap) <= kPoleTol * std::max(1.0, std::abs(t.lambda))) {
      // The pole is sent to t = infinity: 1/(z - lambda)^j = (t - p)^j / kappa^j.
      for (int j = 1; j <= t.order(); ++j) {
        for (int i = 0; i <= j; ++i) {
          Complex f = binomial(j, i) * std::pow(-p, j - i) / std::pow(kappa, j);
          accumulate(poly, i, f * t.coeffs[j - 1]);
        }
      }
      continue;
    }
    // z - lambda = gap (t - q)/(t - p)
    const Complex q = p - kappa / gap;
    for (int j = 1; j <= t.order(); ++j) {
      const Complex g = std::pow(gap, -j);
      accumulate(poly, 0, g * t.coeffs[j - 1]);
      for (int i = 1; i <= j; ++i) {
        Complex f = g * binomial(j, i) * std::pow(q - p, i);
        add_term(terms, q, i, f * t.coeffs[j - 1]);
      }
    }
  }
  return RationalMatrix(m, n, std::move(poly), std::move(terms));
}

RationalMatrix substitute(const RationalMatrix& r, const MoebiusMap& map, Direction direction) {
  return compose(r, direction == Direction::forward ? map.forward_coefficients()
                                                    : map.inverse_coefficients());
}

Pencil palindromize_pencil(const Pencil& s, const MoebiusMap& map, double tol) {
  s.validate();
  if (s.rows() != s.cols()) throw Error(ErrorCode::NotSquare, "palindromize: pencil not square");
  const double thr = tol * std::max({1.0, max_abs(s.M1), max_abs(s.M0)});
  const CMatrix& s1 = s.M1;
  const CMatrix& s0 = s.M0;
  Pencil l = s;
  double sign = 1.0;
  if (map.kind() == MapKind::cayley_T) {
    if (pencil_deviation(s, StructureKind::hermitian) <= thr) {
      sign = 1.0;
    } else if (pencil_deviation(s, StructureKind::skew_hermitian) <= thr) {
      sign = -1.0;
    } else {
      throw Error(ErrorCode::StructureMismatch, "the T route needs a Hermitian or skew-Hermitian pencil",
                  pencil_deviation(s, StructureKind::hermitian));
    }
    l.M1 = s0 - kI * s1;
  } else {
    if (pencil_deviation(s, StructureKind::even) <= thr) {
      sign = 1.0;
    } else if (pencil_deviation(s, StructureKind::odd) <= thr) {
      sign = -1.0;
    } else {
      throw Error(ErrorCode::StructureMismatch, "the B routes need a *-even or *-odd pencil",
                  pencil_deviation(s, StructureKind::even));
    }
    l.M1 = std::conj(map.weight_alpha()) * (s0 + s1);
  }
  l.M0 = sign * l.M1.adjoint();
  return l;
}

Pencil pencil_preimage(const Pencil& l, const MoebiusMap& map) {
  l.validate();
  Pencil s = l;
  if (map.kind() == MapKind::cayley_T) {
    s.M0 = 0.5 * (l.M1 + l.M0);
    s.M1 = 0.5 * kI * (l.M1 - l.M0);
  } else {
    const Complex a = map.weight_alpha();
    const CMatrix p = l.M1 / std::conj(a);
    const CMatrix q = l.M0 / a;
    s.M0 = 0.5 * (p + q);
    s.M1 = 0.5 * (p - q);
  }
  return s;
}

Complex pick_alpha(const RationalMatrix& r, int trials, std::uint64_t seed,
                   const AlphaMargins& margins) {
  if (r.is_zero()) throw Error(ErrorCode::InvalidInput, "pick_alpha needs a nonzero R");
  const Index rank = r.square() ? normal_rank(r) : 0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < trials; ++k) {
    const Complex alpha = k == 0 ? Complex(1.0) : std::polar(1.0, phase(rng));
    const Complex point = -alpha * alpha;
    bool ok = true;
    for (const auto& t : r.terms()) {
      if (std::abs(t.lambda - point) < margins.pole_distance) ok = false;
    }
    if (!ok) continue;
    if (rank > 0) {
      // A zero drops the rank below the normal rank.
      RankDecision rd = svd_rank(eval(r, point), kRankTol);
      const double smax = rd.singular_values.front();
      const double s_r = rd.singular_values[rank - 1];
      if (s_r < margins.zero_indicator * std::max(1.0, smax)) continue;
    }
    return alpha;
  }
  throw Error(ErrorCode::NoAlphaFound, "no admissible alpha within the trial budget");
}

}  // namespace palrat
