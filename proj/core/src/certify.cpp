// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/certify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "palrat/errors.hpp"

namespace palrat {

std::vector<Complex> sample_points(const RationalMatrix& r, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logmod(std::log(0.4), std::log(2.5));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex z = std::polar(std::exp(logmod(rng)), phase(rng));
    bool near = false;
    for (const auto& t : r.terms()) near |= std::abs(z - t.lambda) < 1e-2;
    if (!near) out.push_back(z);
  }
  return out;
}

TransferCheck check_transfer(const Pencil& l, const RationalMatrix& r,
                             std::optional<Complex> weight_alpha, int count, std::uint64_t seed,
                             double tol) {
  if (l.io_rows != r.rows() || l.io_cols != r.cols()) {
    throw Error(ErrorCode::ShapeError, "pencil and rational matrix differ in size");
  }
  TransferCheck tc;
  std::vector<Complex> pts;
  std::vector<CMatrix> diffs;
  std::uint64_t s = seed;
  while (static_cast<int>(pts.size()) < count) {
    for (Complex z : sample_points(r, count, s++)) {
      if (static_cast<int>(pts.size()) >= count) break;
      CMatrix t;
      try {
        t = transfer(l, z);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EvalAtSystemPole) throw;
        continue;
      }
      const CMatrix rz = eval(r, z);
      const Complex w = weight_alpha ? *weight_alpha + std::conj(*weight_alpha) * z : Complex(1.0);
      tc.r_scale = std::max(tc.r_scale, rz.norm());
      pts.push_back(z);
      diffs.push_back(t - w * rz);
    }
  }
  const double scale = std::max(tc.r_scale, 1e-14);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    tc.residual = std::max(tc.residual, diffs[k].norm() / ((1.0 + std::abs(pts[k])) * scale));
  }
  tc.samples = static_cast<int>(pts.size());
  tc.passed = tc.residual <= tol;
  return tc;
}

Certificate certify(const Pencil& l, const RationalMatrix& r, ParaKind kind,
                    std::optional<Complex> weight_alpha, const CertifyOptions& options) {
  l.validate();
  Certificate c;
  const StructureKind want = pencil_kind(kind);
  c.structure.kind = want;
  c.structure.deviation = pencil_deviation(l, want);
  c.structure_ok =
      c.structure.deviation <= options.structure_tol * std::max({1.0, max_abs(l.M1), max_abs(l.M0)});
  if (!c.structure_ok) c.structure.kind = StructureKind::none;
  c.transfer = check_transfer(l, r, weight_alpha, options.samples, options.seed,
                              options.transfer_tol);
  c.minimality = check_strong_minimality(l, options.rank_tol);
  EigenOptions eo;
  eo.rank_tol = options.rank_tol;
  eo.cluster_tol = options.pair_tol;
  c.eigenvalues = generalized_eigenvalues(l, eo);
  c.symmetry = symmetry_report(flatten(c.eigenvalues), options.pair_tol);
  c.symmetry_ok = c.symmetry.unpaired.empty();
  return c;
}

}  // namespace palrat
