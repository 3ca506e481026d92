// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/linearize.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "palrat/certify.hpp"
#include "palrat/errors.hpp"
#include "palrat/structural.hpp"

namespace palrat {
namespace {

constexpr Complex kI{0.0, 1.0};

double sign_of(ParaKind kind) { return kind == ParaKind::hermitian ? 1.0 : -1.0; }

// Checks r0 against the kind and returns its exactly (skew-)Hermitian part.
CMatrix symmetric_corner(const CMatrix& r0, ParaKind kind, double tol) {
  if (r0.rows() != r0.cols()) throw Error(ErrorCode::NotSquare, "constant term is not square");
  const double s = sign_of(kind);
  const double dev = max_abs(r0 - s * r0.adjoint());
  if (dev > tol * std::max(1.0, max_abs(r0))) {
    throw Error(ErrorCode::StructureMismatch,
                kind == ParaKind::hermitian ? "constant term is not Hermitian"
                                            : "constant term is not skew-Hermitian",
                dev);
  }
  CMatrix out = 0.5 * (r0 + s * r0.adjoint());
  // Make the diagonal exactly real (resp. imaginary).
  for (Index i = 0; i < out.rows(); ++i) {
    out(i, i) = kind == ParaKind::hermitian ? Complex(out(i, i).real(), 0.0)
                                            : Complex(0.0, out(i, i).imag());
  }
  for (Index i = 0; i < out.rows(); ++i) {
    for (Index j = 0; j < i; ++j) out(i, j) = s * std::conj(out(j, i));
  }
  return out;
}

void seal(Pencil& l, ParaKind kind) { l.M0 = sign_of(kind) * l.M1.adjoint(); }

void check_structured_input(const RationalMatrix& r, ParaKind kind, double tol) {
  if (!r.square()) throw Error(ErrorCode::NotSquare, "linearization needs a square matrix");
  StructureTag tag = is_structured(r, rational_kind(kind), tol);
  if (tag.kind == StructureKind::none) {
    throw Error(ErrorCode::StructureMismatch,
                kind == ParaKind::hermitian ? "input is not para-Hermitian"
                                            : "input is not para-skew-Hermitian",
                tag.deviation);
  }
}

void check_term(const PoleTerm& term) {
  if (term.coeffs.empty()) throw Error(ErrorCode::InvalidTerm, "pole term without coefficients");
  if (!(std::abs(term.lambda) < 1.0)) {
    throw Error(ErrorCode::InvalidInput, "pole term must lie inside the unit circle");
  }
  if (max_abs(term.coeffs.back()) == 0.0) {
    throw Error(ErrorCode::InvalidTerm, "leading coefficient R_d is zero");
  }
  for (const auto& c : term.coeffs) {
    if (c.rows() != c.cols() || c.rows() != term.coeffs.front().rows()) {
      throw Error(ErrorCode::ShapeError, "pole coefficients must be square and equal in size");
    }
  }
}

bool leading_invertible(const PoleTerm& term, double tol) {
  Eigen::BDCSVD<CMatrix> svd(term.coeffs.back());
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > tol * sv(0);
}

PoleTerm rotate(const PoleTerm& term, Complex f) {
  PoleTerm out = term;
  for (auto& c : out.coeffs) c *= f;
  return out;
}

// Skew inputs: i R is para-Hermitian, and -i times its palindromic
// linearization is anti-palindromic for (1+z)R.
template <typename Build>
Pencil via_rotation(const PoleTerm& term, const CMatrix& r0, ParaKind kind, Build build) {
  if (kind == ParaKind::hermitian) return build(term, r0);
  Pencil l = build(rotate(term, kI), CMatrix(kI * r0));
  l.M1 *= -kI;
  seal(l, ParaKind::skew);
  return l;
}

// Stacks systems with block-diagonal states and shared input/output rows.
Pencil stack(const std::vector<const Pencil*>& parts, Index m) {
  Index total = 0;
  for (const Pencil* p : parts) {
    if (p->io_rows != m || p->io_cols != m) {
      throw Error(ErrorCode::ShapeError, "blocks differ in input/output size");
    }
    total += p->state_dim;
  }
  Pencil out;
  out.state_dim = total;
  out.io_rows = out.io_cols = m;
  out.M1 = CMatrix::Zero(total + m, total + m);
  out.M0 = CMatrix::Zero(total + m, total + m);
  Index o = 0;
  for (const Pencil* p : parts) {
    const Index n = p->state_dim;
    for (auto [dst, src] : {std::pair{&out.M1, &p->M1}, std::pair{&out.M0, &p->M0}}) {
      dst->block(o, o, n, n) = src->topLeftCorner(n, n);
      dst->block(o, total, n, m) = src->topRightCorner(n, m);
      dst->block(total, o, m, n) = src->bottomLeftCorner(m, n);
      dst->bottomRightCorner(m, m) += src->bottomRightCorner(m, m);
    }
    o += n;
  }
  return out;
}

// R_lambda + r0 +- R_lambda^*(1/z).
RationalMatrix one_pole_function(const PoleTerm& term, const CMatrix& r0, ParaKind kind) {
  RationalMatrix rl(r0.rows(), r0.cols(), {}, {term});
  return add(add(rl, RationalMatrix::constant(r0)), scale(paraconjugate(rl), sign_of(kind)));
}

Pencil one_pole_hermitian(const PoleTerm& term, const CMatrix& r0) {
  const int d = term.order();
  const Index m = r0.rows(), dm = d * m;
  CMatrix k0 = term.lambda * CMatrix::Identity(dm, dm);
  for (int b = 1; b < d; ++b) k0.block(b * m, (b - 1) * m, m, m) = CMatrix::Identity(m, m);
  CMatrix f(dm, m);
  for (int b = 0; b < d; ++b) f.block(b * m, 0, m, m) = term.coeffs[d - 1 - b];
  Pencil l;
  l.state_dim = 2 * dm;
  l.io_rows = l.io_cols = m;
  l.M1 = CMatrix::Zero(2 * dm + m, 2 * dm + m);
  l.M1.block(0, dm, dm, dm) = -CMatrix::Identity(dm, dm);
  l.M1.block(dm, 0, dm, dm) = k0.adjoint();
  l.M1.block(dm + dm - m, 2 * dm, m, m) = CMatrix::Identity(m, m);
  l.M1.block(2 * dm, 0, m, dm) = f.adjoint();
  l.M1.block(2 * dm, dm + dm - m, m, m) = CMatrix::Identity(m, m);
  l.M1.block(2 * dm, 2 * dm, m, m) = r0;
  seal(l, ParaKind::hermitian);
  return l;
}

Pencil one_pole_hankel_hermitian(const PoleTerm& term, const CMatrix& r0) {
  const int d = term.order();
  const Index m = r0.rows(), dm = d * m;
  const CMatrix h = pole_hankel(term);
  // M_lambda(z) = M_{lambda,0} - z H with M_{lambda,0} = lambda H + (H shifted down one block).
  CMatrix mlam0 = term.lambda * h;
  mlam0.bottomRows(dm - m) += h.topRows(dm - m);
  CMatrix f(dm, m), g(dm, m);
  for (int b = 0; b < d; ++b) {
    f.block(b * m, 0, m, m) = term.coeffs[d - 1 - b];
    g.block(b * m, 0, m, m) = term.coeffs[d - 1 - b].adjoint();
  }
  Pencil l;
  l.state_dim = 2 * dm;
  l.io_rows = l.io_cols = m;
  l.M1 = CMatrix::Zero(2 * dm + m, 2 * dm + m);
  l.M1.block(0, dm, dm, dm) = -h;
  l.M1.block(dm, 0, dm, dm) = mlam0.adjoint();
  l.M1.block(dm, 2 * dm, dm, m) = g;
  l.M1.block(2 * dm, 0, m, dm) = f.adjoint();
  l.M1.block(2 * dm, dm, m, dm) = g.adjoint();
  l.M1.block(2 * dm, 2 * dm, m, m) = r0;
  seal(l, ParaKind::hermitian);
  return l;
}

Pencil compressed_hermitian(const PoleTerm& term, const CMatrix& r0, double tol,
                            CompressionReport& rep) {
  const int d = term.order();
  const Index m = r0.rows(), dm = d * m;
  const Pencil full = one_pole_hankel_hermitian(term, r0);
  const CMatrix h = pole_hankel(term);
  Eigen::BDCSVD<CMatrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thr = tol * std::max(1.0, sv(0));
  Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  rep.rank = r;
  // Null directions first, range last.
  CMatrix u(dm, dm), v(dm, dm);
  u << svd.matrixU().rightCols(dm - r), svd.matrixU().leftCols(r);
  v << svd.matrixV().rightCols(dm - r), svd.matrixV().leftCols(r);
  CMatrix t = CMatrix::Zero(2 * dm + m, 2 * dm + m);
  t.block(0, 0, dm, dm) = u;
  t.block(dm, dm, dm, dm) = v;
  t.block(2 * dm, 2 * dm, m, m) = CMatrix::Identity(m, m);
  const CMatrix m1t = t.adjoint() * full.M1 * t;
  const CMatrix m0t = t.adjoint() * full.M0 * t;

  std::vector<Index> keep;
  for (Index i = dm - r; i < dm; ++i) keep.push_back(i);
  for (Index i = 2 * dm - r; i < 2 * dm; ++i) keep.push_back(i);
  for (Index i = 2 * dm; i < 2 * dm + m; ++i) keep.push_back(i);
  std::vector<bool> kept(2 * dm + m, false);
  for (Index i : keep) kept[i] = true;
  double resid = 0.0;
  for (Index i = 0; i < 2 * dm + m; ++i) {
    for (Index j = 0; j < 2 * dm + m; ++j) {
      if (kept[i] && kept[j]) continue;
      resid = std::max({resid, std::abs(m1t(i, j)), std::abs(m0t(i, j))});
    }
  }
  rep.discarded_residual = resid / std::max({1.0, max_abs(full.M1), max_abs(full.M0)});

  Pencil lc;
  const Index nk = static_cast<Index>(keep.size());
  lc.state_dim = 2 * r;
  lc.io_rows = lc.io_cols = m;
  lc.M1.resize(nk, nk);
  for (Index i = 0; i < nk; ++i) {
    for (Index j = 0; j < nk; ++j) lc.M1(i, j) = m1t(keep[i], keep[j]);
  }
  lc.M1.bottomRightCorner(m, m) = r0;
  seal(lc, ParaKind::hermitian);
  return lc;
}

}  // namespace

Pencil assemble_inout(const Realization& real, const CMatrix& r0, ParaKind kind) {
  const Index r = real.state_dim(), m = r0.rows();
  if (r0.rows() != r0.cols() || real.B.cols() != m || real.C.rows() != m || real.A.rows() != r ||
      real.B.rows() != r || real.C.cols() != r) {
    throw Error(ErrorCode::ShapeError, "realization and constant term do not fit");
  }
  const double s = sign_of(kind);
  Pencil l;
  l.state_dim = 2 * r;
  l.io_rows = l.io_cols = m;
  l.M1 = CMatrix::Zero(2 * r + m, 2 * r + m);
  l.M1.block(0, r, r, r) = -real.E;
  l.M1.block(r, 0, r, r) = s * real.A.adjoint();
  l.M1.block(r, 2 * r, r, m) = s * real.C.adjoint();
  l.M1.block(2 * r, 0, m, r) = s * real.B.adjoint();
  l.M1.block(2 * r, r, m, r) = real.C;
  l.M1.block(2 * r, 2 * r, m, m) = r0;
  seal(l, kind);
  return l;
}

CMatrix AntiStablePart::eval(Complex z) const {
  const Realization& r = source;
  if (r.state_dim() == 0) return CMatrix::Zero(r.B.cols(), r.C.rows());
  const CMatrix pencil = kind == ParaKind::hermitian ? CMatrix(r.E.adjoint() - z * r.A.adjoint())
                                                     : CMatrix(z * r.A.adjoint() - r.E.adjoint());
  return z * r.B.adjoint() * solve(pencil, r.C.adjoint());
}

AntiStablePart realization_antistable(const Realization& real_in, ParaKind kind) {
  if (real_in.state_dim() > 0 &&
      !(sigma_min(real_in.E) > 1e-12 * std::max(1.0, max_abs(real_in.E)))) {
    throw Error(ErrorCode::NotMinimalAtInfinity, "descriptor matrix is singular");
  }
  return {real_in, kind};
}

namespace {

Pencil inout_route(const RationalMatrix& r, ParaKind kind, const LinearizeOptions& options,
                   bool normalize) {
  check_structured_input(r, kind, options.structure_tol);
  const StabilitySplit split = split_stability(r, options.band);
  if (!split.r_s1.is_zero()) {
    throw Error(ErrorCode::NeedsMoebiusRoute, "R has poles on the unit circle");
  }
  const CMatrix r0 = symmetric_corner(split.r0, kind, options.structure_tol);
  const RealizationResult res = minimal_realization(split.r_in, options.rank_tol);
  const Realization real = normalize ? normalize_descriptor(res.realization) : res.realization;
  return assemble_inout(real, r0, kind);
}

}  // namespace

Pencil linearize_stable_split(const RationalMatrix& r, ParaKind kind,
                              const LinearizeOptions& options) {
  return inout_route(r, kind, options, true);
}

Pencil linearize_taylor(const RationalMatrix& r, ParaKind kind, const LinearizeOptions& options) {
  return inout_route(r, kind, options, false);
}

Pencil combine_with_unit_circle_part(const Pencil& inout, const Pencil& unit_part, ParaKind kind) {
  inout.validate();
  unit_part.validate();
  if (inout.io_rows != unit_part.io_rows || inout.io_cols != unit_part.io_cols ||
      inout.io_rows != inout.io_cols) {
    throw Error(ErrorCode::ShapeError, "input/output sizes differ");
  }
  const StructureKind want = pencil_kind(kind);
  for (const Pencil* p : {&inout, &unit_part}) {
    const double dev = pencil_deviation(*p, want);
    if (dev > 1e-12 * std::max({1.0, max_abs(p->M1), max_abs(p->M0)})) {
      throw Error(ErrorCode::StructureMismatch, "block is not structured as required", dev);
    }
  }
  Pencil out = stack({&inout, &unit_part}, inout.io_rows);
  seal(out, kind);
  return out;
}

CMatrix pole_hankel(const PoleTerm& term) {
  const int d = term.order();
  const Index m = term.coeffs.front().rows();
  CMatrix h = CMatrix::Zero(d * m, d * m);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int k = i + j - (d - 1);
      if (k >= 0) h.block(i * m, j * m, m, m) = term.coeffs[d - 1 - k];
    }
  }
  return h;
}

Pencil linearize_one_pole(const PoleTerm& term, const CMatrix& r0, ParaKind kind,
                          double invertible_tol) {
  check_term(term);
  if (!leading_invertible(term, invertible_tol)) {
    throw Error(ErrorCode::UseCompressedRoute, "R_d is singular");
  }
  const CMatrix c = symmetric_corner(r0, kind, 1e-9);
  return via_rotation(term, c, kind, one_pole_hermitian);
}

Pencil linearize_one_pole_hankel(const PoleTerm& term, const CMatrix& r0, ParaKind kind,
                                 double invertible_tol) {
  check_term(term);
  if (!leading_invertible(term, invertible_tol)) {
    throw Error(ErrorCode::UseCompressedRoute, "R_d is singular");
  }
  const CMatrix c = symmetric_corner(r0, kind, 1e-9);
  return via_rotation(term, c, kind, one_pole_hankel_hermitian);
}

Pencil linearize_one_pole_compressed(const PoleTerm& term, const CMatrix& r0, ParaKind kind,
                                     double tol, CompressionReport* report) {
  check_term(term);
  const CMatrix c = symmetric_corner(r0, kind, 1e-9);
  CompressionReport rep;
  Pencil lc = via_rotation(term, c, kind, [&](const PoleTerm& t, const CMatrix& c0) {
    return compressed_hermitian(t, c0, tol, rep);
  });

  // Certification.
  const Index r = rep.rank;
  const Pencil a = lc.state_pencil();
  bool ok = rep.discarded_residual <= 1e-9;
  if (ok && r > 0) {
    const CMatrix a1 = a.M1.block(0, r, r, r), a0 = a.M0.block(0, r, r, r);
    const CMatrix b1 = a.M1.block(r, 0, r, r), b0 = a.M0.block(r, 0, r, r);
    if (!is_regular(a1, a0)) {
      ok = false;
    } else {
      const auto ea = flatten(generalized_eigenvalues(a1, a0));
      const auto eb = flatten(generalized_eigenvalues(b1, b0));
      rep.spectral_gap = std::numeric_limits<double>::infinity();
      for (const auto& x : ea) {
        if (x.infinite) {
          ok = false;
          continue;
        }
        rep.pole_deviation = std::max(rep.pole_deviation, std::abs(x.value - term.lambda));
        for (const auto& y : eb) {
          if (y.infinite) continue;
          rep.spectral_gap = std::min(rep.spectral_gap, std::abs(x.value - y.value));
        }
      }
      ok = ok && rep.pole_deviation <= 1e-6 && rep.spectral_gap > 1e-6;
    }
  }
  if (ok) ok = check_strong_minimality(lc).ok();
  if (ok) {
    const RationalMatrix target = one_pole_function(term, c, kind);
    rep.transfer_residual = check_transfer(lc, target, Complex(1.0)).residual;
    ok = rep.transfer_residual <= 1e-9;
  }
  rep.passed = ok;
  if (report) *report = rep;
  if (!ok) {
    throw Error(ErrorCode::CompressionFailed, "compressed pencil failed certification",
                std::max({rep.discarded_residual, rep.pole_deviation, rep.transfer_residual}));
  }
  return lc;
}

Pencil combine_poles(const std::vector<PoleBlock>& blocks, const CMatrix& r0, ParaKind kind) {
  const Index m = r0.rows();
  const CMatrix c = symmetric_corner(r0, kind, 1e-9);
  const StructureKind want = pencil_kind(kind);
  std::vector<const Pencil*> parts;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(blocks[i].lambda - blocks[j].lambda) <=
          kPoleTol * std::max(1.0, std::abs(blocks[j].lambda))) {
        throw Error(ErrorCode::DuplicatePole, "two blocks share a pole");
      }
    }
    const Pencil& p = blocks[i].pencil;
    p.validate();
    if (p.io_rows != m || p.io_cols != m) throw Error(ErrorCode::ShapeError, "block size mismatch");
    if (max_abs(p.M1.bottomRightCorner(m, m)) != 0.0 || max_abs(p.M0.bottomRightCorner(m, m)) != 0.0) {
      throw Error(ErrorCode::InvalidInput, "per-pole blocks must carry a zero corner");
    }
    const double dev = pencil_deviation(p, want);
    if (dev > 1e-12 * std::max({1.0, max_abs(p.M1), max_abs(p.M0)})) {
      throw Error(ErrorCode::StructureMismatch, "block is not structured as required", dev);
    }
    parts.push_back(&p);
  }
  Pencil out = stack(parts, m);
  out.M1.bottomRightCorner(m, m) = c;
  seal(out, kind);
  return out;
}

namespace {

Pencil pole_block(const PoleTerm& term, ParaKind kind, const LinearizeOptions& options) {
  const Index m = term.coeffs.front().rows();
  const CMatrix zero = CMatrix::Zero(m, m);
  if (leading_invertible(term, options.invertible_tol)) {
    return linearize_one_pole(term, zero, kind, options.invertible_tol);
  }
  return linearize_one_pole_compressed(term, zero, kind, options.rank_tol);
}

}  // namespace

Pencil linearize_pfd(const RationalMatrix& r, ParaKind kind, const LinearizeOptions& options) {
  check_structured_input(r, kind, options.structure_tol);
  const StabilitySplit split = split_stability(r, options.band);
  if (!split.r_s1.is_zero()) {
    throw Error(ErrorCode::NeedsMoebiusRoute, "R has poles on the unit circle");
  }
  std::vector<PoleBlock> blocks;
  for (const auto& t : split.r_in.terms()) blocks.push_back({t.lambda, pole_block(t, kind, options)});
  return combine_poles(blocks, symmetric_corner(split.r0, kind, options.structure_tol), kind);
}

Pencil linearize_laurent(const RationalMatrix& r, ParaKind kind, const LinearizeOptions& options) {
  const LaurentData ld = polar_sections(r, kind);
  const CMatrix c = symmetric_corner(ld.constant, kind, options.structure_tol);
  if (ld.degree == 0) return combine_poles({}, c, kind);
  PoleTerm term;
  term.lambda = 0.0;
  term.coeffs = ld.negative;
  if (leading_invertible(term, options.invertible_tol)) {
    return linearize_one_pole(term, c, kind, options.invertible_tol);
  }
  return linearize_one_pole_compressed(term, c, kind, options.rank_tol);
}

Pencil linearize_via_moebius(const RationalMatrix& r, const Pencil& s, const MoebiusMap& map,
                             const LinearizeOptions& options) {
  s.validate();
  if (s.io_rows != r.rows() || s.io_cols != r.cols()) {
    throw Error(ErrorCode::ShapeError, "S does not match the size of R");
  }
  const RationalMatrix g = substitute(r, map, Direction::forward);
  const TransferCheck tc = check_transfer(s, g, std::nullopt, 20, 0x5eed, 1e-9);
  if (!tc.passed) {
    throw Error(ErrorCode::BadInputLinearization, "S does not realize R composed with the map",
                tc.residual);
  }
  if (!check_strong_minimality(s).ok()) {
    throw Error(ErrorCode::BadInputLinearization, "S is not strongly minimal");
  }
  Pencil l;
  try {
    l = palindromize_pencil(s, map, options.structure_tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StructureMismatch) throw;
    throw Error(ErrorCode::BadInputLinearization, e.what(), e.value());
  }
  if (!check_strong_minimality(l).ok()) {
    throw Error(ErrorCode::BadInputLinearization, "palindromized pencil is not strongly minimal");
  }
  return l;
}

Pencil linearize_with_unit_part(const RationalMatrix& r, const Pencil& s_unit, ParaKind kind,
                                const LinearizeOptions& options) {
  check_structured_input(r, kind, options.structure_tol);
  const StabilitySplit split = split_stability(r, options.band);
  std::vector<PoleBlock> blocks;
  for (const auto& t : split.r_in.terms()) blocks.push_back({t.lambda, pole_block(t, kind, options)});
  const Pencil inout = combine_poles(blocks, CMatrix::Zero(r.rows(), r.cols()), kind);
  const RationalMatrix unit = add(split.r_s1, RationalMatrix::constant(split.r0));
  const Pencil lp = linearize_via_moebius(unit, s_unit, MoebiusMap::bilinear(), options);
  return combine_with_unit_circle_part(inout, lp, kind);
}

}  // namespace palrat
