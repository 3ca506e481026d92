// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/structural.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "palrat/errors.hpp"

namespace palrat {

StructuralIndices partial_multiplicities(const Pencil& p, ExtComplex point, double tol) {
  if (p.rows() != p.cols()) throw Error(ErrorCode::NotSquare, "pencil is not square");
  if (!is_regular(p.M1, p.M0)) throw Error(ErrorCode::SingularPencil, "pencil is singular");
  LocalStructure ls = point.infinite ? local_structure(p.M0, p.M1, Complex(0.0), tol)
                                     : local_structure(p.M1, p.M0, point.value, tol);
  if (ls.ambiguous) {
    throw Error(ErrorCode::RankAmbiguous, "a singular value lies within 10x of the rank threshold");
  }
  return {point, ls.block_sizes};
}

StructuralIndices recover_invariant_orders(const StructuralIndices& a_mults,
                                           const StructuralIndices& l_mults, int normal_rank,
                                           OrderPoint point, OrderTarget target) {
  const int s = static_cast<int>(a_mults.orders.size());
  const int u = static_cast<int>(l_mults.orders.size());
  if (normal_rank < 0 || s + u > normal_rank) {
    throw Error(ErrorCode::InconsistentInput, "more partial multiplicities than the normal rank");
  }
  std::vector<int> d = a_mults.orders;
  std::vector<int> dt = l_mults.orders;
  std::sort(d.begin(), d.end());
  std::sort(dt.begin(), dt.end());
  StructuralIndices out;
  out.point = point == OrderPoint::minus_one ? ExtComplex(-1.0) : ExtComplex::infinity();
  for (auto it = d.rbegin(); it != d.rend(); ++it) out.orders.push_back(-*it);
  for (int i = 0; i < normal_rank - s - u; ++i) out.orders.push_back(0);
  for (int v : dt) out.orders.push_back(v);
  // At -1 the list is that of (1+z)R; at infinity it is that of R.
  int shift = 0;
  if (point == OrderPoint::minus_one && target == OrderTarget::of_r) shift = -1;
  if (point == OrderPoint::infinity && target == OrderTarget::of_h) shift = -1;
  for (int& v : out.orders) v += shift;
  return out;
}

StructuralIndices invariant_orders(const Pencil& l, int normal_rank, OrderPoint point,
                                   OrderTarget target, double tol) {
  const ExtComplex at = point == OrderPoint::minus_one ? ExtComplex(-1.0) : ExtComplex::infinity();
  StructuralIndices a = l.state_dim == 0 ? StructuralIndices{at, {}}
                                         : partial_multiplicities(l.state_pencil(), at, tol);
  StructuralIndices whole = partial_multiplicities(l, at, tol);
  return recover_invariant_orders(a, whole, normal_rank, point, target);
}

Index transfer_normal_rank(const Pencil& l, double rel_tol) {
  Index best = 0;
  const double golden = 2.399963229728653;
  int taken = 0;
  for (int k = 0; taken < 6 && k < 64; ++k) {
    const Complex z = std::polar(0.55 + 0.17 * (k % 7), 0.3 + golden * k);
    try {
      best = std::max(best, svd_rank(transfer(l, z), rel_tol).rank);
      ++taken;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EvalAtSystemPole) throw;
    }
  }
  return best;
}

MinimalityReport check_strong_minimality(const Pencil& l, double tol) {
  l.validate();
  MinimalityReport rep;
  const Index n = l.state_dim;
  if (n == 0) return rep;
  const Pencil a = l.state_pencil();
  if (!is_regular(a.M1, a.M0)) {
    throw Error(ErrorCode::SingularPencil, "state block pencil is singular");
  }
  auto gap_of = [&](const CMatrix& m) {
    const Index rows_rank = svd_rank(m.topRows(n), tol).rank;
    const Index cols_rank = svd_rank(m.leftCols(n), tol).rank;
    return n - std::min(rows_rank, cols_rank);
  };
  for (const auto& e : generalized_eigenvalues(a.M1, a.M0)) {
    if (e.value.infinite) continue;
    rep.tested_points.push_back(e.value);
    const Index gap = gap_of(l.at(e.value.value));
    if (gap > rep.rank_gap) {
      rep.rank_gap = gap;
      rep.worst_point = e.value;
    }
  }
  rep.finite_ok = rep.rank_gap == 0;
  rep.infinity_gap = gap_of(l.M1);
  rep.infinity_ok = rep.infinity_gap == 0;
  return rep;
}

SymmetryReport symmetry_report(const std::vector<ExtComplex>& eigs, double tol) {
  SymmetryReport rep;
  std::vector<std::size_t> zeros, infs, rest;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    const ExtComplex& e = eigs[i];
    if (e.infinite) {
      infs.push_back(i);
    } else if (std::abs(std::abs(e.value) - 1.0) <= tol) {
      rep.unimodular.push_back(e);
    } else if (std::abs(e.value) <= tol) {
      zeros.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  const std::size_t zi = std::min(zeros.size(), infs.size());
  for (std::size_t k = 0; k < zi; ++k) rep.pairs.push_back({eigs[zeros[k]], eigs[infs[k]], 0.0});
  for (std::size_t k = zi; k < zeros.size(); ++k) rep.unpaired.push_back(eigs[zeros[k]]);
  for (std::size_t k = zi; k < infs.size(); ++k) rep.unpaired.push_back(eigs[infs[k]]);

  std::vector<std::tuple<double, std::size_t, std::size_t>> cand;
  for (std::size_t a = 0; a < rest.size(); ++a) {
    for (std::size_t b = a + 1; b < rest.size(); ++b) {
      const Complex x = eigs[rest[a]].value, y = eigs[rest[b]].value;
      const double gap = std::abs(x * std::conj(y) - 1.0);
      if (gap <= tol) cand.emplace_back(gap, a, b);
    }
  }
  std::stable_sort(cand.begin(), cand.end());
  std::vector<bool> used(rest.size(), false);
  for (const auto& [gap, a, b] : cand) {
    if (used[a] || used[b]) continue;
    used[a] = used[b] = true;
    rep.pairs.push_back({eigs[rest[a]], eigs[rest[b]], gap});
  }
  for (std::size_t a = 0; a < rest.size(); ++a) {
    if (!used[a]) rep.unpaired.push_back(eigs[rest[a]]);
  }
  return rep;
}

}  // namespace palrat
