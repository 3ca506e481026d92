// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "palrat/errors.hpp"

namespace palrat {
namespace {

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues();
}

// Fixed shift candidates spread around a circle of radius 1.3.
std::vector<Complex> shift_candidates() {
  std::vector<Complex> out;
  const double golden = 2.399963229728653;  // golden angle
  for (int k = 0; k < 8; ++k) {
    out.push_back(std::polar(1.3, 0.7 + golden * k));
  }
  return out;
}

// Best shift sigma for shift-invert: maximal relative smallest singular value.
std::pair<Complex, double> best_shift(const CMatrix& m1, const CMatrix& m0) {
  Complex best{};
  double best_ratio = -1.0;
  for (Complex s : shift_candidates()) {
    CMatrix n = s * m1 + m0;
    Eigen::VectorXd sv = singular_values(n);
    double ratio = sv.size() == 0 ? 1.0 : sv(sv.size() - 1) / std::max(1e-300, sv(0));
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = s;
    }
  }
  return {best, best_ratio};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<Complex>> cluster(const std::vector<Complex>& pts, double radius) {
  const int n = static_cast<int>(pts.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double scale = std::max({1.0, std::abs(pts[i]), std::abs(pts[j])});
      if (std::abs(pts[i] - pts[j]) <= radius * scale) uf.unite(i, j);
    }
  }
  std::vector<std::vector<Complex>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(pts[i]);
  }
  return groups;
}

Complex mean(const std::vector<Complex>& v) {
  Complex s{};
  for (Complex c : v) s += c;
  return s / static_cast<double>(v.size());
}

void resolve_cluster(const CMatrix& m1, const CMatrix& m0, const std::vector<Complex>& pts,
                     std::size_t level, const std::vector<double>& radii,
                     const EigenOptions& options, std::vector<Eigenvalue>& out) {
  if (pts.size() == 1) {
    out.push_back({ExtComplex(pts[0]), 1});
    return;
  }
  Complex center = mean(pts);
  if (level + 1 >= radii.size()) {
    out.push_back({ExtComplex(center), static_cast<int>(pts.size())});
    return;
  }
  LocalStructure ls = local_structure(m1, m0, center, options.rank_tol);
  if (!ls.ambiguous && ls.algebraic_multiplicity() == static_cast<int>(pts.size())) {
    out.push_back({ExtComplex(center), static_cast<int>(pts.size())});
    return;
  }
  for (const auto& sub : cluster(pts, radii[level + 1])) {
    resolve_cluster(m1, m0, sub, level + 1, radii, options, out);
  }
}

}  // namespace

RankDecision svd_rank(const CMatrix& m, double rel_tol) {
  if (!all_finite(m)) throw Error(ErrorCode::InvalidInput, "svd_rank: non-finite entries");
  if (!(rel_tol > 0)) throw Error(ErrorCode::InvalidInput, "svd_rank: tolerance must be positive");
  RankDecision d;
  Eigen::VectorXd sv = singular_values(m);
  d.singular_values.assign(sv.data(), sv.data() + sv.size());
  double smax = sv.size() ? sv(0) : 0.0;
  d.tolerance_used = rel_tol * std::max(1.0, smax);
  d.rank = std::count_if(d.singular_values.begin(), d.singular_values.end(),
                         [&](double s) { return s > d.tolerance_used; });
  return d;
}

double sigma_min(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::VectorXd sv = singular_values(m);
  return sv(sv.size() - 1);
}

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeError, "solve: incompatible shapes");
  }
  if (a.rows() == 0) return CMatrix::Zero(0, b.cols());
  Eigen::PartialPivLU<CMatrix> lu(a);
  double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw Error(ErrorCode::SingularSolve, "solve: matrix is singular to working precision",
                sigma_min(a));
  }
  return lu.solve(b);
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const CMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

int LocalStructure::algebraic_multiplicity() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

LocalStructure local_structure(const CMatrix& m1, const CMatrix& m0, Complex z0,
                               double rel_tol) {
  const Index n = m1.rows();
  LocalStructure out;
  if (n == 0) return out;
  const CMatrix p0 = m0 + z0 * m1;
  // chains[k-1] = number of Jordan chains of length >= k
  std::vector<Index> chains;
  Index prev_nullity = 0;
  for (Index k = 1; k <= n + 1; ++k) {
    CMatrix t = CMatrix::Zero(k * n, k * n);
    for (Index b = 0; b < k; ++b) {
      t.block(b * n, b * n, n, n) = p0;
      if (b > 0) t.block(b * n, (b - 1) * n, n, n) = m1;
    }
    RankDecision rd = svd_rank(t, rel_tol);
    for (double s : rd.singular_values) {
      if (s > rd.tolerance_used / 10 && s <= rd.tolerance_used * 10) out.ambiguous = true;
    }
    Index nullity = k * n - rd.rank;
    Index c = nullity - prev_nullity;
    if (c <= 0) break;
    if (!chains.empty() && c > chains.back()) {
      // Numerically inconsistent sequence; report and stop.
      out.ambiguous = true;
      c = chains.back();
    }
    chains.push_back(c);
    prev_nullity = nullity;
  }
  for (std::size_t k = 0; k < chains.size(); ++k) {
    Index next = k + 1 < chains.size() ? chains[k + 1] : 0;
    for (Index j = 0; j < chains[k] - next; ++j) out.block_sizes.push_back(static_cast<int>(k + 1));
  }
  std::sort(out.block_sizes.begin(), out.block_sizes.end());
  return out;
}

bool is_regular(const CMatrix& m1, const CMatrix& m0) {
  if (m1.rows() != m1.cols() || m0.rows() != m0.cols() || m1.rows() != m0.rows()) {
    throw Error(ErrorCode::NotSquare, "pencil is not square");
  }
  if (m1.rows() == 0) return true;
  auto [shift, ratio] = best_shift(m1, m0);
  (void)shift;
  return ratio > 1e-12;
}

std::vector<Eigenvalue> generalized_eigenvalues(const CMatrix& m1, const CMatrix& m0,
                                                const EigenOptions& options) {
  if (m1.rows() != m1.cols() || m0.rows() != m0.cols() || m1.rows() != m0.rows()) {
    throw Error(ErrorCode::NotSquare, "generalized_eigenvalues: pencil is not square");
  }
  if (!all_finite(m1) || !all_finite(m0)) {
    throw Error(ErrorCode::InvalidInput, "generalized_eigenvalues: non-finite entries");
  }
  const Index n = m1.rows();
  std::vector<Eigenvalue> out;
  if (n == 0) return out;
  auto [sigma, ratio] = best_shift(m1, m0);
  if (!(ratio > 1e-12)) {
    throw Error(ErrorCode::SingularPencil, "pencil is singular", ratio);
  }
  // Algebraic multiplicity of infinity = that of 0 for the reversal z*m0 + m1.
  const int n_inf = local_structure(m0, m1, Complex(0.0), options.rank_tol).algebraic_multiplicity();

  CMatrix x = solve(sigma * m1 + m0, m1);
  Eigen::ComplexEigenSolver<CMatrix> es(x, false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "eigenvalue iteration did not converge");
  }
  std::vector<Complex> mu(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(mu.begin(), mu.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  std::vector<Complex> finite;
  for (Index i = n_inf; i < n; ++i) finite.push_back(sigma - 1.0 / mu[i]);

  std::vector<double> radii;
  for (double r = 1e-2; r > options.cluster_tol * 1.0001; r /= 10) radii.push_back(r);
  radii.push_back(options.cluster_tol);
  for (const auto& group : cluster(finite, radii[0])) {
    resolve_cluster(m1, m0, group, 0, radii, options, out);
  }
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    if (a.value.value.real() != b.value.value.real()) {
      return a.value.value.real() < b.value.value.real();
    }
    return a.value.value.imag() < b.value.value.imag();
  });
  if (n_inf > 0) out.push_back({ExtComplex::infinity(), n_inf});
  return out;
}

std::vector<ExtComplex> flatten(const std::vector<Eigenvalue>& eigs) {
  std::vector<ExtComplex> out;
  for (const auto& e : eigs) {
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
  }
  return out;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace palrat
