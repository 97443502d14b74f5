#pragma once

// Floating-point root extraction and clustering, the numeric companion of
// the exact classification path.  Roots come from the companion matrix;
// clusters come from single-linkage merging at an effective radius that is
// the caller's tolerance widened by the multiple-root noise floor (a root of
// multiplicity m recovered from perturbed coefficients scatters like
// eps^(1/m), far beyond machine precision, so a fixed radius cannot be
// trusted on its own).

#include "aq/rational.hpp"
#include "aq/unipoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace aq {

// Roots of the monic polynomial z^n + tail[n-1] z^{n-1} + ... + tail[0].
inline std::vector<ComplexF> companion_roots(const std::vector<ComplexF>& tail_low_first) {
  const int n = static_cast<int>(tail_low_first.size());
  if (n == 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 1; r < n; ++r) C(r, r - 1) = 1.0;
  for (int r = 0; r < n; ++r) C(r, n - 1) = -tail_low_first[static_cast<std::size_t>(r)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  if (es.info() != Eigen::Success) throw ArithmeticError("companion eigensolver failed");
  std::vector<ComplexF> roots(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) roots[static_cast<std::size_t>(r)] = es.eigenvalues()(r);
  return roots;
}

// General coefficients, lowest degree first; the leading coefficient must be
// nonzero and is divided out.
inline std::vector<ComplexF> poly_roots(const std::vector<ComplexF>& coeffs_low_first) {
  if (coeffs_low_first.empty() || std::abs(coeffs_low_first.back()) == 0.0)
    throw ArithmeticError("roots of a polynomial with zero leading coefficient");
  ComplexF lead = coeffs_low_first.back();
  std::vector<ComplexF> tail(coeffs_low_first.begin(), coeffs_low_first.end() - 1);
  for (auto& c : tail) c /= lead;
  return companion_roots(tail);
}

inline std::vector<ComplexF> poly_roots(const UniPoly& p) {
  std::vector<ComplexF> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.push_back(a.to_complex());
  return poly_roots(c);
}

struct RootClusters {
  std::vector<ComplexF> centroids;  // size-descending, then by Re, then Im
  std::vector<int> sizes;           // parallel to centroids
  double radius = 0;                // effective clustering radius used
  double min_gap = std::numeric_limits<double>::infinity();  // between clusters
  bool ill_conditioned = false;     // min_gap within 10x of the radius
};

// Noise floor for roots of a monic polynomial with the given coefficient
// scale: a multiplicity-m root moves by about (eps * scale)^(1/m) under
// relative coefficient error eps; the worst case m = n is used.
inline double root_noise_floor(int n, double coeff_scale) {
  if (n <= 0) return 0;
  double eps = std::numeric_limits<double>::epsilon();
  double delta = eps * (1.0 + coeff_scale) * n;
  return 4.0 * std::pow(delta, 1.0 / n);
}

inline RootClusters cluster_roots(const std::vector<ComplexF>& roots, double tol,
                                  double noise_floor = 0) {
  const std::size_t n = roots.size();
  RootClusters out;
  out.radius = std::max(tol, noise_floor);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= out.radius) parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> group_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[r])].push_back(i);
  }

  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = a + 1; b < groups.size(); ++b)
      for (std::size_t i : groups[a])
        for (std::size_t j : groups[b])
          out.min_gap = std::min(out.min_gap, std::abs(roots[i] - roots[j]));
  out.ill_conditioned = groups.size() > 1 && out.min_gap < 10 * out.radius;

  struct Cluster {
    ComplexF centroid;
    int size;
  };
  std::vector<Cluster> clusters;
  for (const auto& g : groups) {
    ComplexF sum = 0;
    for (std::size_t i : g) sum += roots[i];
    clusters.push_back({sum / static_cast<double>(g.size()), static_cast<int>(g.size())});
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.size != b.size) return a.size > b.size;
    if (a.centroid.real() != b.centroid.real()) return a.centroid.real() < b.centroid.real();
    return a.centroid.imag() < b.centroid.imag();
  });
  for (const auto& c : clusters) {
    out.centroids.push_back(c.centroid);
    out.sizes.push_back(c.size);
  }
  return out;
}

}  // namespace aq
