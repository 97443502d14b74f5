#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string_view>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

// Tangent vector to the unit sphere, realized in R^3 x R^3: |q| = 1, q.p = 0.
template <class T>
struct PhasePointT {
  std::array<T, 3> q;
  std::array<T, 3> p;
};
using PhasePoint = PhasePointT<double>;
using ExactPhasePoint = PhasePointT<Rational>;

// Point of the ambient R^3 carrying the canoe
//   w(1 - u^2) - v^2 = 0,  |u| <= 1,  w - v^2 >= 0.
template <class T>
struct CanoePointT {
  T u, v, w;
};
using CanoePoint = CanoePointT<double>;
using ExactCanoePoint = CanoePointT<Rational>;

// Angular momentum about the third axis.
template <class T>
T angular_momentum(const PhasePointT<T>& x) {
  return x.q[0] * x.p[1] - x.q[1] * x.p[0];
}

// exp(t + i phi) -> (0, sin phi, cos phi, 0, -t cos phi, t sin phi).
// The image sits in the zero level of angular_momentum.
inline PhasePoint embed(double t, double phi) {
  double c = std::cos(phi), s = std::sin(phi);
  return {{0.0, s, c}, {0.0, -t * c, t * s}};
}

// Same map with (cos, sin) supplied exactly by the circle parameter s.
inline ExactPhasePoint embed_exact(const Rational& t, const Rational& s) {
  auto [c, sn] = rational_circle(s);
  return {{Rational(0), sn, c}, {Rational(0), -(t * c), t * sn}};
}

// exp(t + i phi) -> (cos phi, t sin phi, t^2); the image is the canoe.
inline CanoePoint theta(double t, double phi) {
  return {std::cos(phi), t * std::sin(phi), t * t};
}

inline ExactCanoePoint theta_exact(const Rational& t, const Rational& s) {
  auto [c, sn] = rational_circle(s);
  return {c, t * sn, t * t};
}

enum class CanoeClass { member, singular_point, not_member };

inline std::string_view canoe_class_str(CanoeClass c) {
  switch (c) {
    case CanoeClass::member: return "member";
    case CanoeClass::singular_point: return "singular-point";
    default: return "not-member";
  }
}

// Equation and both inequalities within tol; the two cone points (+-1, 0, 0)
// are reported separately.
inline CanoeClass canoe_membership(const CanoePoint& pt, double tol) {
  double eq = pt.w * (1.0 - pt.u * pt.u) - pt.v * pt.v;
  if (std::fabs(eq) > tol || std::fabs(pt.u) > 1.0 + tol ||
      pt.w - pt.v * pt.v < -tol)
    return CanoeClass::not_member;
  if ((std::fabs(pt.u - 1.0) <= tol || std::fabs(pt.u + 1.0) <= tol) &&
      std::fabs(pt.v) <= tol && std::fabs(pt.w) <= tol)
    return CanoeClass::singular_point;
  return CanoeClass::member;
}

inline CanoeClass canoe_membership(const ExactCanoePoint& pt) {
  const Rational one(1);
  Rational eq = pt.w * (one - pt.u * pt.u) - pt.v * pt.v;
  if (!eq.is_zero() || pt.u > one || pt.u < -one ||
      (pt.w - pt.v * pt.v).sign() < 0)
    return CanoeClass::not_member;
  if ((pt.u == one || pt.u == -one) && pt.v.is_zero() && pt.w.is_zero())
    return CanoeClass::singular_point;
  return CanoeClass::member;
}

namespace detail {

inline constexpr int kSeriesTerms = 40;

inline const std::array<double, kSeriesTerms>& alpha_coeffs() {
  static const std::array<double, kSeriesTerms> c = [] {
    std::array<double, kSeriesTerms> a{};
    a[0] = 1.0;
    for (int j = 1; j < kSeriesTerms; ++j)
      a[j] = a[j - 1] / ((2.0 * j - 1.0) * (2.0 * j));
    return a;
  }();
  return c;
}

inline const std::array<double, kSeriesTerms>& beta_coeffs() {
  static const std::array<double, kSeriesTerms> c = [] {
    std::array<double, kSeriesTerms> a{};
    a[0] = 1.0;
    for (int j = 1; j < kSeriesTerms; ++j)
      a[j] = a[j - 1] / ((2.0 * j) * (2.0 * j + 1.0));
    return a;
  }();
  return c;
}

// First omitted term of the slower series under a geometric envelope; the
// product form keeps |w|^40 / 80! from overflowing on the way.
inline double series_tail_bound(double absw) {
  const double step = (2.0 * kSeriesTerms + 1.0) * (2.0 * kSeriesTerms + 2.0);
  if (absw >= step) return std::numeric_limits<double>::infinity();
  double term = 1.0;
  for (int j = 0; j < kSeriesTerms; ++j)
    term *= absw / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
  return term / (1.0 - absw / step);
}

inline void check_series_budget(double w) {
  if (!(series_tail_bound(std::fabs(w)) < 1e-15))
    throw ArithmeticError(
        "series budget exceeded: argument too large for the fixed 40-term sum");
}

inline double horner(const std::array<double, kSeriesTerms>& c, double w) {
  double acc = c[kSeriesTerms - 1];
  for (int j = kSeriesTerms - 2; j >= 0; --j) acc = acc * w + c[j];
  return acc;
}

}  // namespace detail

// sum_j w^j / (2j)!; alpha(t^2) = cosh t and alpha(-t^2) = cos t.
inline double alpha_series(double w) {
  detail::check_series_budget(w);
  return detail::horner(detail::alpha_coeffs(), w);
}

// sum_j w^j / (2j+1)!; t beta(t^2) = sinh t.
inline double beta_series(double w) {
  detail::check_series_budget(w);
  return detail::horner(detail::beta_coeffs(), w);
}

// The flattening map carries a printed and a corrected overall factor: with
// the factor 2 the composite with theta matches z + 1/z, without it the
// composite is half of that.
enum class PhiFactor { paper, corrected };

inline std::string_view phi_factor_str(PhiFactor f) {
  return f == PhiFactor::paper ? "paper" : "corrected";
}

inline PhiFactor parse_phi_factor(std::string_view s) {
  if (s == "paper") return PhiFactor::paper;
  if (s == "corrected") return PhiFactor::corrected;
  throw ParseError("factor must be paper or corrected", 0);
}

// u alpha(w) + i v beta(w), doubled under the corrected factor.
inline std::complex<double> phi(const CanoePoint& pt,
                                PhiFactor f = PhiFactor::corrected) {
  std::complex<double> base(pt.u * alpha_series(pt.w),
                            pt.v * beta_series(pt.w));
  return f == PhiFactor::corrected ? 2.0 * base : base;
}

// Sample grid on the canoe: nt log-radius values spread over [-tmax, tmax]
// crossed with nphi angles, t-major.
inline std::vector<CanoePoint> canoe_mesh(int nt, int nphi, double tmax) {
  if (nt < 2 || nphi < 1)
    throw ArithmeticError("canoe mesh needs nt >= 2 and nphi >= 1");
  std::vector<CanoePoint> out;
  out.reserve(static_cast<std::size_t>(nt) * static_cast<std::size_t>(nphi));
  for (int i = 0; i < nt; ++i) {
    double t = -tmax + 2.0 * tmax * i / (nt - 1);
    for (int j = 0; j < nphi; ++j)
      out.push_back(theta(t, 2.0 * std::numbers::pi * j / nphi));
  }
  return out;
}

}  // namespace aq
