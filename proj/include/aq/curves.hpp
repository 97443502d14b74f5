#pragma once

// Samplers for the plane and space curves attached to the quotient: images
// of circles and radial lines under the trace coordinate, the boundary
// curve of the degree-3 real region, the totally degenerate curve, alcove
// facet images, and the reduced pendulum surface.  Degenerate parameter
// values (collapsed ellipse, double ray) are flagged, not rejected.

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "aq/pendulum.hpp"
#include "aq/strata.hpp"
#include "aq/torus.hpp"

namespace aq {

enum class CurveFamily {
  ellipse,
  hyperbola,
  deltoid,
  canoe,
  dn_curve,
  alcove_boundary,
};

inline std::string curve_family_str(CurveFamily f) {
  switch (f) {
    case CurveFamily::ellipse: return "ellipse";
    case CurveFamily::hyperbola: return "hyperbola";
    case CurveFamily::deltoid: return "deltoid";
    case CurveFamily::canoe: return "canoe";
    case CurveFamily::dn_curve: return "dn-curve";
    case CurveFamily::alcove_boundary: return "alcove-boundary";
  }
  return "ellipse";
}

inline CurveFamily parse_curve_family(const std::string& s) {
  if (s == "ellipse") return CurveFamily::ellipse;
  if (s == "hyperbola") return CurveFamily::hyperbola;
  if (s == "deltoid") return CurveFamily::deltoid;
  if (s == "canoe") return CurveFamily::canoe;
  if (s == "dn-curve") return CurveFamily::dn_curve;
  if (s == "alcove-boundary") return CurveFamily::alcove_boundary;
  throw ParseError("unknown curve family '" + s + "'", 0);
}

struct CurveSample {
  CurveFamily family = CurveFamily::ellipse;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> points;
  std::vector<std::pair<std::string, std::string>> params;
  bool degenerate = false;
  std::string note;
};

// Image of the circle |z| = e^t under z + 1/z:
//   a -> (2 cosh t cos a, 2 sinh t sin a),
// an ellipse with foci +-2; at t = 0 it collapses onto the segment [-2, 2].
inline CurveSample ellipse_curve(double t, int count) {
  if (count < 2) throw ArithmeticError("curve sampling needs at least 2 points");
  CurveSample out;
  out.family = CurveFamily::ellipse;
  out.columns = {"x", "y"};
  out.params = {{"t", std::to_string(t)}};
  for (int k = 0; k < count; ++k) {
    double a = -M_PI + 2.0 * M_PI * k / count;
    out.points.push_back({2.0 * std::cosh(t) * std::cos(a), 2.0 * std::sinh(t) * std::sin(a)});
  }
  if (t == 0.0) {
    out.degenerate = true;
    out.note = "t = 0: the ellipse collapses onto the segment [-2, 2], traversed twice";
  }
  return out;
}

// Image of the radial line arg z = a under z + 1/z:
//   t -> (2 cosh t cos a, 2 sinh t sin a),
// one branch of a hyperbola with foci +-2; at sin a = 0 it degenerates to a
// double ray out of +2 or -2.
inline CurveSample hyperbola_curve(double angle, int count, double tmax = 3.0) {
  if (count < 2) throw ArithmeticError("curve sampling needs at least 2 points");
  if (tmax <= 0) throw ArithmeticError("tmax must be positive");
  CurveSample out;
  out.family = CurveFamily::hyperbola;
  out.columns = {"x", "y"};
  out.params = {{"angle", std::to_string(angle)}, {"tmax", std::to_string(tmax)}};
  for (int k = 0; k < count; ++k) {
    double t = -tmax + 2.0 * tmax * k / (count - 1);
    out.points.push_back(
        {2.0 * std::cosh(t) * std::cos(angle), 2.0 * std::sinh(t) * std::sin(angle)});
  }
  if (std::sin(angle) == 0.0) {
    out.degenerate = true;
    double e = std::cos(angle) >= 0 ? 2.0 : -2.0;
    out.note = "sin(angle) = 0: the branch degenerates to a double ray from " +
               std::to_string(e);
  }
  return out;
}

namespace detail {

// Exact boundary point of the degree-3 real region at the antipode of the
// rational circle point of s; together with hypersurface_sample this covers
// the whole deltoid with rational parameters.
inline std::pair<Rational, Rational> deltoid_antipode(const Rational& s) {
  auto [c, sn] = rational_circle(s);
  Rational u = Rational(-2) * c + c * c - sn * sn;
  Rational v = Rational(-2) * sn - Rational(2) * c * sn;
  return {u, v};
}

}  // namespace detail

// Boundary of the degree-3 real region, sampled exactly: rational circle
// parameters cover the half of the deltoid with |arg| <= pi/2 and their
// antipodes cover the rest.
inline CurveSample deltoid_curve(int count) {
  if (count < 2) throw ArithmeticError("curve sampling needs at least 2 points");
  CurveSample out;
  out.family = CurveFamily::deltoid;
  out.columns = {"u", "v"};
  out.params = {{"count", std::to_string(count)}};
  int half = (count + 1) / 2;
  int denom = half > 1 ? half - 1 : 1;
  for (int k = 0; k < half; ++k) {
    Rational s(2 * k - (half - 1), denom);
    auto [u, v] = hypersurface_sample(s);
    out.points.push_back({u.to_double(), v.to_double()});
  }
  for (int k = 0; k < count - half; ++k) {
    Rational s(2 * k - (half - 1), denom);
    auto [u, v] = detail::deltoid_antipode(s);
    out.points.push_back({u.to_double(), v.to_double()});
  }
  return out;
}

// The reduced pendulum surface, meshed over the parameter rectangle.
inline CurveSample canoe_curve(int nt, int nphi, double tmax) {
  CurveSample out;
  out.family = CurveFamily::canoe;
  out.columns = {"u", "v", "w"};
  out.params = {{"nt", std::to_string(nt)},
                {"nphi", std::to_string(nphi)},
                {"tmax", std::to_string(tmax)}};
  for (const CanoePoint& pt : canoe_mesh(nt, nphi, tmax))
    out.points.push_back({pt.u, pt.v, pt.w});
  return out;
}

// Totally degenerate polynomials (z - w)^n over the rational circle, all
// coefficients exact; columns list real and imaginary parts of a1..an.
inline CurveSample dn_curve_samples(int n, int count) {
  if (n < 2) throw ArithmeticError("total degeneracy needs degree >= 2");
  if (count < 2) throw ArithmeticError("curve sampling needs at least 2 points");
  CurveSample out;
  out.family = CurveFamily::dn_curve;
  for (int k = 1; k <= n; ++k) {
    out.columns.push_back("re_a" + std::to_string(k));
    out.columns.push_back("im_a" + std::to_string(k));
  }
  out.params = {{"n", std::to_string(n)}, {"count", std::to_string(count)}};
  int half = (count + 1) / 2;
  int denom = half > 1 ? half - 1 : 1;
  for (int k = 0; k < count; ++k) {
    bool antipode = k >= half;
    Rational s(2 * (antipode ? k - half : k) - (half - 1), denom);
    GaussianRational w = rational_circle_point(s);
    if (antipode) w = -w;
    std::vector<double> row;
    for (const GaussianRational& a : dn_curve(n, w)) {
      row.push_back(a.re().to_double());
      row.push_back(a.im().to_double());
    }
    out.points.push_back(std::move(row));
  }
  return out;
}

// Image of one alcove facet of the three-coordinate compact torus: angle
// vectors (t, t, -2t) map onto the boundary of the real region.
inline CurveSample alcove_boundary_curve(int count, const QuotientConvention& conv,
                                         double tmax = 2.0) {
  if (count < 2) throw ArithmeticError("curve sampling needs at least 2 points");
  if (tmax <= 0 || tmax > 2.0 * M_PI / 3.0 + 1e-9)
    throw ArithmeticError("facet parameter range must stay within (0, 2 pi / 3]");
  CurveSample out;
  out.family = CurveFamily::alcove_boundary;
  out.columns = {"re_a1", "im_a1", "re_a2", "im_a2"};
  out.params = {{"count", std::to_string(count)},
                {"tmax", std::to_string(tmax)},
                {"convention", conv.str()}};
  for (int k = 0; k < count; ++k) {
    double t = tmax * k / (count - 1);
    std::vector<ComplexF> a = alcove_sample({t, t, -2.0 * t}, conv);
    out.points.push_back({a[0].real(), a[0].imag(), a[1].real(), a[1].imag()});
  }
  return out;
}

}  // namespace aq
