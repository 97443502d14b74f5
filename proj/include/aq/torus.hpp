#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aq/convention.hpp"
#include "aq/rational.hpp"
#include "aq/strata.hpp"
#include "aq/unipoly.hpp"

namespace aq {

// Point of the maximal torus (C*)^n, exact coordinates.  When constrained the
// coordinates multiply to one (the determinant-one torus of SL(n)).
class TorusPoint {
 public:
  TorusPoint(std::vector<GaussianRational> coords, bool constrained)
      : coords_(std::move(coords)), constrained_(constrained) {
    if (coords_.empty()) throw ArithmeticError("torus point needs at least one coordinate");
    GaussianRational prod(1);
    for (const auto& z : coords_) {
      if (z.is_zero()) throw ArithmeticError("torus coordinates must be nonzero");
      prod = prod * z;
    }
    if (constrained_ && prod != GaussianRational(1))
      throw ArithmeticError("determinant constraint violated: product is " + prod.str());
  }

  // Builds the determinant-one point whose last coordinate is inferred.
  static TorusPoint determinant_slice(std::vector<GaussianRational> leading) {
    GaussianRational prod(1);
    for (const auto& z : leading) {
      if (z.is_zero()) throw ArithmeticError("torus coordinates must be nonzero");
      prod = prod * z;
    }
    leading.push_back(GaussianRational(1) / prod);
    return TorusPoint(std::move(leading), true);
  }

  const std::vector<GaussianRational>& coords() const { return coords_; }
  bool constrained() const { return constrained_; }
  int n() const { return static_cast<int>(coords_.size()); }

  std::vector<ComplexF> to_complex() const {
    std::vector<ComplexF> out;
    out.reserve(coords_.size());
    for (const auto& z : coords_) out.push_back(z.to_complex());
    return out;
  }

 private:
  std::vector<GaussianRational> coords_;
  bool constrained_;
};

inline std::vector<GaussianRational> elementary_symmetric(
    const std::vector<GaussianRational>& z) {
  std::vector<GaussianRational> e(z.size() + 1, GaussianRational(0));
  e[0] = GaussianRational(1);
  std::size_t used = 0;
  for (const auto& zj : z) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + e[k - 1] * zj;
  }
  return std::vector<GaussianRational>(e.begin() + 1, e.end());
}

inline std::vector<ComplexF> elementary_symmetric(const std::vector<ComplexF>& z) {
  std::vector<ComplexF> e(z.size() + 1, ComplexF(0));
  e[0] = ComplexF(1);
  std::size_t used = 0;
  for (const auto& zj : z) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += e[k - 1] * zj;
  }
  return std::vector<ComplexF>(e.begin() + 1, e.end());
}

// Coefficient vector of the quotient map: a_k = sign(k) * sigma_k for
// k = 1..n-1 on the determinant-one torus (sigma_n is pinned by the
// constraint), k = 1..n otherwise.
inline std::vector<GaussianRational> chi(const TorusPoint& pt,
                                         const QuotientConvention& conv) {
  auto e = elementary_symmetric(pt.coords());
  int len = pt.constrained() ? pt.n() - 1 : pt.n();
  std::vector<GaussianRational> a;
  a.reserve(static_cast<std::size_t>(len));
  for (int k = 1; k <= len; ++k)
    a.push_back(conv.sigma_sign(k) * e[static_cast<std::size_t>(k - 1)]);
  return a;
}

inline std::vector<ComplexF> chi_numeric(const std::vector<ComplexF>& coords, bool constrained,
                                         const QuotientConvention& conv) {
  for (const auto& z : coords)
    if (z == ComplexF(0)) throw ArithmeticError("torus coordinates must be nonzero");
  auto e = elementary_symmetric(coords);
  int n = static_cast<int>(coords.size());
  int len = constrained ? n - 1 : n;
  std::vector<ComplexF> a;
  a.reserve(static_cast<std::size_t>(len));
  for (int k = 1; k <= len; ++k)
    a.push_back(conv.sigma_sign_d(k) * e[static_cast<std::size_t>(k - 1)]);
  return a;
}

// Monic degree-n polynomial carrying the coefficient vector a_1..a_{n-1},
// with the constant coefficient supplied by the convention.
inline UniPoly reconstruct_poly(const std::vector<GaussianRational>& a,
                                const QuotientConvention& conv) {
  int n = static_cast<int>(a.size()) + 1;
  std::vector<GaussianRational> c(static_cast<std::size_t>(n + 1), GaussianRational(0));
  c[static_cast<std::size_t>(n)] = GaussianRational(1);
  for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(n - k)] = a[static_cast<std::size_t>(k - 1)];
  c[0] = conv.constant_coeff(n);
  return UniPoly(std::move(c));
}

inline std::vector<ComplexF> reconstruct_coeffs(const std::vector<ComplexF>& a,
                                                const QuotientConvention& conv) {
  int n = static_cast<int>(a.size()) + 1;
  std::vector<ComplexF> c(static_cast<std::size_t>(n + 1), ComplexF(0));
  c[static_cast<std::size_t>(n)] = ComplexF(1);
  for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(n - k)] = a[static_cast<std::size_t>(k - 1)];
  c[0] = conv.constant_coeff(n).to_complex();
  return c;
}

// Image of the central element zeta*I under the quotient map, for each n-th
// root of unity zeta; exact coordinates whenever zeta lies in Q(i).
struct CentralImage {
  ComplexF zeta;
  std::optional<GaussianRational> zeta_exact;
  std::vector<ComplexF> coeffs;
  std::optional<std::vector<GaussianRational>> coeffs_exact;
};

inline std::vector<CentralImage> bottom_stratum_points(int n, const QuotientConvention& conv) {
  if (n < 2 || n > 4) throw ArithmeticError("bottom strata are tabulated for 2 <= n <= 4");
  static const GaussianRational quarter_units[4] = {
      GaussianRational(1), GaussianRational(Rational(0), Rational(1)), GaussianRational(-1),
      GaussianRational(Rational(0), Rational(-1))};
  std::vector<CentralImage> out;
  for (int k = 0; k < n; ++k) {
    CentralImage im;
    if (4 * k % n == 0) {
      im.zeta_exact = quarter_units[4 * k / n];
      im.zeta = im.zeta_exact->to_complex();
      TorusPoint pt(std::vector<GaussianRational>(static_cast<std::size_t>(n), *im.zeta_exact),
                    true);
      im.coeffs_exact = chi(pt, conv);
      for (const auto& c : *im.coeffs_exact) im.coeffs.push_back(c.to_complex());
    } else {
      im.zeta = std::polar(1.0, 2.0 * M_PI * k / n);
      im.coeffs =
          chi_numeric(std::vector<ComplexF>(static_cast<std::size_t>(n), im.zeta), true, conv);
    }
    out.push_back(std::move(im));
  }
  return out;
}

// Rational point of the boundary curve u + iv = 2 e^{ia} + e^{-2ia} of the
// degree-3 real region, with e^{ia} given by the rational circle point of s.
inline std::pair<Rational, Rational> hypersurface_sample(const Rational& s) {
  auto [c, sn] = rational_circle(s);
  Rational u = Rational(2) * c + c * c - sn * sn;
  Rational v = Rational(2) * sn - Rational(2) * c * sn;
  return {u, v};
}

// The a = pi endpoint, which the rational circle reaches only as a limit.
inline std::pair<Rational, Rational> hypersurface_sample_pi() {
  return {Rational(-1), Rational(0)};
}

// Coefficient vector (a1, a2) of the boundary point: sigma_1 = u + iv and
// sigma_2 = conj(sigma_1) on the unitary determinant-one torus.
inline std::vector<GaussianRational> hypersurface_coeffs(const Rational& u, const Rational& v,
                                                         const QuotientConvention& conv) {
  GaussianRational s1{u, v}, s2{u, Rational(0) - v};
  return {conv.sigma_sign(1) * s1, conv.sigma_sign(2) * s2};
}

enum class RegionVerdict { interior, boundary, exterior };

inline std::string region_str(RegionVerdict v) {
  switch (v) {
    case RegionVerdict::interior: return "interior";
    case RegionVerdict::boundary: return "boundary";
    case RegionVerdict::exterior: return "exterior";
  }
  return "exterior";
}

struct RegionResult {
  RegionVerdict verdict = RegionVerdict::exterior;
  double modulus_deviation = 0;  // max | |root| - 1 | over root clusters
  Partition partition;           // multiplicity type of the reconstruction
};

// Decides where a coefficient vector sits relative to the compact real
// region: interior needs unimodular distinct roots, boundary unimodular with
// a collision, anything else is outside.
inline RegionResult region_membership(const std::vector<ComplexF>& point,
                                      const QuotientConvention& conv, double tol = 1e-9) {
  if (point.empty()) throw ArithmeticError("region membership needs degree >= 2");
  NumericClassification cls = classify_numeric(reconstruct_coeffs(point, conv), tol);
  RegionResult out;
  out.partition = cls.partition;
  for (const auto& r : cls.roots)
    out.modulus_deviation = std::max(out.modulus_deviation, std::abs(std::abs(r) - 1.0));
  if (out.modulus_deviation <= tol)
    out.verdict = cls.partition.max_part() >= 2 ? RegionVerdict::boundary : RegionVerdict::interior;
  return out;
}

// chi of (e^{i t_1}, ..., e^{i t_n}) for a Weyl-alcove angle vector:
// descending order and zero sum are required.
inline std::vector<ComplexF> alcove_sample(const std::vector<double>& theta,
                                           const QuotientConvention& conv) {
  if (theta.empty()) throw ArithmeticError("alcove sample needs at least one angle");
  double sum = 0, amax = 0;
  for (double t : theta) {
    sum += t;
    amax = std::max(amax, std::abs(t));
  }
  if (std::abs(sum) > 1e-12 * (1 + amax))
    throw ArithmeticError("alcove angles must sum to zero");
  for (std::size_t j = 0; j + 1 < theta.size(); ++j)
    if (theta[j] < theta[j + 1]) throw ArithmeticError("alcove angles must be sorted descending");
  std::vector<ComplexF> coords;
  coords.reserve(theta.size());
  for (double t : theta) coords.push_back(std::polar(1.0, t));
  return chi_numeric(coords, true, conv);
}

// Squared log-modulus vector norm; zero exactly on the compact torus.  The
// inner-product scale on the diagonal subalgebra is configurable.
inline double kaehler_potential(const std::vector<ComplexF>& coords, double scale = 1.0) {
  double total = 0;
  for (const auto& z : coords) {
    if (z == ComplexF(0)) throw ArithmeticError("torus coordinates must be nonzero");
    double t = std::log(std::abs(z));
    total += t * t;
  }
  return scale * total;
}

inline double kaehler_potential(const TorusPoint& pt, double scale = 1.0) {
  double total = 0;
  for (const auto& z : pt.coords()) {
    double t = 0.5 * std::log(z.norm().to_double());
    total += t * t;
  }
  return scale * total;
}

// Diagonal parametrization z -> (2z + z^{-2}, z^2 + 2z^{-1}) carrying the
// degree-2 slice onto the multiple-root locus of the degree-3 slice
// (sigma-style coordinates; apply the convention signs for reconstruction).
inline std::pair<GaussianRational, GaussianRational> su2_embedding(const GaussianRational& z) {
  if (z.is_zero()) throw ArithmeticError("torus coordinates must be nonzero");
  GaussianRational zi = GaussianRational(1) / z;
  return {GaussianRational(2) * z + zi * zi, z * z + GaussianRational(2) * zi};
}

}  // namespace aq
