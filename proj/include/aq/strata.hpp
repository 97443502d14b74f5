#pragma once

// Stratum classification of normalized polynomials by root multiplicities,
// and membership in the multiple-root varieties: the D_k chain, closures and
// open strata of a multiplicity type, and the codimension-two locus of two
// double roots in degree four.

#include "aq/discres.hpp"
#include "aq/partition.hpp"
#include "aq/roots.hpp"
#include "aq/unipoly.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace aq {

// Root multiplicity type: a degree-d squarefree factor of multiplicity m
// contributes d parts equal to m.
inline Partition classify_exact(const UniPoly& p) {
  if (!p.is_monic()) throw ArithmeticError("classification requires a monic polynomial");
  std::vector<int> parts;
  for (const auto& [f, m] : squarefree_decomposition(p))
    for (int k = 0; k < f.degree(); ++k) parts.push_back(m);
  return Partition(std::move(parts));
}

struct NumericClassification {
  Partition partition;
  std::vector<ComplexF> roots;  // cluster centroids, multiplicity = cluster size
  double radius = 0;
  double min_gap = 0;
  bool ill_conditioned = false;
};

// Floating companion of classify_exact.  Coefficients are lowest-first and
// include the leading one; tol is the caller's separation tolerance, widened
// internally by the multiple-root noise floor of the coefficient scale.
inline NumericClassification classify_numeric(const std::vector<ComplexF>& coeffs_low_first,
                                              double tol) {
  if (tol <= 0) throw ArithmeticError("separation tolerance must be positive");
  std::vector<ComplexF> roots = poly_roots(coeffs_low_first);
  double scale = 0;
  for (const auto& c : coeffs_low_first) scale = std::max(scale, std::abs(c));
  RootClusters cl =
      cluster_roots(roots, tol, root_noise_floor(static_cast<int>(roots.size()), scale));
  std::vector<int> parts = cl.sizes;
  NumericClassification out;
  out.partition = Partition(std::move(parts));
  out.roots = cl.centroids;
  out.radius = cl.radius;
  out.min_gap = cl.min_gap;
  out.ill_conditioned = cl.ill_conditioned;
  return out;
}

inline NumericClassification classify_numeric(const UniPoly& p, double tol) {
  std::vector<ComplexF> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.push_back(a.to_complex());
  return classify_numeric(c, tol);
}

enum class MemberVerdict { member, boundary_of, not_member };

inline std::string verdict_str(MemberVerdict v) {
  switch (v) {
    case MemberVerdict::member: return "member";
    case MemberVerdict::boundary_of: return "boundary-of";
    case MemberVerdict::not_member: return "not-member";
  }
  return "not-member";
}

struct MembershipResult {
  MemberVerdict verdict = MemberVerdict::not_member;
  std::vector<GaussianRational> residuals;  // defining-equation values, when any
  std::string note;
};

namespace detail {
inline std::vector<GaussianRational> tail_coeffs(const UniPoly& p) {
  const int n = p.degree();
  std::vector<GaussianRational> tail;
  for (int k = 1; k <= n; ++k) tail.push_back(p.coeff(n - k));
  return tail;
}
}  // namespace detail

// D_k: some root has multiplicity >= k; cut out by the k-1 equations of the
// derivative discriminant chain.
inline MembershipResult membership_dk(const UniPoly& p, int k) {
  if (!p.is_monic()) throw ArithmeticError("membership requires a monic polynomial");
  const int n = p.degree();
  if (k < 2 || k > n) throw ArithmeticError("D_k requires 2 <= k <= degree");
  MembershipResult out;
  out.residuals = disc_chain(n, k - 1).eval(detail::tail_coeffs(p));
  bool all_zero = true;
  for (const auto& v : out.residuals) all_zero = all_zero && v.is_zero();
  out.verdict = all_zero ? MemberVerdict::member : MemberVerdict::not_member;
  return out;
}

struct StratumLabel {
  Partition nu;
  bool closure = true;  // closure D_nu vs open stratum D^o_nu
  // When set, the ambient is the SU(n) slice: the constant coefficient of
  // the polynomial must equal this value (convention-dependent).
  std::optional<GaussianRational> slice_constant;
};

// Membership in a multiplicity stratum, decided by exact classification and
// the merge order (the closure of nu is the union of the strata nu' <= nu).
inline MembershipResult membership(const UniPoly& p, const StratumLabel& label) {
  if (!p.is_monic()) throw ArithmeticError("membership requires a monic polynomial");
  if (p.degree() != label.nu.n())
    throw ArithmeticError("degree " + std::to_string(p.degree()) + " does not match stratum of " +
                          std::to_string(label.nu.n()));
  MembershipResult out;
  if (label.slice_constant && p.coeff(0) != *label.slice_constant) {
    out.note = "constant coefficient " + p.coeff(0).str() + " off the slice (expected " +
               label.slice_constant->str() + ")";
    return out;
  }
  Partition type = classify_exact(p);
  if (type == label.nu) {
    out.verdict = MemberVerdict::member;
  } else if (partition_leq(type, label.nu)) {
    out.verdict = label.closure ? MemberVerdict::member : MemberVerdict::boundary_of;
    out.note = "stratum type " + type.str();
  } else {
    out.note = "stratum type " + type.str();
  }
  return out;
}

// Defining equations for the closure of the (2,2) stratum in degree 4,
// in the monic coefficients a1..a4.  The corrected pair is derived from the
// expansion of (z^2 - s z + p)^2: a1 = -2s, a2 = s^2 + 2p, a3 = -2sp,
// a4 = p^2, so (a1^2 - 4a2) = -8p gives
//   (a1^2 - 4a2) a1 + 8 a3 = 0  and  (a1^2 - 4a2)^2 - 64 a4 = 0.
// The printed variants carry 4 a3 and 16 a4 instead and are kept for
// side-by-side evaluation.
struct D22System {
  MultiPoly corrected_1, corrected_2;
  MultiPoly printed_1, printed_2;
};

inline D22System d22_system() {
  std::vector<std::string> vars{"a1", "a2", "a3", "a4"};
  auto A = [&](const char* n) { return MultiPoly::variable(vars, n); };
  MultiPoly defect = A("a1").pow(2) - GaussianRational(4) * A("a2");  // -8p on the stratum
  D22System s{
      defect * A("a1") + GaussianRational(8) * A("a3"),
      defect.pow(2) - GaussianRational(64) * A("a4"),
      defect * A("a1") + GaussianRational(4) * A("a3"),
      defect.pow(2) - GaussianRational(16) * A("a4"),
  };
  return s;
}

inline MembershipResult membership_d22(const UniPoly& p) {
  if (!p.is_monic() || p.degree() != 4)
    throw ArithmeticError("the (2,2) locus lives in monic degree 4");
  auto tail = detail::tail_coeffs(p);
  std::map<std::string, GaussianRational> pt{
      {"a1", tail[0]}, {"a2", tail[1]}, {"a3", tail[2]}, {"a4", tail[3]}};
  D22System s = d22_system();
  MembershipResult out;
  out.residuals = {s.corrected_1.eval(pt), s.corrected_2.eval(pt)};
  out.verdict = out.residuals[0].is_zero() && out.residuals[1].is_zero()
                    ? MemberVerdict::member
                    : MemberVerdict::not_member;
  return out;
}

// Tail coefficients a1..an of (z - w)^n, the curve of bottom-stratum points.
inline std::vector<GaussianRational> dn_curve(int n, const GaussianRational& w) {
  if (n < 2) throw ArithmeticError("dn_curve requires degree >= 2");
  std::vector<GaussianRational> tail;
  GaussianRational binom(1), wpow(1);
  for (int k = 1; k <= n; ++k) {
    binom = binom * GaussianRational(n - k + 1) / GaussianRational(k);
    wpow = wpow * (-w);
    tail.push_back(binom * wpow);
  }
  return tail;
}

// Monic polynomial with exactly the multiplicity type nu and distinct
// rational roots drawn from the seeded generator.
inline UniPoly sample_stratum(const Partition& nu, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<GaussianRational> roots;
  while (static_cast<int>(roots.size()) < nu.size()) {
    GaussianRational r{Rational(num(rng), den(rng))};
    bool fresh = true;
    for (const auto& o : roots) fresh = fresh && o != r;
    if (fresh) roots.push_back(r);
  }
  std::vector<std::pair<GaussianRational, int>> rm;
  for (int k = 0; k < nu.size(); ++k)
    rm.emplace_back(roots[static_cast<std::size_t>(k)], nu.parts()[static_cast<std::size_t>(k)]);
  return UniPoly::from_root_multiplicities(rm);
}

// The three partial derivatives of the cubic discriminant vanish identically
// along the curve of triple roots (a1,a2,a3) = (-3u, 3u^2, -u^3).
inline bool d3_partials_vanish_on_bottom_curve() {
  MultiPoly d3 = disc_chain(3, 1).equations[0];
  std::vector<std::string> uv{"u"};
  MultiPoly u = MultiPoly::variable(uv, "u");
  std::map<std::string, MultiPoly> curve{
      {"a1", GaussianRational(-3) * u},
      {"a2", GaussianRational(3) * u.pow(2)},
      {"a3", GaussianRational(-1) * u.pow(3)},
  };
  for (const char* var : {"a1", "a2", "a3"})
    if (!d3.derivative(var).subst(curve).is_zero()) return false;
  return true;
}

}  // namespace aq
