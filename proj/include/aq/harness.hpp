#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aq/bracket.hpp"
#include "aq/multipoly.hpp"
#include "aq/rational.hpp"
#include "aq/torus.hpp"
#include "aq/torusfn.hpp"

namespace aq {

namespace detail {

// Gaussian elimination over Q(i). Returns a solution of A c = t with free
// variables set to zero, or nullopt when the system is inconsistent.
inline std::optional<std::vector<GaussianRational>> solve_exact(
    std::vector<std::vector<GaussianRational>> a,
    std::vector<GaussianRational> t) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(t[p], t[r]);
    GaussianRational inv = GaussianRational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
    t[r] = inv * t[r];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussianRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      t[i] = t[i] - f * t[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!t[i].is_zero()) return std::nullopt;
  std::vector<GaussianRational> sol(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = t[i];
  return sol;
}

// Basis of the right kernel of A, via reduced row echelon form.
inline std::vector<std::vector<GaussianRational>> kernel_exact(
    std::vector<std::vector<GaussianRational>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    GaussianRational inv = GaussianRational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussianRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(cols);
    v[free] = GaussianRational(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Small exact coordinates for sampling; never zero.
inline GaussianRational random_coord(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<long long> den(1, 3);
  while (true) {
    GaussianRational z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    if (!z.is_zero()) return z;
  }
}

inline std::vector<GaussianRational> random_free_coords(int m, std::mt19937& rng) {
  std::vector<GaussianRational> zs;
  zs.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) zs.push_back(random_coord(rng));
  return zs;
}

// Exponent vectors over `count` slots with total degree <= bound.
inline std::vector<std::vector<unsigned>> exponents_up_to(std::size_t count,
                                                          int bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(count, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == count) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = static_cast<unsigned>(e);
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace detail

// A polynomial in named generators, produced by the ansatz solver.
struct GeneratorExpression {
  bool found = false;
  MultiPoly expression;  // over the generator names, valid when found
  int weight_bound = 0;
  std::string note;
};

// Rewrites an invariant as a polynomial in the given generators, if possible
// within the weight bound: unknown coefficients on generator monomials are
// fixed by exact evaluation at random torus points, then the candidate is
// verified symbolically. Bidegrees, when present on every function, prune
// the monomial basis to the charge class of the target (charges are defined
// modulo n on the determinant-one torus).
inline GeneratorExpression rewrite_in_generators(
    const TorusFunction& target, const std::vector<TorusFunction>& gens,
    int weight_bound = 6, unsigned seed = 9001) {
  if (gens.empty()) throw ArithmeticError("rewrite needs generators");
  const int m = target.fn.coordinates();
  for (const auto& g : gens)
    if (g.fn.coordinates() != m)
      throw ArithmeticError("generator coordinate counts differ");
  const int n = m + 1;

  GeneratorExpression result;
  result.weight_bound = weight_bound;

  std::vector<std::string> names;
  names.reserve(gens.size());
  for (const auto& g : gens) names.push_back(g.name);

  bool use_charge = target.bidegree.has_value();
  for (const auto& g : gens) use_charge = use_charge && g.bidegree.has_value();

  std::vector<std::vector<unsigned>> basis;
  for (auto& e : detail::exponents_up_to(gens.size(), weight_bound)) {
    if (use_charge) {
      long holo = 0, anti = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        holo += static_cast<long>(e[i]) * gens[i].bidegree->first;
        anti += static_cast<long>(e[i]) * gens[i].bidegree->second;
      }
      long dh = (holo - target.bidegree->first) % n;
      long da = (anti - target.bidegree->second) % n;
      if (dh != 0 || da != 0) continue;
    }
    basis.push_back(std::move(e));
  }
  if (basis.empty()) {
    result.note = "no generator monomials in the target charge class";
    return result;
  }

  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const std::size_t points = basis.size() + 10 + 6 * static_cast<std::size_t>(attempt);
    std::vector<std::vector<GaussianRational>> a(points);
    std::vector<GaussianRational> t(points);
    for (std::size_t p = 0; p < points; ++p) {
      auto zs = detail::random_free_coords(m, rng);
      std::vector<GaussianRational> gv;
      gv.reserve(gens.size());
      for (const auto& g : gens) gv.push_back(g.fn.eval(zs));
      a[p].reserve(basis.size());
      for (const auto& e : basis) {
        GaussianRational v(1);
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (e[i] > 0) v = v * gv[i].pow(static_cast<long>(e[i]));
        a[p].push_back(v);
      }
      t[p] = target.fn.eval(zs);
    }
    auto sol = detail::solve_exact(std::move(a), std::move(t));
    if (!sol) {
      result.note = "no expression within the weight bound";
      return result;
    }
    MultiPoly expr = MultiPoly::constant(names, GaussianRational());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((*sol)[b].is_zero()) continue;
      MultiPoly mono = MultiPoly::constant(names, (*sol)[b]);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (basis[b][i] > 0)
          mono = mono * MultiPoly::variable(names, names[i], basis[b][i]);
      expr = expr + mono;
    }
    std::map<std::string, Laurent> vals;
    for (const auto& g : gens) vals.emplace(g.name, g.fn);
    if ((substitute_laurent(expr, vals) - target.fn).is_zero()) {
      result.found = true;
      result.expression = std::move(expr);
      return result;
    }
  }
  result.note = "sampling produced spurious solutions";
  return result;
}

// A corrected coefficient vector over the printed monomial support of a
// failed relation: the orthogonal projection of the printed coefficients
// onto the space of coefficient vectors that vanish identically.
struct CorrectedRelation {
  bool found = false;
  std::vector<std::string> monomials;
  std::vector<GaussianRational> printed;
  std::vector<GaussianRational> corrected;
  Rational distance_sq;
  std::string note;
};

inline CorrectedRelation corrected_relation_search(
    const MultiPoly& printed_diff, const std::vector<TorusFunction>& gens,
    unsigned seed = 4242) {
  CorrectedRelation out;
  const auto& names = printed_diff.vars();
  const int m = gens.empty() ? 0 : gens[0].fn.coordinates();
  std::map<std::string, const Laurent*> by_name;
  for (const auto& g : gens) by_name[g.name] = &g.fn;

  std::vector<Laurent> support;
  for (const auto& [exps, coeff] : printed_diff.terms()) {
    Laurent mono = Laurent::constant(m, GaussianRational(1));
    std::string label;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      auto it = by_name.find(names[i]);
      if (it == by_name.end())
        throw ArithmeticError("no generator named " + names[i]);
      mono = mono * it->second->pow(static_cast<int>(exps[i]));
      if (!label.empty()) label += "*";
      label += names[i];
      if (exps[i] > 1) label += "^" + std::to_string(exps[i]);
    }
    if (label.empty()) label = "1";
    support.push_back(std::move(mono));
    out.monomials.push_back(std::move(label));
    out.printed.push_back(coeff);
  }
  if (support.empty()) {
    out.note = "empty support";
    return out;
  }

  std::mt19937 rng(seed);
  std::vector<std::vector<GaussianRational>> kernel;
  bool verified = false;
  for (int attempt = 0; attempt < 3 && !verified; ++attempt) {
    const std::size_t points = support.size() + 12 + 8 * static_cast<std::size_t>(attempt);
    std::vector<std::vector<GaussianRational>> a(points);
    for (std::size_t p = 0; p < points; ++p) {
      auto zs = detail::random_free_coords(m, rng);
      a[p].reserve(support.size());
      for (const auto& s : support) a[p].push_back(s.eval(zs));
    }
    kernel = detail::kernel_exact(std::move(a));
    verified = true;
    for (const auto& k : kernel) {
      Laurent combo(m);
      for (std::size_t i = 0; i < support.size(); ++i)
        combo = combo + k[i] * support[i];
      if (!combo.is_zero()) {
        verified = false;
        break;
      }
    }
  }
  if (!verified) {
    out.note = "kernel did not stabilize";
    return out;
  }
  if (kernel.empty()) {
    out.note = "no identities supported on the printed monomials";
    return out;
  }

  // Least squares onto the kernel span: G x = b with the Hermitian product.
  const std::size_t kdim = kernel.size();
  std::vector<std::vector<GaussianRational>> gram(
      kdim, std::vector<GaussianRational>(kdim));
  std::vector<GaussianRational> rhs(kdim);
  for (std::size_t i = 0; i < kdim; ++i) {
    for (std::size_t j = 0; j < kdim; ++j) {
      GaussianRational s(0);
      for (std::size_t c = 0; c < support.size(); ++c)
        s = s + kernel[i][c].conj() * kernel[j][c];
      gram[i][j] = s;
    }
    GaussianRational s(0);
    for (std::size_t c = 0; c < support.size(); ++c)
      s = s + kernel[i][c].conj() * out.printed[c];
    rhs[i] = s;
  }
  auto x = detail::solve_exact(std::move(gram), std::move(rhs));
  if (!x) {
    out.note = "gram system degenerate";
    return out;
  }
  out.corrected.assign(support.size(), GaussianRational());
  for (std::size_t i = 0; i < kdim; ++i)
    for (std::size_t c = 0; c < support.size(); ++c)
      out.corrected[c] = out.corrected[c] + (*x)[i] * kernel[i][c];
  Rational d2(0);
  for (std::size_t c = 0; c < support.size(); ++c)
    d2 = d2 + (out.printed[c] - out.corrected[c]).norm();
  out.distance_sq = d2;
  out.found = true;
  return out;
}

namespace detail {

// The seven generators of the invariant ring for n = 3, keyed by the names
// used in the displayed relations.
inline std::vector<TorusFunction> su3_generators(OrbitCounting counting) {
  auto mk = [&](const std::string& name, int r, int s) {
    return TorusFunction(name, sigma_laurent(3, r, s, counting).constrain_last(),
                         std::make_pair(r, s));
  };
  return {mk("sigma1", 1, 0),  mk("sigmabar1", 0, 1), mk("sigma2", 2, 0),
          mk("sigmabar2", 0, 2), mk("sigma", 1, 1),     mk("rho", 2, 1),
          mk("rhobar", 1, 2)};
}

struct Su3Relations {
  std::vector<std::string> names;
  std::vector<MultiPoly> lhs, rhs;
};

inline Su3Relations su3_relation_polynomials() {
  Su3Relations rel;
  rel.names = {"sigma1", "sigmabar1", "sigma2", "sigmabar2",
               "sigma",  "rho",       "rhobar"};
  const auto& g = rel.names;
  auto v = [&](const std::string& nm) { return MultiPoly::variable(g, nm); };
  auto k = [&](long long q) {
    return MultiPoly::constant(g, GaussianRational(Rational(q)));
  };
  MultiPoly s1 = v("sigma1"), s1b = v("sigmabar1"), s2 = v("sigma2"),
            s2b = v("sigmabar2"), s = v("sigma"), r = v("rho"),
            rb = v("rhobar");
  MultiPoly disc3 = s1 * s1 * s2 * s2 - k(4) * s2 * s2 * s2 -
                    k(4) * s1 * s1 * s1 - k(27) + k(18) * s1 * s2;

  rel.lhs.push_back((s1 * s1 - k(4) * s2) * (s1b * s1b - k(4) * s2b));
  rel.rhs.push_back((s1 * s1b - k(2) * s).pow(2) + k(2) * r * s1b +
                    k(2) * rb * s1);

  rel.lhs.push_back(disc3 * s2b);
  rel.rhs.push_back((k(9) + s2.pow(3) - k(4) * s1 * s2) * s1b * s1b +
                    (k(4) * s1 * s1 - k(3) * s2 - s1 * s2 * s2) * s1b * s +
                    (k(6) * s1 - s2 * s2) * s1b * r +
                    (s2 * s2 - k(3) * s1) * s * s +
                    (k(9) - s1 * s2) * s * r + (s1 * s1 - k(3) * s2) * r * r);

  rel.lhs.push_back(disc3);
  rel.rhs.push_back(
      s1b.pow(3) - s2 * s1b * s1b * s + (s2 * s2 - k(2) * s1) * s1b * s1b * r +
      s1 * s1b * s * s -
      ((s1 * s1 - k(2) * s2) * s1 - s1.pow(3) + k(3) * s1 * s2 - k(3)) * s1b *
          s * r -
      s.pow(3) + (s1 * s1 - k(2) * s2) * s1b * r * r + s2 * s * s * r -
      s1 * s * r * r + r.pow(3));
  return rel;
}

}  // namespace detail

// Verdict for one displayed relation plus, on failure, the corrected
// coefficient vector supported on its printed monomials.
struct Su3RelationReport {
  RelationVerdict verdict;
  std::optional<CorrectedRelation> corrected;
};

// Checks the three displayed relations among the seven invariant generators
// exactly, under the given orbit counting. Failures carry the first
// counterexample point in the standard pool and a corrected-coefficient
// search over the printed support.
inline std::vector<Su3RelationReport> su3_relation_harness(
    OrbitCounting counting, unsigned seed = 2024) {
  std::vector<TorusFunction> gens = detail::su3_generators(counting);
  std::map<std::string, Laurent> vals;
  for (const auto& g : gens) vals.emplace(g.name, g.fn);
  detail::Su3Relations rel = detail::su3_relation_polynomials();

  std::vector<Su3RelationReport> out;
  for (std::size_t i = 0; i < rel.lhs.size(); ++i) {
    Su3RelationReport rep;
    rep.verdict.id = "su3_relation_" + std::to_string(i + 1);
    rep.verdict.convention = orbit_counting_str(counting);
    Laurent diff =
        substitute_laurent(rel.lhs[i] - rel.rhs[i], vals);
    rep.verdict.identity = diff.is_zero();
    if (!rep.verdict.identity) {
      auto found =
          find_witness(2, [&](const std::vector<GaussianRational>& zs) {
            return diff.eval(zs);
          });
      if (found) {
        rep.verdict.witness = TorusPoint::determinant_slice(found->first);
        rep.verdict.residual = found->second;
      }
      rep.corrected = corrected_relation_search(rel.lhs[i] - rel.rhs[i], gens,
                                                seed + static_cast<unsigned>(i));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

// The two-coordinate analogue of the first displayed relation, with the
// determinant substituted for sigma_2: (s1^2-4)(s1b^2-4) = (s1*s1b-2*sigma)^2.
inline RelationVerdict su2_analogue_relation(
    OrbitCounting counting = OrbitCounting::distinct_monomial) {
  const std::vector<std::string> names = {"sigma1", "sigmabar1", "sigma"};
  auto v = [&](const std::string& nm) { return MultiPoly::variable(names, nm); };
  auto k = [&](long long q) {
    return MultiPoly::constant(names, GaussianRational(Rational(q)));
  };
  MultiPoly s1 = v("sigma1"), s1b = v("sigmabar1"), s = v("sigma");
  MultiPoly diff = (s1 * s1 - k(4)) * (s1b * s1b - k(4)) -
                   (s1 * s1b - k(2) * s).pow(2);
  std::map<std::string, Laurent> vals = {
      {"sigma1", sigma_laurent(2, 1, 0, counting).constrain_last()},
      {"sigmabar1", sigma_laurent(2, 0, 1, counting).constrain_last()},
      {"sigma", sigma_laurent(2, 1, 1, counting).constrain_last()}};
  Laurent d = substitute_laurent(diff, vals);
  RelationVerdict out;
  out.id = "su2_relation";
  out.convention = orbit_counting_str(counting);
  out.identity = d.is_zero();
  if (!out.identity) {
    auto found = find_witness(1, [&](const std::vector<GaussianRational>& zs) {
      return d.eval(zs);
    });
    if (found) {
      out.witness = TorusPoint::determinant_slice(found->first);
      out.residual = found->second;
    }
  }
  return out;
}

}  // namespace aq
