#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aq/multipoly.hpp"
#include "aq/rational.hpp"
#include "aq/torus.hpp"
#include "aq/torusfn.hpp"

namespace aq {

// Poisson bracket of Laurent monomial functions on the torus:
//   {z^p zbar^q, z^p' zbar^q'} = -2i * sum_j (p_j q'_j - q_j p'_j) * product.
inline Laurent laurent_bracket(const Laurent& a, const Laurent& b) {
  if (a.coordinates() != b.coordinates())
    throw ArithmeticError("bracket of Laurent functions on different tori");
  const int m = a.coordinates();
  const GaussianRational minus_two_i(Rational(0), Rational(-2));
  Laurent out(m);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      long long w = 0;
      for (int j = 0; j < m; ++j) {
        w += static_cast<long long>(ka[j]) * kb[m + j] -
             static_cast<long long>(ka[m + j]) * kb[j];
      }
      if (w == 0) continue;
      std::vector<int> key(2 * m);
      for (int j = 0; j < 2 * m; ++j) key[j] = ka[j] + kb[j];
      out.add_term(std::move(key),
                   minus_two_i * GaussianRational(Rational(w)) * ca * cb);
    }
  }
  return out;
}

// Pairs up variables named x<k> / y<k> in a shared variable list.
inline std::vector<std::pair<std::size_t, std::size_t>> conjugate_pairs(
    const std::vector<std::string>& vars) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty() || vars[i][0] != 'x') continue;
    auto it = index.find("y" + vars[i].substr(1));
    if (it != index.end()) pairs.emplace_back(i, it->second);
  }
  return pairs;
}

// Bracket in real chart coordinates, one conjugate pair per torus factor:
//   {f, g} = sum_k (f_x g_y - f_y g_x)(x_k^2 + y_k^2).
// Variables without an x/y partner are treated as constants.
inline MultiPoly base_bracket(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly fa = f + (g - g);
  MultiPoly ga = g + (f - f);
  const auto& vars = fa.vars();
  MultiPoly out = MultiPoly::constant(vars, GaussianRational());
  for (auto [ix, iy] : conjugate_pairs(vars)) {
    MultiPoly radial = MultiPoly::variable(vars, vars[ix]) *
                           MultiPoly::variable(vars, vars[ix]) +
                       MultiPoly::variable(vars, vars[iy]) *
                           MultiPoly::variable(vars, vars[iy]);
    out = out + (fa.derivative(vars[ix]) * ga.derivative(vars[iy]) -
                 fa.derivative(vars[iy]) * ga.derivative(vars[ix])) *
                    radial;
  }
  return out;
}

inline RatFn base_bracket(const RatFn& f, const RatFn& g) {
  RatFn zero_union = (f - f) + (g - g);
  RatFn fa = f + zero_union;
  RatFn ga = g + zero_union;
  const auto& vars = fa.num().vars();
  RatFn out = zero_union;
  const MultiPoly one = MultiPoly::constant(vars, GaussianRational(Rational(1)));
  for (auto [ix, iy] : conjugate_pairs(vars)) {
    MultiPoly radial = MultiPoly::variable(vars, vars[ix]) *
                           MultiPoly::variable(vars, vars[ix]) +
                       MultiPoly::variable(vars, vars[iy]) *
                           MultiPoly::variable(vars, vars[iy]);
    out = out + (fa.derivative(vars[ix]) * ga.derivative(vars[iy]) -
                 fa.derivative(vars[iy]) * ga.derivative(vars[ix])) *
                    RatFn(radial, one);
  }
  return out;
}

// Outcome of checking one claimed identity, with a counterexample when false.
struct RelationVerdict {
  std::string id;
  bool identity = false;
  std::string convention;
  std::optional<TorusPoint> witness;
  GaussianRational residual;
};

// Candidate coordinate values for counterexample searches, tried in order.
inline const std::vector<GaussianRational>& witness_pool() {
  static const std::vector<GaussianRational> pool = {
      GaussianRational(Rational(1)),
      GaussianRational(Rational(-1)),
      GaussianRational(Rational(0), Rational(1)),
      GaussianRational(Rational(2)),
      GaussianRational(Rational(1, 2)),
      GaussianRational(Rational(1), Rational(1)),
  };
  return pool;
}

// Lexicographic scan of pool^m for a point with nonzero residual.
template <typename F>
std::optional<std::pair<std::vector<GaussianRational>, GaussianRational>>
find_witness(int m, F&& residual_at) {
  const auto& pool = witness_pool();
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<GaussianRational> zs;
    zs.reserve(idx.size());
    for (std::size_t i : idx) zs.push_back(pool[i]);
    GaussianRational r = residual_at(zs);
    if (!r.is_zero()) return std::make_pair(std::move(zs), std::move(r));
    int pos = m - 1;
    while (pos >= 0 && idx[pos] + 1 == pool.size()) idx[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++idx[pos];
  }
}

// Power-sum commutation identity on the unconstrained torus:
//   (i/2) {tau_(j1,k1), tau_(j2,k2)} = (j1 k2 - j2 k1) tau_(j1+j2, k1+k2).
// Checked as a polynomial identity in the chart coordinates.
inline RelationVerdict verify_tau_bracket(int n, int j1, int k1, int j2,
                                          int k2) {
  if (n < 1) throw ArithmeticError("tau bracket check needs n >= 1");
  if (j1 < 0 || k1 < 0 || j2 < 0 || k2 < 0 || j1 + k1 < 1 || j2 + k2 < 1)
    throw ArithmeticError("tau bidegrees must be nonnegative with j+k >= 1");
  Laurent t1 = tau_laurent(n, j1, k1);
  Laurent t2 = tau_laurent(n, j2, k2);
  Laurent sum = tau_laurent(n, j1 + j2, k1 + k2);
  const GaussianRational half_i(Rational(0), Rational(1, 2));
  const GaussianRational weight(Rational(static_cast<long long>(j1) * k2 -
                                         static_cast<long long>(j2) * k1));
  RatFn lhs = (half_i * laurent_bracket(t1, t2)).to_ratfn();
  RatFn rhs = (weight * sum).to_ratfn();
  RelationVerdict v;
  v.id = "tau_bracket(" + std::to_string(j1) + "," + std::to_string(k1) +
         ";" + std::to_string(j2) + "," + std::to_string(k2) + ")";
  v.convention = "unconstrained";
  v.identity = RatFn::equal(lhs, rhs);
  if (!v.identity) {
    Laurent diff =
        half_i * laurent_bracket(t1, t2) - weight * sum;
    auto found = find_witness(n, [&](const std::vector<GaussianRational>& zs) {
      return diff.eval(zs);
    });
    if (found) {
      v.witness = TorusPoint(found->first, false);
      v.residual = found->second;
    }
  }
  return v;
}

// Antisymmetric matrix of pairwise brackets of a generating set.
struct BracketMatrix {
  std::vector<TorusFunction> generators;
  std::vector<std::vector<Laurent>> entries;
};

inline BracketMatrix bracket_matrix(std::vector<TorusFunction> gens) {
  BracketMatrix bm;
  const std::size_t g = gens.size();
  if (g == 0) throw ArithmeticError("bracket matrix needs generators");
  const int m = gens[0].fn.coordinates();
  bm.entries.assign(g, std::vector<Laurent>(g, Laurent(m)));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      bm.entries[i][j] = laurent_bracket(gens[i].fn, gens[j].fn);
      bm.entries[j][i] = -bm.entries[i][j];
    }
  }
  bm.generators = std::move(gens);
  return bm;
}

inline std::vector<std::vector<GaussianRational>> evaluate_matrix(
    const BracketMatrix& bm, const std::vector<GaussianRational>& zs) {
  const std::size_t g = bm.generators.size();
  std::vector<std::vector<GaussianRational>> out(
      g, std::vector<GaussianRational>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) out[i][j] = bm.entries[i][j].eval(zs);
  return out;
}

// Rank-two chart on the single-coordinate quotient: X, Y are the real and
// imaginary parts of z + 1/z and tau vanishes exactly on the unit circle
// images with |X| >= 2.
struct Su2Chart {
  TorusFunction X, Y, tau;
  MultiPoly relation;       // vars X, Y, tau
  MultiPoly bracket_XY;     // claimed {X, Y}
  MultiPoly bracket_Xtau;   // claimed {X, tau}
  MultiPoly bracket_Ytau;   // claimed {Y, tau}

  bool relation_holds() const {
    std::map<std::string, Laurent> vals = {
        {"X", X.fn}, {"Y", Y.fn}, {"tau", tau.fn}};
    return substitute_laurent(relation, vals).is_zero();
  }

  bool brackets_hold() const {
    std::map<std::string, Laurent> vals = {
        {"X", X.fn}, {"Y", Y.fn}, {"tau", tau.fn}};
    return (laurent_bracket(X.fn, Y.fn) - substitute_laurent(bracket_XY, vals))
               .is_zero() &&
           (laurent_bracket(X.fn, tau.fn) -
            substitute_laurent(bracket_Xtau, vals))
               .is_zero() &&
           (laurent_bracket(Y.fn, tau.fn) -
            substitute_laurent(bracket_Ytau, vals))
               .is_zero();
  }
};

inline Su2Chart su2_chart() {
  Laurent z = Laurent::monomial(1, GaussianRational(Rational(1)), {1}, {0});
  Laurent zi = Laurent::monomial(1, GaussianRational(Rational(1)), {-1}, {0});
  Laurent w = z + zi;
  Laurent sigma =
      Laurent::monomial(1, GaussianRational(Rational(1)), {1}, {-1}) +
      Laurent::monomial(1, GaussianRational(Rational(1)), {-1}, {1});
  Laurent t = Laurent::constant(1, GaussianRational(Rational(1, 2))) +
              GaussianRational(Rational(-1, 4)) * sigma;

  const std::vector<std::string> vars = {"X", "Y", "tau"};
  MultiPoly X = MultiPoly::variable(vars, "X");
  MultiPoly Y = MultiPoly::variable(vars, "Y");
  MultiPoly T = MultiPoly::variable(vars, "tau");
  auto k = [&](long long q) {
    return MultiPoly::constant(vars, GaussianRational(Rational(q)));
  };
  return Su2Chart{TorusFunction("X", real_part(w)),
                  TorusFunction("Y", imag_part(w)),
                  TorusFunction("tau", t),
                  Y * Y - (X * X + Y * Y + k(4) * T - k(4)) * T,
                  X * X + Y * Y + k(8) * T - k(4),
                  (k(2) - k(2) * T) * Y,
                  k(2) * T * X};
}

// Branch of the chart relation solved for tau, valid on the image region.
inline double su2_tau_closed_form(double X, double Y) {
  double s = X * X + Y * Y - 4.0;
  return 0.5 * std::sqrt(Y * Y + s * s / 16.0) - s / 8.0;
}

// Real and imaginary parts of the constrained power sums tau_(j,k) with
// 1 <= j+k <= n and j >= k; the diagonal ones are already real.
inline std::vector<Laurent> realified_tau_set(int n) {
  if (n < 2) throw ArithmeticError("realified tau set needs n >= 2");
  std::vector<Laurent> out;
  for (int d = 1; d <= n; ++d) {
    for (int j = d; 2 * j >= d; --j) {
      int k = d - j;
      Laurent t = tau_laurent(n, j, k).constrain_last();
      out.push_back(real_part(t));
      if (j != k) out.push_back(imag_part(t));
    }
  }
  return out;
}

// Rank of the Poisson structure at a point, measured on the realified
// invariant functions via singular values of the pairwise bracket matrix.
inline int rank_at(int n, const TorusPoint& pt, double tol = 1e-9) {
  if (pt.n() != n) throw ArithmeticError("point size mismatch in rank_at");
  std::vector<Laurent> fns = realified_tau_set(n);
  std::vector<GaussianRational> free(pt.coords().begin(),
                                     pt.coords().end() - 1);
  const std::size_t g = fns.size();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g),
                                            static_cast<Eigen::Index>(g));
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = a + 1; b < g; ++b) {
      GaussianRational v = laurent_bracket(fns[a], fns[b]).eval(free);
      if (!v.im().is_zero())
        throw ArithmeticError("bracket of real functions came out complex");
      double x = v.re().to_double();
      M(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = x;
      M(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = -x;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * (top + 1.0)) ++rank;
  return rank;
}

// Abstract bracket table on named generators with polynomial entries,
// plus the relations cutting out the underlying variety.
struct BracketTable {
  std::vector<std::string> gens;
  std::vector<std::vector<MultiPoly>> table;
  std::vector<MultiPoly> relations;
};

struct JacobiReport {
  bool ok = true;
  std::string detail;
  MultiPoly residual;
};

namespace detail {

// Graded-lex comparison on exponent vectors.
inline bool monomial_less(const std::vector<unsigned>& a,
                          const std::vector<unsigned>& b) {
  unsigned long da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool divides(const std::vector<unsigned>& lead,
                    const std::vector<unsigned>& term) {
  for (std::size_t i = 0; i < lead.size(); ++i)
    if (term[i] < lead[i]) return false;
  return true;
}

// Remainder of f under multivariate division by one relation. Complete for
// membership in the principal ideal the relation generates.
inline MultiPoly reduce_mod_one(MultiPoly f, const MultiPoly& rel) {
  const auto& vars = rel.vars();
  auto lead_it = rel.terms().begin();
  for (auto it = rel.terms().begin(); it != rel.terms().end(); ++it)
    if (monomial_less(lead_it->first, it->first)) lead_it = it;
  const std::vector<unsigned> lead = lead_it->first;
  const GaussianRational lead_c = lead_it->second;
  while (true) {
    const std::vector<unsigned>* target = nullptr;
    GaussianRational target_c;
    for (const auto& [mono, c] : f.terms()) {
      if (!divides(lead, mono)) continue;
      if (!target || monomial_less(*target, mono)) {
        target = &mono;
        target_c = c;
      }
    }
    if (!target) return f;
    MultiPoly q = MultiPoly::constant(vars, target_c / lead_c);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      unsigned e = (*target)[i] - lead[i];
      if (e > 0) q = q * MultiPoly::variable(vars, vars[i]).pow(e);
    }
    f = f - q * rel;
  }
}

inline MultiPoly reduce_mod(MultiPoly f,
                            const std::vector<MultiPoly>& rels) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rels) {
      MultiPoly next = reduce_mod_one(f, r);
      if (!(next == f)) {
        f = next;
        changed = true;
      }
    }
  }
  return f;
}

}  // namespace detail

// Checks the Jacobi identity on all generator triples and compatibility of
// the bracket with the relations, both modulo the relation ideal.
inline JacobiReport jacobi_check(const BracketTable& t) {
  const std::size_t g = t.gens.size();
  if (t.table.size() != g)
    throw ArithmeticError("bracket table is not square");
  for (const auto& row : t.table)
    if (row.size() != g) throw ArithmeticError("bracket table is not square");
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (t.table[i][j].vars() != t.gens)
        throw ArithmeticError("bracket table entry over wrong variables");
      if (!(t.table[i][j] + t.table[j][i]).is_zero())
        throw ArithmeticError("bracket table is not antisymmetric");
    }
  }
  for (const auto& r : t.relations)
    if (r.vars() != t.gens)
      throw ArithmeticError("relation over wrong variables");

  // {g_a, P} by expanding P through the table.
  auto bracket_with = [&](std::size_t a, const MultiPoly& p) {
    MultiPoly out =
        MultiPoly::constant(t.gens, GaussianRational());
    for (std::size_t b = 0; b < g; ++b)
      out = out + p.derivative(t.gens[b]) * t.table[a][b];
    return out;
  };

  JacobiReport rep;
  rep.residual = MultiPoly::constant(t.gens, GaussianRational());
  for (std::size_t i = 0; i < g && rep.ok; ++i) {
    for (std::size_t j = i + 1; j < g && rep.ok; ++j) {
      for (std::size_t k = j + 1; k < g && rep.ok; ++k) {
        MultiPoly s = bracket_with(i, t.table[j][k]) +
                      bracket_with(j, t.table[k][i]) +
                      bracket_with(k, t.table[i][j]);
        s = detail::reduce_mod(s, t.relations);
        if (!s.is_zero()) {
          rep.ok = false;
          rep.detail = "jacobi fails on (" + t.gens[i] + ", " + t.gens[j] +
                       ", " + t.gens[k] + ")";
          rep.residual = s;
        }
      }
    }
  }
  for (std::size_t i = 0; i < g && rep.ok; ++i) {
    for (const auto& r : t.relations) {
      MultiPoly s = detail::reduce_mod(bracket_with(i, r), t.relations);
      if (!s.is_zero()) {
        rep.ok = false;
        rep.detail =
            "bracket of " + t.gens[i] + " does not preserve a relation";
        rep.residual = s;
        break;
      }
    }
  }
  return rep;
}

// Quadric cone x^2 + y^2 = r^2 with the rotation-invariant structure.
inline BracketTable exotic_plane_table() {
  BracketTable t;
  t.gens = {"x", "y", "r"};
  MultiPoly x = MultiPoly::variable(t.gens, "x");
  MultiPoly y = MultiPoly::variable(t.gens, "y");
  MultiPoly r = MultiPoly::variable(t.gens, "r");
  auto k = [&](long long q) {
    return MultiPoly::constant(t.gens, GaussianRational(Rational(q)));
  };
  MultiPoly zero = k(0);
  t.table = {{zero, k(2) * r, k(2) * y},
             {k(-2) * r, zero, k(-2) * x},
             {k(-2) * y, k(2) * x, zero}};
  t.relations = {x * x + y * y - r * r};
  return t;
}

// Same table with a constant slipped into {x, y}; the cyclic sums still
// cancel but the bracket no longer preserves the cone relation.
inline BracketTable exotic_plane_table_corrupted() {
  BracketTable t = exotic_plane_table();
  t.table[0][1] =
      t.table[0][1] + MultiPoly::constant(t.gens, GaussianRational(Rational(1)));
  t.table[1][0] = -t.table[0][1];
  return t;
}

inline BracketTable su2_chart_table() {
  Su2Chart c = su2_chart();
  BracketTable t;
  t.gens = {"X", "Y", "tau"};
  MultiPoly zero = MultiPoly::constant(t.gens, GaussianRational());
  t.table = {{zero, c.bracket_XY, c.bracket_Xtau},
             {-c.bracket_XY, zero, c.bracket_Ytau},
             {-c.bracket_Xtau, -c.bracket_Ytau, zero}};
  t.relations = {c.relation};
  return t;
}

}  // namespace aq
