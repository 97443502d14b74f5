#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aq/multipoly.hpp"
#include "aq/rational.hpp"

namespace aq {

// Laurent polynomial in torus coordinates z_1..z_m and their conjugates,
// keyed by the combined exponent vector (p_1..p_m, q_1..q_m) of
// z^p * zbar^q.  This is the computational form of every torus function:
// products and sums stay exponent-level cheap, and a single conversion
// produces the rational function in x_j, y_j when one is needed.
class Laurent {
 public:
  explicit Laurent(int m) : m_(m) {
    if (m < 0) throw ArithmeticError("Laurent needs a nonnegative coordinate count");
  }

  static Laurent constant(int m, const GaussianRational& c) {
    Laurent out(m);
    out.add_term(std::vector<int>(static_cast<std::size_t>(2 * m), 0), c);
    return out;
  }

  static Laurent monomial(int m, const GaussianRational& c, const std::vector<int>& p,
                          const std::vector<int>& q) {
    if (static_cast<int>(p.size()) != m || static_cast<int>(q.size()) != m)
      throw ArithmeticError("Laurent monomial exponent size mismatch");
    std::vector<int> key(p);
    key.insert(key.end(), q.begin(), q.end());
    Laurent out(m);
    out.add_term(std::move(key), c);
    return out;
  }

  int coordinates() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, GaussianRational>& terms() const { return terms_; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.m_ != b.m_) throw ArithmeticError("Laurent coordinate count mismatch");
    Laurent out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    if (a.m_ != b.m_) throw ArithmeticError("Laurent coordinate count mismatch");
    Laurent out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
  }

  friend Laurent operator-(const Laurent& a) { return Laurent::constant(a.m_, GaussianRational(-1)) * a; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.m_ != b.m_) throw ArithmeticError("Laurent coordinate count mismatch");
    Laurent out(a.m_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        std::vector<int> k(ka.size());
        for (std::size_t j = 0; j < k.size(); ++j) k[j] = ka[j] + kb[j];
        out.add_term(std::move(k), ca * cb);
      }
    return out;
  }

  friend Laurent operator*(const GaussianRational& c, const Laurent& a) {
    Laurent out(a.m_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent pow(int e) const {
    if (e < 0) throw ArithmeticError("Laurent power must be nonnegative");
    Laurent acc = constant(m_, GaussianRational(1));
    Laurent base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      if (e > 1) base = base * base;
    }
    return acc;
  }

  // Complex conjugate of the function: swaps z and zbar exponents and
  // conjugates coefficients.
  Laurent conj() const {
    Laurent out(m_);
    std::size_t m = static_cast<std::size_t>(m_);
    for (const auto& [k, c] : terms_) {
      std::vector<int> swapped(k.size());
      for (std::size_t j = 0; j < m; ++j) {
        swapped[j] = k[m + j];
        swapped[m + j] = k[j];
      }
      out.add_term(std::move(swapped), c.conj());
    }
    return out;
  }

  // Imposes z_m = (z_1...z_{m-1})^{-1} (and its conjugate) at exponent
  // level, landing in the free coordinates z_1..z_{m-1}.
  Laurent constrain_last() const {
    if (m_ < 1) throw ArithmeticError("no coordinate to constrain");
    std::size_t m = static_cast<std::size_t>(m_);
    Laurent out(m_ - 1);
    for (const auto& [k, c] : terms_) {
      std::vector<int> nk(2 * (m - 1));
      for (std::size_t j = 0; j + 1 < m; ++j) {
        nk[j] = k[j] - k[m - 1];
        nk[(m - 1) + j] = k[m + j] - k[2 * m - 1];
      }
      out.add_term(std::move(nk), c);
    }
    return out;
  }

  // Value at an exact torus point; the conjugate coordinates are the honest
  // complex conjugates of z.
  GaussianRational eval(const std::vector<GaussianRational>& z) const {
    if (static_cast<int>(z.size()) != m_)
      throw ArithmeticError("Laurent evaluation needs one value per coordinate");
    for (const auto& v : z)
      if (v.is_zero()) throw ArithmeticError("torus coordinates must be nonzero");
    GaussianRational total(0);
    std::size_t m = static_cast<std::size_t>(m_);
    for (const auto& [k, c] : terms_) {
      GaussianRational v = c;
      for (std::size_t j = 0; j < m; ++j) {
        if (k[j] != 0) v = v * z[j].pow(k[j]);
        if (k[m + j] != 0) v = v * z[j].conj().pow(k[m + j]);
      }
      total = total + v;
    }
    return total;
  }

  // True when every coordinate permutation fixes the function.
  bool symmetric() const {
    std::size_t m = static_cast<std::size_t>(m_);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (const auto& [k, c] : terms_) {
        std::vector<int> pk(2 * m);
        for (std::size_t j = 0; j < m; ++j) {
          pk[perm[j]] = k[j];
          pk[m + perm[j]] = k[m + j];
        }
        auto it = terms_.find(pk);
        if (it == terms_.end() || it->second != c) return false;
      }
    }
    return true;
  }

  // One-shot conversion to a rational function in x1,y1,..,xm,ym with
  // z_j = x_j + i y_j: the denominator is the product of the squared moduli
  // N_j = x_j^2 + y_j^2 raised to the deepest inverse power in use.
  RatFn to_ratfn() const {
    std::size_t m = static_cast<std::size_t>(m_);
    std::vector<std::string> vars;
    for (std::size_t j = 1; j <= m; ++j) {
      vars.push_back("x" + std::to_string(j));
      vars.push_back("y" + std::to_string(j));
    }
    std::vector<int> depth(m, 0);
    for (const auto& [k, c] : terms_)
      for (std::size_t j = 0; j < m; ++j)
        depth[j] = std::max(depth[j], std::max(-k[j], -k[m + j]));

    GaussianRational I{Rational(0), Rational(1)};
    std::vector<MultiPoly> zf, zb;
    for (std::size_t j = 0; j < m; ++j) {
      MultiPoly x = MultiPoly::variable(vars, vars[2 * j]);
      MultiPoly y = MultiPoly::variable(vars, vars[2 * j + 1]);
      zf.push_back(x + I * y);
      zb.push_back(x - I * y);
    }
    MultiPoly num = MultiPoly::constant(vars, GaussianRational(0));
    for (const auto& [k, c] : terms_) {
      MultiPoly t = MultiPoly::constant(vars, c);
      for (std::size_t j = 0; j < m; ++j) {
        int pe = k[j] + depth[j], qe = k[m + j] + depth[j];
        if (pe > 0) t = t * zf[j].pow(pe);
        if (qe > 0) t = t * zb[j].pow(qe);
      }
      num = num + t;
    }
    MultiPoly den = MultiPoly::constant(vars, GaussianRational(1));
    for (std::size_t j = 0; j < m; ++j)
      if (depth[j] > 0) den = den * (zf[j] * zb[j]).pow(depth[j]);
    return RatFn(num, den);
  }

  // Adds c * z^p zbar^q given the combined exponent key.
  void add_term(std::vector<int> key, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (key.size() != static_cast<std::size_t>(2 * m_))
      throw ArithmeticError("Laurent term key size mismatch");
    auto [it, fresh] = terms_.emplace(std::move(key), c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  int m_;
  std::map<std::vector<int>, GaussianRational> terms_;
};

// Bisymmetric power sum: sum over coordinates of z_j^r zbar_j^s, on the
// unconstrained torus of m coordinates.
inline Laurent tau_laurent(int m, int r, int s) {
  if (r < 0 || s < 0 || r + s < 1) throw ArithmeticError("tau needs r,s >= 0 with r+s >= 1");
  Laurent out(m);
  for (int j = 0; j < m; ++j) {
    std::vector<int> p(static_cast<std::size_t>(m), 0), q(static_cast<std::size_t>(m), 0);
    p[static_cast<std::size_t>(j)] = r;
    q[static_cast<std::size_t>(j)] = s;
    out = out + Laurent::monomial(m, GaussianRational(1), p, q);
  }
  return out;
}

// How an orbit sum counts its terms: once per distinct monomial, or once per
// group element (which scales each monomial by the stabilizer order
// r! s! (m-r-s)!).
enum class OrbitCounting { distinct_monomial, full_symmetrization };

inline std::string orbit_counting_str(OrbitCounting c) {
  return c == OrbitCounting::distinct_monomial ? "distinct" : "full";
}

inline OrbitCounting parse_orbit_counting(const std::string& s) {
  if (s == "distinct") return OrbitCounting::distinct_monomial;
  if (s == "full") return OrbitCounting::full_symmetrization;
  throw ParseError("unknown orbit counting '" + s + "'", 0);
}

// Elementary bisymmetric function: the orbit sum of
// z_1...z_r * zbar_{r+1}...zbar_{r+s} over the symmetric group.
inline Laurent sigma_laurent(int m, int r, int s,
                             OrbitCounting counting = OrbitCounting::distinct_monomial) {
  if (r < 0 || s < 0 || r + s < 1) throw ArithmeticError("sigma needs r,s >= 0 with r+s >= 1");
  if (r + s > m) throw ArithmeticError("sigma_(r,s) needs r+s <= coordinate count");
  Laurent out(m);
  std::vector<int> label(static_cast<std::size_t>(m), 0);  // 0 free, 1 in A, 2 in B

  auto emit = [&]() {
    std::vector<int> p(static_cast<std::size_t>(m), 0), q(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      if (label[static_cast<std::size_t>(j)] == 1) p[static_cast<std::size_t>(j)] = 1;
      if (label[static_cast<std::size_t>(j)] == 2) q[static_cast<std::size_t>(j)] = 1;
    }
    out = out + Laurent::monomial(m, GaussianRational(1), p, q);
  };

  // choose the r holomorphic slots, then the s conjugate slots
  std::vector<int> a_idx, b_idx;
  std::function<void(int)> pick_b = [&](int start) {
    if (static_cast<int>(b_idx.size()) == s) {
      emit();
      return;
    }
    for (int j = start; j < m; ++j) {
      if (label[static_cast<std::size_t>(j)] != 0) continue;
      label[static_cast<std::size_t>(j)] = 2;
      b_idx.push_back(j);
      pick_b(j + 1);
      b_idx.pop_back();
      label[static_cast<std::size_t>(j)] = 0;
    }
  };
  std::function<void(int)> pick_a = [&](int start) {
    if (static_cast<int>(a_idx.size()) == r) {
      pick_b(0);
      return;
    }
    for (int j = start; j < m; ++j) {
      label[static_cast<std::size_t>(j)] = 1;
      a_idx.push_back(j);
      pick_a(j + 1);
      a_idx.pop_back();
      label[static_cast<std::size_t>(j)] = 0;
    }
  };
  pick_a(0);

  if (counting == OrbitCounting::full_symmetrization) {
    auto fact = [](int k) {
      GaussianRational f(1);
      for (int j = 2; j <= k; ++j) f = f * GaussianRational(j);
      return f;
    };
    out = (fact(r) * fact(s) * fact(m - r - s)) * out;
  }
  return out;
}

// Named torus function: the Laurent form is authoritative, the rational
// function in x_j, y_j is assembled once at construction.
struct TorusFunction {
  std::string name;
  Laurent fn;
  RatFn expr;
  std::optional<std::pair<int, int>> bidegree;

  TorusFunction(std::string name_, Laurent fn_,
                std::optional<std::pair<int, int>> bd = std::nullopt)
      : name(std::move(name_)), fn(std::move(fn_)), expr(fn.to_ratfn()), bidegree(bd) {}
};

// Real and imaginary parts, still Laurent (conjugation is exponent-level).
inline Laurent real_part(const Laurent& f) {
  return GaussianRational(Rational(1, 2)) * (f + f.conj());
}

inline Laurent imag_part(const Laurent& f) {
  return GaussianRational(Rational(0), Rational(-1, 2)) * (f - f.conj());
}

// Evaluates a polynomial in named generators at Laurent values.
inline Laurent substitute_laurent(const MultiPoly& pol,
                                  const std::map<std::string, Laurent>& vals) {
  int m = -1;
  for (const auto& [name, v] : vals) {
    if (m < 0) m = v.coordinates();
    if (v.coordinates() != m) throw ArithmeticError("generator coordinate counts differ");
  }
  if (m < 0) throw ArithmeticError("substitute_laurent needs at least one generator");

  const auto& vars = pol.vars();
  std::vector<const Laurent*> gen(vars.size(), nullptr);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    auto it = vals.find(vars[j]);
    if (it == vals.end()) throw ArithmeticError("no value for generator " + vars[j]);
    gen[j] = &it->second;
  }

  // memoized powers per generator
  std::vector<std::vector<Laurent>> pows(vars.size(), {Laurent::constant(m, GaussianRational(1))});
  auto power = [&](std::size_t j, unsigned e) -> const Laurent& {
    auto& table = pows[j];
    while (table.size() <= e) table.push_back(table.back() * *gen[j]);
    return table[e];
  };

  Laurent total(m);
  for (const auto& [exps, coeff] : pol.terms()) {
    Laurent t = Laurent::constant(m, coeff);
    for (std::size_t j = 0; j < exps.size(); ++j)
      if (exps[j] > 0) t = t * power(j, exps[j]);
    total = total + t;
  }
  return total;
}

// Evaluates a polynomial in named generators at rational-function values.
inline RatFn substitute_ratfn(const MultiPoly& pol, const std::map<std::string, RatFn>& vals) {
  const auto& vars = pol.vars();
  std::vector<const RatFn*> gen(vars.size(), nullptr);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    auto it = vals.find(vars[j]);
    if (it == vals.end()) throw ArithmeticError("no value for generator " + vars[j]);
    gen[j] = &it->second;
  }
  RatFn total;
  for (const auto& [exps, coeff] : pol.terms()) {
    RatFn t(MultiPoly::constant({}, coeff), MultiPoly::constant({}, GaussianRational(1)));
    for (std::size_t j = 0; j < exps.size(); ++j)
      if (exps[j] > 0) t = t * gen[j]->pow(exps[j]);
    total = total + t;
  }
  return total;
}

// The elementary bisymmetric generating set of the determinant-one torus:
// all sigma_(r,s) with 1 <= r+s <= n except the two constants sigma_(n,0)
// and sigma_(0,n), constrained to the free coordinates.
inline std::vector<TorusFunction> bisymmetric_generating_set(
    int n, OrbitCounting counting = OrbitCounting::distinct_monomial) {
  if (n < 2) throw ArithmeticError("generating set needs n >= 2");
  std::vector<TorusFunction> out;
  for (int d = 1; d <= n; ++d)
    for (int r = d; r >= 0; --r) {
      int s = d - r;
      if (d == n && (s == 0 || r == 0)) continue;  // the determinant and its conjugate
      std::string nm = "sigma_" + std::to_string(r) + "_" + std::to_string(s);
      out.emplace_back(nm, sigma_laurent(n, r, s, counting).constrain_last(),
                       std::make_pair(r, s));
    }
  return out;
}

inline int bisymmetric_count(int n) { return n * (n + 3) / 2 - 2; }

// Size of the tau family on the same index range, minus the real dimension
// of the quotient torus: how many relations a tau presentation must carry.
inline int tau_presentation_redundancy(int n) {
  int family = n * (n + 3) / 2;
  return family - 2 * (n - 1);
}

}  // namespace aq
