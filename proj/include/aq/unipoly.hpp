#pragma once

// Dense univariate polynomials over Q(i), lowest degree first: the carrier of
// characteristic polynomials, their derivatives, gcds, and square-free
// structure.  Coefficient arithmetic is exact throughout.

#include "aq/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aq {

class UniPoly {
 public:
  UniPoly() = default;  // the zero polynomial
  explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(GaussianRational v) {
    return UniPoly(std::vector<GaussianRational>{std::move(v)});
  }
  static UniPoly monomial(int k, GaussianRational coeff = GaussianRational(1)) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(k) + 1);
    c.back() = std::move(coeff);
    return UniPoly(std::move(c));
  }
  static UniPoly from_roots(const std::vector<GaussianRational>& roots) {
    UniPoly p = constant(1);
    for (const auto& r : roots) p = p * UniPoly({-r, GaussianRational(1)});
    return p;
  }
  static UniPoly from_root_multiplicities(
      const std::vector<std::pair<GaussianRational, int>>& roots) {
    UniPoly p = constant(1);
    for (const auto& [r, m] : roots)
      p = p * UniPoly({-r, GaussianRational(1)}).pow(m);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)]
                                                       : GaussianRational(0);
  }
  GaussianRational lead() const { return c_.empty() ? GaussianRational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == GaussianRational(1); }

  friend UniPoly operator-(const UniPoly& a) {
    std::vector<GaussianRational> c(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = -a.c_[k];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k < a.c_.size()) c[k] += a.c_[k];
      if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t j = 0; j < a.c_.size(); ++j)
      for (std::size_t k = 0; k < b.c_.size(); ++k) c[j + k] += a.c_[j] * b.c_[k];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const GaussianRational& s, const UniPoly& a) {
    if (s.is_zero()) return {};
    std::vector<GaussianRational> c(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = s * a.c_[k];
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(int e) const {
    UniPoly acc = constant(1), base = *this;
    for (; e > 0; e >>= 1, base = base * base)
      if (e & 1) acc = acc * base;
    return acc;
  }

  // k-th formal derivative.
  UniPoly derivative(int k = 1) const {
    UniPoly d = *this;
    for (; k > 0; --k) {
      if (d.c_.size() <= 1) return {};
      std::vector<GaussianRational> c(d.c_.size() - 1);
      for (std::size_t j = 1; j < d.c_.size(); ++j)
        c[j - 1] = GaussianRational(static_cast<long long>(j)) * d.c_[j];
      d = UniPoly(std::move(c));
    }
    return d;
  }

  GaussianRational eval(const GaussianRational& z) const {
    GaussianRational acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }
  ComplexF eval_complex(ComplexF z) const {
    ComplexF acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k].to_complex();
    return acc;
  }

  // Quotient and remainder; coefficients form a field, so this is plain
  // long division.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<GaussianRational> rem = a.c_;
    std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const GaussianRational inv_lead = GaussianRational(1) / b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      GaussianRational q =
          rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
      quot[static_cast<std::size_t>(k)] = q;
      if (q.is_zero()) continue;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return (GaussianRational(1) / lead()) * *this;
  }

  // Monic gcd via the Euclidean algorithm, normalizing each remainder to keep
  // coefficient growth in check.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second.monic();
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  std::string str(std::string_view var = "z") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

inline std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& a = c_[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    std::string mono =
        k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
    std::string cs;
    bool negative = false;
    if (a.is_real()) {
      Rational r = a.re();
      negative = r.sign() < 0;
      Rational mag = r.abs();
      cs = (mag == Rational(1) && k > 0) ? "" : mag.str();
    } else {
      cs = "(" + a.str() + ")";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (!cs.empty() && !mono.empty()) cs += "*";
    out += cs + mono;
  }
  return out;
}

// Square-free decomposition by Yun's algorithm: p = lc * prod f_k^{m_k} with
// the f_k monic, square-free, pairwise coprime, and the m_k strictly
// increasing.  Characteristic zero makes the textbook recurrence exact.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw ArithmeticError("square-free decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly P = p.monic();
  if (P.degree() == 0) return out;
  UniPoly dP = P.derivative();
  UniPoly g = UniPoly::gcd(P, dP);
  if (g.degree() == 0) {
    out.emplace_back(P, 1);
    return out;
  }
  UniPoly w = UniPoly::divmod(P, g).first;
  UniPoly y = UniPoly::divmod(dP, g).first;
  UniPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly gi = UniPoly::gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = UniPoly::divmod(w, gi).first;
    y = UniPoly::divmod(z, gi).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

inline UniPoly squarefree_part(const UniPoly& p) {
  UniPoly out = UniPoly::constant(1);
  for (const auto& [f, m] : squarefree_decomposition(p)) out = out * f;
  return out;
}

// Coefficient text formats.  "a1,a2,...,an" is the monic polynomial
// z^n + a1 z^{n-1} + ... + an with the degree inferred from the count;
// "a0;a1;...;an" lists all coefficients of a general polynomial, highest
// degree first.
inline UniPoly parse_poly(std::string_view text) {
  const bool monic_form = text.find(';') == std::string_view::npos;
  const char sep = monic_form ? ',' : ';';
  std::vector<GaussianRational> high_first;  // as written, a0 (or a1) first
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? end : end - start);
    try {
      high_first.push_back(GaussianRational::parse(tok));
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient '" + std::string(tok) + "': " + e.what(),
                       start + e.position);
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (monic_form) high_first.insert(high_first.begin(), GaussianRational(1));
  std::reverse(high_first.begin(), high_first.end());
  return UniPoly{std::move(high_first)};
}

}  // namespace aq
