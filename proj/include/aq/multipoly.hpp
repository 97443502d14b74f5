#pragma once

// Sparse multivariate polynomials over Q(i) with an explicit ordered variable
// set, and rational functions built from them.  There is deliberately no
// multivariate gcd: rational-function equality is decided by
// cross-multiplication, which keeps every identity check exact without a
// full computer-algebra kernel.

#include "aq/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace aq {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, GaussianRational>;

  MultiPoly() = default;  // zero polynomial in no variables
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name,
                            unsigned power = 1) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = power;
    p.terms_[std::move(e)] = GaussianRational(1);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
  }
  GaussianRational constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    return terms_.begin()->second;
  }

  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ArithmeticError("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void add_term(Exponents e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (unsigned x : e) t += static_cast<int>(x);
      d = std::max(d, t);
    }
    return d;
  }

  // Largest term in the exponent order; used for deterministic normalization.
  const GaussianRational& leading_coeff() const {
    if (terms_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
  }

  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
    return out;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto [x, y] = aligned(a, b);
      return x + y;
    }
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto [x, y] = aligned(a, b);
      return x - y;
    }
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto [x, y] = aligned(a, b);
      return x * y;
    }
    MultiPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(const GaussianRational& s, const MultiPoly& a) {
    MultiPoly out(a.vars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = s * c;
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto [x, y] = aligned(a, b);
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const {
    MultiPoly acc = constant(vars_, GaussianRational(1));
    MultiPoly base = *this;
    for (; e > 0; e >>= 1, base = base * base)
      if (e & 1) acc = acc * base;
    return acc;
  }

  MultiPoly derivative(const std::string& var) const {
    std::size_t k = var_index(var);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents d = e;
      --d[k];
      out.add_term(std::move(d), GaussianRational(static_cast<long long>(e[k])) * c);
    }
    return out;
  }

  // Coefficient-wise complex conjugation (variables are treated as real).
  MultiPoly conj_coeffs() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = c.conj();
    return out;
  }

  GaussianRational eval(const std::map<std::string, GaussianRational>& point) const {
    std::vector<GaussianRational> values(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = point.find(vars_[k]);
      if (it == point.end()) throw ArithmeticError("missing value for variable " + vars_[k]);
      values[k] = it->second;
    }
    GaussianRational acc = 0;
    for (const auto& [e, c] : terms_) {
      GaussianRational t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) t *= values[k].pow(e[k]);
      acc += t;
    }
    return acc;
  }

  // Substitute a polynomial for every variable; all substituted values must
  // share one variable set.
  MultiPoly subst(const std::map<std::string, MultiPoly>& values) const {
    if (values.empty()) throw ArithmeticError("empty substitution");
    const std::vector<std::string>& tvars = values.begin()->second.vars();
    // Memoized powers of each substituted value.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    std::vector<const MultiPoly*> bases(vars_.size(), nullptr);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = values.find(vars_[k]);
      if (it == values.end()) throw ArithmeticError("missing substitution for " + vars_[k]);
      bases[k] = &it->second;
      powers[k].push_back(MultiPoly::constant(tvars, GaussianRational(1)));
    }
    MultiPoly acc(tvars);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = MultiPoly::constant(tvars, c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        while (powers[k].size() <= e[k]) powers[k].push_back(powers[k].back() * *bases[k]);
        if (e[k] != 0) t = t * powers[k][e[k]];
      }
      acc += t;
    }
    return acc;
  }

  // Rewrites both polynomials over the union of their variable sets.
  static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> u = a.vars_;
    for (const auto& v : b.vars_)
      if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    std::sort(u.begin(), u.end());
    return {a.remapped(u), b.remapped(u)};
  }

  MultiPoly remapped(const std::vector<std::string>& new_vars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = std::find(new_vars.begin(), new_vars.end(), vars_[k]);
      if (it == new_vars.end())
        throw ArithmeticError("variable " + vars_[k] + " missing from target set");
      where[k] = static_cast<std::size_t>(it - new_vars.begin());
    }
    MultiPoly out(new_vars);
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_vars.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k) ne[where[k]] = e[k];
      out.terms_[std::move(ne)] = c;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest term first reads like the displayed formulas.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      std::string cs;
      bool negative = false;
      if (c.is_real()) {
        negative = c.re().sign() < 0;
        Rational mag = c.re().abs();
        cs = (mag == Rational(1) && !mono.empty()) ? "" : mag.str();
      } else {
        cs = "(" + c.str() + ")";
      }
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (!cs.empty() && !mono.empty()) cs += "*";
      out += cs + mono;
      if (cs.empty() && mono.empty()) out += "1";
    }
    return out;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Quotient of two multivariate polynomials.  Stored normalized so that the
// denominator's leading coefficient is 1; no polynomial gcd is attempted, so
// equality goes through cross-multiplication.
class RatFn {
 public:
  RatFn() : num_(), den_(MultiPoly::constant({}, GaussianRational(1))) {}
  explicit RatFn(MultiPoly num)
      : num_(std::move(num)),
        den_(MultiPoly::constant(num_.vars(), GaussianRational(1))) {}
  RatFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num_.vars() != den_.vars()) {
      auto [n, d] = MultiPoly::aligned(num_, den_);
      num_ = std::move(n);
      den_ = std::move(d);
    }
    normalize();
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }

  friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }
  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFn operator*(const GaussianRational& s, const RatFn& a) {
    return RatFn(s * a.num_, a.den_);
  }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

  RatFn pow(unsigned e) const { return RatFn(num_.pow(e), den_.pow(e)); }

  RatFn derivative(const std::string& var) const {
    return RatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
  }

  RatFn conj_coeffs() const { return RatFn(num_.conj_coeffs(), den_.conj_coeffs()); }

  GaussianRational eval(const std::map<std::string, GaussianRational>& point) const {
    GaussianRational d = den_.eval(point);
    if (d.is_zero()) {
      std::string where;
      for (const auto& [k, v] : point) where += (where.empty() ? "" : ", ") + k + "=" + v.str();
      throw PoleError("denominator " + den_.str() + " vanishes at (" + where + ")");
    }
    return num_.eval(point) / d;
  }

  // Exact equality as rational functions: a/b = c/d iff ad = cb.
  static bool equal(const RatFn& a, const RatFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const {
    if (is_poly()) {
      GaussianRational c = den_.constant_value();
      if (c == GaussianRational(1)) return num_.str();
      return "(" + num_.str() + ") / (" + den_.str() + ")";
    }
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(num_.vars(), GaussianRational(1));
      return;
    }
    GaussianRational lead = den_.leading_coeff();
    if (lead != GaussianRational(1)) {
      GaussianRational inv = GaussianRational(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace aq
