#pragma once

// Sylvester resultants, fraction-free determinants, discriminants with a
// fixed sign convention, and the chains of derivative discriminants that cut
// out the multiple-root varieties D_k in coefficient space.

#include "aq/multipoly.hpp"
#include "aq/unipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace aq {

// Sylvester matrix of f (degree n) and h (degree m): (m+n) square, m shifted
// rows of f's coefficients (highest degree first) followed by n shifted rows
// of h's.  T is GaussianRational for numeric work or MultiPoly for symbolic.
template <typename T>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<T>& f_high_first,
                                             const std::vector<T>& h_high_first,
                                             const T& zero) {
  const std::size_t n = f_high_first.size() - 1;
  const std::size_t m = h_high_first.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<T>> M(size, std::vector<T>(size, zero));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) M[r][r + j] = f_high_first[j];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) M[m + r][r + j] = h_high_first[j];
  return M;
}

// Fraction-free Bareiss elimination; exact over Q(i).
inline GaussianRational bareiss_determinant(std::vector<std::vector<GaussianRational>> M) {
  const std::size_t n = M.size();
  if (n == 0) return GaussianRational(1);
  GaussianRational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && M[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return GaussianRational(0);
      std::swap(M[k], M[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
      M[i][k] = GaussianRational(0);
    }
    prev = M[k][k];
  }
  GaussianRational det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// Determinant of a matrix of polynomials by first-row minor expansion,
// memoized on the set of remaining columns.  Sized for the Sylvester matrices
// that appear here (up to 9x9), where sparsity keeps the expansion small.
inline MultiPoly symbolic_determinant(const std::vector<std::vector<MultiPoly>>& M) {
  const std::size_t n = M.size();
  if (n > 32) throw ArithmeticError("symbolic determinant too large");
  const MultiPoly one =
      MultiPoly::constant(n ? M[0][0].vars() : std::vector<std::string>{}, GaussianRational(1));
  std::map<std::uint64_t, MultiPoly> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint64_t mask) -> MultiPoly {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly acc(one.vars());
    int pos = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask >> col & 1)) continue;
      const int here = pos++;
      if (M[row][col].is_zero()) continue;
      MultiPoly sub = self(self, row + 1, mask & ~(std::uint64_t(1) << col));
      MultiPoly term = M[row][col] * sub;
      acc = (here % 2 == 0) ? acc + term : acc - term;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
}

namespace detail {
inline std::vector<GaussianRational> coeffs_high_first(const UniPoly& p) {
  std::vector<GaussianRational> c(p.coeffs().rbegin(), p.coeffs().rend());
  return c;
}
}  // namespace detail

// Resultant R(f,h) as the Sylvester determinant; zero iff f and h share a
// root (leading coefficients nonzero).
inline GaussianRational resultant(const UniPoly& f, const UniPoly& h) {
  if (f.degree() < 1 || h.degree() < 1)
    throw ArithmeticError("resultant requires both degrees >= 1");
  auto M = sylvester_matrix<GaussianRational>(detail::coeffs_high_first(f),
                                              detail::coeffs_high_first(h),
                                              GaussianRational(0));
  return bareiss_determinant(std::move(M));
}

inline MultiPoly resultant_symbolic(const std::vector<MultiPoly>& f_high_first,
                                    const std::vector<MultiPoly>& h_high_first) {
  if (f_high_first.size() < 2 || h_high_first.size() < 2)
    throw ArithmeticError("resultant requires both degrees >= 1");
  MultiPoly zero(f_high_first[0].vars());
  auto M = sylvester_matrix<MultiPoly>(f_high_first, h_high_first, zero);
  return symbolic_determinant(M);
}

// Discriminant of p, degree n >= 2, with the sign fixed as
//   D = (-1)^{n(n-1)/2} R(p, p') / a0,
// which reproduces a1^2 - 4 a0 a2 for n = 2 and equals
// a0^{2n-2} prod_{j<k} (z_j - z_k)^2 on any root multiset.
inline GaussianRational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 2) throw ArithmeticError("discriminant requires degree >= 2");
  GaussianRational r = resultant(p, p.derivative());
  GaussianRational d = r / p.lead();
  return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

namespace detail {
// Exact division by a single variable; every term must contain it.
inline MultiPoly divide_by_var(const MultiPoly& p, const std::string& var) {
  std::size_t k = p.var_index(var);
  MultiPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) throw ArithmeticError("polynomial not divisible by " + var);
    MultiPoly::Exponents d = e;
    --d[k];
    out.add_term(std::move(d), c);
  }
  return out;
}
}  // namespace detail

// Symbolic discriminant of the general degree-n polynomial
// a0 z^n + a1 z^{n-1} + ... + an, as a polynomial in a0..an.
inline MultiPoly discriminant_symbolic(int n) {
  if (n < 2) throw ArithmeticError("discriminant requires degree >= 2");
  std::vector<std::string> vars;
  for (int k = 0; k <= n; ++k) vars.push_back("a" + std::to_string(k));
  std::vector<MultiPoly> f, df;
  for (int k = 0; k <= n; ++k) f.push_back(MultiPoly::variable(vars, vars[static_cast<std::size_t>(k)]));
  for (int k = 0; k < n; ++k)
    df.push_back(GaussianRational(n - k) * f[static_cast<std::size_t>(k)]);
  MultiPoly res = resultant_symbolic(f, df);
  MultiPoly d = detail::divide_by_var(res, "a0");
  return (n * (n - 1) / 2) % 2 == 0 ? d : GaussianRational(-1) * d;
}

// The chain of derivative discriminants cutting out D_{level+1} in the
// coefficient space of monic P = z^n + a1 z^{n-1} + ... + an: equation j is
// the discriminant of P^{(j-1)}, whose z^{n-j+1-i} coefficient is
// (n-i)!/(n-i-j+1)! * a_i.  The j-th equation vanishes exactly where P has a
// root of multiplicity >= j+1 together with the earlier equations.
struct DiscChain {
  int n = 0;
  int level = 0;                     // the chain defines D_{level+1}
  std::vector<MultiPoly> equations;  // in variables a1..an

  std::vector<GaussianRational> eval(const std::vector<GaussianRational>& tail) const {
    if (static_cast<int>(tail.size()) != n)
      throw ArithmeticError("expected " + std::to_string(n) + " coefficients a1..an");
    std::map<std::string, GaussianRational> point;
    for (int k = 1; k <= n; ++k) point["a" + std::to_string(k)] = tail[static_cast<std::size_t>(k - 1)];
    std::vector<GaussianRational> out;
    for (const auto& eq : equations) out.push_back(eq.eval(point));
    return out;
  }
};

inline DiscChain disc_chain(int n, int level) {
  if (level < 1 || level + 1 > n)
    throw ArithmeticError("chain level must satisfy 2 <= level+1 <= degree");
  std::vector<std::string> avars;
  for (int k = 1; k <= n; ++k) avars.push_back("a" + std::to_string(k));
  auto factorial_ratio = [](int a, int b) {  // a! / b!, a >= b
    BigInt r = 1;
    for (int v = b + 1; v <= a; ++v) r *= v;
    return r;
  };
  DiscChain chain{n, level, {}};
  for (int j = 1; j <= level; ++j) {
    const int d = n - j + 1;  // degree of P^{(j-1)}
    MultiPoly generic = discriminant_symbolic(d);
    std::map<std::string, MultiPoly> values;
    for (int i = 0; i <= d; ++i) {
      GaussianRational scale{Rational(factorial_ratio(n - i, n - i - j + 1))};
      MultiPoly coeff = i == 0 ? MultiPoly::constant(avars, scale)
                               : scale * MultiPoly::variable(avars, "a" + std::to_string(i));
      values.emplace("a" + std::to_string(i), std::move(coeff));
    }
    chain.equations.push_back(generic.subst(values));
  }
  return chain;
}

}  // namespace aq
