#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals, Gaussian rationals
// (the field Q(i)), and the floating complex type used on numeric paths.
// All identity checks elsewhere in the library run on these exact types;
// floating values appear only in designated numeric operations.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace aq {

using BigInt = boost::multiprecision::cpp_int;
using ComplexF = std::complex<double>;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Reduced fraction with positive denominator; equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero())
      throw ArithmeticError("rational with zero denominator: " + num_.str() + "/0");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, Raw{}); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
      throw ArithmeticError("division by zero: (" + a.str() + ") / (" + b.str() + ")");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_.sign() < 0 ? -*this : *this; }

  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw ArithmeticError("division by zero: (1) / (0)");
      return Rational(1) / pow(-e);
    }
    Rational base = *this, acc = 1;
    for (; e > 0; e >>= 1, base *= base)
      if (e & 1) acc *= base;
    return acc;
  }

  double to_double() const {
    namespace mp = boost::multiprecision;
    return mp::cpp_rational(num_, den_).convert_to<double>();
  }

  // Text form "p/q", or "p" when the denominator is 1.
  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  static Rational parse(std::string_view text);

 private:
  struct Raw {};
  Rational(BigInt n, BigInt d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_.is_zero()) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long n) : re_(n) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }  // |q|^2, exactly real

  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero())
      throw ArithmeticError("division by zero: (" + a.str() + ") / (" + b.str() + ")");
    Rational n = b.norm();
    GaussianRational p = a * b.conj();
    return {p.re_ / n, p.im_ / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
  // Lexicographic order; used only to make containers and output deterministic.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussianRational pow(long e) const {
    if (e < 0) return GaussianRational(1) / pow(-e);
    GaussianRational base = *this, acc = 1;
    for (; e > 0; e >>= 1, base *= base)
      if (e & 1) acc *= base;
    return acc;
  }

  ComplexF to_complex() const { return {re_.to_double(), im_.to_double()}; }

  // Text form "p/q+r/s*i"; pure-real and pure-imaginary values drop the
  // missing part, so "3", "-1/2*i", "0" are all canonical.
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "*i";
    if (re_.is_zero()) return imag;
    return im_.sign() < 0 ? re_.str() + imag : re_.str() + "+" + imag;
  }

  static GaussianRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

// Exact point on the unit circle: ((1-s^2)/(1+s^2), 2s/(1+s^2)).
// The returned pair (c, s') satisfies c^2 + s'^2 = 1 identically, which makes
// every circle-parametrized check in the geometry modules run in Q.
inline std::pair<Rational, Rational> rational_circle(const Rational& s) {
  Rational s2 = s * s;
  Rational d = Rational(1) + s2;
  return {(Rational(1) - s2) / d, (s + s) / d};
}

inline GaussianRational rational_circle_point(const Rational& s) {
  auto [c, sp] = rational_circle(s);
  return {c, sp};
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Integer literal with optional sign; advances pos.
inline BigInt parse_bigint(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !is_digit(text[pos]))
    throw ParseError("expected integer", pos);
  BigInt value = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  (void)start;
  return neg ? BigInt(-value) : value;
}

inline Rational parse_rational_at(std::string_view text, std::size_t& pos) {
  BigInt num = parse_bigint(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_pos = pos;
    BigInt den = parse_bigint(text, pos);
    if (den.is_zero()) throw ParseError("zero denominator", den_pos);
    return Rational(std::move(num), std::move(den));
  }
  return Rational(std::move(num));
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  Rational r = detail::parse_rational_at(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return r;
}

// Accepts "a", "b*i", "i", "-i", "a+b*i", "a-i", and the same with rational
// a, b; at most one real and one imaginary term.
inline GaussianRational GaussianRational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool have_re = false, have_im = false;
  Rational re = 0, im = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t term_pos = pos;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (first && text[pos] == '+') throw ParseError("unexpected '+'", pos);
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    bool imag = false;
    Rational value;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      value = Rational(1);
      imag = true;
    } else {
      if (pos >= text.size() || !detail::is_digit(text[pos]))
        throw ParseError("expected number or 'i'", pos);
      value = detail::parse_rational_at(text, pos);
      if (pos < text.size() && (text[pos] == '*' || text[pos] == 'i')) {
        if (text[pos] == '*') {
          ++pos;
          if (pos >= text.size() || text[pos] != 'i')
            throw ParseError("expected 'i' after '*'", pos);
        }
        ++pos;
        imag = true;
      }
    }
    if (sign < 0) value = -value;
    if (imag) {
      if (have_im) throw ParseError("duplicate imaginary term", term_pos);
      im = value;
      have_im = true;
    } else {
      if (have_re) throw ParseError("duplicate real term", term_pos);
      re = value;
      have_re = true;
    }
    first = false;
  }
  if (!have_re && !have_im) throw ParseError("empty input", 0);
  return {re, im};
}

// "x+y*i" with decimal floating parts; same term structure as the exact parser.
inline ComplexF parse_complexf(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  double re = 0, im = 0;
  bool have_re = false, have_im = false;
  bool first = true;
  while (pos < s.size()) {
    std::size_t term_pos = pos;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (first && s[pos] == '+') throw ParseError("unexpected '+'", pos);
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    bool imag = false;
    double value = 0;
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      value = 1.0;
      imag = true;
    } else {
      if (pos >= s.size() || !(detail::is_digit(s[pos]) || s[pos] == '.'))
        throw ParseError("expected number or 'i'", pos);
      const char* begin = s.c_str() + pos;
      char* end = nullptr;
      value = std::strtod(begin, &end);
      if (end == begin) throw ParseError("expected number", pos);
      pos += static_cast<std::size_t>(end - begin);
      if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
        if (s[pos] == '*') {
          ++pos;
          if (pos >= s.size() || s[pos] != 'i')
            throw ParseError("expected 'i' after '*'", pos);
        }
        ++pos;
        imag = true;
      }
    }
    if (sign < 0) value = -value;
    if (imag) {
      if (have_im) throw ParseError("duplicate imaginary term", term_pos);
      im = value;
      have_im = true;
    } else {
      if (have_re) throw ParseError("duplicate real term", term_pos);
      re = value;
      have_re = true;
    }
    first = false;
  }
  if (!have_re && !have_im) throw ParseError("empty input", 0);
  return {re, im};
}

inline std::string complexf_str(ComplexF z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", z.real());
  std::string out = buf;
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(z.imag()));
  out += (z.imag() < 0 ? "-" : "+");
  out += buf;
  out += "*i";
  return out;
}

}  // namespace aq
