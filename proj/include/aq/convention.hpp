#pragma once

#include <string>

#include "aq/rational.hpp"

namespace aq {

// Sign rule relating the reported coefficient vector to the elementary
// symmetric functions of the torus coordinates.
//   char_poly:      a_k = (-1)^k sigma_k, constant coefficient (-1)^n
//   paper_display:  a_k = sigma_k,        constant coefficient 1
// The two differ by the twist z -> -z composed with an overall sign on odd
// degrees, so both cut out the same loci.
enum class SignRule { char_poly, paper_display };

struct QuotientConvention {
  SignRule sign_rule = SignRule::char_poly;

  GaussianRational sigma_sign(int k) const {
    bool flip = sign_rule == SignRule::char_poly && k % 2 != 0;
    return GaussianRational(flip ? -1 : 1);
  }

  double sigma_sign_d(int k) const {
    bool flip = sign_rule == SignRule::char_poly && k % 2 != 0;
    return flip ? -1.0 : 1.0;
  }

  GaussianRational constant_coeff(int n) const { return sigma_sign(n); }

  std::string str() const {
    return sign_rule == SignRule::char_poly ? "char-poly" : "paper-display";
  }

  static QuotientConvention parse(const std::string& s) {
    if (s == "char-poly") return {SignRule::char_poly};
    if (s == "paper-display") return {SignRule::paper_display};
    throw ParseError("unknown convention '" + s + "'", 0);
  }

  bool operator==(const QuotientConvention& o) const { return sign_rule == o.sign_rule; }
};

}  // namespace aq
