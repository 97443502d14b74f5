#pragma once

#include "aq/rational.hpp"
#include "aq/unipoly.hpp"

#include <random>
#include <vector>

inline aq::Rational rnd_rational(std::mt19937& rng, int num_range = 30, int den_range = 12) {
  std::uniform_int_distribution<int> nd(-num_range, num_range);
  std::uniform_int_distribution<int> dd(1, den_range);
  return aq::Rational(nd(rng), dd(rng));
}

inline aq::GaussianRational rnd_gaussian(std::mt19937& rng) {
  return {rnd_rational(rng), rnd_rational(rng)};
}

inline aq::GaussianRational rnd_gaussian_nonzero(std::mt19937& rng) {
  for (;;) {
    aq::GaussianRational g = rnd_gaussian(rng);
    if (!g.is_zero()) return g;
  }
}

inline aq::UniPoly rnd_unipoly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> dd(0, max_degree);
  int deg = dd(rng);
  std::vector<aq::GaussianRational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rnd_gaussian(rng);
  c.back() = rnd_gaussian_nonzero(rng);
  return aq::UniPoly(std::move(c));
}

inline std::vector<aq::GaussianRational> rnd_distinct_rationals(std::mt19937& rng, int count) {
  std::vector<aq::GaussianRational> out;
  while (static_cast<int>(out.size()) < count) {
    aq::GaussianRational r{rnd_rational(rng, 12, 6)};
    bool fresh = true;
    for (const auto& o : out) fresh = fresh && o != r;
    if (fresh) out.push_back(r);
  }
  return out;
}
