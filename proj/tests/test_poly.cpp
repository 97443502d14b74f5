#include "aq/multipoly.hpp"
#include "aq/unipoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "helpers.hpp"

using namespace aq;

namespace {
UniPoly P(std::vector<long long> low_first) {
  std::vector<GaussianRational> c;
  c.reserve(low_first.size());
  for (auto v : low_first) c.emplace_back(v);
  return UniPoly(std::move(c));
}
GaussianRational G(long long re, long long im = 0) {
  return {Rational(re), Rational(im)};
}
}  // namespace

TEST_CASE("unipoly basics") {
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly().degree() == -1);
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({3, 0, 1}).degree() == 2);
  CHECK(P({3, 0, 1}).coeff(0) == G(3));
  CHECK(P({3, 0, 1}).coeff(5) == G(0));
  CHECK(P({3, 0, 1}).is_monic());
  CHECK(UniPoly::monomial(4) == P({0, 0, 0, 0, 1}));
  CHECK(UniPoly::from_roots({G(1), G(2)}) == P({2, -3, 1}));
  CHECK(P({1, 2}) * P({-1, 2}) == P({-1, 0, 4}));
  CHECK(P({1, 1}).pow(2) == P({1, 2, 1}));
  CHECK(P({0, 1}).eval(G(0, 2)) == G(0, 2));
  CHECK(P({2, -3, 1}).eval(G(1)) == G(0));
}

TEST_CASE("derivative examples") {
  // z^3 + a1 z^2 + a2 z + a3, here with a1 = 5, a2 = -7/2, a3 = i
  UniPoly p(std::vector<GaussianRational>{
      GaussianRational::i(), {Rational(-7, 2)}, {Rational(5)}, G(1)});
  UniPoly dp = p.derivative();
  CHECK(dp == UniPoly(std::vector<GaussianRational>{{Rational(-7, 2)}, {Rational(10)}, G(3)}));

  CHECK(UniPoly::constant(G(9)).derivative().is_zero());
  CHECK(UniPoly::monomial(4).derivative(3) == P({0, 24}));
  CHECK(P({1, 1, 1}).derivative(0) == P({1, 1, 1}));
}

TEST_CASE("derivative is linear and satisfies Leibniz") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly f = rnd_unipoly(rng, 6), g = rnd_unipoly(rng, 6);
    GaussianRational s = rnd_gaussian(rng);
    CHECK((f + g).derivative() == f.derivative() + g.derivative());
    CHECK((s * f).derivative() == s * f.derivative());
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("divmod and gcd") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly a = rnd_unipoly(rng, 7);
    UniPoly b = rnd_unipoly(rng, 4);
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(a == q * b + r);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(UniPoly::divmod(P({1, 1}), UniPoly()), ArithmeticError);

  UniPoly f = UniPoly::from_roots({G(1), G(0, 1)});
  UniPoly g = UniPoly::from_roots({G(2), G(3)});
  UniPoly h = UniPoly::from_roots({G(-5)});
  CHECK(UniPoly::gcd(f * g, f * h).monic() == f);
  CHECK(UniPoly::gcd(g, h).degree() == 0);
}

TEST_CASE("squarefree decomposition examples") {
  UniPoly p = UniPoly::from_root_multiplicities({{G(1), 2}, {G(2), 1}});
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == UniPoly::from_roots({G(2)}));
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == UniPoly::from_roots({G(1)}));
  CHECK(dec[1].second == 2);

  auto dec2 = squarefree_decomposition(UniPoly::monomial(4));
  REQUIRE(dec2.size() == 1);
  CHECK(dec2[0].first == P({0, 1}));
  CHECK(dec2[0].second == 4);

  UniPoly q = G(0, 3) * UniPoly::from_roots({G(1), G(2), G(7)});
  auto dec3 = squarefree_decomposition(q);
  REQUIRE(dec3.size() == 1);
  CHECK(dec3[0].first == q.monic());
  CHECK(dec3[0].second == 1);

  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), ArithmeticError);
}

TEST_CASE("squarefree decomposition re-expands to the input") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> kd(1, 3), md(1, 4);
    int k = kd(rng);
    auto roots = rnd_distinct_rationals(rng, k);
    std::vector<std::pair<GaussianRational, int>> rm;
    for (const auto& r : roots) rm.emplace_back(r, md(rng));
    UniPoly p = rnd_gaussian_nonzero(rng) * UniPoly::from_root_multiplicities(rm);

    auto dec = squarefree_decomposition(p);
    UniPoly prod = UniPoly::constant(p.lead());
    for (const auto& [f, m] : dec) {
      CHECK(f.is_monic());
      CHECK(squarefree_decomposition(f).size() <= 1);  // factor itself squarefree
      prod = prod * f.pow(m);
    }
    CHECK(prod == p);
    for (std::size_t a = 0; a < dec.size(); ++a)
      for (std::size_t b = a + 1; b < dec.size(); ++b) {
        CHECK(UniPoly::gcd(dec[a].first, dec[b].first).degree() == 0);
        CHECK(dec[a].second < dec[b].second);
      }
  }
}

TEST_CASE("polynomial text formats") {
  CHECK(parse_poly("0,-1") == P({-1, 0, 1}));
  CHECK(parse_poly("-6,11,-6") == P({-6, 11, -6, 1}));
  CHECK(parse_poly("1;0;-1") == P({-1, 0, 1}));
  CHECK(parse_poly("2;3") == P({3, 2}));
  CHECK(parse_poly("5") == P({5, 1}));
  CHECK(parse_poly("1/2+1/2*i,0") == UniPoly(std::vector<GaussianRational>{
                                         G(0), {Rational(1, 2), Rational(1, 2)}, G(1)}));
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_poly("1;x;2"), ParseError);
}

TEST_CASE("unipoly rendering") {
  CHECK(P({-6, 11, -6, 1}).str() == "z^3 - 6*z^2 + 11*z - 6");
  CHECK(UniPoly().str() == "0");
  CHECK(P({5}).str() == "5");
  CHECK(UniPoly(std::vector<GaussianRational>{G(0), G(0, 1)}).str("w") == "(1*i)*w");
}

TEST_CASE("multipoly arithmetic") {
  std::vector<std::string> xy{"x", "y"};
  MultiPoly x = MultiPoly::variable(xy, "x");
  MultiPoly y = MultiPoly::variable(xy, "y");
  MultiPoly p = x * x + G(2) * x * y + y * y;
  CHECK(p == (x + y).pow(2));
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());

  MultiPoly w = MultiPoly::variable({"w"}, "w");
  MultiPoly mixed = (x + y) * (y + w);  // variable sets differ; union alignment
  std::map<std::string, GaussianRational> pt{{"x", G(1)}, {"y", G(2)}, {"w", G(3)}};
  CHECK(mixed.eval(pt) == G(15));

  CHECK(p.derivative("x") == G(2) * x + G(2) * y);
}

TEST_CASE("multipoly derivative of unknown variable throws") {
  std::vector<std::string> xy{"x", "y"};
  MultiPoly x = MultiPoly::variable(xy, "x");
  CHECK_THROWS_AS(x.derivative("q"), ArithmeticError);
}

TEST_CASE("multipoly substitution and conjugation") {
  std::vector<std::string> ab{"a", "b"};
  MultiPoly a = MultiPoly::variable(ab, "a");
  MultiPoly b = MultiPoly::variable(ab, "b");
  MultiPoly p = a.pow(2) - b;

  std::vector<std::string> uv{"u", "v"};
  MultiPoly u = MultiPoly::variable(uv, "u");
  MultiPoly v = MultiPoly::variable(uv, "v");
  MultiPoly q = p.subst({{"a", u + v}, {"b", u * v}});
  CHECK(q == u.pow(2) + G(2) * u * v + v.pow(2) - u * v);

  MultiPoly r = GaussianRational::i() * a + MultiPoly::constant(ab, G(1, -2));
  CHECK(r.conj_coeffs() == -GaussianRational::i() * a + MultiPoly::constant(ab, G(1, 2)));

  std::map<std::string, GaussianRational> missing{{"a", G(1)}};
  CHECK_THROWS_AS(p.eval(missing), ArithmeticError);
}

TEST_CASE("rational function evaluation examples") {
  std::vector<std::string> xy{"x", "y"};
  MultiPoly x = MultiPoly::variable(xy, "x");
  MultiPoly y = MultiPoly::variable(xy, "y");
  RatFn f{x * x + y * y};
  CHECK(f.eval({{"x", G(0)}, {"y", G(2)}}) == G(4));

  std::vector<std::string> zz{"z", "zb"};
  MultiPoly z = MultiPoly::variable(zz, "z");
  MultiPoly zb = MultiPoly::variable(zz, "zb");
  RatFn g{z * zb, z};
  CHECK(g.eval({{"z", G(0, 2)}, {"zb", G(0, -2)}}) == G(0, -2));

  // tau_(1,1) for two torus coordinates: z1 zb1 + z2 zb2 at z1 = 2i, z2 = 1/(2i)
  std::vector<std::string> tv{"z1", "zb1", "z2", "zb2"};
  auto V = [&](const char* n) { return MultiPoly::variable(tv, n); };
  RatFn tau{V("z1") * V("zb1") + V("z2") * V("zb2")};
  GaussianRational z2 = GaussianRational(1) / G(0, 2);
  CHECK(tau.eval({{"z1", G(0, 2)}, {"zb1", G(0, -2)}, {"z2", z2}, {"zb2", z2.conj()}}) ==
        GaussianRational(Rational(17, 4)));

  RatFn pole{MultiPoly::constant({"x"}, G(1)), MultiPoly::variable({"x"}, "x")};
  CHECK_THROWS_AS(pole.eval({{"x", G(0)}}), PoleError);
  CHECK_THROWS_WITH(pole.eval({{"x", G(0)}}), Catch::Matchers::ContainsSubstring("x=0"));
}

TEST_CASE("rational function equality by cross-multiplication") {
  std::vector<std::string> xy{"x", "y"};
  MultiPoly x = MultiPoly::variable(xy, "x");
  MultiPoly y = MultiPoly::variable(xy, "y");

  RatFn a{x * x - y * y, x - y};
  RatFn b{x + y};
  CHECK(RatFn::equal(a, b));
  CHECK_FALSE(RatFn::equal(a, RatFn{x - y}));

  // consistency with evaluation at random non-pole points
  std::mt19937 rng(31);
  int checked = 0;
  while (checked < 20) {
    GaussianRational px = rnd_gaussian(rng), py = rnd_gaussian(rng);
    if (px == py) continue;
    std::map<std::string, GaussianRational> pt{{"x", px}, {"y", py}};
    CHECK(a.eval(pt) == b.eval(pt));
    ++checked;
  }

  CHECK_THROWS_AS(RatFn(x, MultiPoly(xy)), ArithmeticError);
}

TEST_CASE("rational function arithmetic") {
  std::vector<std::string> xy{"x", "y"};
  MultiPoly x = MultiPoly::variable(xy, "x");
  MultiPoly y = MultiPoly::variable(xy, "y");
  RatFn f{x, y};
  RatFn g{y, x};
  CHECK(RatFn::equal(f * g, RatFn{MultiPoly::constant(xy, G(1))}));
  CHECK(RatFn::equal(f + g, RatFn{x * x + y * y, x * y}));
  CHECK(RatFn::equal(f - f, RatFn{}));
  CHECK(RatFn::equal(f / g, RatFn{x * x, y * y}));
  CHECK(RatFn::equal(f.pow(2), RatFn{x * x, y * y}));

  // d/dx (x/y) = 1/y, d/dy (x/y) = -x/y^2
  CHECK(RatFn::equal(f.derivative("x"), RatFn{MultiPoly::constant(xy, G(1)), y}));
  CHECK(RatFn::equal(f.derivative("y"), RatFn{-x, y * y}));
}
