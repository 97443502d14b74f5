#include "aq/discres.hpp"

#include <catch2/catch_amalgamated.hpp>

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

GaussianRational root_difference_product(const std::vector<GaussianRational>& roots) {
  GaussianRational out(1);
  for (std::size_t j = 0; j < roots.size(); ++j)
    for (std::size_t k = j + 1; k < roots.size(); ++k) {
      GaussianRational d = roots[j] - roots[k];
      out *= d * d;
    }
  return out;
}
}  // namespace

TEST_CASE("resultant examples") {
  CHECK(resultant(P({-1, 1}), P({-2, 1})) == GaussianRational(-1));
  CHECK(resultant(P({-1, 0, 1}), P({-2, 1})) == GaussianRational(3));
  CHECK(resultant(P({-1, 1}), P({-1, 1})) == GaussianRational(0));
  CHECK_THROWS_AS(resultant(UniPoly::constant(3), P({-1, 1})), ArithmeticError);
  CHECK_THROWS_AS(resultant(P({-1, 1}), UniPoly::constant(3)), ArithmeticError);
}

TEST_CASE("resultant equals the root product formula") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> kd(1, 4);
    auto roots = rnd_distinct_rationals(rng, kd(rng));
    UniPoly f = UniPoly::from_roots(roots);
    UniPoly h = rnd_unipoly(rng, 4);
    while (h.degree() < 1) h = rnd_unipoly(rng, 4);
    GaussianRational expect(1);
    for (const auto& r : roots) expect *= h.eval(r);
    CHECK(resultant(f, h) == expect);

    int mn = f.degree() * h.degree();
    GaussianRational swapped = resultant(h, f);
    CHECK(swapped == (mn % 2 == 0 ? expect : -expect));
  }
}

TEST_CASE("symbolic resultant of generic linear polynomials") {
  std::vector<std::string> vars{"a0", "a1", "b0", "b1"};
  auto V = [&](const char* n) { return MultiPoly::variable(vars, n); };
  MultiPoly r = resultant_symbolic({V("a0"), V("a1")}, {V("b0"), V("b1")});
  CHECK(r == V("a0") * V("b1") - V("a1") * V("b0"));
}

TEST_CASE("discriminant examples") {
  // roots 1, 2, 3: squared differences 1 * 4 * 1
  CHECK(discriminant(P({-6, 11, -6, 1})) == GaussianRational(4));
  CHECK(discriminant(P({2, 3, 1})) == GaussianRational(1));  // 9 - 8, sign fixed
  CHECK_THROWS_AS(discriminant(P({-1, 1})), ArithmeticError);
}

TEST_CASE("symbolic discriminant matches the quadratic and cubic forms") {
  std::vector<std::string> v2{"a0", "a1", "a2"};
  auto A2 = [&](const char* n) { return MultiPoly::variable(v2, n); };
  CHECK(discriminant_symbolic(2) == A2("a1").pow(2) - GaussianRational(4) * A2("a0") * A2("a2"));

  std::vector<std::string> v3{"a0", "a1", "a2", "a3"};
  auto A = [&](const char* n) { return MultiPoly::variable(v3, n); };
  MultiPoly expect = A("a1").pow(2) * A("a2").pow(2) -
                     GaussianRational(4) * A("a0") * A("a2").pow(3) -
                     GaussianRational(4) * A("a1").pow(3) * A("a3") -
                     GaussianRational(27) * A("a0").pow(2) * A("a3").pow(2) +
                     GaussianRational(18) * A("a0") * A("a1") * A("a2") * A("a3");
  CHECK(discriminant_symbolic(3) == expect);
}

TEST_CASE("discriminant equals the root difference product") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> nd(2, 5);
    int n = nd(rng);
    std::vector<GaussianRational> roots;
    for (int k = 0; k < n; ++k) roots.push_back(GaussianRational{rnd_rational(rng, 9, 4)});
    UniPoly p = UniPoly::from_roots(roots);
    CHECK(discriminant(p) == root_difference_product(roots));
  }
}

TEST_CASE("discriminant scaling in the leading coefficient") {
  // D(c * p) = c^(2n-2) D(p) for degree n
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    auto roots = rnd_distinct_rationals(rng, 3);
    UniPoly p = UniPoly::from_roots(roots);
    GaussianRational c = rnd_gaussian_nonzero(rng);
    CHECK(discriminant(c * p) == c.pow(4) * discriminant(p));
  }
}

TEST_CASE("derivative discriminant chains") {
  DiscChain c2 = disc_chain(2, 1);
  REQUIRE(c2.equations.size() == 1);
  std::vector<std::string> v2{"a1", "a2"};
  auto B2 = [&](const char* n) { return MultiPoly::variable(v2, n); };
  CHECK(c2.equations[0] == B2("a1").pow(2) - GaussianRational(4) * B2("a2"));

  DiscChain c3 = disc_chain(3, 2);
  REQUIRE(c3.equations.size() == 2);
  std::vector<std::string> v3{"a1", "a2", "a3"};
  auto B = [&](const char* n) { return MultiPoly::variable(v3, n); };
  MultiPoly d3 = B("a1").pow(2) * B("a2").pow(2) - GaussianRational(4) * B("a2").pow(3) -
                 GaussianRational(4) * B("a1").pow(3) * B("a3") -
                 GaussianRational(27) * B("a3").pow(2) +
                 GaussianRational(18) * B("a1") * B("a2") * B("a3");
  CHECK(c3.equations[0] == d3);
  // discriminant of 3z^2 + 2 a1 z + a2
  CHECK(c3.equations[1] == GaussianRational(4) * B("a1").pow(2) - GaussianRational(12) * B("a2"));

  DiscChain c4 = disc_chain(4, 3);
  REQUIRE(c4.equations.size() == 3);
  std::vector<std::string> v4{"a1", "a2", "a3", "a4"};
  auto C = [&](const char* n) { return MultiPoly::variable(v4, n); };
  // discriminant of 12z^2 + 6 a1 z + 2 a2
  CHECK(c4.equations[2] ==
        GaussianRational(36) * C("a1").pow(2) - GaussianRational(96) * C("a2"));

  CHECK_THROWS_AS(disc_chain(3, 0), ArithmeticError);
  CHECK_THROWS_AS(disc_chain(3, 3), ArithmeticError);
}

TEST_CASE("chains vanish on polynomials with a root of the defining multiplicity") {
  std::mt19937 rng(47);
  int done = 0;
  while (done < 50) {
    std::uniform_int_distribution<int> nd(3, 5);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(2, n);
    int m = md(rng);
    auto points = rnd_distinct_rationals(rng, 1 + (n - m));
    GaussianRational u = points[0];
    std::vector<std::pair<GaussianRational, int>> rm{{u, m}};
    for (std::size_t k = 1; k < points.size(); ++k) rm.emplace_back(points[k], 1);
    UniPoly p = UniPoly::from_root_multiplicities(rm);
    REQUIRE(p.degree() == n);

    std::vector<GaussianRational> tail;
    for (int k = 1; k <= n; ++k) tail.push_back(p.coeff(n - k));

    // multiplicity m lands in D_m, the zero set of the chain at level m-1
    for (const auto& value : disc_chain(n, m - 1).eval(tail))
      CHECK(value == GaussianRational(0));

    // one level deeper the last equation sees a simple root
    if (m < n) {
      auto deeper = disc_chain(n, m).eval(tail);
      CHECK(deeper.back() != GaussianRational(0));
    }
    ++done;
  }
}
