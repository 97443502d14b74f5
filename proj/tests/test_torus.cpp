#include "aq/torus.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "aq/discres.hpp"
#include "helpers.hpp"

using namespace aq;

namespace {
const QuotientConvention kChar{SignRule::char_poly};
const QuotientConvention kPaper{SignRule::paper_display};

GaussianRational G(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("convention basics") {
  CHECK(kChar.str() == "char-poly");
  CHECK(kPaper.str() == "paper-display");
  CHECK(QuotientConvention::parse("char-poly") == kChar);
  CHECK(QuotientConvention::parse("paper-display") == kPaper);
  CHECK_THROWS_AS(QuotientConvention::parse("weyl"), ParseError);

  CHECK(kChar.constant_coeff(3) == G(-1));
  CHECK(kChar.constant_coeff(4) == G(1));
  CHECK(kPaper.constant_coeff(3) == G(1));
  CHECK(kChar.sigma_sign(1) == G(-1));
  CHECK(kChar.sigma_sign(2) == G(1));
  CHECK(kPaper.sigma_sign(1) == G(1));
}

TEST_CASE("torus point invariants") {
  CHECK_THROWS_AS(TorusPoint({G(1), G(0)}, false), ArithmeticError);
  CHECK_THROWS_AS(TorusPoint({G(2), G(3)}, true), ArithmeticError);
  CHECK_NOTHROW(TorusPoint({G(2), G(3)}, false));

  TorusPoint p = TorusPoint::determinant_slice({G(0, 2)});
  REQUIRE(p.n() == 2);
  CHECK(p.coords()[1] == GaussianRational(Rational(0), Rational(-1, 2)));
  CHECK(p.constrained());
}

TEST_CASE("quotient map values") {
  TorusPoint id2 = TorusPoint::determinant_slice({G(1)});
  CHECK(chi(id2, kPaper) == std::vector<GaussianRational>{G(2)});
  CHECK(chi(id2, kChar) == std::vector<GaussianRational>{G(-2)});

  TorusPoint two = TorusPoint::determinant_slice({G(2)});
  CHECK(chi(two, kPaper) == std::vector<GaussianRational>{GaussianRational(Rational(5, 2))});

  TorusPoint id3({G(1), G(1), G(1)}, true);
  CHECK(chi(id3, kPaper) == std::vector<GaussianRational>{G(3), G(3)});
  CHECK(chi(id3, kChar) == std::vector<GaussianRational>{G(-3), G(3)});

  // unconstrained points report all n elementary values
  TorusPoint gl({G(2), G(3)}, false);
  CHECK(chi(gl, kPaper) == std::vector<GaussianRational>{G(5), G(6)});
  CHECK(chi(gl, kChar) == std::vector<GaussianRational>{G(-5), G(6)});
}

TEST_CASE("quotient map is symmetric in the coordinates") {
  std::mt19937 rng(67);
  for (int n = 2; n <= 4; ++n) {
    std::vector<GaussianRational> lead;
    for (int j = 0; j + 1 < n; ++j) lead.push_back(rnd_gaussian_nonzero(rng));
    TorusPoint pt = TorusPoint::determinant_slice(lead);
    auto base = chi(pt, kChar);
    auto coords = pt.coords();
    std::sort(coords.begin(), coords.end());
    do {
      CHECK(chi(TorusPoint(coords, true), kChar) == base);
    } while (std::next_permutation(coords.begin(), coords.end()));
  }
}

TEST_CASE("reconstruction from the coefficient vector") {
  CHECK(reconstruct_poly({G(3), G(3)}, kPaper) == parse_poly("3,3,1"));
  CHECK(reconstruct_poly({G(-3), G(3)}, kChar) == parse_poly("-3,3,-1"));
  CHECK(classify_exact(reconstruct_poly({G(-3), G(3)}, kChar)) == Partition({3}));
}

TEST_CASE("central element images") {
  auto n2 = bottom_stratum_points(2, kPaper);
  REQUIRE(n2.size() == 2);
  REQUIRE(n2[0].coeffs_exact);
  REQUIRE(n2[1].coeffs_exact);
  CHECK(*n2[0].coeffs_exact == std::vector<GaussianRational>{G(2)});
  CHECK(*n2[1].coeffs_exact == std::vector<GaussianRational>{G(-2)});

  auto n3 = bottom_stratum_points(3, kPaper);
  REQUIRE(n3.size() == 3);
  REQUIRE(n3[0].coeffs_exact);
  CHECK(*n3[0].coeffs_exact == std::vector<GaussianRational>{G(3), G(3)});
  CHECK_FALSE(n3[1].coeffs_exact);
  ComplexF omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  CHECK(std::abs(n3[1].coeffs[0] - 3.0 * omega) < 1e-12);
  CHECK(std::abs(n3[1].coeffs[1] - 3.0 * omega * omega) < 1e-12);
  CHECK(std::abs(n3[2].coeffs[0] - 3.0 * omega * omega) < 1e-12);
  CHECK(std::abs(n3[2].coeffs[1] - 3.0 * omega) < 1e-12);

  auto n4 = bottom_stratum_points(4, kChar);
  REQUIRE(n4.size() == 4);
  std::vector<std::vector<GaussianRational>> expected{
      {G(-4), G(6), G(-4)},
      {G(0, -4), G(-6), G(0, 4)},
      {G(4), G(6), G(4)},
      {G(0, 4), G(-6), G(0, -4)}};
  for (std::size_t k = 0; k < 4; ++k) {
    REQUIRE(n4[k].coeffs_exact);
    CHECK(*n4[k].coeffs_exact == expected[k]);
  }

  CHECK_THROWS_AS(bottom_stratum_points(5, kChar), ArithmeticError);

  // each image is a total-degeneration point: the reconstruction is (z - w)^n
  for (int n = 2; n <= 4; ++n)
    for (const auto& im : bottom_stratum_points(n, kChar))
      if (im.coeffs_exact) CHECK(classify_exact(reconstruct_poly(*im.coeffs_exact, kChar)) ==
                                 Partition({n}));
}

TEST_CASE("boundary curve samples") {
  CHECK(hypersurface_sample(Rational(0)) == std::make_pair(Rational(3), Rational(0)));
  CHECK(hypersurface_sample(Rational(1)) == std::make_pair(Rational(-1), Rational(2)));
  CHECK(hypersurface_sample_pi() == std::make_pair(Rational(-1), Rational(0)));

  // every sample satisfies the degree-3 discriminant equation exactly,
  // under either convention
  std::mt19937 rng(71);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 15);
  for (int trial = 0; trial < 50; ++trial) {
    Rational s(num(rng), den(rng));
    auto [u, v] = hypersurface_sample(s);
    for (const auto& conv : {kChar, kPaper}) {
      UniPoly p = reconstruct_poly(hypersurface_coeffs(u, v, conv), conv);
      CHECK(discriminant(p).is_zero());
    }
  }
  auto [up, vp] = hypersurface_sample_pi();
  CHECK(discriminant(reconstruct_poly(hypersurface_coeffs(up, vp, kChar), kChar)).is_zero());
}

TEST_CASE("region membership") {
  std::vector<ComplexF> coords{std::polar(1.0, 1.0), std::polar(1.0, -0.4),
                               std::polar(1.0, -0.6)};
  auto interior = region_membership(chi_numeric(coords, true, kPaper), kPaper);
  CHECK(interior.verdict == RegionVerdict::interior);
  CHECK(interior.partition == Partition({1, 1, 1}));

  auto boundary = region_membership({ComplexF(3), ComplexF(3)}, kPaper);
  CHECK(boundary.verdict == RegionVerdict::boundary);
  CHECK(boundary.partition == Partition({3}));

  auto exterior = region_membership({ComplexF(10), ComplexF(10)}, kPaper);
  CHECK(exterior.verdict == RegionVerdict::exterior);

  CHECK_THROWS_AS(region_membership({}, kPaper), ArithmeticError);
}

TEST_CASE("alcove samples") {
  auto a0 = alcove_sample({0.0, 0.0}, kPaper);
  REQUIRE(a0.size() == 1);
  CHECK(std::abs(a0[0] - ComplexF(2)) < 1e-14);

  auto api = alcove_sample({M_PI, -M_PI}, kPaper);
  CHECK(std::abs(api[0] - ComplexF(-2)) < 1e-14);

  auto mid = alcove_sample({0.5, 0.0, -0.5}, kPaper);
  CHECK(region_membership(mid, kPaper).verdict == RegionVerdict::interior);

  // a repeated angle lands on the boundary hypersurface
  auto coll = alcove_sample({0.3, 0.3, -0.6}, kPaper);
  CHECK(region_membership(coll, kPaper).verdict == RegionVerdict::boundary);

  CHECK_THROWS_AS(alcove_sample({-0.5, 0.5}, kPaper), ArithmeticError);
  CHECK_THROWS_AS(alcove_sample({0.5, 0.1}, kPaper), ArithmeticError);
}

TEST_CASE("log-modulus energy") {
  // exact unimodular coordinates give exactly zero
  auto [c, s] = rational_circle(Rational(2, 3));
  GaussianRational z{c, s};
  TorusPoint pt({z, GaussianRational(1) / z}, true);
  CHECK(kaehler_potential(pt) == 0.0);

  double e = std::exp(1.0);
  CHECK(kaehler_potential(std::vector<ComplexF>{ComplexF(e), ComplexF(1 / e), ComplexF(1)}) ==
        Catch::Approx(2.0).epsilon(1e-12));
  CHECK(kaehler_potential(std::vector<ComplexF>{ComplexF(e * e), ComplexF(1 / (e * e))}) ==
        Catch::Approx(8.0).epsilon(1e-12));
  CHECK(kaehler_potential(std::vector<ComplexF>{ComplexF(e), ComplexF(1 / e)}, 3.0) ==
        Catch::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(kaehler_potential(std::vector<ComplexF>{ComplexF(0)}), ArithmeticError);

  // nonnegative on random exact points
  std::mt19937 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    TorusPoint q =
        TorusPoint::determinant_slice({rnd_gaussian_nonzero(rng), rnd_gaussian_nonzero(rng)});
    CHECK(kaehler_potential(q) >= 0.0);
  }
}

TEST_CASE("degree-2 slice embeds into the degree-3 multiple-root locus") {
  std::mt19937 rng(79);
  int done = 0;
  while (done < 20) {
    GaussianRational z = done < 10
                             ? GaussianRational(rational_circle_point(Rational(done + 1, 3)))
                             : rnd_gaussian_nonzero(rng);
    auto [s1, s2] = su2_embedding(z);

    // oracle: the same values arise as chi of the diagonal point (z, z, z^-2)
    TorusPoint diag({z, z, GaussianRational(1) / (z * z)}, true);
    auto image = chi(diag, kPaper);
    CHECK(image[0] == s1);
    CHECK(image[1] == s2);

    for (const auto& conv : {kChar, kPaper}) {
      UniPoly p = reconstruct_poly(
          {conv.sigma_sign(1) * s1, conv.sigma_sign(2) * s2}, conv);
      CHECK(membership_dk(p, 2).verdict == MemberVerdict::member);
    }
    ++done;
  }
  CHECK_THROWS_AS(su2_embedding(G(0)), ArithmeticError);
}
