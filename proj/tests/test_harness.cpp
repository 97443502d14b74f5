#include "aq/harness.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "helpers.hpp"

using namespace aq;

namespace {

GaussianRational G(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }

TorusFunction constrained_tau(const std::string& name, int n, int r, int s) {
  return TorusFunction(name, tau_laurent(n, r, s).constrain_last(),
                       std::make_pair(r, s));
}

// Recombines a corrected coefficient vector with the support monomials of
// the polynomial it was derived from; term order matches the search.
Laurent recombine(const CorrectedRelation& c, const MultiPoly& diff,
                  const std::vector<TorusFunction>& gens) {
  std::map<std::string, const Laurent*> by_name;
  for (const auto& g : gens) by_name[g.name] = &g.fn;
  const int m = gens[0].fn.coordinates();
  Laurent out(m);
  std::size_t i = 0;
  for (const auto& [exps, coeff] : diff.terms()) {
    Laurent mono = Laurent::constant(m, GaussianRational(1));
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] > 0)
        mono = mono * by_name.at(diff.vars()[v])->pow(static_cast<int>(exps[v]));
    out = out + c.corrected[i] * mono;
    ++i;
  }
  return out;
}

}  // namespace

TEST_CASE("exact linear solving") {
  using detail::kernel_exact;
  using detail::solve_exact;

  auto sol = solve_exact({{G(1), G(2)}, {G(3), G(4)}}, {G(5), G(6)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == G(-4));
  CHECK((*sol)[1] == GaussianRational(Rational(9, 2)));

  CHECK_FALSE(solve_exact({{G(1), G(1)}, {G(1), G(1)}}, {G(1), G(2)}).has_value());

  auto under = solve_exact({{G(1), G(1)}}, {G(3)});
  REQUIRE(under.has_value());
  CHECK((*under)[0] == G(3));
  CHECK((*under)[1] == G(0));

  auto ker = kernel_exact({{G(1), G(1)}});
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == G(-1));
  CHECK(ker[0][1] == G(1));
  CHECK(kernel_exact({{G(1), G(0)}, {G(0), G(1)}}).empty());

  // complex pivots
  auto csol = solve_exact({{G(0, 1)}}, {G(1)});
  REQUIRE(csol.has_value());
  CHECK((*csol)[0] == G(0, -1));
}

TEST_CASE("rewriting power sums in generators") {
  SECTION("second power sum on two coordinates") {
    auto e = rewrite_in_generators(constrained_tau("t2", 2, 2, 0),
                                   {constrained_tau("t1", 2, 1, 0)});
    REQUIRE(e.found);
    const std::vector<std::string> v = {"t1"};
    CHECK(e.expression == MultiPoly::variable(v, "t1", 2) -
                              MultiPoly::constant(v, G(2)));
  }

  SECTION("third power sum on three coordinates") {
    auto e = rewrite_in_generators(
        constrained_tau("t3", 3, 3, 0),
        {constrained_tau("t1", 3, 1, 0), constrained_tau("t2", 3, 2, 0)});
    REQUIRE(e.found);
    const std::vector<std::string> v = {"t1", "t2"};
    MultiPoly expect =
        GaussianRational(Rational(3, 2)) *
            (MultiPoly::variable(v, "t1") * MultiPoly::variable(v, "t2")) -
        GaussianRational(Rational(1, 2)) * MultiPoly::variable(v, "t1", 3) +
        MultiPoly::constant(v, G(3));
    CHECK(e.expression == expect);
  }

  SECTION("a generator rewrites to itself") {
    auto e = rewrite_in_generators(constrained_tau("t", 2, 1, 1),
                                   {constrained_tau("t", 2, 1, 1)});
    REQUIRE(e.found);
    CHECK(e.expression == MultiPoly::variable({"t"}, "t"));
  }

  SECTION("charge obstruction") {
    auto e = rewrite_in_generators(constrained_tau("t1", 2, 1, 0),
                                   {constrained_tau("t2", 2, 2, 0)});
    CHECK_FALSE(e.found);
    CHECK(e.note == "no generator monomials in the target charge class");
  }

  SECTION("weight bound too small") {
    auto e = rewrite_in_generators(
        constrained_tau("t3", 3, 3, 0),
        {constrained_tau("t1", 3, 1, 0), constrained_tau("t2", 3, 2, 0)}, 2);
    CHECK_FALSE(e.found);
    CHECK(e.note == "no expression within the weight bound");
  }

  CHECK_THROWS_AS(
      rewrite_in_generators(constrained_tau("t", 2, 1, 0), {}),
      ArithmeticError);
}

TEST_CASE("two-coordinate relation is an identity") {
  for (auto counting : {OrbitCounting::distinct_monomial,
                        OrbitCounting::full_symmetrization}) {
    RelationVerdict v = su2_analogue_relation(counting);
    CHECK(v.identity);
    CHECK_FALSE(v.witness.has_value());
  }

  // both sides at z = 2i evaluate to 625/16
  Laurent s1 = sigma_laurent(2, 1, 0).constrain_last();
  Laurent s1b = sigma_laurent(2, 0, 1).constrain_last();
  Laurent s = sigma_laurent(2, 1, 1).constrain_last();
  Laurent four = Laurent::constant(1, G(4));
  Laurent lhs = (s1 * s1 - four) * (s1b * s1b - four);
  Laurent rhs = (s1 * s1b - G(2) * s).pow(2);
  CHECK(lhs.eval({G(0, 2)}) == GaussianRational(Rational(625, 16)));
  CHECK(rhs.eval({G(0, 2)}) == GaussianRational(Rational(625, 16)));
}

TEST_CASE("three-coordinate relation harness") {
  SECTION("distinct-monomial counting") {
    auto reports = su3_relation_harness(OrbitCounting::distinct_monomial);
    REQUIRE(reports.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(reports[i].verdict.id == "su3_relation_" + std::to_string(i + 1));
      CHECK(reports[i].verdict.convention == "distinct");
      CHECK_FALSE(reports[i].verdict.identity);
      REQUIRE(reports[i].verdict.witness.has_value());
      REQUIRE(reports[i].corrected.has_value());
    }
    CHECK(reports[0].verdict.witness->coords() ==
          std::vector<GaussianRational>{G(1), G(1), G(1)});
    CHECK(reports[0].verdict.residual == G(-36));
    CHECK(reports[1].verdict.witness->coords() ==
          std::vector<GaussianRational>{G(1), G(1), G(1)});
    CHECK(reports[1].verdict.residual == G(-81));
    CHECK(reports[2].verdict.witness->coords() ==
          std::vector<GaussianRational>{G(1), G(0, 1), G(0, -1)});
    CHECK(reports[2].verdict.residual == G(-32));

    // no coefficient fix exists over the first relation's printed support
    CHECK_FALSE(reports[0].corrected->found);
    CHECK(reports[0].corrected->note ==
          "no identities supported on the printed monomials");
    CHECK(reports[1].corrected->found);
    CHECK(reports[1].corrected->distance_sq == Rational(254361, 338));
    CHECK(reports[2].corrected->found);
    CHECK(reports[2].corrected->distance_sq == Rational(39096, 371));
  }

  SECTION("full-symmetrization counting") {
    auto reports = su3_relation_harness(OrbitCounting::full_symmetrization);
    REQUIRE(reports.size() == 3);
    std::vector<GaussianRational> residuals;
    for (const auto& rep : reports) {
      CHECK(rep.verdict.convention == "full");
      CHECK_FALSE(rep.verdict.identity);
      REQUIRE(rep.verdict.witness.has_value());
      CHECK(rep.verdict.witness->coords() ==
            std::vector<GaussianRational>{G(1), G(1), G(1)});
      residuals.push_back(rep.verdict.residual);
    }
    CHECK(residuals == std::vector<GaussianRational>{G(-576), G(1134), G(-3267)});
  }

  SECTION("witness residuals recompute by direct enumeration") {
    // at (1, i, -i): sigma1 = sigmabar1 = sigma2 = sigmabar2 = 1,
    // sigma = -2, rho = rhobar = -1, so the cubic discriminant is -16 and
    // the third relation's right side is 16
    std::vector<GaussianRational> z = {G(1), G(0, 1), G(0, -1)};
    auto zb = z;
    for (auto& w : zb) w = w.conj();
    GaussianRational s1 = z[0] + z[1] + z[2];
    GaussianRational s2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
    GaussianRational sig;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) sig = sig + z[a] * zb[b];
    GaussianRational rho = z[0] * z[1] * zb[2] + z[0] * z[2] * zb[1] +
                           z[1] * z[2] * zb[0];
    CHECK(s1 == G(1));
    CHECK(s2 == G(1));
    CHECK(sig == G(-2));
    CHECK(rho == G(-1));
    GaussianRational d3 = s1.pow(2) * s2.pow(2) - G(4) * s2.pow(3) -
                          G(4) * s1.pow(3) - G(27) + G(18) * s1 * s2;
    CHECK(d3 == G(-16));
    GaussianRational s1b = s1.conj();
    GaussianRational coef =
        (s1.pow(2) - G(2) * s2) * s1 - s1.pow(3) + G(3) * s1 * s2 - G(3);
    GaussianRational rhs =
        s1b.pow(3) - s2 * s1b.pow(2) * sig +
        (s2.pow(2) - G(2) * s1) * s1b.pow(2) * rho + s1 * s1b * sig.pow(2) -
        coef * s1b * sig * rho - sig.pow(3) +
        (s1.pow(2) - G(2) * s2) * s1b * rho.pow(2) +
        s2 * sig.pow(2) * rho - s1 * sig * rho.pow(2) + rho.pow(3);
    CHECK(rhs == G(16));
    CHECK(d3 - rhs == G(-32));

    // the first relation at the identity point, by plain arithmetic
    GaussianRational l1 = (G(9) - G(12)) * (G(9) - G(12));
    GaussianRational r1 = (G(9) - G(12)).pow(2) + G(2) * G(3) * G(3) + G(2) * G(3) * G(3);
    CHECK(l1 - r1 == G(-36));
  }
}

TEST_CASE("corrected coefficient search") {
  auto gens = detail::su3_generators(OrbitCounting::distinct_monomial);
  auto rel = detail::su3_relation_polynomials();

  SECTION("the projection is an identity distinct from the printed vector") {
    for (std::size_t i = 1; i < 3; ++i) {
      MultiPoly diff = rel.lhs[i] - rel.rhs[i];
      CorrectedRelation c = corrected_relation_search(diff, gens);
      REQUIRE(c.found);
      CHECK(c.monomials.size() == c.printed.size());
      CHECK(c.printed.size() == c.corrected.size());
      CHECK(c.printed != c.corrected);
      CHECK(Rational(0) < c.distance_sq);
      CHECK(recombine(c, diff, gens).is_zero());
    }
  }

  SECTION("deterministic across seeds") {
    MultiPoly diff = rel.lhs[2] - rel.rhs[2];
    CorrectedRelation a = corrected_relation_search(diff, gens, 4242);
    CorrectedRelation b = corrected_relation_search(diff, gens, 777);
    REQUIRE(a.found);
    REQUIRE(b.found);
    CHECK(a.corrected == b.corrected);
    CHECK(a.distance_sq == b.distance_sq);
  }

  SECTION("empty kernel reports no fix") {
    MultiPoly diff = rel.lhs[0] - rel.rhs[0];
    CorrectedRelation c = corrected_relation_search(diff, gens);
    CHECK_FALSE(c.found);
    CHECK(c.monomials.size() == 7);
  }
}
