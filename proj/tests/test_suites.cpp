#include "aq/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aq/curves.hpp"

using namespace aq;

TEST_CASE("report serialization") {
  Report r;
  r.suite = "demo";
  r.seed = 7;
  Check b;
  b.name = "demo.beta";
  b.status = CheckStatus::erratum;
  b.claim = "claim with, comma and \"quote\"";
  b.printed = "x";
  b.derived = "y";
  Check a;
  a.name = "demo.alpha";
  a.claim = "plain";
  r.checks = {b, a};

  SECTION("json shape") {
    auto j = r.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["tool"] == "aq");
    CHECK(j["suite"] == "demo");
    CHECK(j["seed"] == 7);
    CHECK(j["counts"]["pass"] == 1);
    CHECK(j["counts"]["erratum"] == 1);
    CHECK(j["counts"]["fail"] == 0);
    REQUIRE(j["checks"].size() == 2);
    // sorted by name regardless of insertion order
    CHECK(j["checks"][0]["name"] == "demo.alpha");
    CHECK(j["checks"][1]["name"] == "demo.beta");
    CHECK(j["checks"][1]["printed"] == "x");
    CHECK(j["checks"][1]["derived"] == "y");
    // empty optional fields are omitted
    CHECK_FALSE(j["checks"][0].contains("printed"));
    CHECK_FALSE(j["checks"][0].contains("witness"));
  }

  SECTION("csv quoting") {
    std::string csv = r.to_csv();
    CHECK(csv.rfind("name,status,claim,witness,residual,printed,derived,note\n", 0) == 0);
    CHECK(csv.find("\"claim with, comma and \"\"quote\"\"\"") != std::string::npos);
    CHECK(csv.find("demo.alpha,pass,plain") != std::string::npos);
  }

  SECTION("status accounting") {
    CHECK_FALSE(r.any_fail());
    Check g;
    g.name = "demo.gamma";
    g.status = CheckStatus::fail;
    r.checks.push_back(g);
    CHECK(r.any_fail());
    CHECK(r.count(CheckStatus::fail) == 1);
  }
}

TEST_CASE("suite outcomes are frozen") {
  // expected (pass, erratum) per suite; no suite may ever report a fail
  const std::map<std::string, std::pair<int, int>> expected = {
      {"discriminant", {6, 1}}, {"strata", {8, 4}}, {"tau", {6, 0}},  {"su2", {5, 0}},
      {"su3", {0, 3}},          {"jacobi", {3, 0}}, {"pendulum", {5, 1}},
  };
  SuiteOptions opt;
  int total = 0;
  for (const auto& [name, counts] : expected) {
    Report r = run_suite(name, opt);
    INFO(name);
    CHECK(r.count(CheckStatus::pass) == counts.first);
    CHECK(r.count(CheckStatus::erratum) == counts.second);
    CHECK(r.count(CheckStatus::fail) == 0);
    total += static_cast<int>(r.checks.size());
  }
  Report all = run_suite("all", opt);
  CHECK(static_cast<int>(all.checks.size()) == total);
  CHECK(all.count(CheckStatus::erratum) == 9);

  const std::set<std::string> errata = {
      "discriminant.derivative_display", "pendulum.flattening_factor",
      "strata.bottom_points_n4",         "strata.double_pair_first_printed",
      "strata.double_pair_second_printed", "strata.slice_cusp_equation",
      "su3.relation_1",                  "su3.relation_2",
      "su3.relation_3",
  };
  std::set<std::string> got;
  for (const Check& c : all.checks) {
    if (c.status == CheckStatus::erratum) {
      got.insert(c.name);
      // every erratum carries both the printed and the derived form
      CHECK_FALSE(c.printed.empty());
      CHECK_FALSE(c.derived.empty());
      CHECK_FALSE(c.witness.empty());
    }
  }
  CHECK(got == errata);
}

TEST_CASE("suite reports are deterministic") {
  SuiteOptions opt;
  opt.seed = 42;
  Report a = run_suite("strata", opt);
  Report b = run_suite("strata", opt);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
  CHECK(a.to_csv() == b.to_csv());
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), ParseError);
  const std::vector<std::string> want = {"discriminant", "strata", "tau",      "su2",
                                         "su3",          "jacobi", "pendulum", "all"};
  CHECK(suite_names() == want);
}

TEST_CASE("ellipse family") {
  CurveSample e = ellipse_curve(0.8, 40);
  REQUIRE(e.points.size() == 40);
  CHECK_FALSE(e.degenerate);
  double A = 2.0 * std::cosh(0.8), B = 2.0 * std::sinh(0.8);
  for (const auto& p : e.points) {
    double r = p[0] * p[0] / (A * A) + p[1] * p[1] / (B * B);
    CHECK(std::abs(r - 1.0) < 1e-12);
  }

  CurveSample flat = ellipse_curve(0.0, 16);
  CHECK(flat.degenerate);
  for (const auto& p : flat.points) {
    CHECK(p[1] == 0.0);
    CHECK(std::abs(p[0]) <= 2.0 + 1e-15);
  }
  CHECK_THROWS_AS(ellipse_curve(1.0, 1), ArithmeticError);
}

TEST_CASE("hyperbola family") {
  double a = 1.1;
  CurveSample h = hyperbola_curve(a, 33, 2.5);
  REQUIRE(h.points.size() == 33);
  CHECK_FALSE(h.degenerate);
  double A = 2.0 * std::cos(a), B = 2.0 * std::sin(a);
  for (const auto& p : h.points) {
    double r = p[0] * p[0] / (A * A) - p[1] * p[1] / (B * B);
    CHECK(std::abs(r - 1.0) < 1e-10);
  }

  CurveSample ray = hyperbola_curve(0.0, 9);
  CHECK(ray.degenerate);
  for (const auto& p : ray.points) {
    CHECK(p[1] == 0.0);
    CHECK(p[0] >= 2.0);
  }
  CHECK(ray.note.find("double ray") != std::string::npos);
  CHECK_THROWS_AS(hyperbola_curve(1.0, 5, 0.0), ArithmeticError);
}

TEST_CASE("ellipse and hyperbola families are orthogonal") {
  // tangents at the common parameter point (t, a): the dot product cancels
  // algebraically; check 50 off-focal intersections numerically
  for (int k = 0; k < 50; ++k) {
    double t = 0.2 + 0.05 * k;
    double a = 0.15 + 0.06 * k;
    double et[2] = {-2.0 * std::cosh(t) * std::sin(a), 2.0 * std::sinh(t) * std::cos(a)};
    double ht[2] = {2.0 * std::sinh(t) * std::cos(a), 2.0 * std::cosh(t) * std::sin(a)};
    CHECK(std::abs(et[0] * ht[0] + et[1] * ht[1]) < 1e-8);
  }
}

TEST_CASE("deltoid family") {
  CurveSample d = deltoid_curve(101);
  REQUIRE(d.points.size() == 101);
  QuotientConvention conv = QuotientConvention::parse("paper-display");
  for (const auto& p : d.points) {
    // boundary membership of the reconstructed coefficient vector
    std::vector<ComplexF> a = {ComplexF(p[0], p[1]), ComplexF(p[0], -p[1])};
    RegionResult r = region_membership(a, conv);
    CHECK(r.verdict == RegionVerdict::boundary);
  }
  // cusp at u + iv = 3 is hit by the midpoint parameter
  bool has_cusp = false;
  for (const auto& p : d.points) has_cusp = has_cusp || (p[0] == 3.0 && p[1] == 0.0);
  CHECK(has_cusp);
  CHECK_THROWS_AS(deltoid_curve(0), ArithmeticError);
}

TEST_CASE("canoe family") {
  CurveSample c = canoe_curve(8, 10, 2.0);
  REQUIRE(c.points.size() == 80);
  REQUIRE(c.columns == std::vector<std::string>{"u", "v", "w"});
  for (const auto& p : c.points) {
    CanoeClass cls = canoe_membership(CanoePoint{p[0], p[1], p[2]}, 1e-9);
    CHECK(cls != CanoeClass::not_member);
  }
}

TEST_CASE("totally degenerate family") {
  CurveSample d = dn_curve_samples(4, 21);
  REQUIRE(d.points.size() == 21);
  REQUIRE(d.columns.size() == 8);
  for (const auto& p : d.points) {
    std::vector<ComplexF> low;  // a_n, ..., a_1, 1
    for (int k = 3; k >= 0; --k) low.emplace_back(p[2 * k], p[2 * k + 1]);
    low.emplace_back(1.0, 0.0);
    NumericClassification cls = classify_numeric(low, 1e-6);
    CHECK(cls.partition == Partition({4}));
  }
  CHECK_THROWS_AS(dn_curve_samples(1, 10), ArithmeticError);
}

TEST_CASE("alcove facet family") {
  QuotientConvention conv;
  CurveSample a = alcove_boundary_curve(15, conv, 1.5);
  REQUIRE(a.points.size() == 15);
  for (const auto& p : a.points) {
    std::vector<ComplexF> pt = {ComplexF(p[0], p[1]), ComplexF(p[2], p[3])};
    RegionResult r = region_membership(pt, conv);
    CHECK(r.verdict == RegionVerdict::boundary);
  }
  CHECK_THROWS_AS(alcove_boundary_curve(5, conv, 10.0), ArithmeticError);
}

TEST_CASE("curve family names round trip") {
  for (CurveFamily f : {CurveFamily::ellipse, CurveFamily::hyperbola, CurveFamily::deltoid,
                        CurveFamily::canoe, CurveFamily::dn_curve, CurveFamily::alcove_boundary})
    CHECK(parse_curve_family(curve_family_str(f)) == f);
  CHECK_THROWS_AS(parse_curve_family("circle"), ParseError);
}
