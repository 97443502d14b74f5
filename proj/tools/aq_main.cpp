// Command line front end: classification, discriminants, quotient maps,
// region tests, Poisson brackets, verification suites, curve sampling, and
// the pendulum model.  All exact inputs are Q(i) literals like "3/5+1/5*i".
// Exit codes: 0 success (errata in reports do not fail), 1 a verification
// check failed outright, 2 usage or domain error.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aq/curves.hpp"
#include "aq/suites.hpp"

using nlohmann::ordered_json;

namespace {

struct Global {
  std::string convention = "char-poly";
  std::string orbit = "distinct";
  unsigned seed = 7;
  std::string out;
  std::string format = "json";
};

std::string fmt17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string tok = trim(comma == std::string::npos ? text.substr(start)
                                                      : text.substr(start, comma - start));
    if (tok.empty()) throw aq::ParseError("empty entry in list '" + text + "'", start);
    out.push_back(tok);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<aq::GaussianRational> parse_exact_list(const std::string& text) {
  std::vector<aq::GaussianRational> out;
  for (const std::string& tok : split_list(text)) out.push_back(aq::GaussianRational::parse(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& tok : split_list(text)) {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw aq::ParseError("cannot read number '" + tok + "'", 0);
    }
  }
  return out;
}

int write_output(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "aq: cannot open '%s' for writing\n", g.out.c_str());
    return 2;
  }
  f << text;
  return 0;
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += k + ',' + aq::detail::csv_field(v) + '\n';
  return out;
}

int emit(const Global& g, const ordered_json& j,
         const std::vector<std::pair<std::string, std::string>>& csv_rows) {
  return write_output(g, g.format == "csv" ? kv_csv(csv_rows) : j.dump(2) + "\n");
}

ordered_json json_complex(const aq::ComplexF& z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computations on the space of monic polynomials stratified by "
      "root multiplicity, its compact region, and the invariant Poisson "
      "structure of the underlying torus quotient"};
  app.name("aq");
  Global g;
  app.add_option("--convention", g.convention,
                 "sign rule tying coefficients to elementary symmetric functions")
      ->check(CLI::IsMember({"char-poly", "paper-display"}))
      ->capture_default_str();
  app.add_option("--orbit-sum", g.orbit, "monomial orbit counting for symmetrized functions")
      ->check(CLI::IsMember({"distinct", "full"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.require_subcommand(1);
  app.set_version_flag("--version", aq::kToolVersion);

  // classify
  std::string cl_poly;
  bool cl_numeric = false;
  double cl_tol = 1e-8;
  CLI::App* classify = app.add_subcommand("classify", "root multiplicity type of a polynomial");
  classify->fallthrough();
  classify->add_option("--poly", cl_poly, "monic tail a1,...,an of z^n + a1 z^(n-1) + ... + an, or all\ncoefficients a0;a1;...;an, entries in Q(i)")->required();
  classify->add_flag("--numeric", cl_numeric, "use floating root clustering");
  classify->add_option("--tol", cl_tol, "cluster separation tolerance")->capture_default_str();

  // disc
  std::string d_poly;
  int d_symbolic = 0, d_chain = -1;
  CLI::App* disc = app.add_subcommand("disc", "discriminants and derivative chains");
  disc->fallthrough();
  disc->add_option("--poly", d_poly,
                 "monic tail a1,...,an or full list a0;a1;...;an, entries in Q(i)");
  disc->add_option("--symbolic", d_symbolic, "expand the degree-n discriminant symbolically");
  disc->add_option("--chain", d_chain,
                   "evaluate the derivative discriminant chain of this level on --poly");

  // chi
  std::string chi_point;
  bool chi_full = false;
  CLI::App* chi_cmd = app.add_subcommand("chi", "quotient map on torus points");
  chi_cmd->fallthrough();
  chi_cmd->add_option("--point", chi_point, "comma separated Q(i) coordinates")->required();
  chi_cmd->add_flag("--full", chi_full, "do not constrain the coordinate product to 1");

  // region
  std::string r_point, r_alcove;
  double r_tol = 1e-9;
  CLI::App* region = app.add_subcommand("region", "compact region membership of a coefficient vector");
  region->fallthrough();
  region->add_option("--point", r_point, "comma separated Q(i) coefficients a1..a_(n-1)");
  region->add_option("--alcove", r_alcove,
                     "descending zero-sum angle list; its image is tested instead");
  region->add_option("--tol", r_tol, "unimodularity tolerance")->capture_default_str();

  // potential
  std::string pot_point;
  double pot_scale = 1.0;
  CLI::App* potential = app.add_subcommand("potential", "log-modulus potential at a torus point");
  potential->fallthrough();
  potential->add_option("--point", pot_point, "comma separated Q(i) coordinates")->required();
  potential->add_option("--scale", pot_scale, "inner product scale")->capture_default_str();

  // bracket
  int b_n = 0;
  std::string b_indices, b_at;
  CLI::App* bracket = app.add_subcommand("bracket", "power-sum bracket identity and values");
  bracket->fallthrough();
  bracket->add_option("--n", b_n, "number of torus coordinates")->required();
  bracket->add_option("--indices", b_indices, "j1,k1,j2,k2")->required();
  bracket->add_option("--at", b_at, "evaluate the bracket at these Q(i) coordinates");

  // rank
  int rk_n = 0;
  std::string rk_point;
  CLI::App* rank = app.add_subcommand("rank", "Poisson rank at a determinant-one torus point");
  rank->fallthrough();
  rank->add_option("--n", rk_n, "number of torus coordinates")->required();
  rank->add_option("--point", rk_point, "comma separated Q(i) coordinates with product 1")
      ->required();

  // verify
  std::string v_suite;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify->add_option("--suite", v_suite, "discriminant|strata|tau|su2|su3|jacobi|pendulum|all")
      ->required();

  // curve
  std::string cu_family;
  int cu_count = 100, cu_n = 4, cu_nt = 16, cu_nphi = 16;
  double cu_t = 1.0, cu_angle = 0.7853981633974483, cu_tmax = -1.0;
  CLI::App* curve = app.add_subcommand("curve", "sample a curve or surface family");
  curve->fallthrough();
  curve->add_option("--family", cu_family,
                    "ellipse|hyperbola|deltoid|canoe|dn-curve|alcove-boundary")
      ->required();
  curve->add_option("--count", cu_count, "number of samples")->capture_default_str();
  curve->add_option("--t", cu_t, "ellipse radius parameter")->capture_default_str();
  curve->add_option("--angle", cu_angle, "hyperbola angle parameter")->capture_default_str();
  curve->add_option("--tmax", cu_tmax, "parameter range bound (family dependent default)");
  curve->add_option("--n", cu_n, "degree for dn-curve")->capture_default_str();
  curve->add_option("--nt", cu_nt, "canoe mesh rows")->capture_default_str();
  curve->add_option("--nphi", cu_nphi, "canoe mesh columns")->capture_default_str();

  // pendulum
  std::string p_map, p_t = "1", p_phi_rational;
  double p_phi_angle = 0.0;
  bool p_phi_angle_set = false;
  std::string p_factor = "corrected";
  CLI::App* pend = app.add_subcommand("pendulum", "spherical pendulum model maps");
  pend->fallthrough();
  pend->add_option("--map", p_map, "embed|theta|phi")->required();
  pend->add_option("--t", p_t, "momentum parameter (rational in exact mode)");
  pend->add_option("--phi-rational", p_phi_rational,
                   "exact angle as the rational tangent half-angle parameter");
  pend->add_option("--phi-angle", p_phi_angle, "angle in radians (floating mode)")
      ->each([&](const std::string&) { p_phi_angle_set = true; });
  pend->add_option("--factor", p_factor, "flattening normalization")
      ->check(CLI::IsMember({"paper", "corrected"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    aq::QuotientConvention conv = aq::QuotientConvention::parse(g.convention);
    aq::SuiteOptions sopt{conv, aq::parse_orbit_counting(g.orbit), g.seed};

    if (app.got_subcommand(classify)) {
      aq::UniPoly p = aq::parse_poly(cl_poly);
      ordered_json j;
      j["command"] = "classify";
      j["poly"] = cl_poly;
      std::vector<std::pair<std::string, std::string>> rows{{"poly", cl_poly}};
      if (cl_numeric) {
        aq::NumericClassification cls = aq::classify_numeric(p, cl_tol);
        j["mode"] = "numeric";
        j["partition"] = cls.partition.str();
        j["roots"] = ordered_json::array();
        for (const auto& r : cls.roots) j["roots"].push_back(json_complex(r));
        j["radius"] = cls.radius;
        j["min_gap"] = cls.min_gap;
        j["ill_conditioned"] = cls.ill_conditioned;
        rows.emplace_back("mode", "numeric");
        rows.emplace_back("partition", cls.partition.str());
        for (std::size_t k = 0; k < cls.roots.size(); ++k) {
          rows.emplace_back("root_" + std::to_string(k + 1) + "_re", fmt17(cls.roots[k].real()));
          rows.emplace_back("root_" + std::to_string(k + 1) + "_im", fmt17(cls.roots[k].imag()));
        }
        rows.emplace_back("radius", fmt17(cls.radius));
        rows.emplace_back("min_gap", fmt17(cls.min_gap));
        rows.emplace_back("ill_conditioned", cls.ill_conditioned ? "true" : "false");
      } else {
        aq::Partition nu = aq::classify_exact(p);
        j["mode"] = "exact";
        j["partition"] = nu.str();
        rows.emplace_back("mode", "exact");
        rows.emplace_back("partition", nu.str());
      }
      return emit(g, j, rows);
    }

    if (app.got_subcommand(disc)) {
      ordered_json j;
      j["command"] = "disc";
      std::vector<std::pair<std::string, std::string>> rows;
      if (disc->count("--symbolic")) {
        if (d_symbolic < 2) throw aq::ArithmeticError("symbolic discriminant needs degree >= 2");
        std::string s = aq::discriminant_symbolic(d_symbolic).str();
        j["mode"] = "symbolic";
        j["n"] = d_symbolic;
        j["discriminant"] = s;
        rows = {{"mode", "symbolic"}, {"n", std::to_string(d_symbolic)}, {"discriminant", s}};
      } else if (disc->count("--poly")) {
        aq::UniPoly p = aq::parse_poly(d_poly);
        j["poly"] = d_poly;
        rows.emplace_back("poly", d_poly);
        if (d_chain >= 1) {
          if (!p.is_monic()) throw aq::ArithmeticError("chain evaluation expects a monic polynomial");
          int n = p.degree();
          std::vector<aq::GaussianRational> tail;
          for (int k = 1; k <= n; ++k) tail.push_back(p.coeff(n - k));
          aq::DiscChain chain = aq::disc_chain(n, d_chain);
          std::vector<aq::GaussianRational> res = chain.eval(tail);
          bool member = true;
          j["mode"] = "chain";
          j["level"] = d_chain;
          j["residuals"] = ordered_json::array();
          rows.emplace_back("mode", "chain");
          rows.emplace_back("level", std::to_string(d_chain));
          for (std::size_t k = 0; k < res.size(); ++k) {
            member = member && res[k].is_zero();
            j["residuals"].push_back(res[k].str());
            rows.emplace_back("residual_" + std::to_string(k + 1), res[k].str());
          }
          j["member"] = member;
          rows.emplace_back("member", member ? "true" : "false");
        } else {
          std::string v = aq::discriminant(p).str();
          j["mode"] = "value";
          j["discriminant"] = v;
          rows.emplace_back("mode", "value");
          rows.emplace_back("discriminant", v);
        }
      } else {
        throw aq::ParseError("disc needs --poly or --symbolic", 0);
      }
      return emit(g, j, rows);
    }

    if (app.got_subcommand(chi_cmd)) {
      std::vector<aq::GaussianRational> coords = parse_exact_list(chi_point);
      aq::TorusPoint pt(coords, !chi_full);
      std::vector<aq::GaussianRational> a = aq::chi(pt, conv);
      ordered_json j;
      j["command"] = "chi";
      j["convention"] = conv.str();
      j["constrained"] = !chi_full;
      j["point"] = ordered_json::array();
      for (const auto& z : coords) j["point"].push_back(z.str());
      j["coefficients"] = ordered_json::array();
      std::vector<std::pair<std::string, std::string>> rows{{"convention", conv.str()}};
      for (std::size_t k = 0; k < a.size(); ++k) {
        j["coefficients"].push_back(a[k].str());
        rows.emplace_back("a" + std::to_string(k + 1), a[k].str());
      }
      aq::UniPoly poly = chi_full ? [&] {
        std::vector<aq::GaussianRational> c(coords.size() + 1);
        c[coords.size()] = aq::GaussianRational(1);
        for (std::size_t k = 1; k <= a.size(); ++k) c[coords.size() - k] = a[k - 1];
        return aq::UniPoly(std::move(c));
      }()
                                  : aq::reconstruct_poly(a, conv);
      j["polynomial"] = poly.str();
      rows.emplace_back("polynomial", poly.str());
      return emit(g, j, rows);
    }

    if (app.got_subcommand(region)) {
      std::vector<aq::ComplexF> point;
      ordered_json input;
      if (region->count("--alcove")) {
        point = aq::alcove_sample(parse_double_list(r_alcove), conv);
        input = r_alcove;
      } else if (region->count("--point")) {
        for (const auto& z : parse_exact_list(r_point)) point.push_back(z.to_complex());
        input = r_point;
      } else {
        throw aq::ParseError("region needs --point or --alcove", 0);
      }
      aq::RegionResult res = aq::region_membership(point, conv, r_tol);
      ordered_json j;
      j["command"] = "region";
      j["convention"] = conv.str();
      j["input"] = input;
      j["coefficients"] = ordered_json::array();
      for (const auto& z : point) j["coefficients"].push_back(json_complex(z));
      j["verdict"] = aq::region_str(res.verdict);
      j["modulus_deviation"] = res.modulus_deviation;
      j["partition"] = res.partition.str();
      std::vector<std::pair<std::string, std::string>> rows{
          {"verdict", aq::region_str(res.verdict)},
          {"modulus_deviation", fmt17(res.modulus_deviation)},
          {"partition", res.partition.str()}};
      return emit(g, j, rows);
    }

    if (app.got_subcommand(potential)) {
      std::vector<aq::GaussianRational> coords = parse_exact_list(pot_point);
      std::vector<aq::ComplexF> zs;
      for (const auto& z : coords) zs.push_back(z.to_complex());
      double v = aq::kaehler_potential(zs, pot_scale);
      ordered_json j;
      j["command"] = "potential";
      j["point"] = ordered_json::array();
      for (const auto& z : coords) j["point"].push_back(z.str());
      j["scale"] = pot_scale;
      j["value"] = v;
      return emit(g, j, {{"scale", fmt17(pot_scale)}, {"value", fmt17(v)}});
    }

    if (app.got_subcommand(bracket)) {
      std::vector<std::string> toks = split_list(b_indices);
      if (toks.size() != 4) throw aq::ParseError("--indices needs j1,k1,j2,k2", 0);
      int idx[4];
      for (int k = 0; k < 4; ++k) {
        try {
          idx[k] = std::stoi(toks[static_cast<std::size_t>(k)]);
        } catch (const std::exception&) {
          throw aq::ParseError("cannot read index '" + toks[static_cast<std::size_t>(k)] + "'", 0);
        }
      }
      aq::RelationVerdict v = aq::verify_tau_bracket(b_n, idx[0], idx[1], idx[2], idx[3]);
      ordered_json j;
      j["command"] = "bracket";
      j["n"] = b_n;
      j["indices"] = {idx[0], idx[1], idx[2], idx[3]};
      j["identity"] = v.identity;
      j["structure_constant"] = idx[0] * idx[3] - idx[2] * idx[1];
      j["target"] = "tau_(" + std::to_string(idx[0] + idx[2]) + "," +
                    std::to_string(idx[1] + idx[3]) + ")";
      std::vector<std::pair<std::string, std::string>> rows{
          {"identity", v.identity ? "true" : "false"},
          {"structure_constant", std::to_string(idx[0] * idx[3] - idx[2] * idx[1])},
          {"target", j["target"].get<std::string>()}};
      if (bracket->count("--at")) {
        std::vector<aq::GaussianRational> at = parse_exact_list(b_at);
        if (static_cast<int>(at.size()) != b_n)
          throw aq::ArithmeticError("--at needs exactly n coordinates");
        aq::Laurent lb = aq::laurent_bracket(aq::tau_laurent(b_n, idx[0], idx[1]),
                                             aq::tau_laurent(b_n, idx[2], idx[3]));
        std::string val = lb.eval(at).str();
        j["value"] = val;
        rows.emplace_back("value", val);
      }
      return emit(g, j, rows);
    }

    if (app.got_subcommand(rank)) {
      aq::TorusPoint pt(parse_exact_list(rk_point), true);
      int r = aq::rank_at(rk_n, pt);
      ordered_json j;
      j["command"] = "rank";
      j["n"] = rk_n;
      j["point"] = ordered_json::array();
      for (const auto& z : pt.coords()) j["point"].push_back(z.str());
      j["rank"] = r;
      return emit(g, j, {{"rank", std::to_string(r)}});
    }

    if (app.got_subcommand(verify)) {
      aq::Report rep = aq::run_suite(v_suite, sopt);
      int code = write_output(g, g.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n");
      if (code != 0) return code;
      return rep.any_fail() ? 1 : 0;
    }

    if (app.got_subcommand(curve)) {
      aq::CurveFamily fam = aq::parse_curve_family(cu_family);
      aq::CurveSample sample;
      switch (fam) {
        case aq::CurveFamily::ellipse:
          sample = aq::ellipse_curve(cu_t, cu_count);
          break;
        case aq::CurveFamily::hyperbola:
          sample = aq::hyperbola_curve(cu_angle, cu_count, cu_tmax > 0 ? cu_tmax : 3.0);
          break;
        case aq::CurveFamily::deltoid:
          sample = aq::deltoid_curve(cu_count);
          break;
        case aq::CurveFamily::canoe:
          sample = aq::canoe_curve(cu_nt, cu_nphi, cu_tmax > 0 ? cu_tmax : 2.0);
          break;
        case aq::CurveFamily::dn_curve:
          sample = aq::dn_curve_samples(cu_n, cu_count);
          break;
        case aq::CurveFamily::alcove_boundary:
          sample = aq::alcove_boundary_curve(cu_count, conv, cu_tmax > 0 ? cu_tmax : 2.0);
          break;
      }
      ordered_json j;
      j["command"] = "curve";
      j["family"] = aq::curve_family_str(sample.family);
      j["params"] = ordered_json::object();
      for (const auto& [k, v] : sample.params) j["params"][k] = v;
      j["degenerate"] = sample.degenerate;
      if (!sample.note.empty()) j["note"] = sample.note;
      j["columns"] = sample.columns;
      j["points"] = ordered_json::array();
      for (const auto& row : sample.points) j["points"].push_back(row);
      if (g.format == "csv") {
        std::string csv;
        for (std::size_t k = 0; k < sample.columns.size(); ++k) {
          if (k) csv += ',';
          csv += sample.columns[k];
        }
        csv += '\n';
        for (const auto& row : sample.points) {
          for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) csv += ',';
            csv += fmt17(row[k]);
          }
          csv += '\n';
        }
        return write_output(g, csv);
      }
      return write_output(g, j.dump(2) + "\n");
    }

    if (app.got_subcommand(pend)) {
      aq::PhiFactor factor = aq::parse_phi_factor(p_factor);
      bool exact = pend->count("--phi-rational") > 0;
      if (exact && p_phi_angle_set)
        throw aq::ParseError("--phi-rational and --phi-angle are mutually exclusive", 0);
      ordered_json j;
      j["command"] = "pendulum";
      j["map"] = p_map;
      std::vector<std::pair<std::string, std::string>> rows;
      if (p_map == "embed" || p_map == "theta") {
        if (exact) {
          aq::Rational t = aq::Rational::parse(p_t);
          aq::Rational s = aq::Rational::parse(p_phi_rational);
          j["mode"] = "exact";
          j["t"] = t.str();
          j["s"] = s.str();
          if (p_map == "embed") {
            aq::ExactPhasePoint pt = aq::embed_exact(t, s);
            j["q"] = {pt.q[0].str(), pt.q[1].str(), pt.q[2].str()};
            j["p"] = {pt.p[0].str(), pt.p[1].str(), pt.p[2].str()};
            j["angular_momentum"] = aq::angular_momentum(pt).str();
            for (int k = 0; k < 3; ++k) rows.emplace_back("q" + std::to_string(k + 1), pt.q[k].str());
            for (int k = 0; k < 3; ++k) rows.emplace_back("p" + std::to_string(k + 1), pt.p[k].str());
            rows.emplace_back("angular_momentum", aq::angular_momentum(pt).str());
          } else {
            aq::ExactCanoePoint pt = aq::theta_exact(t, s);
            j["u"] = pt.u.str();
            j["v"] = pt.v.str();
            j["w"] = pt.w.str();
            j["membership"] = aq::canoe_class_str(aq::canoe_membership(pt));
            rows = {{"u", pt.u.str()},
                    {"v", pt.v.str()},
                    {"w", pt.w.str()},
                    {"membership", std::string(aq::canoe_class_str(aq::canoe_membership(pt)))}};
          }
        } else {
          double t = 0;
          try {
            t = std::stod(p_t);
          } catch (const std::exception&) {
            throw aq::ParseError("cannot read --t value '" + p_t + "'", 0);
          }
          j["mode"] = "floating";
          j["t"] = t;
          j["phi"] = p_phi_angle;
          if (p_map == "embed") {
            aq::PhasePoint pt = aq::embed(t, p_phi_angle);
            j["q"] = {pt.q[0], pt.q[1], pt.q[2]};
            j["p"] = {pt.p[0], pt.p[1], pt.p[2]};
            j["angular_momentum"] = aq::angular_momentum(pt);
            for (int k = 0; k < 3; ++k) rows.emplace_back("q" + std::to_string(k + 1), fmt17(pt.q[k]));
            for (int k = 0; k < 3; ++k) rows.emplace_back("p" + std::to_string(k + 1), fmt17(pt.p[k]));
            rows.emplace_back("angular_momentum", fmt17(aq::angular_momentum(pt)));
          } else {
            aq::CanoePoint pt = aq::theta(t, p_phi_angle);
            j["u"] = pt.u;
            j["v"] = pt.v;
            j["w"] = pt.w;
            j["membership"] = aq::canoe_class_str(aq::canoe_membership(pt, 1e-9));
            rows = {{"u", fmt17(pt.u)},
                    {"v", fmt17(pt.v)},
                    {"w", fmt17(pt.w)},
                    {"membership", std::string(aq::canoe_class_str(aq::canoe_membership(pt, 1e-9)))}};
          }
        }
      } else if (p_map == "phi") {
        aq::CanoePoint pt{};
        if (exact) {
          aq::Rational t = aq::Rational::parse(p_t);
          aq::Rational s = aq::Rational::parse(p_phi_rational);
          aq::ExactCanoePoint e = aq::theta_exact(t, s);
          pt = {e.u.to_double(), e.v.to_double(), e.w.to_double()};
          j["mode"] = "exact-parameter";
          j["t"] = t.str();
          j["s"] = s.str();
        } else {
          double t = 0;
          try {
            t = std::stod(p_t);
          } catch (const std::exception&) {
            throw aq::ParseError("cannot read --t value '" + p_t + "'", 0);
          }
          pt = aq::theta(t, p_phi_angle);
          j["mode"] = "floating";
          j["t"] = t;
          j["phi"] = p_phi_angle;
        }
        std::complex<double> v = aq::phi(pt, factor);
        j["factor"] = aq::phi_factor_str(factor);
        j["point"] = {{"u", pt.u}, {"v", pt.v}, {"w", pt.w}};
        j["value"] = json_complex(v);
        rows = {{"factor", std::string(aq::phi_factor_str(factor))},
                {"u", fmt17(pt.u)},
                {"v", fmt17(pt.v)},
                {"w", fmt17(pt.w)},
                {"value_re", fmt17(v.real())},
                {"value_im", fmt17(v.imag())}};
      } else {
        throw aq::ParseError("unknown map '" + p_map + "', expected embed|theta|phi", 0);
      }
      return emit(g, j, rows);
    }

    std::fprintf(stderr, "aq: no subcommand\n");
    return 2;
  } catch (const aq::ParseError& e) {
    std::fprintf(stderr, "aq: %s\n", e.what());
    return 2;
  } catch (const aq::ArithmeticError& e) {
    std::fprintf(stderr, "aq: %s\n", e.what());
    return 2;
  } catch (const aq::PoleError& e) {
    std::fprintf(stderr, "aq: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "aq: internal error: %s\n", e.what());
    return 1;
  }
}
