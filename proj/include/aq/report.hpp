#pragma once

// Machine-readable verification reports.  A report is a batch of named
// checks, each carrying a verdict, the claim it tested in words, and (for
// erratum entries) the printed form, the independently derived form, and an
// exact counterexample.  Serialization is deterministic: fixed key order,
// checks sorted by name, no timestamps.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aq/convention.hpp"
#include "aq/torusfn.hpp"

namespace aq {

inline constexpr const char* kToolName = "aq";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class CheckStatus { pass, fail, erratum };

inline std::string check_status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::erratum: return "erratum";
  }
  return "fail";
}

// One verified statement.  `claim` describes what was checked; `witness` and
// `residual` pin down a counterexample when the verdict is erratum, and
// `printed` / `derived` quote the displayed form next to the derived one.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string claim;
  std::string witness;
  std::string residual;
  std::string printed;
  std::string derived;
  std::string note;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

struct Report {
  std::string suite;
  QuotientConvention convention{};
  OrbitCounting orbit = OrbitCounting::distinct_monomial;
  unsigned seed = 0;
  std::vector<Check> checks;

  int count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
      if (c.status == s) ++n;
    return n;
  }

  bool any_fail() const { return count(CheckStatus::fail) > 0; }

  std::vector<Check> sorted_checks() const {
    std::vector<Check> out = checks;
    std::sort(out.begin(), out.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["suite"] = suite;
    j["convention"] = convention.str();
    j["orbit_sum"] = orbit_counting_str(orbit);
    j["seed"] = seed;
    j["counts"] = {{"pass", count(CheckStatus::pass)},
                   {"fail", count(CheckStatus::fail)},
                   {"erratum", count(CheckStatus::erratum)}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : sorted_checks()) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["status"] = check_status_str(c.status);
      e["claim"] = c.claim;
      if (!c.witness.empty()) e["witness"] = c.witness;
      if (!c.residual.empty()) e["residual"] = c.residual;
      if (!c.printed.empty()) e["printed"] = c.printed;
      if (!c.derived.empty()) e["derived"] = c.derived;
      if (!c.note.empty()) e["note"] = c.note;
      j["checks"].push_back(std::move(e));
    }
    return j;
  }

  std::string to_csv() const {
    std::string out =
        "name,status,claim,witness,residual,printed,derived,note\n";
    for (const Check& c : sorted_checks()) {
      out += detail::csv_field(c.name) + ',' +
             check_status_str(c.status) + ',' + detail::csv_field(c.claim) +
             ',' + detail::csv_field(c.witness) + ',' +
             detail::csv_field(c.residual) + ',' +
             detail::csv_field(c.printed) + ',' +
             detail::csv_field(c.derived) + ',' + detail::csv_field(c.note) +
             '\n';
    }
    return out;
  }
};

}  // namespace aq
