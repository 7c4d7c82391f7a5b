#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tetrig/generate.hpp"
#include "tetrig/instance.hpp"
#include "tetrig/oracle.hpp"
#include "tetrig/theorems.hpp"

namespace {

using nlohmann::json;
using namespace tetrig;

constexpr int kExitVerifyFailed = 30;
constexpr int kExitOracleFailed = 31;

std::string point_str(const Point3& p) {
  return "[" + p.x.str() + ", " + p.y.str() + ", " + p.z.str() + "]";
}

// ---------------------------------------------------------------- report

int run_report(const std::string& path, bool as_json) {
  Tetrahedron t = load_instance(path);
  MetricReport rep = metric_report(t);
  CircumResult circ = circumcentre(t);

  bool spreads_complete = true;
  for (const auto& e : rep.spreads)
    if (!e) spreads_complete = false;

  std::optional<Scalar> m, k;
  Scalar n = quadrance_product_archimedes(rep.quadrances);
  if (spreads_complete) {
    m = spread_product_archimedes(rep);
    k = richardson_number(t);
  }

  if (as_json) {
    json out;
    out["field"] = t.spec().str();
    for (int s = 0; s < kEdgeCount; ++s)
      out["Q"][edge_label(s)] = rep.quadrances[static_cast<std::size_t>(s)].str();
    for (int s = 0; s < kFaceCount; ++s)
      out["A"][face_label(s)] = rep.quadreas[static_cast<std::size_t>(s)].str();
    out["V"] = rep.quadrume.str();
    for (int s = 0; s < kEdgeCount; ++s) {
      const auto& e = rep.spreads[static_cast<std::size_t>(s)];
      out["E"][edge_label(s)] = e ? json(e->str()) : json(nullptr);
    }
    out["C"] = {circ.centre.x.str(), circ.centre.y.str(), circ.centre.z.str()};
    out["R"] = circ.circumquadrance.str();
    out["M"] = m ? json(m->str()) : json(nullptr);
    out["N"] = n.str();
    out["K"] = k ? json(k->str()) : json(nullptr);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "field = " << t.spec().str() << "\n";
  for (int s = 0; s < kEdgeCount; ++s)
    std::cout << "Q" << edge_label(s) << " = " << rep.quadrances[static_cast<std::size_t>(s)]
              << "\n";
  for (int s = 0; s < kFaceCount; ++s)
    std::cout << "A" << face_label(s) << " = " << rep.quadreas[static_cast<std::size_t>(s)]
              << "\n";
  std::cout << "V = " << rep.quadrume << "\n";
  for (int s = 0; s < kEdgeCount; ++s) {
    const auto& e = rep.spreads[static_cast<std::size_t>(s)];
    std::cout << "E" << edge_label(s) << " = " << (e ? e->str() : "null-face") << "\n";
  }
  std::cout << "C = " << point_str(circ.centre) << "\n";
  std::cout << "R = " << circ.circumquadrance << "\n";
  std::cout << "M = " << (m ? m->str() : "null-face") << "\n";
  std::cout << "N = " << n << "\n";
  std::cout << "K = " << (k ? k->str() : "null-face") << "\n";
  return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& path, bool as_json) {
  Tetrahedron t = load_instance(path);
  VerifyReport vr = verify_all(t);

  if (as_json) {
    json out;
    out["checks"] = json::array();
    for (const TheoremCheck& c : vr.checks)
      out["checks"].push_back(
          {{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"pass", c.pass}});
    out["M"] = vr.m.str();
    out["N"] = vr.n.str();
    out["K"] = vr.k.str();
    out["pass"] = vr.all_pass();
    std::cout << out.dump(2) << "\n";
    return vr.all_pass() ? 0 : kExitVerifyFailed;
  }

  int passed = 0;
  for (const TheoremCheck& c : vr.checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(24) << c.name
              << "  lhs=" << c.lhs << "  rhs=" << c.rhs << "\n";
    if (c.pass) ++passed;
  }
  std::cout << "M = " << vr.m << "\nN = " << vr.n << "\nK = " << vr.k << "\n";
  std::cout << "result: " << (vr.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/"
            << vr.checks.size() << ")\n";
  return vr.all_pass() ? 0 : kExitVerifyFailed;
}

// ---------------------------------------------------------------- oracle

int run_oracle(const std::string& path, double tolerance, bool as_json) {
  Tetrahedron t = load_instance(path);
  EuclideanOracleReport report = euclidean_crosscheck(t);
  bool pass = report.pass(tolerance);

  if (as_json) {
    json out;
    out["rows"] = json::array();
    for (const OracleRow& r : report.rows)
      out["rows"].push_back({{"label", r.label},
                             {"exact", r.exact},
                             {"classical", r.classical},
                             {"abs_diff", r.abs_diff},
                             {"deviation", r.deviation}});
    out["max_deviation"] = report.max_deviation;
    out["tolerance"] = tolerance;
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : kExitOracleFailed;
  }

  std::cout << "field = " << t.spec().str() << "\n";
  std::cout << std::left << std::setw(8) << "label" << std::setw(24) << "exact" << std::setw(24)
            << "classical" << "deviation\n";
  std::cout << std::scientific << std::setprecision(12);
  for (const OracleRow& r : report.rows)
    std::cout << std::left << std::setw(8) << r.label << std::setw(24) << r.exact << std::setw(24)
              << r.classical << std::setprecision(2) << r.deviation << std::setprecision(12)
              << "\n";
  std::cout << std::setprecision(3) << "max deviation = " << report.max_deviation << "\n";
  std::cout << "result: " << (pass ? "PASS" : "FAIL") << " (tolerance " << tolerance << ")\n";
  return pass ? 0 : kExitOracleFailed;
}

// ------------------------------------------------------------------ fuzz

struct FuzzCheck {
  std::string name;
  bool pass;
  std::string detail;  // lhs/rhs or error text when failed
};

std::optional<std::string> report_difference(const MetricReport& a, const MetricReport& b) {
  for (int s = 0; s < kEdgeCount; ++s) {
    std::size_t i = static_cast<std::size_t>(s);
    if (a.quadrances[i] != b.quadrances[i])
      return "Q" + edge_label(s) + ": " + a.quadrances[i].str() + " vs " + b.quadrances[i].str();
  }
  for (int s = 0; s < kFaceCount; ++s) {
    std::size_t i = static_cast<std::size_t>(s);
    if (a.quadreas[i] != b.quadreas[i])
      return "A" + face_label(s) + ": " + a.quadreas[i].str() + " vs " + b.quadreas[i].str();
  }
  if (a.quadrume != b.quadrume) return "V: " + a.quadrume.str() + " vs " + b.quadrume.str();
  for (int s = 0; s < kEdgeCount; ++s) {
    std::size_t i = static_cast<std::size_t>(s);
    if (a.spreads[i] != b.spreads[i]) return "E" + edge_label(s) + " differs";
  }
  return std::nullopt;
}

std::vector<FuzzCheck> fuzz_checks(const Tetrahedron& t) {
  std::vector<FuzzCheck> out;
  VerifyReport vr = verify_all(t);
  for (const TheoremCheck& c : vr.checks)
    out.push_back({c.name, c.pass, "lhs=" + c.lhs.str() + " rhs=" + c.rhs.str()});

  MetricReport direct = metric_report(t);
  MetricReport routed = invariants_via_standard(t);
  auto diff = report_difference(direct, routed);
  out.push_back({"standard-dual-path", !diff, diff ? *diff : ""});

  auto [map, induced] = map_to_standard(t);
  (void)map;
  CircumResult circ = circumcentre(t);
  Scalar closed = standard_circumquadrance(induced);
  out.push_back({"closed-form-circumquadrance", closed == circ.circumquadrance,
                 "lhs=" + closed.str() + " rhs=" + circ.circumquadrance.str()});

  Scalar four_v = Scalar::of(4, t.spec()) * direct.quadrume;
  Scalar via_richardson = vr.m / (four_v * vr.k * vr.k);
  out.push_back({"richardson-circumquadrance", via_richardson == circ.circumquadrance,
                 "lhs=" + via_richardson.str() + " rhs=" + circ.circumquadrance.str()});
  return out;
}

int run_fuzz(const std::string& field, int count, std::uint64_t seed, long long coord_bound,
             long long denom_bound, bool as_json) {
  GenOptions opt{FieldSpec::parse(field), coord_bound, denom_bound, 64};

  int verified = 0, failed = 0, skipped = 0;
  long checks_passed = 0, checks_failed = 0;
  std::ostringstream failures;
  json json_failures = json::array();

  for (int trial = 0; trial < count; ++trial) {
    Rng rng = rng_for_trial(seed, static_cast<std::uint64_t>(trial));
    std::optional<Tetrahedron> t = random_instance(rng, opt);
    if (!t) {
      ++skipped;
      continue;
    }
    bool ok = true;
    json trial_fails = json::array();
    try {
      for (const FuzzCheck& c : fuzz_checks(*t)) {
        if (c.pass) {
          ++checks_passed;
          continue;
        }
        ++checks_failed;
        ok = false;
        failures << "FAIL trial=" << trial << " check=" << c.name << " " << c.detail << "\n";
        trial_fails.push_back({{"check", c.name}, {"detail", c.detail}});
      }
    } catch (const Error& e) {
      ok = false;
      ++checks_failed;
      failures << "FAIL trial=" << trial << " error=" << e.what() << "\n";
      trial_fails.push_back({{"error", e.what()}});
    }
    if (ok) {
      ++verified;
    } else {
      ++failed;
      std::string dump = render_instance(*t);
      failures << "instance trial=" << trial << ": " << json::parse(dump).dump() << "\n";
      json_failures.push_back({{"trial", trial}, {"checks", trial_fails},
                               {"instance", json::parse(dump)}});
    }
  }

  if (as_json) {
    json out;
    out["field"] = opt.spec.str();
    out["count"] = count;
    out["seed"] = seed;
    out["coord_bound"] = coord_bound;
    out["denom_bound"] = denom_bound;
    out["verified"] = verified;
    out["failed"] = failed;
    out["skipped"] = skipped;
    out["checks_passed"] = checks_passed;
    out["checks_failed"] = checks_failed;
    out["failures"] = json_failures;
    out["pass"] = failed == 0;
    std::cout << out.dump(2) << "\n";
    return failed == 0 ? 0 : kExitVerifyFailed;
  }

  std::cout << "fuzz field=" << opt.spec.str() << " count=" << count << " seed=" << seed
            << " coord-bound=" << coord_bound << " denom-bound=" << denom_bound << "\n";
  std::cout << failures.str();
  std::cout << "instances: " << verified << " verified, " << failed << " failed, " << skipped
            << " skipped-degenerate\n";
  std::cout << "checks: " << checks_passed << " passed, " << checks_failed << " failed\n";
  std::cout << "result: " << (failed == 0 ? "PASS" : "FAIL") << "\n";
  return failed == 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational trigonometry of tetrahedra over Q and prime fields"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  double tolerance = 1e-9;
  std::string field = "rational";
  int count = 100;
  std::uint64_t seed = 0;
  long long coord_bound = 10, denom_bound = 10;

  CLI::App* report = app.add_subcommand("report", "print the exact invariant bundle");
  report->add_option("file", path, "instance file")->required();
  report->add_flag("--json", as_json, "emit JSON");

  CLI::App* verify = app.add_subcommand("verify", "check every identity on one instance");
  verify->add_option("file", path, "instance file")->required();
  verify->add_flag("--json", as_json, "emit JSON");

  CLI::App* oracle = app.add_subcommand("oracle", "floating-point Euclidean crosscheck");
  oracle->add_option("file", path, "instance file")->required();
  oracle->add_option("--tolerance", tolerance, "relative tolerance")->capture_default_str();
  oracle->add_flag("--json", as_json, "emit JSON");

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomised verification of all identities");
  fuzz->add_option("--field", field, "rational or prime:<p>")->capture_default_str();
  fuzz->add_option("--count", count, "number of trials")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "deterministic seed")->required();
  fuzz->add_option("--coord-bound", coord_bound, "numerator bound")->capture_default_str();
  fuzz->add_option("--denom-bound", denom_bound, "denominator bound")->capture_default_str();
  fuzz->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) return run_report(path, as_json);
    if (verify->parsed()) return run_verify(path, as_json);
    if (oracle->parsed()) return run_oracle(path, tolerance, as_json);
    if (fuzz->parsed()) return run_fuzz(field, count, seed, coord_bound, denom_bound, as_json);
  } catch (const tetrig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
  return 0;
}
