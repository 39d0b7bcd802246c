// octoplane: runs the verification suites and small utilities on the four
// octonionic planes.
//
//   octoplane verify <suite|all> --plane <op2|para|op11|oh2|all> [--seed N]
//             [--samples K] [--tol T] [--json PATH] [--fd-step H] [--jet-step H]
//   octoplane apply --plane P --point JSON --steps JSON
//   octoplane isometry-to --plane P --point JSON
//   octoplane curvature --plane P [--json PATH]
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "octoplane/curvature.hpp"
#include "octoplane/errors.hpp"
#include "octoplane/serialization.hpp"
#include "octoplane/verify.hpp"

namespace {

using namespace octoplane;

std::vector<PlaneKind> planes_from(const std::string& name) {
  if (name == "all") return {kAllPlanes.begin(), kAllPlanes.end()};
  return {*parse_plane(name)};
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int run_verify(const std::string& suite, const std::string& plane, const VerifyConfig& cfg,
               const std::string& json_path, int jobs, bool quiet) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  struct Task {
    std::string suite;
    PlaneKind kind;
  };
  std::vector<Task> tasks;
  for (const auto& s : suites) {
    for (PlaneKind k : planes_from(plane)) tasks.push_back({s, k});
  }

  // Suites are independent and seeded per (suite, plane); the merge below keeps
  // task order so the output does not depend on scheduling.
  std::vector<SuiteReport> reports(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        reports[i] = run_suite(tasks[i].suite, tasks[i].kind, cfg);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool pass = true;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error in " << tasks[i].suite << "/" << to_string(tasks[i].kind) << ": "
                << errors[i] << "\n";
      return 2;
    }
    pass = pass && reports[i].pass();
    if (!quiet || !reports[i].pass()) std::cout << format_text(reports[i]);
  }
  std::vector<std::string> plane_names;
  for (PlaneKind k : planes_from(plane)) plane_names.push_back(to_string(k));
  if (!json_path.empty()) {
    const auto doc = make_document(suite, plane_names, cfg, reports);
    if (!write_file(json_path, doc.dump(2) + "\n")) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
  }
  std::cout << (pass ? "PASS" : "FAIL") << ": " << reports.size() << " suite run(s)\n";
  return pass ? 0 : 1;
}

int run_apply(const std::string& plane, const std::string& point, const std::string& steps) {
  const PlaneKind kind = *parse_plane(plane);
  const ChartPoint p = point_from_json(kind, Json::parse(point));
  const IsometryComposition c = composition_from_json(kind, Json::parse(steps));
  std::cout << to_json(apply(kind, c, p)).dump(2) << "\n";
  return 0;
}

int run_isometry_to(const std::string& plane, const std::string& point) {
  const PlaneKind kind = *parse_plane(plane);
  const ChartPoint target = point_from_json(kind, Json::parse(point));
  const IsometryComposition c = isometry_to(kind, target);
  Json out;
  out["steps"] = to_json(c);
  out["image_of_origin"] = to_json(apply(kind, c, origin(kind)));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_curvature(const std::string& plane, const std::string& json_path, double jet_step) {
  Json doc;
  doc["schema"] = 1;
  doc["components"] = Json::array();
  for (PlaneKind kind : planes_from(plane)) {
    const CurvatureTensor numeric = riemann_origin_numeric(kind, jet_step);
    const CurvatureTensor closed = riemann_closed_form_table(kind);
    std::map<std::array<int, 4>, std::string> pattern;
    for (const auto& lc : listed_components(kind)) pattern[lc.indices] = lc.pattern;
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b)
        for (int c = 0; c < 16; ++c)
          for (int d = 0; d < 16; ++d) {
            const double expected = closed(a, b, c, d);
            if (std::abs(expected) < 1e-12 && std::abs(numeric(a, b, c, d)) < 1e-6) continue;
            const auto it = pattern.find({a, b, c, d});
            Json r;
            r["plane"] = to_string(kind);
            r["indices"] = {a + 1, b + 1, c + 1, d + 1};
            r["name"] = component_name({a, b, c, d});
            r["value"] = round_residual(numeric(a, b, c, d));
            r["expected"] = expected;
            r["source"] = it == pattern.end() ? "closed form" : "listed " + it->second;
            doc["components"].push_back(r);
          }
  }
  const std::string text = doc.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else if (!write_file(json_path, text)) {
    std::cerr << "cannot write " << json_path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for the octonionic projective planes"};
  app.require_subcommand(1);
  const std::vector<std::string> plane_names = {"op2", "para", "op11", "oh2", "all"};
  const std::vector<std::string> single_planes = {"op2", "para", "op11", "oh2"};

  VerifyConfig cfg;
  std::string suite;
  std::string plane = "all";
  std::string json_path;
  double tol = 0.0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool quiet = false;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--plane", plane, "plane kind")->check(CLI::IsMember(plane_names));
  verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "sample count K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* tol_opt = verify->add_option("--tol", tol, "override every residual tolerance")
                      ->check(CLI::NonNegativeNumber);
  verify->add_option("--json", json_path, "write a JSON report");
  verify->add_option("--fd-step", cfg.fd_step, "finite-difference step for Jacobians")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--jet-step", cfg.jet_step, "finite-difference step for second jets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--quiet", quiet, "print failing suites only");

  std::string point, steps;
  std::string single = "op2";
  auto* apply_cmd = app.add_subcommand("apply", "apply a list of isometry steps to a point");
  apply_cmd->add_option("--plane", single, "plane kind")->check(CLI::IsMember(single_planes));
  apply_cmd->add_option("--point", point, "[[8],[8],[8]] homogeneous triple")->required();
  apply_cmd->add_option("--steps", steps, "step object or array of steps")->required();

  auto* to_cmd = app.add_subcommand("isometry-to", "isometry taking the base point to a target");
  to_cmd->add_option("--plane", single, "plane kind")->check(CLI::IsMember(single_planes));
  to_cmd->add_option("--point", point, "[[8],[8],[8]] homogeneous triple")->required();

  std::string curv_plane = "op2";
  auto* curv_cmd = app.add_subcommand("curvature", "dump non-zero curvature components at the base point");
  curv_cmd->add_option("--plane", curv_plane, "plane kind")->check(CLI::IsMember(plane_names));
  curv_cmd->add_option("--json", json_path, "output path (default stdout)");
  curv_cmd->add_option("--jet-step", cfg.jet_step, "finite-difference step for second jets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (tol_opt->count() > 0) cfg.tol = tol;

  try {
    if (*verify) return run_verify(suite, plane, cfg, json_path, jobs, quiet);
    if (*apply_cmd) return run_apply(single, point, steps);
    if (*to_cmd) return run_isometry_to(single, point);
    if (*curv_cmd) return run_curvature(curv_plane, json_path, cfg.jet_step);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
