#pragma once

// Verification suites. Each suite samples seeded inputs, evaluates a list of
// named checks and reports the worst residual of each against its tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "octoplane/plane.hpp"

namespace octoplane {

struct VerifyConfig {
  std::uint64_t seed = 42;
  int samples = 100;
  /// Overrides the tolerance of every residual-type check when set.
  std::optional<double> tol;
  double fd_step = 1e-5;
  double jet_step = 1e-3;
};

struct CheckResult {
  std::string name;
  std::string claim;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string plane;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double wall_seconds = 0.0;

  bool pass() const;
  const CheckResult* find(const std::string& name) const;
  /// Records a residual check; pass iff residual <= tolerance. NaN fails.
  void add(const std::string& name, const std::string& claim, double residual,
           double tolerance, const VerifyConfig& cfg);
  /// Records a count of failures; the tolerance is always 0.
  void add_count(const std::string& name, const std::string& claim, int failures);
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "plane", "metric",
                                                 "isometry", "curvature", "osserman"};
  return names;
}

SuiteReport verify_algebra(PlaneKind kind, const VerifyConfig& cfg);
SuiteReport verify_plane(PlaneKind kind, const VerifyConfig& cfg);
SuiteReport verify_metric(PlaneKind kind, const VerifyConfig& cfg);
SuiteReport verify_isometry(PlaneKind kind, const VerifyConfig& cfg);
SuiteReport verify_curvature(PlaneKind kind, const VerifyConfig& cfg);
SuiteReport verify_osserman(PlaneKind kind, const VerifyConfig& cfg);

/// Dispatch by suite name; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& suite, PlaneKind kind, const VerifyConfig& cfg);

/// Seed for one suite on one plane, independent of execution order.
std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite, PlaneKind kind);

/// Rounds to a few significant digits so that reports are byte-stable.
double round_residual(double x);

nlohmann::ordered_json to_json(const SuiteReport& r);
nlohmann::ordered_json make_document(const std::string& suite,
                                     const std::vector<std::string>& planes,
                                     const VerifyConfig& cfg,
                                     const std::vector<SuiteReport>& reports);
std::string format_text(const SuiteReport& r);

}  // namespace octoplane
