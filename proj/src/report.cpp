#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "octoplane/verify.hpp"

namespace octoplane {

bool SuiteReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const CheckResult* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void SuiteReport::add(const std::string& name, const std::string& claim, double residual,
                      double tolerance, const VerifyConfig& cfg) {
  const double tol = cfg.tol.value_or(tolerance);
  checks.push_back({name, claim, residual, tol, residual <= tol});
}

void SuiteReport::add_count(const std::string& name, const std::string& claim, int failures) {
  checks.push_back({name, claim, static_cast<double>(failures), 0.0, failures <= 0});
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite, PlaneKind kind) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  h = (h ^ static_cast<std::uint64_t>(kind)) * 1099511628211ull;
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (h | 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double round_residual(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json number_or_null(double x) {
  if (std::isfinite(x)) return round_residual(x);
  return nullptr;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, PlaneKind kind, const VerifyConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  if (suite == "algebra") {
    r = verify_algebra(kind, cfg);
  } else if (suite == "plane") {
    r = verify_plane(kind, cfg);
  } else if (suite == "metric") {
    r = verify_metric(kind, cfg);
  } else if (suite == "isometry") {
    r = verify_isometry(kind, cfg);
  } else if (suite == "curvature") {
    r = verify_curvature(kind, cfg);
  } else if (suite == "osserman") {
    r = verify_osserman(kind, cfg);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["plane"] = r.plane;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["pass"] = r.pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["claim"] = c.claim;
    cj["pass"] = c.pass;
    cj["residual"] = number_or_null(c.residual);
    cj["tolerance"] = c.tolerance;
    j["checks"].push_back(cj);
  }
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

nlohmann::ordered_json make_document(const std::string& suite,
                                     const std::vector<std::string>& planes,
                                     const VerifyConfig& cfg,
                                     const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  nlohmann::ordered_json config;
  config["suite"] = suite;
  config["planes"] = planes;
  config["seed"] = cfg.seed;
  config["samples"] = cfg.samples;
  config["tol"] = cfg.tol ? nlohmann::ordered_json(*cfg.tol) : nlohmann::ordered_json(nullptr);
  config["fd_step"] = cfg.fd_step;
  config["jet_step"] = cfg.jet_step;
  doc["config"] = config;
  bool pass = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    arr.push_back(to_json(r));
  }
  doc["pass"] = pass;
  doc["reports"] = arr;
  return doc;
}

std::string format_text(const SuiteReport& r) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  char head[160];
  std::snprintf(head, sizeof head, "== %s / %s  seed=%llu samples=%d  %s  (%.2fs)\n",
                r.suite.c_str(), r.plane.c_str(), static_cast<unsigned long long>(r.seed),
                r.samples, failed ? "FAIL" : "PASS", r.wall_seconds);
  os << head;
  for (const auto& c : r.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "  %-4s %-32s %10.3g <= %-8.3g  %s\n",
                  c.pass ? "ok" : "FAIL", c.name.c_str(), c.residual, c.tolerance,
                  c.claim.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace octoplane
