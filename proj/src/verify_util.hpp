#pragma once

// Helpers shared by the verification suites.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "octoplane/sampling.hpp"
#include "octoplane/verify.hpp"

namespace octoplane::detail {

// Running maximum that lets NaN win, so that a NaN residual fails its check.
struct Worst {
  double value = 0.0;
  void operator()(double x) {
    if (std::isnan(x) || std::isnan(value)) {
      value = std::numeric_limits<double>::quiet_NaN();
    } else {
      value = std::max(value, x);
    }
  }
};

inline SuiteReport start(const std::string& suite, PlaneKind kind, const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = suite;
  r.plane = to_string(kind);
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  return r;
}

inline double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <class E>
bool throws(auto&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace octoplane::detail
