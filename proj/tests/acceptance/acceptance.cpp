// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance <path to octoplane cli> <fixtures directory>
//
// Criteria 1-7 run the suites in-process with the default configuration
// (seed 42, 100 samples, FD step 1e-5, jet step 1e-3) and compare the named
// residuals against the tolerances pinned below, not against the suite
// defaults. Criterion 8 drives the command line.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "octoplane/verify.hpp"

using namespace octoplane;

namespace {

struct Pinned {
  std::string name;
  double tol;  // residual must be <= tol; counts use 0
};

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string note;
};

std::map<std::string, SuiteReport> g_reports;

const SuiteReport& report(const std::string& suite, PlaneKind kind) {
  const std::string key = suite + "/" + to_string(kind);
  auto it = g_reports.find(key);
  if (it == g_reports.end()) it = g_reports.emplace(key, run_suite(suite, kind, {})).first;
  return it->second;
}

void require(Outcome& o, const std::string& suite, PlaneKind kind, const std::vector<Pinned>& checks) {
  const SuiteReport& r = report(suite, kind);
  for (const auto& p : checks) {
    const CheckResult* c = r.find(p.name);
    if (c == nullptr) {
      o.pass = false;
      o.note += " missing " + suite + "/" + to_string(kind) + "/" + p.name + ";";
      continue;
    }
    if (!(c->residual <= p.tol)) {
      o.pass = false;
      std::ostringstream os;
      os << " " << to_string(kind) << "/" << p.name << "=" << c->residual << ">" << p.tol << ";";
      o.note += os.str();
    }
    if (p.tol > 0.0) o.worst = std::max(o.worst, c->residual / p.tol);
  }
}

void print(int n, const std::string& title, const Outcome& o) {
  std::printf("criterion %d: %s  %s", n, o.pass ? "PASS" : "FAIL", title.c_str());
  std::printf("  (worst residual/tolerance %.2g)", o.worst);
  if (!o.note.empty()) std::printf("  [%s ]", o.note.c_str());
  std::printf("\n");
}

int run(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <octoplane cli> <fixtures dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string fixtures = argv[2];
  bool all = true;

  {
    Outcome o;
    const std::vector<Pinned> c = {
        {"display_ij", 1e-10},        {"display_associator", 1e-10},
        {"composition", 1e-10},       {"alternativity", 1e-10},
        {"associator_pure", 1e-10},   {"real_commutative", 1e-10},
        {"real_cyclic", 1e-10},       {"moufang", 1e-10},
        {"adjointness", 1e-10},       {"exchange", 1e-10},
        {"structure_table", 1e-10},   {"associator_unit", 1e-10}};
    require(o, "algebra", PlaneKind::OP2, c);
    require(o, "algebra", PlaneKind::ParaOP2, c);
    for (PlaneKind k : {PlaneKind::OP2, PlaneKind::ParaOP2}) {
      if (report("algebra", k).details.value("samples", 0) < 10000) {
        o.pass = false;
        o.note += " fewer than 1e4 samples;";
      }
    }
    print(1, "algebra identities on 1e4 samples per algebra, tol 1e-10", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    for (PlaneKind k : kAllPlanes) {
      std::vector<Pinned> c = {{"signature", 0}, {"signature_constant", 0},
                               {"coupling_identity", 1e-10}, {"coupling_identity_transposed", 1e-10},
                               {"pullback", 1e-7}};
      if (k == PlaneKind::OP2 || k == PlaneKind::OH2) c.push_back({"positive_definite", 0});
      require(o, "metric", k, c);
    }
    print(2, "metric signature, A G A^T identity (1e-10), chart pullback (1e-7, step 1e-5)", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    for (PlaneKind k : kAllPlanes) {
      std::vector<Pinned> c = {{"norm_conservation", 1e-6}, {"pullback", 1e-6},
                               {"pullback_coverage", 0},    {"involution", 1e-9},
                               {"homogeneity", 1e-8},       {"homogeneity_constructed", 0}};
      if (k == PlaneKind::OP2) c.push_back({"rotation_example", 1e-10});
      require(o, "isometry", k, c);
    }
    print(3, "isometries: pullback (1e-6), involution (1e-9), rotation (1e-10), 200 targets (1e-8)", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    for (PlaneKind k : kAllPlanes) {
      require(o, "curvature", k,
              {{"second_jets", 1e-5}, {"first_jets", 1e-7}, {"closed_form", 1e-5},
               {"listed_components", 1e-6}, {"unlisted_components", 1e-6}});
    }
    print(4, "curvature: jets (1e-5), 65536 components (1e-5), listed/unlisted (1e-6)", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    for (PlaneKind k : kAllPlanes) {
      require(o, "osserman", k,
              {{"spectrum", 1e-8}, {"eigenspace_dimensions", 0}, {"condition_1", 0},
               {"condition_2", 0}, {"condition_3", 0}, {"lambda_symmetry", 0}});
    }
    print(5, "Jacobi spectrum (1e-8), dimensions 7 and 8, Conditions I-III, lambda symmetry", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    for (PlaneKind k : kAllPlanes) {
      require(o, "curvature", k, {{"spectrum_off_origin", 2e-3}});
      if (report("curvature", k).details.value("spectrum_points", 0) < 10) {
        o.pass = false;
        o.note += std::string(" ") + to_string(k) + " fewer than 10 points;";
      }
    }
    print(6, "Jacobi spectrum at 10 non-origin points per plane (2e-3)", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    require(o, "osserman", PlaneKind::ParaOP2,
            {{"witness_null_vectors", 1e-12}, {"witness_kernel_dimension", 0},
             {"witness_kernel_null", 1e-10}});
    const auto& d = report("osserman", PlaneKind::ParaOP2).details;
    if (!d.contains("witness") || d["witness"]["spacelike_preimage_exists"] != false) {
      o.pass = false;
      o.note += " witness block missing or spacelike preimage found;";
    }
    print(7, "split plane is not locally isotropic: null v, w; 8-dim null kernel (1e-10)", o);
    all = all && o.pass;
  }
  {
    Outcome o;
    const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    const std::string base = dir + "/octoplane_acceptance_" + std::to_string(::getpid());
    struct Golden {
      std::string args, fixture;
    };
    const std::vector<Golden> runs = {
        {"verify all --plane all", "verify_all_default.json"},
        {"verify all --plane all --seed 7 --samples 10", "verify_all_seed7_samples10.json"}};
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const std::string a = base + "_" + std::to_string(i) + "a.json";
      const std::string b = base + "_" + std::to_string(i) + "b.json";
      const int ra = run(cli + " " + runs[i].args + " --json " + a);
      const int rb = run(cli + " " + runs[i].args + " --jobs 1 --json " + b);
      const std::string ja = slurp(a), jb = slurp(b);
      const std::string golden = slurp(fixtures + "/" + runs[i].fixture);
      if (ra != 0 || rb != 0) {
        o.pass = false;
        o.note += " '" + runs[i].args + "' exit " + std::to_string(ra) + "/" + std::to_string(rb) + ";";
      }
      if (ja.empty() || ja != jb) {
        o.pass = false;
        o.note += " repeated runs differ;";
      }
      if (golden.empty() || ja != golden) {
        o.pass = false;
        o.note += " differs from " + runs[i].fixture + ";";
      }
      std::remove(a.c_str());
      std::remove(b.c_str());
    }
    print(8, "CLI 'verify all' exits 0, repeat runs and golden fixtures byte-identical", o);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
