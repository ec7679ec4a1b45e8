#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dsk {

enum class Suite { hyp, kernels, rp, distributions, microlocal, all };

Suite parse_suite(const std::string& name);
const char* suite_name(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string relation = "<=";  // measured <relation> tolerance passes
  std::string detail;
};

// Named tolerances, overridable from the command line as --tol-<name>.
std::map<std::string, double> default_tolerances();

struct VerifyOptions {
  std::uint64_t seed = 1;
  int quad_order = 64;
  std::vector<double> eps_ladder;  // empty: 0.1 * 2^-k, k = 0..8
  int green_K = 0;                 // 0: adaptive truncation
  std::map<std::string, double> tol = default_tolerances();
};

std::vector<CheckResult> run_suite(Suite s, const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace dsk
