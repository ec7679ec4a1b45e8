// Runs acceptance criteria 1-11 and prints one line per criterion.
#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "dsk/cli.hpp"
#include "dsk/verify.hpp"

using namespace dsk;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> prefixes;
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string run_capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckResult> checks = run_suite(Suite::all, VerifyOptions{});

  const std::vector<Criterion> criteria{
      {1, "boundary formula consistency", {"boundary_limit"}},
      {2, "Schwarz reflection", {"schwarz_reflection"}},
      {3, "near-one asymptotics", {"near_one_ratio"}},
      {4, "reflection positivity oracle", {"proportionality_", "green_ratio_closed_form_", "rp_gram_"}},
      {5, "kernel positivity and symmetry", {"gram_", "symmetry_"}},
      {6, "spherical function", {"spherical_integral_"}},
      {7, "boundary-value table", {"boundary_table_"}},
      {8, "weak Klein-Gordon", {"weak_kg_"}},
      {9, "H-invariance", {"h_invariance_"}},
      {10, "microlocal directionality", {"probe_1d_", "probe_2d_", "no_overlap_"}},
  };

  int failed = 0;
  std::vector<std::string> lines, details;
  for (const auto& c : criteria) {
    int total = 0, bad = 0;
    std::string summary;
    for (const auto& r : checks) {
      bool match = false;
      for (const auto& p : c.prefixes) match = match || starts_with(r.name, p);
      if (!match) continue;
      ++total;
      if (!r.passed) {
        ++bad;
        summary += fmt::format(" {}={:.3g}", r.name, r.measured);
        details.push_back(fmt::format("  criterion {} {}: measured {:.6g} {} {:.3g}; {}", c.id, r.name, r.measured,
                                      r.relation, r.tolerance, r.detail));
      }
    }
    const bool ok = total > 0 && bad == 0;
    failed += !ok;
    lines.push_back(fmt::format("criterion {:2d} {} {} ({}/{} checks){}", c.id, ok ? "PASS" : "FAIL", c.title,
                                total - bad, total, bad ? " failing:" + summary : ""));
  }

  // determinism: identical bytes across two runs with the same configuration
  {
    const std::vector<std::vector<std::string>> configs{
        {"eval-kernel", "--n", "3", "--lambda", "0,1", "--pair=ie0;H:0.7",
         "--pair=S:0.6,0,0.8,0;Z:0.41687624439499791:0.67657557912382845,0.90210077216510468:0.31265718329624841,0,0",
         "--pair=dS:0.3,1,0,0;H:1.5"},
        {"eval-kernel", "--n", "2", "--lambda", "0.3", "--format", "json", "--kernel", "psi_tilde", "--pair=-ie0;Hbar:2"},
        {"verify", "--suite", "kernels", "--seed", "17"},
        {"verify", "--suite", "hyp"},
    };
    int same = 0;
    std::string why;
    for (const auto& cfg : configs) {
      int c1 = 0, c2 = 0;
      const std::string a = run_capture(cfg, c1), b = run_capture(cfg, c2);
      if (a == b && c1 == c2 && !a.empty()) ++same;
      else why += fmt::format(" '{} {}' differs", cfg[0], cfg.size() > 2 ? cfg[2] : "");
    }
    const bool ok = same == int(configs.size());
    failed += !ok;
    lines.push_back(fmt::format("criterion 11 {} determinism ({}/{} configurations bit-identical){}", ok ? "PASS" : "FAIL",
                                same, configs.size(), why));
  }

  for (const auto& l : lines) std::cout << l << "\n";
  if (!details.empty()) {
    std::cout << "failing checks:\n";
    for (const auto& d : details) std::cout << d << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << fmt::format("{} of 11 criteria pass ({:.1f} s)\n", 11 - failed, secs);
  return failed == 0 ? 0 : 1;
}
