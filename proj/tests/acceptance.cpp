// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hororadon/verify.hpp"

using namespace hororadon;

namespace {

struct Timed {
  VerificationReport report;
  double seconds = 0.0;
};

std::map<std::string, Timed> run_all(const SuiteConfig& cfg) {
  std::map<std::string, Timed> out;
  for (const auto& name : suite_names()) {
    const auto t0 = std::chrono::steady_clock::now();
    Timed t{run_suite(name, cfg), 0.0};
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.emplace(name, std::move(t));
  }
  return out;
}

void explain(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) std::printf("  failed check %s\n", c.id.c_str());
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.seed = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const auto first = run_all(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  const auto second = run_all(cfg);
  const auto t2 = std::chrono::steady_clock::now();

  struct Criterion {
    int n;
    std::string suite;
    double time_limit;
  };
  const std::vector<Criterion> criteria{{1, "kernel", 120.0},
                                        {2, "decay", 0.0},
                                        {3, "change-of-variables", 0.0},
                                        {4, "schwartz-bounds", 0.0},
                                        {5, "fourier-radon", 600.0},
                                        {6, "gram", 0.0},
                                        {7, "measure-invariance", 0.0},
                                        {8, "gh-density", 0.0},
                                        {9, "group-case", 0.0}};
  bool all = true;
  for (const auto& c : criteria) {
    const Timed& t = first.at(c.suite);
    const bool in_time = c.time_limit <= 0.0 || t.seconds < c.time_limit;
    const bool pass = t.report.overall && in_time;
    all = all && pass;
    std::printf("CRITERION %d %s suite=%s checks=%zu seconds=%.2f\n", c.n, pass ? "PASS" : "FAIL", c.suite.c_str(),
                t.report.checks.size(), t.seconds);
    if (!pass) explain(t.report);
    if (!in_time) std::printf("  runtime %.1f s exceeds %.0f s\n", t.seconds, c.time_limit);
  }

  bool same = true, green = true;
  for (const auto& [name, t] : first) {
    const Timed& u = second.at(name);
    same = same && t.report.str() == u.report.str();
    green = green && t.report.overall && u.report.overall;
  }
  const double run1 = std::chrono::duration<double>(t1 - t0).count();
  const double run2 = std::chrono::duration<double>(t2 - t1).count();
  const bool pass10 = same && green && run1 < 1800.0 && run2 < 1800.0;
  all = all && pass10;
  std::printf("CRITERION 10 %s identical=%d green=%d run1_seconds=%.2f run2_seconds=%.2f\n", pass10 ? "PASS" : "FAIL",
              same ? 1 : 0, green ? 1 : 0, run1, run2);
  return all ? 0 : 1;
}
