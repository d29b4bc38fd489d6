#include <doctest.h>

#include <sstream>
#include <string>

#include "hororadon/verify.hpp"

using namespace hororadon;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 9);
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
}

TEST_CASE("kernel suite report") {
  const VerificationReport r = run_suite("kernel");
  CHECK(r.overall);
  CHECK(r.suite == "kernel");
  CHECK(r.version == kVersion);
  bool seen = false;
  for (const auto& c : r.checks)
    if (c.id == "kernel-ds3") {
      seen = true;
      CHECK(c.pass);
      CHECK(c.quantity("value") <= c.tolerance);
    }
  CHECK(seen);
  const std::string s = r.str();
  CHECK(s.rfind("suite=kernel version=0.1.0 seed=1\n", 0) == 0);
  CHECK(s.find("check id=kernel-ds2 pass=1") != std::string::npos);
  CHECK(s.substr(s.size() - 13) == "overall=pass\n");
}

TEST_CASE("reports are reproducible for a fixed seed") {
  SuiteConfig cfg;
  cfg.seed = 7;
  const VerificationReport a = run_suite("gh-density", cfg);
  const VerificationReport b = run_suite("gh-density", cfg);
  CHECK(a.overall);
  CHECK(a.seed == 7);
  CHECK(a.str() == b.str());
}
