#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hororadon/quadrature.hpp"

namespace hororadon {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
  std::string id;
  std::vector<std::pair<std::string, double>> quantities;
  double tolerance = 0.0;
  bool pass = false;
  // reported but not asserted; always counts as passing
  bool diagnostic = false;

  double quantity(std::string_view key) const;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool overall = false;
  std::string version = kVersion;
  std::uint64_t seed = 0;

  // line-oriented key=value records, full double precision
  void write(std::ostream& os) const;
  std::string str() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  QuadratureSpec quad{};
};

const std::vector<std::string>& suite_names();

// throws InvalidArgument for an unknown suite
VerificationReport run_suite(std::string_view name, const SuiteConfig& config = {});

}  // namespace hororadon
