#pragma once

#include "degflag/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace degflag {

struct VerifyParams {
  int n = 3;
  std::uint32_t p = 2;
  int rows = 6;
  /// Defaults to complete flags (1, ..., n-1) when unset.
  std::optional<std::vector<int>> dims;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Suites: triangles, bijections, cells, points, pluecker.
/// An unknown suite name throws InvalidArgument.
VerifyReport run_verify(const std::string& suite, const VerifyParams& params);

std::vector<std::string> verify_suites();

}  // namespace degflag
