// Embedded table of reference values with their recomputation.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace severi {

struct VerifyRow {
  std::string suite;
  std::string expression;
  std::string expected;
  std::string computed;
  bool passed;
  std::string citation;
};

/// Suite names in run order: severi, irr, salmon, tacnode, chebyshev.
const std::vector<std::string>& verify_suites();

/// Runs every check, or only those of `only`. Throws std::invalid_argument
/// for an unknown suite. An exception inside a check fails that row.
std::vector<VerifyRow> run_verify(const std::optional<std::string>& only = std::nullopt);

}  // namespace severi
