#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace latmorse::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 7;
  /// When nonempty, deterministic artifact files are written here.
  std::string artifact_dir;
};

/// Runs every acceptance criterion, printing one PASS/FAIL line per
/// criterion to `log`.  Returns the individual results.
std::vector<CriterionResult> run_all(const Options& opts, std::ostream& log);

/// The deterministic artifact set used by the self-test; byte-identical
/// across runs for a fixed seed.
void write_artifacts(std::uint64_t seed, const std::string& dir);

}  // namespace latmorse::acceptance
