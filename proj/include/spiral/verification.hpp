#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spiral::verify {

enum class Suite { Geometry, SpecialFunctions, SpectrumVsOracle, HardWall, Residual };

/// One measured-vs-tolerated line of a verification report.
struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct Options {
  /// Test hook: added to every energy fed to the Hamiltonian residual.
  double perturb_energy = 0.0;
};

std::vector<Suite> all_suites();
std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

std::vector<CheckResult> run_suite(Suite suite, const Options& options = {});

/// Grids used by the suites; shared with tests that re-derive the same quantities.
namespace grid {
inline constexpr int kNValues[] = {0, 1, 2, 3};
inline constexpr int kLValues[] = {0, 1, -1, 2, -2, 3};
inline constexpr double kBetaValues[] = {0.0, 0.3, 0.5, 1.0};
inline constexpr double kKValues[] = {0.0, 0.7};
}  // namespace grid

}  // namespace spiral::verify
