#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spiral/geometry.hpp"

namespace spiral::cli {

enum class Command { Spectrum, Wavefunction, HardWall, Oracle, Verify };
enum class OutputFormat { Csv, Json };

/// Everything one invocation needs. Populated from flags, optionally layered over a
/// key=value config file (flags win).
struct RunSpec {
  Command command = Command::Spectrum;
  DislocationParams params;
  int n_max = 3;
  int l_max = 2;
  double k = 0.0;
  int n = 0;
  int l = 0;
  std::optional<double> r0;
  double r_min = 0.0;
  std::optional<double> r_max;
  int samples = 8001;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;
  std::optional<std::string> config_path;
  bool with_oracle = false;
  std::optional<std::string> suite;
  double perturb_energy = 0.0;
};

/// Thrown for bad flags or inconsistent inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Column {
  std::string name;
  bool integer = false;
};

/// Column-major description, row-major data. Integer columns hold exact small integers.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name) const;
};

Table cmd_spectrum(const RunSpec& spec);
Table cmd_wavefunction(const RunSpec& spec);
Table cmd_hardwall(const RunSpec& spec);
Table cmd_oracle(const RunSpec& spec);

/// Runs the selected (or all) verification suites, writes the report, returns 0 iff all pass.
int cmd_verify(const RunSpec& spec, std::ostream& report);

/// Header row plus one line per row, comma separated, LF endings, 17 significant digits.
std::string to_csv(const Table& table);

/// {"meta": {...RunSpec echo..., "units": "hbar=c=1"}, "rows": [{column: value}, ...]}.
nlohmann::json to_json(const Table& table, const RunSpec& spec);
nlohmann::json run_spec_to_json(const RunSpec& spec);

std::string command_name(Command command);

/// Parses argv (argv[0] is the program name). Throws UsageError.
RunSpec parse_arguments(int argc, const char* const* argv);

/// Whole-program entry: parse, run, write. Returns the process exit code (0, 1 or 2).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spiral::cli
