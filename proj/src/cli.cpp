#include "spiral/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spiral/errors.hpp"
#include "spiral/hard_wall.hpp"
#include "spiral/oracle.hpp"
#include "spiral/oscillator_spectrum.hpp"
#include "spiral/verification.hpp"

namespace spiral::cli {

namespace {

std::string format_number(double v, bool integer) {
  char buf[64];
  if (integer) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", v);
  }
  return buf;
}

std::vector<int> signed_range(int max_abs) {
  std::vector<int> out;
  for (int l = -max_abs; l <= max_abs; ++l) out.push_back(l);
  return out;
}

void require_ranges(const RunSpec& spec) {
  if (spec.n_max < 0 || spec.l_max < 0) throw UsageError("--n-max and --l-max must be >= 0");
}

}  // namespace

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return i;
  throw std::out_of_range("no column named " + name);
}

std::string command_name(Command command) {
  switch (command) {
    case Command::Spectrum:
      return "spectrum";
    case Command::Wavefunction:
      return "wavefunction";
    case Command::HardWall:
      return "hardwall";
    case Command::Oracle:
      return "oracle";
    case Command::Verify:
      return "verify";
  }
  return "";
}

Table cmd_spectrum(const RunSpec& spec) {
  require_ranges(spec);
  spec.params.validate();
  DislocationParams flat = spec.params;
  flat.beta = 0.0;

  Table t;
  t.columns = {{"n", true},       {"l", true},      {"k", false},    {"E", false},
               {"lambda", false}, {"E_flat", false}, {"shift", false}};
  for (int n = 0; n <= spec.n_max; ++n)
    for (int l : signed_range(spec.l_max)) {
      const QuantumNumbers qn{n, l, spec.k};
      const double e = energy_level(spec.params, qn);
      const double e_flat = energy_level(flat, qn);
      t.rows.push_back({double(n), double(l), spec.k, e, lambda_of_energy(spec.params, spec.k, e),
                        e_flat, e - e_flat});
    }
  return t;
}

Table cmd_wavefunction(const RunSpec& spec) {
  spec.params.validate();
  if (spec.n < 0) throw UsageError("--n must be >= 0");
  if (spec.samples < 2) throw UsageError("--samples must be >= 2");
  const RadialState state = normalize(make_bound_state(spec.params, {spec.n, spec.l, spec.k}));
  const double r_lo = spec.r_min;
  const double r_hi = spec.r_max.value_or(cutoff_radius(state));
  if (!(r_lo >= 0.0) || !(r_hi > r_lo)) throw UsageError("need 0 <= --r-min < --r-max");

  Table t;
  t.columns = {{"r", false}, {"re_R", false}, {"im_R", false}, {"abs_R_sq", false}, {"phase", false}};
  const int samples = spec.samples;
  for (int i = 0; i < samples; ++i) {
    const double r = (i == samples - 1) ? r_hi : r_lo + (r_hi - r_lo) * i / (samples - 1);
    const std::complex<double> R = radial_R(state, r);
    t.rows.push_back({r, R.real(), R.imag(), std::norm(R), radial_phase(state, r)});
  }
  return t;
}

Table cmd_hardwall(const RunSpec& spec) {
  require_ranges(spec);
  if (!spec.r0) throw UsageError("hardwall needs --r0");
  spec.params.validate(false);
  const bool have_exact = spec.params.omega > 0.0;

  Table t;
  t.columns = {{"n", true}, {"l", true}, {"E_approx", false}};
  if (have_exact) {
    t.columns.push_back({"E_exact", false});
    t.columns.push_back({"relative_gap", false});
  }
  if (spec.with_oracle) t.columns.push_back({"E_oracle", false});

  OracleConfig ocfg;
  ocfg.wall_radius = *spec.r0;
  for (int n = 0; n <= spec.n_max; ++n)
    for (int l : signed_range(spec.l_max)) {
      const HardWallConfig cfg{*spec.r0, spec.params, l, spec.k};
      std::vector<double> row{double(n), double(l), approx_energy(cfg, n)};
      if (have_exact) {
        const double exact = exact_energy(cfg, n);
        row.push_back(exact);
        row.push_back(std::abs(exact - row[2]) / std::abs(exact));
      }
      if (spec.with_oracle) row.push_back(find_eigenvalue(spec.params, l, spec.k, n, ocfg));
      t.rows.push_back(std::move(row));
    }
  return t;
}

Table cmd_oracle(const RunSpec& spec) {
  require_ranges(spec);
  Table t;
  OracleConfig ocfg;
  if (spec.r_max) ocfg.r_max = spec.r_max;
  if (spec.r0) {
    spec.params.validate(false);
    ocfg.wall_radius = spec.r0;
    t.columns = {{"n", true}, {"l", true}, {"k", false}, {"E_oracle", false}, {"E_approx", false}};
  } else {
    spec.params.validate();
    t.columns = {{"n", true},        {"l", true},         {"k", false},
                 {"E_oracle", false}, {"E_formula", false}, {"deviation", false}};
  }
  for (int n = 0; n <= spec.n_max; ++n)
    for (int l : signed_range(spec.l_max)) {
      const double e_oracle = find_eigenvalue(spec.params, l, spec.k, n, ocfg);
      if (spec.r0) {
        const HardWallConfig cfg{*spec.r0, spec.params, l, spec.k};
        t.rows.push_back({double(n), double(l), spec.k, e_oracle, approx_energy(cfg, n)});
      } else {
        const double e = energy_level(spec.params, {n, l, spec.k});
        t.rows.push_back({double(n), double(l), spec.k, e_oracle, e, e_oracle - e});
      }
    }
  return t;
}

int cmd_verify(const RunSpec& spec, std::ostream& report) {
  std::vector<verify::Suite> suites;
  if (spec.suite) {
    const auto s = verify::parse_suite(*spec.suite);
    if (!s) throw UsageError("unknown suite '" + *spec.suite + "'");
    suites.push_back(*s);
  } else {
    suites = verify::all_suites();
  }

  verify::Options options;
  options.perturb_energy = spec.perturb_energy;
  nlohmann::json rows = nlohmann::json::array();
  int failures = 0;
  int total = 0;
  for (verify::Suite s : suites) {
    for (const verify::CheckResult& c : verify::run_suite(s, options)) {
      ++total;
      if (!c.passed) ++failures;
      if (spec.format == OutputFormat::Json) {
        rows.push_back({{"suite", c.suite},
                        {"check", c.name},
                        {"measured", c.measured},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed},
                        {"detail", c.detail}});
      } else {
        report << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name
               << "  measured=" << format_number(c.measured, false)
               << " tolerance=" << format_number(c.tolerance, false);
        if (!c.detail.empty()) report << "  (" << c.detail << ")";
        report << '\n';
      }
    }
  }
  if (spec.format == OutputFormat::Json) {
    nlohmann::json doc{{"meta", run_spec_to_json(spec)},
                       {"rows", rows},
                       {"passed", failures == 0}};
    report << doc.dump(2) << '\n';
  } else {
    report << (total - failures) << "/" << total << " checks passed\n";
  }
  return failures == 0 ? 0 : 1;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c].name;
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c], table.columns[c].integer);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json run_spec_to_json(const RunSpec& spec) {
  nlohmann::json meta{
      {"command", command_name(spec.command)},
      {"mass", spec.params.mass},
      {"omega", spec.params.omega},
      {"beta", spec.params.beta},
      {"k", spec.k},
      {"n_max", spec.n_max},
      {"l_max", spec.l_max},
      {"n", spec.n},
      {"l", spec.l},
      {"r_min", spec.r_min},
      {"samples", spec.samples},
      {"format", spec.format == OutputFormat::Csv ? "csv" : "json"},
      {"with_oracle", spec.with_oracle},
      {"units", "hbar=c=1"},
  };
  meta["r0"] = spec.r0 ? nlohmann::json(*spec.r0) : nlohmann::json(nullptr);
  meta["r_max"] = spec.r_max ? nlohmann::json(*spec.r_max) : nlohmann::json(nullptr);
  meta["output_path"] = spec.output_path ? nlohmann::json(*spec.output_path) : nlohmann::json(nullptr);
  meta["config_path"] = spec.config_path ? nlohmann::json(*spec.config_path) : nlohmann::json(nullptr);
  if (spec.suite) meta["suite"] = *spec.suite;
  return meta;
}

nlohmann::json to_json(const Table& table, const RunSpec& spec) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (table.columns[c].integer) {
        obj[table.columns[c].name] = std::llround(row[c]);
      } else {
        obj[table.columns[c].name] = row[c];
      }
    }
    rows.push_back(std::move(obj));
  }
  return {{"meta", run_spec_to_json(spec)}, {"rows", std::move(rows)}};
}

RunSpec parse_arguments(int argc, const char* const* argv) {
  RunSpec spec;
  CLI::App app{"Spectrum and wavefunctions of a 2D harmonic oscillator with a spiral dislocation",
               "spiralosc"};
  app.set_help_flag();  // help is handled by the caller

  std::string command;
  std::string format = "csv";
  double r0 = 0.0;
  double r_max = 0.0;
  std::string out_path;
  std::string suite;

  app.add_option("command", command, "spectrum | wavefunction | hardwall | oracle | verify")
      ->required()
      ->check(CLI::IsMember({"spectrum", "wavefunction", "hardwall", "oracle", "verify"}));
  app.add_option("--mass", spec.params.mass, "particle mass m");
  app.add_option("--omega", spec.params.omega, "oscillator frequency w");
  app.add_option("--beta", spec.params.beta, "dislocation parameter beta");
  app.add_option("--k", spec.k, "axial wavenumber k");
  app.add_option("--n-max", spec.n_max, "largest radial quantum number");
  app.add_option("--l-max", spec.l_max, "largest |l|");
  app.add_option("--n", spec.n, "radial quantum number (wavefunction)");
  app.add_option("--l", spec.l, "angular momentum (wavefunction)");
  auto* r0_opt = app.add_option("--r0", r0, "hard-wall radius");
  app.add_option("--r-min", spec.r_min, "first grid radius (wavefunction)");
  auto* r_max_opt = app.add_option("--r-max", r_max, "last grid radius / oracle truncation");
  app.add_option("--samples", spec.samples, "grid points (wavefunction)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  auto* out_opt = app.add_option("--out", out_path, "output file (default stdout)");
  app.add_flag("--with-oracle", spec.with_oracle, "add shooting-oracle energies (hardwall)");
  auto* suite_opt = app.add_option("--suite", suite, "run one verification suite");
  app.add_option("--perturb-energy", spec.perturb_energy)->group("");
  auto* config_opt = app.set_config("--config", "", "key=value file; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (command == "spectrum") spec.command = Command::Spectrum;
  if (command == "wavefunction") spec.command = Command::Wavefunction;
  if (command == "hardwall") spec.command = Command::HardWall;
  if (command == "oracle") spec.command = Command::Oracle;
  if (command == "verify") spec.command = Command::Verify;
  spec.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (*r0_opt) spec.r0 = r0;
  if (*r_max_opt) spec.r_max = r_max;
  if (*out_opt) spec.output_path = out_path;
  if (*suite_opt) spec.suite = suite;
  if (*config_opt) spec.config_path = config_opt->as<std::string>();
  return spec;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      out << "usage: spiralosc <spectrum|wavefunction|hardwall|oracle|verify> [options]\n"
             "  --mass --omega --beta --k --n-max --l-max --n --l --r0 --r-min --r-max\n"
             "  --samples --format csv|json --out PATH --config PATH --with-oracle --suite NAME\n";
      return 0;
    }
  }

  RunSpec spec;
  try {
    spec = parse_arguments(argc, argv);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (spec.command == Command::Verify) {
      code = cmd_verify(spec, buffer);
    } else {
      Table table;
      switch (spec.command) {
        case Command::Spectrum:
          table = cmd_spectrum(spec);
          break;
        case Command::Wavefunction:
          table = cmd_wavefunction(spec);
          break;
        case Command::HardWall:
          table = cmd_hardwall(spec);
          break;
        case Command::Oracle:
          table = cmd_oracle(spec);
          break;
        case Command::Verify:
          break;
      }
      if (spec.format == OutputFormat::Json) {
        buffer << to_json(table, spec).dump(2) << '\n';
      } else {
        buffer << to_csv(table);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (spec.output_path) {
    std::ofstream file(*spec.output_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << *spec.output_path << '\n';
      return 2;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace spiral::cli
