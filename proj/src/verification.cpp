#include "spiral/verification.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "spiral/geometry.hpp"
#include "spiral/hard_wall.hpp"
#include "spiral/oracle.hpp"
#include "spiral/oscillator_spectrum.hpp"
#include "spiral/special_functions.hpp"

namespace spiral::verify {

namespace {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

CheckResult check_le(std::string_view suite, std::string name, double measured, double tolerance,
                     std::string detail = {}) {
  return {std::string(suite), std::move(name), measured, tolerance, measured <= tolerance,
          std::move(detail)};
}

CheckResult check_true(std::string_view suite, std::string name, bool ok,
                       std::string detail = {}) {
  return {std::string(suite), std::move(name), ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)};
}

double rel_scale(double e) { return std::max(1.0, std::abs(e)); }

// ---------------------------------------------------------------------------------------------
// geometry

std::vector<CheckResult> geometry_suite() {
  constexpr std::string_view kSuite = "geometry";
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> beta_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> r_dist(0.05, 10.0);

  double det_dev = 0.0;
  double identity_dev = 0.0;
  double coeff_dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DislocationParams p{beta_dist(rng), 1.0, 1.0};
    const double r = r_dist(rng);
    const MetricAtPoint m = metric_at(p, r);
    det_dev = std::max(det_dev, std::abs(m.det_g - r * r) / (r * r));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        double sum = 0.0;
        for (int c = 0; c < 3; ++c) sum += m.g[a][c] * m.g_inv[c][b];
        identity_dev = std::max(identity_dev, std::abs(sum - (a == b ? 1.0 : 0.0)));
      }
    }
    // Coefficients as they appear in the Schroedinger operator, times -2m.
    const double b2 = p.beta * p.beta;
    const LaplacianCoefficients c = laplacian_coefficients(p, r);
    const double expected[] = {1.0 + b2 / (r * r), 1.0 / r - b2 / (r * r * r),
                               -2.0 * p.beta / (r * r), 1.0 / (r * r), p.beta / (r * r * r)};
    const double got[] = {c.d_rr, c.d_r, c.d_rphi, c.d_phiphi, c.d_phi};
    for (int k = 0; k < 5; ++k) {
      const double scale = std::max(std::abs(expected[k]), 1e-300);
      coeff_dev = std::max(coeff_dev, std::abs(got[k] - expected[k]) / scale);
    }
  }

  bool flat_ok = true;
  for (double r : {0.1, 1.0, 2.0, 7.5}) {
    const MetricAtPoint m = metric_at({0.0, 1.0, 1.0}, r);
    const Matrix3 flat = {{{1.0, 0.0, 0.0}, {0.0, r * r, 0.0}, {0.0, 0.0, 1.0}}};
    flat_ok = flat_ok && m.g == flat;
  }

  return {
      check_le(kSuite, "det g = r^2 (100 random beta, r)", det_dev, 1e-15),
      check_le(kSuite, "g * g_inv = identity", identity_dev, 1e-12),
      check_true(kSuite, "beta = 0 gives the flat cylindrical metric", flat_ok),
      check_le(kSuite, "Laplace-Beltrami coefficients vs operator terms (100 random)", coeff_dev,
               1e-12),
  };
}

// ---------------------------------------------------------------------------------------------
// special functions

Decimal50 gamma_oracle(double z) { return boost::math::tgamma(Decimal50(z)); }

std::vector<CheckResult> special_functions_suite() {
  constexpr std::string_view kSuite = "special-functions";
  std::vector<CheckResult> out;

  bool x_zero_ok = true;
  for (double a : {-3.5, 0.4, 2.0, 7.25})
    for (double b : {0.5, 1.7, 4.0}) x_zero_ok = x_zero_ok && kummer_1f1(make_hypergeom_args(a, b, 0.0)) == 1.0;
  out.push_back(check_true(kSuite, "1F1(a, b; 0) = 1", x_zero_ok));

  double exp_dev = 0.0;
  for (double a : {0.5, 1.0, 2.5, 6.0})
    for (double x : {0.1, 1.0, 5.0, 20.0, 40.0}) {
      const double v = kummer_1f1(make_hypergeom_args(a, a, x));
      exp_dev = std::max(exp_dev, std::abs(v / std::exp(x) - 1.0));
    }
  out.push_back(check_le(kSuite, "1F1(a, a; x) = e^x", exp_dev, 1e-13));

  // Terminating case: the explicit polynomial, summed term by term.
  bool terminating_exact = true;
  for (int n = 0; n <= 30; ++n)
    for (double b : {1.0, 2.0, 3.5})
      for (double x : {0.3, 2.0, 9.0}) {
        double term = 1.0;
        double poly = 1.0;
        for (int j = 0; j < n; ++j) {
          term *= (-n + j) * x / ((b + j) * (j + 1));
          poly += term;
        }
        terminating_exact = terminating_exact && kummer_1f1(make_hypergeom_args(-n, b, x)) == poly;
      }
  out.push_back(check_true(kSuite, "a = -n (n <= 30) equals the explicit polynomial bit for bit",
                           terminating_exact));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a_dist(-5.0, 5.0);
  std::uniform_real_distribution<double> b_dist(0.5, 8.0);
  std::uniform_real_distribution<double> x_dist(0.0, 20.0);
  double contiguous_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = a_dist(rng);
    const double b = b_dist(rng);
    const double x = x_dist(rng);
    const double lhs = a * kummer_1f1(make_hypergeom_args(a + 1.0, b, x));
    const double t1 = (x + 2.0 * a - b) * kummer_1f1(make_hypergeom_args(a, b, x));
    const double t2 = (b - a) * kummer_1f1(make_hypergeom_args(a - 1.0, b, x));
    const double scale = std::max({std::abs(lhs), std::abs(t1), std::abs(t2)});
    contiguous_dev = std::max(contiguous_dev, std::abs(lhs - t1 - t2) / scale);
  }
  out.push_back(check_le(kSuite, "contiguous relation in a (200 random a, b, x)", contiguous_dev, 1e-9));

  // Series vs leading asymptotic term: best agreement over x <= 60, on the part of the
  // (a, b) box where the first correction (1-a)(b-a)/x can drop below 1e-2.
  double worst_best = 0.0;
  for (double a = 0.2; a <= 3.0 + 1e-9; a += 0.1)
    for (double b = 1.0; b <= 5.0 + 1e-9; b += 0.25) {
      if (std::abs((1.0 - a) * (b - a)) > 0.5) continue;
      double best = std::numeric_limits<double>::infinity();
      for (double x = 5.0; x <= 60.0; x += 1.0) {
        const HypergeomArgs args = make_hypergeom_args(a, b, x);
        best = std::min(best, std::abs(kummer_1f1_asymptotic(args) / kummer_1f1(args) - 1.0));
      }
      worst_best = std::max(worst_best, best);
    }
  const HypergeomArgs example = make_hypergeom_args(0.75, 2.0, 40.0);
  const double example_dev =
      std::abs(kummer_1f1_asymptotic(example) / kummer_1f1(example) - 1.0);
  out.push_back(check_le(kSuite, "series/asymptotic overlap at (0.75, 2, 40)", example_dev, 1e-2));
  out.push_back(check_le(kSuite, "series/asymptotic overlap, |(1-a)(b-a)| <= 0.5, x <= 60",
                         worst_best, 1e-2));

  // Gamma against 50-digit evaluation across [-170, 170].
  double gamma_dev = 0.0;
  double worst_z = 0.0;
  for (int i = 0; i <= 680; ++i) {
    const double z = -170.0 + 0.5 * i + 0.137;
    if (z > 170.0) break;
    const Decimal50 ref = gamma_oracle(z);
    const double dev =
        static_cast<double>(boost::multiprecision::abs((Decimal50(gamma_fn(z)) - ref) / ref));
    if (dev > gamma_dev) {
      gamma_dev = dev;
      worst_z = z;
    }
  }
  for (double z : {1.0, 0.5, 7.3, 170.0, -0.5, -169.5}) {
    const Decimal50 ref = gamma_oracle(z);
    const double dev =
        static_cast<double>(boost::multiprecision::abs((Decimal50(gamma_fn(z)) - ref) / ref));
    if (dev > gamma_dev) {
      gamma_dev = dev;
      worst_z = z;
    }
  }
  std::ostringstream where;
  where << "worst at z=" << worst_z;
  out.push_back(check_le(kSuite, "gamma vs 50-digit reference on [-170, 170]", gamma_dev, 1e-12,
                         where.str()));
  return out;
}

// ---------------------------------------------------------------------------------------------
// spectrum vs oracle

using GridKey = std::tuple<int, int, double, double>;  // n, l, beta, k

std::vector<CheckResult> spectrum_suite() {
  constexpr std::string_view kSuite = "spectrum-vs-oracle";
  std::map<GridKey, double> oracle;
  std::map<GridKey, double> formula;
  for (double beta : grid::kBetaValues)
    for (double k : grid::kKValues)
      for (int n : grid::kNValues)
        for (int l : grid::kLValues) {
          const DislocationParams p{beta, 1.0, 1.0};
          oracle[{n, l, beta, k}] = find_eigenvalue(p, l, k, n);
          formula[{n, l, beta, k}] = energy_level(p, {n, l, k});
        }

  double oracle_dev = 0.0;
  for (const auto& [key, e] : formula) {
    oracle_dev = std::max(oracle_dev, std::abs(oracle.at(key) - e) / rel_scale(e));
  }

  // Shift law and its l-independence.
  double shift_formula_dev = 0.0;
  double shift_oracle_dev = 0.0;
  double shift_oracle_spread = 0.0;
  double formula_l_spread = 0.0;
  for (double beta : grid::kBetaValues) {
    const double expected = -0.5 * beta * beta;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double f_lo = lo;
    double f_hi = hi;
    for (double k : grid::kKValues)
      for (int n : grid::kNValues)
        for (int l : grid::kLValues) {
          const double df = formula.at({n, l, beta, k}) - formula.at({n, l, 0.0, k});
          const double d_oracle = oracle.at({n, l, beta, k}) - oracle.at({n, l, 0.0, k});
          shift_formula_dev = std::max(shift_formula_dev, std::abs(df - expected));
          shift_oracle_dev = std::max(shift_oracle_dev, std::abs(d_oracle - expected));
          lo = std::min(lo, d_oracle);
          hi = std::max(hi, d_oracle);
          f_lo = std::min(f_lo, df);
          f_hi = std::max(f_hi, df);
        }
    shift_oracle_spread = std::max(shift_oracle_spread, hi - lo);
    formula_l_spread = std::max(formula_l_spread, f_hi - f_lo);
  }

  bool formula_mirror = true;
  double oracle_mirror_dev = 0.0;
  for (double beta : grid::kBetaValues)
    for (double k : grid::kKValues)
      for (int n : grid::kNValues)
        for (int l : {1, 2, 3}) {
          const DislocationParams p{beta, 1.0, 1.0};
          formula_mirror = formula_mirror && energy_level(p, {n, l, k}) == energy_level(p, {n, -l, k});
          const double e_minus = oracle.count({n, -l, beta, k})
                                     ? oracle.at({n, -l, beta, k})
                                     : find_eigenvalue(p, -l, k, n);
          oracle_mirror_dev = std::max(oracle_mirror_dev, std::abs(oracle.at({n, l, beta, k}) - e_minus));
        }

  bool flat_exact = true;
  for (double k : grid::kKValues)
    for (int n : grid::kNValues)
      for (int l : grid::kLValues) {
        const double reference = 1.0 * (2.0 * n + std::abs(l) + 1.0) + k * k / 2.0;
        flat_exact = flat_exact && formula.at({n, l, 0.0, k}) == reference;
      }

  std::ostringstream grid_note;
  grid_note << formula.size() << " levels, m = w = 1";
  return {
      check_le(kSuite, "free spectrum vs shooting oracle, rel max(1,|E|)", oracle_dev, 1e-4,
               grid_note.str()),
      check_le(kSuite, "shift E(beta) - E(0) = -m w^2 beta^2 / 2 (formula)", shift_formula_dev, 1e-12),
      check_le(kSuite, "shift E(beta) - E(0) = -m w^2 beta^2 / 2 (oracle)", shift_oracle_dev, 1e-4),
      check_le(kSuite, "oracle shift spread across (n, l, k)", shift_oracle_spread, 1e-4),
      check_true(kSuite, "formula E(l) == E(-l)", formula_mirror),
      check_le(kSuite, "oracle |E(l) - E(-l)|", oracle_mirror_dev, 1e-6),
      check_le(kSuite, "formula beta-dependence independent of l", formula_l_spread, 1e-12),
      check_true(kSuite, "beta = 0 equals w(2n+|l|+1) + k^2/2m exactly", flat_exact),
  };
}

// ---------------------------------------------------------------------------------------------
// hard wall

std::vector<CheckResult> hard_wall_suite() {
  constexpr std::string_view kSuite = "hardwall";
  constexpr double kR0 = 2.5;
  constexpr int kNMax = 15;
  std::vector<CheckResult> out;

  double oracle_dev = 0.0;
  for (double beta : {0.0, 0.5})
    for (int l : {0, 1}) {
      const HardWallConfig cfg{kR0, {beta, 1.0, 1.0}, l, 0.0};
      OracleConfig ocfg;
      ocfg.wall_radius = kR0;
      std::vector<double> gaps;
      for (int n = 0; n <= kNMax; ++n) {
        const double exact = exact_energy(cfg, n);
        const double approx = approx_energy(cfg, n);
        gaps.push_back(std::abs(exact - approx) / exact);
        const double e_oracle = find_eigenvalue(cfg.params, l, 0.0, n, ocfg);
        oracle_dev = std::max(oracle_dev, std::abs(e_oracle - exact) / rel_scale(exact));
      }
      bool decreasing = true;
      for (std::size_t i = 1; i < gaps.size(); ++i) decreasing = decreasing && gaps[i] < gaps[i - 1];
      std::ostringstream label;
      label << "(beta=" << beta << ", l=" << l << ")";
      std::ostringstream trend;
      trend << "gap(0)=" << gaps.front() << " gap(" << kNMax << ")=" << gaps.back();
      out.push_back(check_le(kSuite, "relative gap |E_exact - E_approx|/E_exact at n=10 " + label.str(),
                             gaps[10], 1e-2));
      out.push_back(check_true(kSuite, "relative gap decreases with n " + label.str(), decreasing,
                               trend.str()));
    }
  out.push_back(check_le(kSuite, "exact roots vs Dirichlet shooting oracle, rel max(1,|E|)",
                         oracle_dev, 1e-4, "n <= 15, r0 = 2.5"));

  // Effective radius: (r0, beta) against (sqrt(r0^2 + beta^2), 0) with the shift removed.
  double approx_dev = 0.0;
  double exact_dev = 0.0;
  for (double beta : {0.3, 0.5, 1.0})
    for (int l : {0, 1, 2})
      for (int n : {0, 1, 4, 8}) {
        const HardWallConfig with_defect{kR0, {beta, 1.0, 1.0}, l, 0.0};
        const HardWallConfig flat{with_defect.effective_radius(), {0.0, 1.0, 1.0}, l, 0.0};
        const double shift = 0.5 * beta * beta;
        const double a1 = approx_energy(with_defect, n) + shift;
        const double a2 = approx_energy(flat, n);
        approx_dev = std::max(approx_dev, std::abs(a1 - a2) / std::abs(a2));
        const double e1 = exact_energy(with_defect, n) + shift;
        const double e2 = exact_energy(flat, n);
        exact_dev = std::max(exact_dev, std::abs(e1 - e2) / std::abs(e2));
      }
  out.push_back(check_le(kSuite, "effective radius, closed form (rounding only)", approx_dev, 1e-12));
  out.push_back(check_le(kSuite, "effective radius, exact roots", exact_dev, 1e-9));
  return out;
}

// ---------------------------------------------------------------------------------------------
// Hamiltonian residual

std::vector<CheckResult> residual_suite(const Options& options) {
  constexpr std::string_view kSuite = "residual";
  constexpr double kSteps[] = {4e-3, 2e-3, 1e-3};
  const std::tuple<int, int, double> states[] = {
      {0, 0, 0.3}, {1, 1, 0.3}, {2, -2, 0.3}, {0, 2, 0.8}, {1, -1, 0.8}, {2, 0, 0.8}};

  std::vector<CheckResult> out;
  for (const auto& [n, l, beta] : states) {
    RadialState s = make_bound_state({beta, 1.0, 1.0}, {n, l, 0.0});
    s.energy += options.perturb_energy;
    // Least-squares slope of log residual against log h.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double h : kSteps) {
      const double lx = std::log(h);
      const double ly = std::log(hamiltonian_residual(s, {h}));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double count = std::size(kSteps);
    const double order = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    std::ostringstream label;
    label << "residual order (n=" << n << ", l=" << l << ", beta=" << beta << ")";
    std::ostringstream note;
    note << "order " << order;
    out.push_back(check_le(kSuite, label.str(), std::abs(order - 2.0), 0.2, note.str()));
  }

  RadialState ground = make_bound_state({0.5, 1.0, 1.0}, {0, 0, 0.0});
  ground.energy += options.perturb_energy;
  out.push_back(check_le(kSuite, "residual (n=0, l=0, beta=0.5) at h=1e-3",
                         hamiltonian_residual(ground, {1e-3}), 1e-6));
  return out;
}

}  // namespace

std::vector<Suite> all_suites() {
  return {Suite::Geometry, Suite::SpecialFunctions, Suite::SpectrumVsOracle, Suite::HardWall,
          Suite::Residual};
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Geometry:
      return "geometry";
    case Suite::SpecialFunctions:
      return "special-functions";
    case Suite::SpectrumVsOracle:
      return "spectrum-vs-oracle";
    case Suite::HardWall:
      return "hardwall";
    case Suite::Residual:
      return "residual";
  }
  return "";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite, const Options& options) {
  switch (suite) {
    case Suite::Geometry:
      return geometry_suite();
    case Suite::SpecialFunctions:
      return special_functions_suite();
    case Suite::SpectrumVsOracle:
      return spectrum_suite();
    case Suite::HardWall:
      return hard_wall_suite();
    case Suite::Residual:
      return residual_suite(options);
  }
  return {};
}

}  // namespace spiral::verify
