#include "spiral/hard_wall.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "spiral/errors.hpp"
#include "spiral/oscillator_spectrum.hpp"
#include "spiral/special_functions.hpp"

namespace spiral {

namespace {

constexpr double kPi = std::numbers::pi;

double shift_terms(const HardWallConfig& cfg) {
  const DislocationParams& p = cfg.params;
  return -0.5 * p.mass * p.omega * p.omega * p.beta * p.beta + cfg.k * cfg.k / (2.0 * p.mass);
}

double kummer_a(const HardWallConfig& cfg, double lambda) {
  return 0.5 * std::abs(cfg.l) + 0.5 - lambda;
}

double kummer_at(const HardWallConfig& cfg, double lambda, double x) {
  return kummer_1f1_stable(make_hypergeom_args(kummer_a(cfg, lambda), std::abs(cfg.l) + 1.0, x));
}

// Zeros of the cosine form sit at sqrt(4 lambda x0) = q with q = n pi + |l| pi/2 + 3 pi/4.
double lambda_of_phase(const HardWallConfig& cfg, double q) { return q * q / (4.0 * cfg.x0()); }

double energy_of_lambda(const HardWallConfig& cfg, double lambda) {
  return 2.0 * cfg.params.omega * lambda + shift_terms(cfg);
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

int nodes_at_lambda(const HardWallConfig& cfg, double lambda, int expected) {
  const double x0 = cfg.x0();
  const int samples = 64 * (expected + 2) + 64 * std::abs(cfg.l);
  int count = 0;
  int previous = 1;  // 1F1 = 1 at x = 0
  for (int j = 1; j < samples; ++j) {
    const double t = static_cast<double>(j) / samples;
    const int s = sign_of(kummer_at(cfg, lambda, x0 * t * t));
    if (s != 0 && s != previous) {
      ++count;
      previous = s;
    }
  }
  return count;
}

double bisect_lambda(const HardWallConfig& cfg, double lo, double hi, int sign_lo,
                     const RootControls& controls) {
  const double x0 = cfg.x0();
  const double two_w = 2.0 * cfg.params.omega;
  for (int it = 0; it < controls.max_bisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double e_mid = energy_of_lambda(cfg, mid);
    if (two_w * (hi - lo) <= controls.rel_tol * std::max(1.0, std::abs(e_mid))) return mid;
    const int s = sign_of(kummer_at(cfg, mid, x0));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NumericError("hard-wall bisection did not converge in " +
                     std::to_string(controls.max_bisections) + " steps");
}

// Bracket around the approximate phase, expanded until the parity pattern matches.
bool seeded_bracket(const HardWallConfig& cfg, int n, const RootControls& controls, double& lo,
                    double& hi) {
  const double x0 = cfg.x0();
  const int sign_lo = (n % 2 == 0) ? 1 : -1;
  const double q_center = n * kPi + std::abs(cfg.l) * kPi / 2.0 + 3.0 * kPi / 4.0;
  double q_lo = std::max(q_center - 1.0, 0.0);
  double q_hi = q_center + 1.0;
  double step = 1.0;
  for (int e = 0; sign_of(kummer_at(cfg, lambda_of_phase(cfg, q_lo), x0)) != sign_lo; ++e) {
    if (e >= controls.max_expansions || q_lo == 0.0) return false;
    q_lo = std::max(q_lo - step, 0.0);
    step *= 2.0;
  }
  step = 1.0;
  for (int e = 0; sign_of(kummer_at(cfg, lambda_of_phase(cfg, q_hi), x0)) != -sign_lo; ++e) {
    if (e >= controls.max_expansions) return false;
    q_hi += step;
    step *= 2.0;
  }
  lo = lambda_of_phase(cfg, q_lo);
  hi = lambda_of_phase(cfg, q_hi);
  return true;
}

// Walks up in phase counting sign changes until the (n+1)-th zero is enclosed.
bool scanned_bracket(const HardWallConfig& cfg, int n, double& lo, double& hi) {
  const double x0 = cfg.x0();
  constexpr double kStep = kPi / 32.0;
  const int max_steps = static_cast<int>((n + std::abs(cfg.l) + 8) * kPi / kStep) * 4;
  int previous = 1;
  int crossings = 0;
  double q_prev = 0.0;
  for (int i = 1; i <= max_steps; ++i) {
    const double q = i * kStep;
    const int s = sign_of(kummer_at(cfg, lambda_of_phase(cfg, q), x0));
    if (s != 0 && s != previous) {
      if (crossings == n) {
        lo = lambda_of_phase(cfg, q_prev);
        hi = lambda_of_phase(cfg, q);
        return true;
      }
      ++crossings;
      previous = s;
    }
    q_prev = q;
  }
  return false;
}

}  // namespace

double HardWallConfig::x0() const {
  return params.mass * params.omega * (r0 * r0 + params.beta * params.beta);
}

double HardWallConfig::effective_radius() const {
  return std::sqrt(r0 * r0 + params.beta * params.beta);
}

void HardWallConfig::validate(bool require_omega) const {
  params.validate(require_omega);
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw DomainError("wall radius r0 must be positive, got " + std::to_string(r0));
  }
}

double approx_energy(const HardWallConfig& cfg, int n) {
  cfg.validate(false);
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  const double q = n * kPi + std::abs(cfg.l) * kPi / 2.0 + 3.0 * kPi / 4.0;
  const double rho0_sq = cfg.r0 * cfg.r0 + cfg.params.beta * cfg.params.beta;
  return q * q / (2.0 * cfg.params.mass * rho0_sq) + shift_terms(cfg);
}

double boundary_value(const HardWallConfig& cfg, double energy) {
  cfg.validate(true);
  const double x0 = cfg.x0();
  const double lambda = lambda_of_energy(cfg.params, cfg.k, energy);
  const double half_l = 0.5 * std::abs(cfg.l);
  return std::exp(-0.5 * x0 + half_l * std::log(x0)) * kummer_at(cfg, lambda, x0);
}

int count_interior_nodes(const HardWallConfig& cfg, double energy) {
  cfg.validate(true);
  const double lambda = lambda_of_energy(cfg.params, cfg.k, energy);
  // Sample density grows with the expected number of oscillations ~ sqrt(4 lambda x0) / pi.
  const int expected = static_cast<int>(std::sqrt(std::max(4.0 * lambda * cfg.x0(), 0.0)) / kPi);
  return nodes_at_lambda(cfg, lambda, expected);
}

double exact_energy(const HardWallConfig& cfg, int n, const RootControls& controls) {
  cfg.validate(true);
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  const int sign_lo = (n % 2 == 0) ? 1 : -1;

  double lo = 0.0;
  double hi = 0.0;
  if (seeded_bracket(cfg, n, controls, lo, hi)) {
    const double lambda = bisect_lambda(cfg, lo, hi, sign_lo, controls);
    if (nodes_at_lambda(cfg, lambda, n) == n) return energy_of_lambda(cfg, lambda);
  }
  // The seed bracket enclosed the wrong zero (small n, large |l|); index by direct scan.
  if (!scanned_bracket(cfg, n, lo, hi)) {
    throw RootFindingError("hard-wall: could not bracket zero " + std::to_string(n + 1) +
                           " of 1F1 in lambda (l=" + std::to_string(cfg.l) +
                           ", x0=" + std::to_string(cfg.x0()) + ")");
  }
  const double lambda = bisect_lambda(cfg, lo, hi, sign_lo, controls);
  const int nodes = nodes_at_lambda(cfg, lambda, n);
  if (nodes != n) {
    throw RootFindingError("hard-wall: root has " + std::to_string(nodes) +
                           " interior nodes, expected " + std::to_string(n));
  }
  return energy_of_lambda(cfg, lambda);
}

}  // namespace spiral
